#pragma once

// JSON forms of matrices, subspaces, tables and cones.

#include "json.hpp"

#include "xconn/cones.hpp"
#include "xconn/gf.hpp"
#include "xconn/semigroup.hpp"
#include "xconn/subspace.hpp"

namespace xconn {

using Json = nlohmann::ordered_json;

// [[row], [row], ...]
Json to_json(Mat const& m);
Mat mat_from_json(Json const& j, unsigned p);

// {"n", "p", "side", "basis"}
Json to_json(Subspace const& a);
Subspace subspace_from_json(Json const& j);

// {"order", "elements", "table"}
Json to_json(SemigroupTable const& t);

// {"vertex", "components"}
Json to_json(NormalCone const& c);

}  // namespace xconn
