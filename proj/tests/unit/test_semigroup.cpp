#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "xconn/semigroup.hpp"

using namespace xconn;
using testing::M;

namespace {

SemigroupTable left_zero(std::size_t n) {
  SemigroupTable t;
  for (std::size_t i = 0; i < n; ++i) {
    t.labels.push_back(std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      t.entries.push_back(static_cast<std::uint32_t>(i));
    }
  }
  return t;
}

// The same semigroup with its elements relabelled by `perm`.
SemigroupTable relabel(SemigroupTable const& t,
                       std::vector<std::uint32_t> const& perm) {
  SemigroupTable out = t;
  for (std::size_t a = 0; a < t.order(); ++a) {
    for (std::size_t b = 0; b < t.order(); ++b) {
      out.entries[perm[a] * t.order() + perm[b]] = perm[t(a, b)];
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("semigroup") {

TEST_CASE("orders") {
  CHECK(singular_matrices(2, 2).size() == 10);
  CHECK(singular_matrices(3, 2).size() == 344);
  CHECK(singular_matrices(2, 3).size() == 33);
  CHECK(invertible_matrices(2, 3).size() == 48);
  CHECK(all_matrices(2, 2).size() == 16);
}

TEST_CASE("idempotents") {
  CHECK(idempotents(2, 2, false).size() == 8);
  CHECK(idempotents(2, 2, true).size() == 7);
  auto const es = idempotents(2, 2, true);
  CHECK(std::count_if(es.begin(), es.end(),
                      [](Endo const& e) { return e.rank() == 1; }) == 6);
  Endo const e = idempotent_from(Subspace::span(M("0,1", 2)),
                                 Subspace::span(M("1,1", 2)));
  CHECK(e.is_idempotent());
  CHECK(e.matrix() == M("1,1;0,0", 2));
  CHECK_ERROR(idempotent_from(Subspace::span(M("0,1", 2)),
                              Subspace::span(M("0,1", 2))),
              not_a_direct_sum);
}

TEST_CASE("Green's relations against the ideal oracle") {
  for (auto const& [n, p] : {std::pair{2, 2u}, std::pair{2, 3u}}) {
    auto const els = singular_matrices(n, p);
    GreenStructure const g = green_structure(matrix_table(els));
    for (std::size_t a = 0; a < els.size(); ++a) {
      for (std::size_t b = 0; b < els.size(); ++b) {
        CHECK(green(Endo(els[a]), Endo(els[b])) == g.flags(a, b));
      }
    }
  }
  GreenFlags const f = green(Endo(M("1,0;0,0", 2)), Endo(M("1,1;0,0", 2)));
  CHECK_FALSE(f.L);
  CHECK(f.R);
  CHECK(to_string(f) == "-R-D");
}

TEST_CASE("regularity") {
  SemigroupTable const t = matrix_table(singular_matrices(2, 3));
  Regularity const r = regular_elements(t);
  CHECK(r.regular.size() == t.order());
  for (std::size_t a = 0; a < t.order(); ++a) {
    CHECK(t(t(a, *r.witness[a]), a) == a);
  }
  CHECK(t.is_associative());
}

TEST_CASE("closure is enforced") {
  std::vector<Mat> const gens = {M("1,0;0,0", 2), M("0,1;0,0", 2)};
  CHECK_ERROR(matrix_table(gens), not_closed);
}

TEST_CASE("isomorphism search") {
  SemigroupTable const t = matrix_table(singular_matrices(2, 2));
  std::vector<std::uint32_t> perm(t.order());
  std::iota(perm.begin(), perm.end(), 0u);
  std::shuffle(perm.begin(), perm.end(), std::mt19937(3));
  SemigroupTable const s = relabel(t, perm);
  auto iso = are_isomorphic(t, s);
  REQUIRE(iso.has_value());
  CHECK(is_homomorphism(t, s, *iso));
  CHECK(are_isomorphic(t, t.opposite()).has_value());
  CHECK_FALSE(are_isomorphic(left_zero(4), left_zero(4).opposite()).has_value());
  CHECK_FALSE(are_isomorphic(t, left_zero(10)).has_value());
}

}
