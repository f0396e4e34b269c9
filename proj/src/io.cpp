#include "xconn/io.hpp"

namespace xconn {

Json to_json(Mat const& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row.push_back(m(r, c));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat mat_from_json(Json const& j, unsigned p) {
  if (!j.is_array()) {
    throw Error(ErrorCode::parse_error, "matrix must be an array of rows");
  }
  std::vector<std::vector<unsigned>> rows;
  for (auto const& row : j) {
    if (!row.is_array()) {
      throw Error(ErrorCode::parse_error, "matrix row must be an array");
    }
    auto& out = rows.emplace_back();
    for (auto const& x : row) {
      if (!x.is_number_unsigned()) {
        throw Error(ErrorCode::parse_error, "matrix entry must be unsigned");
      }
      out.push_back(x.get<unsigned>());
    }
  }
  return Mat::from_rows(rows, p);
}

Json to_json(Subspace const& a) {
  return {{"n", a.ambient()},
          {"p", a.modulus()},
          {"side", std::string(to_string(a.side()))},
          {"basis", to_json(a.basis())}};
}

Subspace subspace_from_json(Json const& j) {
  try {
    auto const n = j.at("n").get<std::size_t>();
    auto const p = j.at("p").get<unsigned>();
    auto const side_name = j.at("side").get<std::string>();
    if (side_name != "primal" && side_name != "dual") {
      throw Error(ErrorCode::parse_error, "unknown side " + side_name);
    }
    Side const side = side_name == "dual" ? Side::dual : Side::primal;
    Json const& basis = j.at("basis");
    if (basis.empty()) {
      return Subspace::zero(n, p, side);
    }
    Mat const m = mat_from_json(basis, p);
    if (m.cols() != n) {
      throw Error(ErrorCode::shape_error, "basis width differs from n");
    }
    return Subspace::span(m, side);
  } catch (Json::exception const& e) {
    throw Error(ErrorCode::parse_error, e.what());
  }
}

Json to_json(SemigroupTable const& t) {
  Json rows = Json::array();
  for (std::size_t a = 0; a < t.order(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < t.order(); ++b) {
      row.push_back(t(a, b));
    }
    rows.push_back(std::move(row));
  }
  return {{"order", t.order()}, {"elements", t.labels}, {"table", rows}};
}

Json to_json(NormalCone const& c) {
  Json components = Json::array();
  for (auto const& m : c.components) {
    components.push_back(to_json(m.map));
  }
  return {{"vertex", to_json(c.vertex)}, {"components", components}};
}

}  // namespace xconn
