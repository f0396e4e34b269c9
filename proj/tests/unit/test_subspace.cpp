#include <set>

#include "helpers.hpp"
#include "xconn/io.hpp"
#include "xconn/subspace.hpp"

using namespace xconn;
using testing::M;

namespace {

std::uint64_t power(std::uint64_t b, std::size_t e) {
  std::uint64_t out = 1;
  while (e-- > 0) {
    out *= b;
  }
  return out;
}

}  // namespace

TEST_SUITE("subspaces") {

TEST_CASE("enumeration counts") {
  CHECK(enumerate_subspaces(2, 2, SubspaceFilter::all).size() == 5);
  CHECK(enumerate_subspaces(2, 2, SubspaceFilter::proper).size() == 4);
  CHECK(enumerate_subspaces(3, 2, SubspaceFilter::all).size() == 16);
  CHECK(enumerate_subspaces(2, 3, SubspaceFilter::nonzero).size() == 5);
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(3, 1, 3) == 13);
  for (unsigned p : {2u, 3u, 5u}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      std::uint64_t total = 0;
      for (std::size_t k = 0; k <= n; ++k) {
        total += gaussian_binomial(n, k, p);
      }
      CHECK(enumerate_subspaces(n, p, SubspaceFilter::all).size() == total);
    }
  }
}

TEST_CASE("enumeration order is dimension-major and sorted") {
  auto const all = enumerate_subspaces(3, 3, SubspaceFilter::all);
  CHECK(std::is_sorted(all.begin(), all.end()));
  for (std::size_t i = 1; i < all.size(); ++i) {
    CHECK(all[i - 1].dim() <= all[i].dim());
  }
}

TEST_CASE("canonical form") {
  Subspace const a = Subspace::span(M("1,1;1,1", 2));
  CHECK(a.dim() == 1);
  CHECK(a.basis() == M("1,1", 2));
  CHECK(Subspace::span(M("2,2,0;0,1,1", 3)) == Subspace::span(M("1,1,0;1,2,1", 3)));
  for (auto const& s : enumerate_subspaces(3, 2, SubspaceFilter::nonzero)) {
    CHECK(Subspace::span(s.basis()) == s);
  }
  CHECK(Subspace::zero(2, 2).to_string() == "()");
  CHECK(annihilator(a).to_string() == "dual(1,1)");
}

TEST_CASE("sum and intersection dimensions") {
  for (unsigned p : {2u, 3u}) {
    auto const all = enumerate_subspaces(3, p, SubspaceFilter::all);
    for (auto const& a : all) {
      for (auto const& b : all) {
        Subspace const s = sum(a, b);
        Subspace const i = intersection(a, b);
        CHECK(s.dim() + i.dim() == a.dim() + b.dim());
        CHECK(i.is_subspace_of(a));
        CHECK(i.is_subspace_of(b));
        CHECK(a.is_subspace_of(s));
      }
    }
  }
}

TEST_CASE("annihilator reverses inclusion") {
  auto const all = enumerate_subspaces(3, 2, SubspaceFilter::all);
  for (auto const& a : all) {
    Subspace const ao = annihilator(a);
    CHECK(ao.side() == Side::dual);
    CHECK(ao.dim() == 3 - a.dim());
    CHECK(annihilator(ao) == a);
    for (auto const& b : all) {
      CHECK(a.is_subspace_of(b) == annihilator(b).is_subspace_of(ao));
    }
  }
}

TEST_CASE("complements") {
  for (unsigned p : {2u, 3u}) {
    for (auto const& a : enumerate_subspaces(3, p, SubspaceFilter::all)) {
      auto const cs = all_complements(a);
      CHECK(cs.size() == power(p, a.dim() * (3 - a.dim())));
      CHECK(std::set<Subspace>(cs.begin(), cs.end()).size() == cs.size());
      for (auto const& w : cs) {
        CHECK(is_direct_sum(a, w));
        CHECK(a.dim() + w.dim() == 3);
      }
      Subspace const c = canonical_complement(a);
      CHECK(std::find(cs.begin(), cs.end(), c) != cs.end());
    }
  }
  Subspace const inner = Subspace::span(M("1,1,0", 2));
  Subspace const outer = Subspace::span(M("1,0,0;0,1,0", 2));
  Subspace const w = complement_within(inner, outer);
  CHECK(w.is_subspace_of(outer));
  CHECK(sum(w, inner) == outer);
  CHECK(intersection(w, inner).is_zero());
}

TEST_CASE("morphisms") {
  Subspace const a = Subspace::span(M("1,0", 2));
  Subspace const b = Subspace::span(M("0,1", 2));
  Subspace const v = Subspace::full(2, 2);
  CHECK(hom_count(a, v) == 4);
  CHECK(all_morphisms(a, v).size() == 4);
  CHECK_ERROR(inclusion(a, b), not_included);
  Morphism const j = inclusion(a, v);
  CHECK(j.images() == M("1,0", 2));
  Morphism const q = retraction(a, v);
  CHECK(compose(j, q) == identity_morphism(a));
  Morphism const pr = projection(v, a, b);
  CHECK(pr.apply(M("1,1", 2)) == M("1,0", 2));
  CHECK_ERROR(projection(v, a, a), not_a_direct_sum);
  Morphism const f = restrict(M("0,1;0,0", 2), v, b);
  CHECK(f.kernel() == b);
  CHECK(f.image() == b);
  CHECK(f.is_surjective());
  CHECK_FALSE(f.is_isomorphism());
  Mat const e = extend_to_ambient(restrict(M("0,1;0,0", 2), a, b));
  CHECK(e == M("0,1;0,0", 2));
  CHECK(linear_map_from_basis(M("1,1;0,1", 2), M("1,0;0,0", 2)) == M("1,0;0,0", 2));
}

TEST_CASE("json round trip") {
  for (auto const& a : enumerate_subspaces(3, 3, SubspaceFilter::all)) {
    CHECK(subspace_from_json(to_json(a)) == a);
    CHECK(subspace_from_json(to_json(annihilator(a))) == annihilator(a));
  }
  Json const j = to_json(Subspace::span(M("0,1", 2)));
  CHECK(j.dump() == R"({"n":2,"p":2,"side":"primal","basis":[[0,1]]})");
  CHECK_ERROR(subspace_from_json(Json::parse(R"({"n":2})")), parse_error);
  CHECK_ERROR(subspace_from_json(Json::parse(R"({"n":2,"p":2,"side":"x","basis":[]})")),
              parse_error);
}

}
