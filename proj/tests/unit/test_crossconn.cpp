#include <set>

#include "helpers.hpp"
#include "xconn/crossconn.hpp"

using namespace xconn;
using testing::M;

namespace {

CategoryPtr subspaces(std::size_t n, unsigned p) {
  return std::make_shared<SubspaceCategory const>(SubspaceCategory::proper(n, p));
}

CategoryPtr annihilators(std::size_t n, unsigned p) {
  return std::make_shared<SubspaceCategory const>(annihilator_category(n, p));
}

std::vector<Endo> sing_endos(std::size_t n, unsigned p) {
  std::vector<Endo> out;
  for (auto& m : singular_matrices(n, p)) {
    out.emplace_back(m);
  }
  return out;
}

}  // namespace

TEST_SUITE("crossconn") {

TEST_CASE("Delta and Gamma for the swap") {
  auto const s = subspaces(2, 2);
  Mat const swap = M("0,1;1,0", 2);
  Functor const d = delta_theta(s, swap);
  auto const line = *s->index_of(Subspace::span(M("1,0", 2)));
  CHECK(d(line) == Subspace::span(M("0,1", 2)));
  CHECK(is_local_isomorphism(d).ok);
  CHECK(is_object_surjective(d));
  CHECK(recover_theta(d) == swap);
}

TEST_CASE("identity gives identity functors") {
  auto const s = subspaces(2, 3);
  auto const a = annihilators(2, 3);
  Functor const d = delta_theta(s, Mat::identity(2, 3));
  Functor const g = gamma_theta(a, Mat::identity(2, 3));
  for (std::size_t i = 0; i < s->size(); ++i) {
    CHECK(d.object_map[i] == i);
  }
  for (std::size_t i = 0; i < a->size(); ++i) {
    CHECK(g.object_map[i] == i);
  }
  auto const cc = is_crossconnection(g, *s);
  REQUIRE(cc.verdict.ok);
  // Witness for A is an annihilator whose pre-annihilator complements A.
  for (std::size_t i = 0; i < s->size(); ++i) {
    Subspace const key = annihilator(g(cc.witnesses[i]));
    CHECK(is_direct_sum((*s)[i], key));
  }
  CHECK(recover_theta(d) == Mat::identity(2, 3));
}

TEST_CASE("Gamma commutes with the annihilator") {
  for (auto const& t : invertible_matrices(2, 3)) {
    Mat const ti = *invert(t);
    for (auto const& a : enumerate_subspaces(2, 3, SubspaceFilter::nonzero)) {
      CHECK(annihilator(a).image_under(dual_action(t))
            == annihilator(a.image_under(ti)));
    }
  }
}

TEST_CASE("scalar multiples induce the same functors") {
  auto const s = subspaces(2, 3);
  auto const a = annihilators(2, 3);
  Mat const t = M("1,2;0,1", 3);
  CHECK(functors_equal(delta_theta(s, t), delta_theta(s, t.scaled(2))));
  CHECK(functors_equal(gamma_theta(a, t), gamma_theta(a, t.scaled(2))));
  CHECK(recover_theta(delta_theta(s, t.scaled(2))) == t);
  CHECK(canonical_projective(M("0,2;2,1", 3)) == M("0,1;1,2", 3));
}

TEST_CASE("singular theta is rejected") {
  CHECK_ERROR(delta_theta(subspaces(2, 2), M("1,0;0,0", 2)), not_invertible);
  CHECK_ERROR(linked_semigroup(M("1,1;1,1", 2)), not_invertible);
}

TEST_CASE("bifunctor sets") {
  auto const sing = sing_endos(2, 2);
  Subspace const a = Subspace::span(M("1,0", 2));
  Subspace const y = annihilator(Subspace::span(M("0,1", 2)));
  CHECK(gamma_bifunctor(a, y, sing)
        == std::vector<Mat>{M("0,0;0,0", 2), M("1,0;0,0", 2)});
  Subspace const zero = Subspace::zero(2, 2);
  CHECK(gamma_bifunctor(zero, y, sing) == std::vector<Mat>{Mat(2, 2, 2)});
  CHECK(delta_bifunctor(zero, y, sing) == std::vector<Mat>{Mat(2, 2, 2)});

  Mat const swap = M("0,1;1,0", 2);
  auto const s = subspaces(2, 2);
  auto const an = annihilators(2, 2);
  Functor const d = delta_theta(s, swap);
  Functor const g = gamma_theta(an, swap);
  for (std::size_t i = 0; i < s->size(); ++i) {
    for (std::size_t j = 0; j < an->size(); ++j) {
      CHECK(gamma_bifunctor((*s)[i], g(j), sing).size()
            == delta_bifunctor(d(i), (*an)[j], sing).size());
    }
  }
}

TEST_CASE("chi is natural") {
  for (auto const& t : {M("0,1;1,0", 2), M("1,1;0,1", 2)}) {
    NaturalityReport const r = chi_naturality(2, 2, t);
    CHECK(r.verdict.ok);
    CHECK(r.squares > 0);
    CHECK(r.set_pairs == 16);
  }
  CHECK(chi_naturality(2, 3, M("2,1;1,1", 3)).verdict.ok);
}

TEST_CASE("linked-pair semigroup") {
  Mat const swap = M("0,1;1,0", 2);
  LinkedSemigroup const ls = linked_semigroup(swap);
  CHECK(ls.pairs.size() == 10);
  for (auto const& pr : ls.pairs) {
    CHECK(pr.second == swap * pr.first * swap);
  }
  SemigroupTable const sing = matrix_table(singular_matrices(2, 2));
  CHECK(are_isomorphic(ls.table, sing).has_value());
  std::vector<std::uint32_t> id(10);
  std::iota(id.begin(), id.end(), 0u);
  CHECK(is_homomorphism(ls.table, sing, id));
  LinkedSemigroup const diag = linked_semigroup(Mat::identity(2, 2));
  for (auto const& pr : diag.pairs) {
    CHECK(pr.first == pr.second);
  }
}

TEST_CASE("collapsing functor is not a cross-connection") {
  auto const a = annihilators(2, 2);
  Functor f;
  f.source = a;
  f.target = a;
  std::size_t const target = 1;
  f.object_map.assign(a->size(), target);
  f.object_map[0] = 0;
  f.on_morphism = [a, target](Morphism const& m) {
    Subspace const& to = (*a)[target];
    Subspace const& d = m.dom.is_zero() ? m.dom : to;
    Subspace const& c = m.cod.is_zero() ? m.cod : to;
    return m.map.is_zero() || d.is_zero() || c.is_zero()
               ? zero_morphism(d, c)
               : identity_morphism(to);
  };
  // Hom-sets between lines all have two elements, so nothing is lost
  // locally; the failure is that one line never gets a complement.
  CHECK(is_local_isomorphism(f).ok);
  CHECK_FALSE(is_object_surjective(f));
  CHECK_FALSE(is_crossconnection(f, *subspaces(2, 2)).verdict.ok);
}

TEST_CASE("constant functor to zero is not fully faithful") {
  auto const a = annihilators(2, 2);
  Functor f;
  f.source = a;
  f.target = a;
  f.object_map.assign(a->size(), 0);
  f.on_morphism = [a](Morphism const&) {
    return zero_morphism((*a)[0], (*a)[0]);
  };
  REQUIRE((*a)[0].is_zero());
  CHECK(check_functor(f).ok);
  Verdict const v = is_local_isomorphism(f);
  CHECK_FALSE(v.ok);
  CHECK(v.detail.find("fully faithful") != std::string::npos);
}

TEST_CASE("recovery rejects functors not of the form Delta_theta") {
  auto const s = subspaces(2, 2);
  Functor f;
  f.source = s;
  f.target = s;
  f.object_map.assign(s->size(), 1);
  f.object_map[0] = 0;
  CHECK_ERROR(recover_theta(f), not_induced);

  // Right objects, wrong morphisms.
  Functor g = delta_theta(s, Mat::identity(2, 2));
  g.on_morphism = [](Morphism const& m) {
    return m.dom.is_zero() || m.cod.is_zero() ? m
                                              : zero_morphism(m.dom, m.cod);
  };
  CHECK_ERROR(recover_theta(g), not_induced);
}

TEST_CASE("classification") {
  Classification const c2 = classify_crossconnections(2, 2);
  CHECK(c2.bijections == 6);
  CHECK(c2.thetas.size() == 6);
  CHECK(projective_linear_order(2, 2) == 6);
  Classification const c3 = classify_crossconnections(2, 3);
  CHECK(c3.thetas.size() == 24);
  CHECK(std::set<Mat>(c3.thetas.begin(), c3.thetas.end()).size() == 24);
  CHECK(projective_linear_order(2, 3) == 24);
  Classification const c32 = classify_crossconnections(3, 2);
  CHECK(c32.bijections == 168);
  CHECK(c32.not_induced == 0);
  CHECK_ERROR(classify_crossconnections(3, 3), too_large);
}

}
