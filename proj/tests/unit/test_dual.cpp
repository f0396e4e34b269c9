#include <set>

#include "helpers.hpp"
#include "xconn/dual.hpp"

using namespace xconn;
using testing::M;

TEST_SUITE("dual") {

TEST_CASE("H-sets") {
  Endo const e(M("1,0;0,0", 2));
  Subspace const a = Subspace::span(M("1,0", 2));
  auto const h = h_set(e, a);
  CHECK(h == std::vector<Mat>{M("0,0;0,0", 2), M("1,0;0,0", 2)});
  CHECK(h_set_by_definition(e, a) == h);
  for (unsigned p : {2u, 3u}) {
    for (auto const& f : idempotents(2, p, true)) {
      for (auto const& b : enumerate_subspaces(2, p, SubspaceFilter::proper)) {
        CHECK(h_set(f, b) == h_set_by_definition(f, b));
      }
    }
  }
  CHECK_ERROR(h_set(Endo(M("0,1;0,0", 2)), a), not_idempotent);
}

TEST_CASE("H-functors are determined by the null space") {
  Endo const e1(M("1,0;0,0", 2));
  Endo const e2(M("1,0;1,0", 2));
  Endo const e3(M("1,1;0,0", 2));
  CHECK(h_functor(e1) == h_functor(e3));
  CHECK_FALSE(h_functor(e1) == h_functor(e2));
  CHECK_ERROR(h_functor(Endo(Mat::identity(2, 2))), not_idempotent);
  CHECK(functor_P(h_functor(e1)) == annihilator(e1.kernel()));
  NormalDual const nd = build_normal_dual(3, 2);
  CHECK(nd.objects.size() == 15);
}

TEST_CASE("H-map composes on the right") {
  Subspace const a = Subspace::span(M("1,0", 2));
  Subspace const b = Subspace::span(M("0,1", 2));
  Morphism const g = restrict(M("0,1;1,0", 2), a, b);
  CHECK(h_map(M("1,0;0,0", 2), g) == M("0,1;0,0", 2));
  CHECK_ERROR(h_map(M("0,1;0,0", 2), g), not_included);
}

TEST_CASE("natural transformations act by the transpose") {
  unsigned const p = 3;
  auto const es = idempotents(2, p, true);
  for (auto const& e : es) {
    for (auto const& f : es) {
      for (auto const& u : sandwich_set(f.matrix(), e.matrix())) {
        DualMorphism const d = nat_trans(Endo(u), e, f);
        CHECK(d.map.dom == annihilator(e.kernel()));
        CHECK(d.map.cod == annihilator(f.kernel()));
        // The carrier read back realizes the same dual morphism.
        Mat const c = carrier_of(d.map);
        CHECK(restrict(dual_action(c), d.map.dom, d.map.cod) == d.map);
      }
    }
  }
  Endo const e(M("1,0;0,0", 2));
  Endo const f(M("0,0;0,1", 2));
  CHECK_ERROR(nat_trans(Endo(M("1,1;1,1", 2)), e, f), not_in_sandwich);
  CHECK(nat_trans_component(M("1,0;0,0", 2), M("1,0;0,0", 2), M("0,0;1,1", 2))
        == M("0,0;0,0", 2));
}

TEST_CASE("annihilator category") {
  for (unsigned p : {2u, 3u}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      CHECK(annihilator_category(n, p).objects()
            == enumerate_subspaces(n, p, SubspaceFilter::proper, Side::dual));
    }
  }
}

TEST_CASE("M-set through complements") {
  Endo const e(M("1,0;0,0", 2));
  auto const m = m_set_by_complement(e);
  CHECK(m.size() == 2);
  Endo const zero(Mat(2, 2, 2));
  auto const z = m_set_by_complement(zero);
  REQUIRE(z.size() == 1);
  CHECK(z.front().is_zero());
}

TEST_CASE("dual cones reverse products") {
  ConeSemigroup const d = build_dual_cone_semigroup(2, 3);
  SemigroupTable const s = matrix_table(d.elements);
  std::vector<std::uint32_t> id(d.elements.size());
  std::iota(id.begin(), id.end(), 0u);
  CHECK(is_homomorphism(d.table, s.opposite(), id));
  CHECK(d.table.labels[0].rfind("lambda(", 0) == 0);
}

}
