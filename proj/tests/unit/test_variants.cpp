#include <set>

#include "helpers.hpp"
#include "xconn/variants.hpp"

using namespace xconn;
using testing::M;

TEST_SUITE("variants") {

TEST_CASE("identity sandwich gives the full monoid") {
  VariantContext const ctx(Mat::identity(2, 2));
  CHECK(reg_variant(ctx).elements.size() == 16);
  CHECK(ctx.complement().is_full());
  NonprincipalCensus const np = nonprincipal_cones(ctx, reg_variant(ctx));
  CHECK(np.excess.empty());
}

TEST_CASE("regular part for E11") {
  VariantContext const ctx(M("1,0;0,0", 2));
  VariantRegular const reg = reg_variant(ctx);
  std::vector<Mat> expected = {M("0,0;0,0", 2), M("1,0;0,0", 2),
                               M("1,1;0,0", 2), M("1,0;1,0", 2),
                               M("1,1;1,1", 2)};
  std::sort(expected.begin(), expected.end());
  CHECK(reg.elements == expected);
  for (std::size_t i = 0; i < reg.elements.size(); ++i) {
    Mat const& a = reg.elements[i];
    CHECK(sandwich(sandwich(a, reg.witness[i], ctx), a, ctx) == a);
  }
  CHECK(variant_table(ctx, reg.elements).order() == 5);
}

TEST_CASE("phi") {
  VariantContext const ctx(M("1,0;0,0", 2));
  auto const zero = phi(Mat(2, 2, 2), ctx);
  CHECK(zero.first.is_zero());
  CHECK(zero.second.is_zero());
  auto const [k, i] = phi(M("1,1;1,1", 2), ctx);
  CHECK(k == M("1,1;0,0", 2));
  CHECK(i == M("1,0;1,0", 2));

  std::set<std::pair<Mat, Mat>> on_reg;
  for (auto const& a : reg_variant(ctx).elements) {
    on_reg.insert(phi(a, ctx));
  }
  CHECK(on_reg.size() == 5);
  std::set<std::pair<Mat, Mat>> on_all;
  for (auto const& a : all_matrices(2, 2)) {
    on_all.insert(phi(a, ctx));
  }
  CHECK(on_all.size() < 16);
}

TEST_CASE("carriers and categories for E11") {
  VariantContext const ctx(M("1,0;0,0", 2));
  CHECK(ctx.complement_is_image());
  CHECK(ctx.complement() == Subspace::span(M("1,0", 2)));
  CHECK(ctx.tr() == std::vector<Mat>{M("0,0;0,0", 2), M("0,0;1,0", 2),
                                     M("1,0;0,0", 2), M("1,0;1,0", 2)});
  CHECK(ctx.tb() == std::vector<Mat>{M("0,0;0,0", 2), M("0,1;0,0", 2),
                                     M("1,0;0,0", 2), M("1,1;0,0", 2)});
  VariantCategories const cats = variant_categories(ctx);
  CHECK(cats.r_objects.size() == 2);
  CHECK(cats.b_objects.size() == 2);
  // E21 has no inverse inside TR, nor E12 inside TB.
  CHECK_FALSE(cats.tr_regular);
  CHECK_FALSE(cats.tb_regular);
}

TEST_CASE("variant cross-connection for E11") {
  VariantContext const ctx(M("1,0;0,0", 2));
  VariantRegular const reg = reg_variant(ctx);
  VariantCrossConnection const c = variant_crossconnection(ctx, reg);
  CHECK(c.delta_local_iso.ok);
  CHECK_FALSE(c.delta_object_surjective);
  CHECK(c.gamma_local_iso.ok);
  CHECK(c.phi_injective);
  CHECK(c.phi_homomorphism);
  CHECK(c.isomorphism.has_value());
}

TEST_CASE("non-principal excess") {
  VariantContext const ctx(M("1,0;0,0", 2));
  NonprincipalCensus const np = nonprincipal_cones(ctx, reg_variant(ctx));
  CHECK(np.principal == std::vector<Mat>{M("0,0;0,0", 2), M("1,0;0,0", 2),
                                         M("1,0;1,0", 2)});
  CHECK(np.excess == std::vector<Mat>{M("0,0;1,0", 2)});
  CHECK(np.principal_in_carrier);
  for (auto const& t : all_matrices(2, 2)) {
    VariantContext const c(t);
    if (c.theta().is_singular() && !t.is_zero()) {
      CHECK_FALSE(nonprincipal_cones(c, reg_variant(c)).excess.empty());
    }
  }
}

TEST_CASE("closure and phi for every sandwich over GF(2)^2") {
  for (auto const& t : all_matrices(2, 2)) {
    VariantContext const ctx(t);
    VariantRegular const reg = reg_variant(ctx);
    CHECK_NOTHROW(variant_table(ctx, reg.elements));
    VariantCrossConnection const c = variant_crossconnection(ctx, reg);
    CHECK(c.phi_injective);
    CHECK(c.phi_homomorphism);
    CHECK(c.isomorphism.has_value());
  }
}

TEST_CASE("nilpotent sandwich uses the pivot complement") {
  VariantContext const ctx(M("0,1;0,0", 2));
  CHECK_FALSE(ctx.complement_is_image());
  CHECK(ctx.complement() == canonical_complement(ctx.null_space()));
}

TEST_CASE("membership laws") {
  for (auto const& t : all_matrices(2, 3)) {
    Endo const th(t);
    for (auto const& a : all_matrices(2, 3)) {
      CHECK(Endo(a * t).image().is_subspace_of(th.image()));
      CHECK(th.kernel().is_subspace_of(Endo(t * a).kernel()));
    }
  }
}

TEST_CASE("search bound") {
  CHECK_ERROR(VariantContext(Mat::identity(3, 5)), too_large);
}

}
