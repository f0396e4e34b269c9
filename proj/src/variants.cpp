#include "xconn/variants.hpp"

#include <algorithm>
#include <set>

namespace xconn {

namespace {

constexpr std::uint64_t kVariantBound = 20'000;

bool image_complements_kernel(Endo const& theta) {
  return is_direct_sum(theta.kernel(), theta.image());
}

}  // namespace

VariantContext::VariantContext(Mat theta)
    : theta_(std::move(theta)),
      complement_is_image_(image_complements_kernel(theta_)) {
  complement_ = complement_is_image_ ? theta_.image()
                                     : canonical_complement(null_space());
  if (checked_matrix_count(dim(), modulus()) > kVariantBound) {
    throw Error(ErrorCode::too_large, "variant of T_V is too large to search");
  }
  for (auto& f : all_matrices(dim(), modulus())) {
    Endo const e(f);
    if (e.image().is_subspace_of(complement_)) {
      tr_.push_back(f);
    }
    if (null_space().is_subspace_of(e.kernel())) {
      tb_.push_back(std::move(f));
    }
  }
}

Mat sandwich(Mat const& a, Mat const& b, VariantContext const& ctx) {
  return a * ctx.theta().matrix() * b;
}

VariantRegular reg_variant(VariantContext const& ctx) {
  Mat const& t = ctx.theta().matrix();
  auto const all = all_matrices(ctx.dim(), ctx.modulus());
  std::vector<std::optional<std::size_t>> found(all.size());
  parallel_for(all.size(), [&](std::size_t i) {
    Mat const at = all[i] * t;
    Mat const ta = t * all[i];
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (at * all[j] * ta == all[i]) {
        found[i] = j;
        return;
      }
    }
  });
  VariantRegular out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (found[i]) {
      out.elements.push_back(all[i]);
      out.witness.push_back(all[*found[i]]);
    }
  }
  return out;
}

SemigroupTable variant_table(VariantContext const& ctx,
                             std::vector<Mat> const& elements) {
  return make_table(
      elements,
      [&ctx](Mat const& a, Mat const& b) { return sandwich(a, b, ctx); },
      [](Mat const& a) { return a.to_string(); });
}

std::pair<Mat, Mat> phi(Mat const& a, VariantContext const& ctx) {
  Mat const& t = ctx.theta().matrix();
  return {t * a, a * t};
}

VariantCategories variant_categories(VariantContext const& ctx) {
  std::size_t const n = ctx.dim();
  unsigned const p = ctx.modulus();
  std::vector<Subspace> r;
  std::vector<Subspace> b;
  for (auto const& a : enumerate_subspaces(n, p, SubspaceFilter::all)) {
    if (a.is_subspace_of(ctx.complement())) {
      r.push_back(a);
    }
    if (ctx.null_space().is_subspace_of(a)) {
      b.push_back(annihilator(a));
    }
  }
  std::sort(b.begin(), b.end());
  VariantCategories out{SubspaceCategory(std::move(r)),
                        SubspaceCategory(std::move(b)),
                        matrix_table(ctx.tr()),
                        matrix_table(ctx.tb()),
                        false,
                        false};
  out.tr_regular =
      regular_elements(out.tr_table).regular.size() == out.tr_table.order();
  out.tb_regular =
      regular_elements(out.tb_table).regular.size() == out.tb_table.order();
  return out;
}

namespace {

Functor conjugate_on(CategoryPtr source, CategoryPtr target, Mat const& t) {
  Functor f;
  f.source = source;
  f.target = target;
  for (auto const& a : source->objects()) {
    Subspace const img = a.image_under(t);
    auto idx = target->index_of(img);
    if (!idx || img.dim() != a.dim()) {
      throw Error(ErrorCode::not_invertible,
                  t.to_string() + " is not injective on " + a.to_string());
    }
    f.object_map.push_back(*idx);
  }
  f.on_morphism = [t](Morphism const& g) { return transport(g, t); };
  return f;
}

struct LocalIsoResult {
  Verdict verdict;
  bool surjective = false;
};

LocalIsoResult check_local_iso(CategoryPtr source,
                               CategoryPtr target,
                               Mat const& t) {
  try {
    Functor const f = conjugate_on(std::move(source), std::move(target), t);
    return {is_local_isomorphism(f), is_object_surjective(f)};
  } catch (Error const& e) {
    return {{false, e.what()}, false};
  }
}

}  // namespace

VariantCrossConnection variant_crossconnection(VariantContext const& ctx,
                                               VariantRegular const& reg) {
  std::size_t const n = ctx.dim();
  unsigned const p = ctx.modulus();
  auto cats = variant_categories(ctx);
  auto r = std::make_shared<SubspaceCategory const>(cats.r_objects);
  auto b = std::make_shared<SubspaceCategory const>(cats.b_objects);
  Mat const& t = ctx.theta().matrix();

  VariantCrossConnection out;
  auto d = check_local_iso(
      r, std::make_shared<SubspaceCategory const>(SubspaceCategory::all(n, p)),
      t);
  out.delta_local_iso = d.verdict;
  out.delta_object_surjective = d.surjective;
  auto g = check_local_iso(
      b,
      std::make_shared<SubspaceCategory const>(
          SubspaceCategory::all(n, p, Side::dual)),
      dual_action(t));
  out.gamma_local_iso = g.verdict;
  out.gamma_object_surjective = g.surjective;

  for (auto const& a : reg.elements) {
    auto [first, second] = phi(a, ctx);
    out.pairs.push_back({std::move(first), std::move(second)});
  }
  std::set<LinkedPair> distinct(out.pairs.begin(), out.pairs.end());
  out.phi_injective = distinct.size() == out.pairs.size();

  out.phi_homomorphism = true;
  for (std::size_t i = 0; i < reg.elements.size() && out.phi_homomorphism; ++i) {
    for (std::size_t j = 0; j < reg.elements.size(); ++j) {
      auto const lhs = phi(sandwich(reg.elements[i], reg.elements[j], ctx), ctx);
      if (lhs.first != out.pairs[i].first * out.pairs[j].first
          || lhs.second != out.pairs[i].second * out.pairs[j].second) {
        out.phi_homomorphism = false;
        break;
      }
    }
  }
  if (!out.phi_injective) {
    return out;
  }
  try {
    out.pair_table = make_table(
        out.pairs,
        [](LinkedPair const& x, LinkedPair const& y) {
          return LinkedPair{x.first * y.first, x.second * y.second};
        },
        [](LinkedPair const& x) {
          return "(" + x.first.to_string() + ", " + x.second.to_string() + ")";
        });
    out.isomorphism = are_isomorphic(variant_table(ctx, reg.elements),
                                     *out.pair_table);
  } catch (Error const& e) {
    if (e.code() != ErrorCode::not_closed) {
      throw;
    }
  }
  return out;
}

NonprincipalCensus nonprincipal_cones(VariantContext const& ctx,
                                      VariantRegular const& reg) {
  Mat const& t = ctx.theta().matrix();
  std::set<Mat> principal;
  for (auto const& a : reg.elements) {
    principal.insert(a * t);
  }
  NonprincipalCensus out;
  out.principal.assign(principal.begin(), principal.end());
  std::set<Mat> const carrier(ctx.tr().begin(), ctx.tr().end());
  out.principal_in_carrier =
      std::includes(carrier.begin(), carrier.end(), principal.begin(),
                    principal.end());
  std::set_difference(carrier.begin(), carrier.end(), principal.begin(),
                      principal.end(), std::back_inserter(out.excess));

  auto const cats = variant_categories(ctx);
  out.r_cones = cone_census(cats.r_objects).cones.size();
  std::set<NormalCone> restricted;
  for (auto const& m : out.principal) {
    if (!cats.r_objects.contains(Subspace::span(m))) {
      continue;
    }
    NormalCone cone = principal_cone(cats.r_objects, m);
    if (validate_cone(cats.r_objects, cone)) {
      restricted.insert(std::move(cone));
    }
  }
  out.r_principal_cones = restricted.size();
  return out;
}

}  // namespace xconn
