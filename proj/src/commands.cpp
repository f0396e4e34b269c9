#include "xconn/commands.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "xconn/crossconn.hpp"
#include "xconn/dual.hpp"
#include "xconn/variants.hpp"

namespace xconn {

namespace {

// Multiplication tables are built in full only up to this order.
constexpr std::size_t kTableBound = 4096;
// Independent witness searches are run only up to this order; above it the
// explicit map is checked directly.
constexpr std::size_t kWitnessBound = 400;

std::string count_text(std::size_t k, std::string const& what) {
  return std::to_string(k) + " " + what;
}

std::string join(std::vector<Mat> const& ms) {
  std::string out = "{";
  for (std::size_t i = 0; i < ms.size(); ++i) {
    out += (i ? " " : "") + ms[i].to_string();
  }
  return out + "}";
}

std::uint64_t power(std::uint64_t base, std::size_t e) {
  std::uint64_t out = 1;
  while (e-- > 0) {
    out *= base;
  }
  return out;
}

std::vector<std::uint32_t> identity_map(std::size_t n) {
  std::vector<std::uint32_t> out(n);
  std::iota(out.begin(), out.end(), 0u);
  return out;
}

void require_table_size(std::uint64_t order) {
  if (order > kTableBound) {
    throw Error(ErrorCode::too_large,
                "semigroup of order " + std::to_string(order)
                    + " exceeds the table bound " + std::to_string(kTableBound));
  }
}

Json matrices_json(std::vector<Mat> const& ms) {
  Json out = Json::array();
  for (auto const& m : ms) {
    out.push_back(m.to_string());
  }
  return out;
}

Json params_json(Options const& opt) {
  Json j = {{"p", opt.p}, {"n", opt.n}};
  j["theta"] = opt.theta ? Json(opt.theta->to_string()) : Json(nullptr);
  return j;
}

// ----------------------------------------------------------------- checks

Check annihilator_dimension(std::size_t n, unsigned p) {
  for (auto const& a : enumerate_subspaces(n, p, SubspaceFilter::all)) {
    if (annihilator(a).dim() != n - a.dim()) {
      return {"annihilator_dimension", false,
              "dim of annihilator of " + a.to_string() + " is "
                  + std::to_string(annihilator(a).dim())};
    }
  }
  return {"annihilator_dimension", true,
          count_text(enumerate_subspaces(n, p, SubspaceFilter::all).size(),
                     "subspaces")};
}

Check annihilator_involution(std::size_t n, unsigned p) {
  auto const all = enumerate_subspaces(n, p, SubspaceFilter::all);
  for (auto const& a : all) {
    if (annihilator(annihilator(a)) != a) {
      return {"annihilator_involution", false, a.to_string()};
    }
  }
  return {"annihilator_involution", true, count_text(all.size(), "subspaces")};
}

Check annihilator_order_reversing(std::size_t n, unsigned p) {
  auto const all = enumerate_subspaces(n, p, SubspaceFilter::all);
  std::vector<Subspace> ann;
  for (auto const& a : all) {
    ann.push_back(annihilator(a));
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (all[i].is_subspace_of(all[j]) != ann[j].is_subspace_of(ann[i])) {
        return {"annihilator_order_reversing", false,
                "A = " + all[i].to_string() + ", B = " + all[j].to_string()};
      }
    }
  }
  return {"annihilator_order_reversing", true,
          count_text(all.size() * all.size(), "pairs")};
}

Check green_oracle(std::vector<Mat> const& elements, std::string name) {
  SemigroupTable const t = matrix_table(elements);
  GreenStructure const g = green_structure(t);
  std::vector<Endo> endos;
  for (auto const& m : elements) {
    endos.emplace_back(m);
  }
  std::vector<std::optional<std::size_t>> bad(elements.size());
  parallel_for(elements.size(), [&](std::size_t a) {
    for (std::size_t b = 0; b < elements.size(); ++b) {
      if (green(endos[a], endos[b]) != g.flags(a, b)) {
        bad[a] = b;
        return;
      }
    }
  });
  for (std::size_t a = 0; a < elements.size(); ++a) {
    if (bad[a]) {
      return {std::move(name), false,
              "a = " + elements[a].to_string() + ", b = "
                  + elements[*bad[a]].to_string() + ": characterization "
                  + to_string(green(endos[a], endos[*bad[a]])) + ", oracle "
                  + to_string(g.flags(a, *bad[a]))};
    }
  }
  return {std::move(name), true,
          count_text(elements.size() * elements.size(), "pairs")};
}

Check cone_roundtrip(std::size_t n, unsigned p) {
  SubspaceCategory const cat = SubspaceCategory::proper(n, p);
  auto const sing = singular_matrices(n, p);
  for (auto const& a : sing) {
    if (cone_to_map(cat, principal_cone(cat, a)) != a) {
      return {"cone_to_map_roundtrip", false, a.to_string()};
    }
  }
  return {"cone_to_map_roundtrip", true, count_text(sing.size(), "elements")};
}

// The explicit map i -> i is checked as a homomorphism, and an independent
// witness is searched for when the order is small.
Check table_isomorphism(std::string name,
                        SemigroupTable const& from,
                        SemigroupTable const& to,
                        bool distinct_elements) {
  if (from.order() != to.order() || !distinct_elements) {
    return {std::move(name), false,
            "orders " + std::to_string(from.order()) + " and "
                + std::to_string(to.order()) + (distinct_elements
                                                     ? ""
                                                     : ", elements coincide")};
  }
  if (!is_homomorphism(from, to, identity_map(from.order()))) {
    return {std::move(name), false, "the natural bijection is not a homomorphism"};
  }
  std::string witness = "natural bijection of order "
                        + std::to_string(from.order());
  if (from.order() <= kWitnessBound) {
    auto found = are_isomorphic(from, to);
    if (!found) {
      return {std::move(name), false, "no isomorphism found by search"};
    }
    std::size_t fixed = 0;
    for (std::size_t i = 0; i < found->size(); ++i) {
      fixed += (*found)[i] == i;
    }
    witness += "; search found one fixing " + std::to_string(fixed)
               + " elements";
  }
  return {std::move(name), true, witness};
}

Check cone_census_check(std::size_t n, unsigned p, Json* results) {
  SubspaceCategory const cat = SubspaceCategory::proper(n, p);
  ConeCensus const census = cone_census(cat);
  std::size_t principal = 0;
  std::optional<NormalCone> stray;
  for (auto const& c : census.cones) {
    try {
      cone_to_map(cat, c);
      ++principal;
    } catch (Error const& e) {
      if (e.code() != ErrorCode::not_principal) {
        throw;
      }
      if (!stray) {
        stray = c;
      }
    }
  }
  std::size_t const sing = singular_matrices(n, p).size();
  if (results) {
    (*results)["census_cones"] = census.cones.size();
    (*results)["census_principal"] = principal;
    (*results)["census_assignments"] = census.assignments_tried;
    (*results)["first_nonprincipal"] = stray ? to_json(*stray) : Json(nullptr);
  }
  std::string witness = std::to_string(census.cones.size()) + " valid cones, "
                        + std::to_string(principal) + " principal, |Sing| = "
                        + std::to_string(sing);
  if (stray) {
    std::string comps;
    for (auto const& c : stray->components) {
      comps += (comps.empty() ? "" : " | ") + c.to_string();
    }
    witness += "; non-principal cone with vertex " + stray->vertex.to_string()
               + ": " + comps;
  }
  return {"cone_census_count", census.cones.size() == sing, witness};
}

Check m_set_check(std::size_t n, unsigned p) {
  SubspaceCategory const cat = SubspaceCategory::proper(n, p);
  auto const es = idempotents(n, p, true);
  for (auto const& e : es) {
    auto via_cone = m_set(cat, principal_cone(cat, e.matrix()));
    auto via_complement = m_set_by_complement(e);
    std::sort(via_cone.begin(), via_cone.end());
    std::sort(via_complement.begin(), via_complement.end());
    std::size_t const k = e.kernel().dim();
    if (via_cone != via_complement
        || via_cone.size() != power(p, k * (n - k))) {
      return {"m_set_characterizations", false,
              "e = " + e.matrix().to_string() + ": "
                  + std::to_string(via_cone.size()) + " by components, "
                  + std::to_string(via_complement.size()) + " by complements"};
    }
  }
  return {"m_set_characterizations", true, count_text(es.size(), "idempotents")};
}

Check dual_object_count(std::size_t n, unsigned p) {
  auto const cat = annihilator_category(n, p);
  auto const proper = enumerate_subspaces(n, p, SubspaceFilter::proper,
                                          Side::dual);
  bool const ok = cat.objects() == proper;
  return {"dual_object_count", ok,
          std::to_string(cat.size()) + " annihilators, "
              + std::to_string(proper.size()) + " proper subspaces of V*"};
}

Check dual_anti_isomorphism(std::size_t n, unsigned p) {
  ConeSemigroup const dual = build_dual_cone_semigroup(n, p);
  std::set<NormalCone> distinct(dual.cones.begin(), dual.cones.end());
  return table_isomorphism("dual_table_anti_isomorphic", dual.table,
                           matrix_table(dual.elements).opposite(),
                           distinct.size() == dual.cones.size());
}

// λ^α λ^β = λ^{βα} on seeded random pairs, and α -> λ^α injective.
Check dual_product_law_sampled(std::size_t n, unsigned p, std::size_t pairs) {
  SubspaceCategory const cat = annihilator_category(n, p);
  auto const sing = singular_matrices(n, p);
  std::vector<NormalCone> cones(sing.size());
  parallel_for(sing.size(), [&](std::size_t i) {
    cones[i] = principal_cone(cat, dual_action(sing[i]));
  });
  std::set<NormalCone> distinct(cones.begin(), cones.end());
  if (distinct.size() != cones.size()) {
    return {"dual_product_law_sampled", false, "two elements share a cone"};
  }
  std::mt19937_64 rng(20250101);
  std::uniform_int_distribution<std::size_t> pick(0, sing.size() - 1);
  for (std::size_t k = 0; k < pairs; ++k) {
    std::size_t const a = pick(rng);
    std::size_t const b = pick(rng);
    if (cone_compose(cat, cones[a], cones[b])
        != principal_cone(cat, dual_action(sing[b] * sing[a]))) {
      return {"dual_product_law_sampled", false,
              "alpha = " + sing[a].to_string() + ", beta = "
                  + sing[b].to_string()};
    }
  }
  return {"dual_product_law_sampled", true,
          std::to_string(pairs) + " seeded pairs of " + std::to_string(sing.size())
              + " elements"};
}

template <typename PerTheta>
Check over_automorphisms(std::string name,
                         std::size_t n,
                         unsigned p,
                         PerTheta&& per_theta) {
  auto const thetas = invertible_matrices(n, p);
  for (auto const& t : thetas) {
    std::string why = per_theta(t);
    if (!why.empty()) {
      return {std::move(name), false, "theta = " + t.to_string() + ": " + why};
    }
  }
  return {std::move(name), true, count_text(thetas.size(), "automorphisms")};
}

std::string crossconnection_failure(std::size_t n, unsigned p, Mat const& t) {
  auto const subs =
      std::make_shared<SubspaceCategory const>(SubspaceCategory::proper(n, p));
  auto const anns =
      std::make_shared<SubspaceCategory const>(annihilator_category(n, p));
  auto const r = is_crossconnection(gamma_theta(anns, t), *subs);
  return r.verdict ? "" : r.verdict.detail;
}

std::string naturality_failure(std::size_t n, unsigned p, Mat const& t) {
  auto const r = chi_naturality(n, p, t);
  return r.verdict ? "" : r.verdict.detail;
}

std::string linked_iso_failure(std::size_t n, unsigned p, Mat const& t) {
  LinkedSemigroup const ls = linked_semigroup(t);
  std::set<LinkedPair> distinct(ls.pairs.begin(), ls.pairs.end());
  Check c = table_isomorphism("", ls.table,
                              matrix_table(singular_matrices(n, p)),
                              distinct.size() == ls.pairs.size());
  return c.pass ? "" : c.witness;
}

std::string scalar_invariance_failure(std::size_t n, unsigned p, Mat const& t) {
  auto const anns =
      std::make_shared<SubspaceCategory const>(annihilator_category(n, p));
  Functor const g = gamma_theta(anns, t);
  for (unsigned c = 2; c < p; ++c) {
    if (!functors_equal(g, gamma_theta(anns, t.scaled(c)))) {
      return "differs from scalar multiple " + std::to_string(c);
    }
  }
  return "";
}

Check classification_check(std::size_t n, unsigned p, Json* results) {
  Classification const c = classify_crossconnections(n, p);
  std::set<Mat> distinct(c.thetas.begin(), c.thetas.end());
  std::uint64_t const pgl = projective_linear_order(n, p);
  if (results) {
    (*results)["bijections"] = c.bijections;
    (*results)["induced"] = c.thetas.size();
    (*results)["not_induced"] = c.not_induced;
    (*results)["pgl_order"] = pgl;
    (*results)["thetas"] = matrices_json(c.thetas);
  }
  bool const ok = c.not_induced == 0 && c.thetas.size() == pgl
                  && distinct.size() == pgl;
  return {"classification_count", ok,
          std::to_string(c.bijections) + " object bijections, "
              + std::to_string(c.thetas.size()) + " induced ("
              + std::to_string(distinct.size()) + " distinct), |PGL| = "
              + std::to_string(pgl)};
}

Check recover_exact(std::size_t n, unsigned p) {
  auto const cat =
      std::make_shared<SubspaceCategory const>(SubspaceCategory::proper(n, p));
  Classification const c = classify_crossconnections(n, p);
  for (auto const& t : c.thetas) {
    // recover_theta checks equality on every morphism before returning.
    Mat const back = recover_theta(delta_theta(cat, t));
    if (back != t) {
      return {"recover_theta_exact", false,
              t.to_string() + " recovered as " + back.to_string()};
    }
  }
  return {"recover_theta_exact", true,
          count_text(c.thetas.size(), "functors recovered")};
}

struct VariantChecks {
  VariantRegular reg;
  bool closed = false;
  bool regular = false;
  VariantCrossConnection cxn;
};

VariantChecks variant_core(VariantContext const& ctx) {
  VariantChecks v;
  v.reg = reg_variant(ctx);
  try {
    variant_table(ctx, v.reg.elements);
    v.closed = true;
  } catch (Error const& e) {
    if (e.code() != ErrorCode::not_closed) {
      throw;
    }
  }
  v.regular = true;
  for (std::size_t i = 0; i < v.reg.elements.size(); ++i) {
    Mat const& a = v.reg.elements[i];
    if (sandwich(sandwich(a, v.reg.witness[i], ctx), a, ctx) != a) {
      v.regular = false;
    }
  }
  v.cxn = variant_crossconnection(ctx, v.reg);
  return v;
}

std::string variant_batch_failure(Mat const& t) {
  VariantContext const ctx(t);
  VariantChecks const v = variant_core(ctx);
  if (!v.closed) {
    return "Reg not closed under the sandwich product";
  }
  if (!v.regular) {
    return "a regularity witness fails";
  }
  if (!v.cxn.phi_injective || !v.cxn.phi_homomorphism) {
    return "phi is not an injective homomorphism on Reg";
  }
  if (!v.cxn.isomorphism) {
    return "phi(Reg) is not isomorphic to (Reg, *)";
  }
  return "";
}

Check variant_batch(std::string name, std::vector<Mat> const& thetas) {
  for (auto const& t : thetas) {
    if (std::string why = variant_batch_failure(t); !why.empty()) {
      return {std::move(name), false, "theta = " + t.to_string() + ": " + why};
    }
  }
  return {std::move(name), true, count_text(thetas.size(), "sandwich matrices")};
}

// ---------------------------------------------------------------- suite

std::vector<Mat> e11_reg_expected() {
  std::vector<Mat> out;
  for (char const* s : {"0,0;0,0", "1,0;0,0", "1,1;0,0", "1,0;1,0", "1,1;1,1"}) {
    out.push_back(Mat::parse(s, 2));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Mat parse_theta(std::string const& text, unsigned p, std::size_t n) {
  Mat m = Mat::parse(text, p);
  if (m.rows() != n || m.cols() != n) {
    throw Error(ErrorCode::shape_error,
                "theta must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  return m;
}

// ------------------------------------------------------------- commands

Report run_lattice(Options const& opt) {
  std::size_t const n = opt.n;
  unsigned const p = opt.p;
  Report r;
  r.command = "lattice";
  r.params = params_json(opt);
  auto const all = enumerate_subspaces(n, p, SubspaceFilter::all);
  std::uint64_t expected = 0;
  Json by_dim = Json::array();
  for (std::size_t k = 0; k <= n; ++k) {
    expected += gaussian_binomial(n, k, p);
    by_dim.push_back(gaussian_binomial(n, k, p));
  }
  r.check("subspace_count", all.size() == expected,
          std::to_string(all.size()) + " enumerated, "
              + std::to_string(expected) + " by Gaussian binomials");
  std::uint64_t total_complements = 0;
  for (auto const& a : all) {
    total_complements += power(p, a.dim() * (n - a.dim()));
  }
  if (total_complements <= (1u << 16)) {
    bool ok = true;
    std::string witness = count_text(total_complements, "complements");
    for (auto const& a : all) {
      auto const cs = all_complements(a);
      std::set<Subspace> distinct(cs.begin(), cs.end());
      bool each = std::all_of(cs.begin(), cs.end(), [&](Subspace const& w) {
        return is_direct_sum(a, w) && a.dim() + w.dim() == n;
      });
      if (!each || distinct.size() != power(p, a.dim() * (n - a.dim()))) {
        ok = false;
        witness = a.to_string();
        break;
      }
    }
    r.check("complement_counts", ok, witness);
  }
  r.checks.push_back(annihilator_dimension(n, p));
  r.checks.push_back(annihilator_involution(n, p));
  if (all.size() <= 2048) {
    r.checks.push_back(annihilator_order_reversing(n, p));
  }
  r.results["count"] = all.size();
  r.results["by_dimension"] = by_dim;
  Json list = Json::array();
  for (auto const& a : all) {
    list.push_back(to_json(a));
  }
  r.results["subspaces"] = std::move(list);
  return r;
}

Report run_semigroup(Options const& opt) {
  std::size_t const n = opt.n;
  unsigned const p = opt.p;
  require_table_size(checked_matrix_count(n, p));
  Report r;
  r.command = "semigroup";
  r.params = params_json(opt);
  auto const all = all_matrices(n, p);
  auto const sing = singular_matrices(n, p);
  std::uint64_t const gl = general_linear_order(n, p);
  r.check("sing_count", sing.size() + gl == all.size(),
          std::to_string(sing.size()) + " singular, |GL| = "
              + std::to_string(gl));
  SemigroupTable const t = matrix_table(sing);
  std::size_t table_idempotents = 0;
  for (std::size_t i = 0; i < t.order(); ++i) {
    table_idempotents += t.is_idempotent(i);
  }
  auto const es = idempotents(n, p, true);
  r.check("idempotent_count", es.size() == table_idempotents,
          std::to_string(es.size()) + " singular idempotents");
  Regularity const reg = regular_elements(t);
  r.check("sing_regular", reg.regular.size() == t.order(),
          std::to_string(reg.regular.size()) + " of "
              + std::to_string(t.order()) + " regular");
  r.checks.push_back(green_oracle(all, "green_oracle_full"));
  r.checks.push_back(green_oracle(sing, "green_oracle_sing"));
  GreenStructure const g = green_structure(t);
  auto classes = [](std::vector<std::uint32_t> const& ids) {
    return std::set<std::uint32_t>(ids.begin(), ids.end()).size();
  };
  r.results["order_full"] = all.size();
  r.results["order_sing"] = sing.size();
  r.results["general_linear_order"] = gl;
  r.results["idempotents_all"] = idempotents(n, p, false).size();
  r.results["idempotents_singular"] = es.size();
  r.results["l_classes"] = classes(g.l_class);
  r.results["r_classes"] = classes(g.r_class);
  r.results["d_classes"] = classes(g.d_class);
  if (t.order() <= 64) {
    r.results["table"] = to_json(t);
  }
  return r;
}

Report run_cones(Options const& opt) {
  std::size_t const n = opt.n;
  unsigned const p = opt.p;
  require_table_size(singular_matrices(n, p).size());
  Report r;
  r.command = "cones";
  r.params = params_json(opt);
  SubspaceCategory const cat = SubspaceCategory::proper(n, p);
  ConeSemigroup const cs = build_cone_semigroup(n, p);
  bool valid = true;
  for (auto const& c : cs.cones) {
    valid = valid && validate_cone(cat, c).ok;
  }
  r.check("principal_cones_valid", valid, count_text(cs.cones.size(), "cones"));
  r.checks.push_back(cone_roundtrip(n, p));
  std::set<NormalCone> distinct(cs.cones.begin(), cs.cones.end());
  r.checks.push_back(table_isomorphism("cone_table_isomorphic", cs.table,
                                       matrix_table(cs.elements),
                                       distinct.size() == cs.cones.size()));
  bool idem = true;
  for (std::size_t i = 0; i < cs.elements.size(); ++i) {
    bool const matrix_idem = cs.elements[i] * cs.elements[i] == cs.elements[i];
    idem = idem && matrix_idem == is_idempotent_cone(cat, cs.cones[i]);
  }
  r.check("idempotent_cones", idem, "idempotent cones are the rho^e");
  r.checks.push_back(m_set_check(n, p));
  r.results["objects"] = cat.size();
  r.results["principal_cones"] = cs.cones.size();
  if (opt.census) {
    Check c = cone_census_check(n, p, &r.results);
    r.checks.push_back(std::move(c));
  }
  return r;
}

Report run_dual(Options const& opt) {
  std::size_t const n = opt.n;
  unsigned const p = opt.p;
  require_table_size(singular_matrices(n, p).size());
  Report r;
  r.command = "dual";
  r.params = params_json(opt);
  r.checks.push_back(annihilator_dimension(n, p));
  r.checks.push_back(annihilator_involution(n, p));
  r.checks.push_back(annihilator_order_reversing(n, p));
  r.checks.push_back(dual_object_count(n, p));

  NormalDual const nd = build_normal_dual(n, p);
  auto const nonzero = enumerate_subspaces(n, p, SubspaceFilter::nonzero);
  auto p_images = nd.p_images;
  std::sort(p_images.begin(), p_images.end());
  r.check("normal_dual_objects",
          nd.objects.size() == nonzero.size()
              && p_images == annihilator_category(n, p).objects(),
          std::to_string(nd.objects.size()) + " H-functors");

  bool same_sets = true;
  std::string witness = "every idempotent and object";
  SubspaceCategory const cat = SubspaceCategory::proper(n, p);
  for (auto const& e : idempotents(n, p, true)) {
    for (auto const& a : cat.objects()) {
      if (h_set(e, a) != h_set_by_definition(e, a)) {
        same_sets = false;
        witness = "e = " + e.matrix().to_string() + ", A = " + a.to_string();
      }
    }
  }
  r.check("h_set_definition", same_sets, witness);
  r.checks.push_back(dual_anti_isomorphism(n, p));
  r.results["h_functors"] = nd.objects.size();
  Json objs = Json::array();
  for (auto const& y : nd.p_images) {
    objs.push_back(to_json(y));
  }
  r.results["p_images"] = std::move(objs);
  return r;
}

Report run_crossconn(Options const& opt) {
  std::size_t const n = opt.n;
  unsigned const p = opt.p;
  Report r;
  r.command = "crossconn";
  r.params = params_json(opt);
  if (opt.theta) {
    Mat const& t = *opt.theta;
    if (!invert(t)) {
      throw Error(ErrorCode::not_invertible,
                  t.to_string() + " is singular; use the variant command");
    }
    require_table_size(singular_matrices(n, p).size());
    auto const subs = std::make_shared<SubspaceCategory const>(
        SubspaceCategory::proper(n, p));
    auto const anns =
        std::make_shared<SubspaceCategory const>(annihilator_category(n, p));
    Functor const delta = delta_theta(subs, t);
    Functor const gamma = gamma_theta(anns, t);
    Verdict const dv = is_local_isomorphism(delta);
    r.check("delta_local_isomorphism", dv.ok, dv.detail);
    auto const cc = is_crossconnection(gamma, *subs);
    r.check("gamma_crossconnection", cc.verdict.ok,
            cc.verdict ? count_text(cc.witnesses.size(), "objects covered")
                       : cc.verdict.detail);

    Mat const t_inv = *invert(t);
    bool commutes = true;
    std::string witness = "all objects";
    for (auto const& a : enumerate_subspaces(n, p, SubspaceFilter::nonzero)) {
      if (annihilator(a).image_under(dual_action(t))
          != annihilator(a.image_under(t_inv))) {
        commutes = false;
        witness = a.to_string();
        break;
      }
    }
    r.check("gamma_annihilator_commutation", commutes, witness);

    NaturalityReport const nat = chi_naturality(n, p, t);
    r.check("chi_naturality", nat.verdict.ok,
            nat.verdict ? std::to_string(nat.squares) + " squares, "
                              + std::to_string(nat.set_pairs) + " set pairs"
                        : nat.verdict.detail);
    LinkedSemigroup const ls = linked_semigroup(t);
    std::set<LinkedPair> distinct(ls.pairs.begin(), ls.pairs.end());
    r.check("linked_semigroup_order",
            distinct.size() == singular_matrices(n, p).size(),
            count_text(distinct.size(), "pairs"));
    r.checks.push_back(table_isomorphism(
        "linked_semigroup_isomorphic", ls.table,
        matrix_table(singular_matrices(n, p)),
        distinct.size() == ls.pairs.size()));
    Mat const back = recover_theta(delta);
    r.check("recover_theta_roundtrip", back == canonical_projective(t),
            "recovered " + back.to_string());
    std::string const why = scalar_invariance_failure(n, p, t);
    r.check("gamma_scalar_invariance", why.empty(),
            why.empty() ? "all nonzero scalars" : why);
    r.results["recovered_theta"] = back.to_string();
    r.results["linked_order"] = ls.pairs.size();
    r.results["crossconnection_witnesses"] = cc.witnesses;
  }
  if (opt.classify) {
    r.checks.push_back(classification_check(n, p, &r.results));
  }
  if (!opt.theta && !opt.classify) {
    throw Error(ErrorCode::invalid_argument,
                "crossconn needs --theta or --classify");
  }
  return r;
}

Report run_variant(Options const& opt) {
  if (!opt.theta) {
    throw Error(ErrorCode::invalid_argument, "variant needs --theta");
  }
  bool const all = !opt.reg && !opt.cxn && !opt.census;
  Mat const& t = *opt.theta;
  VariantContext const ctx(t);
  Report r;
  r.command = "variant";
  r.params = params_json(opt);
  r.results["complement"] = to_json(ctx.complement());
  r.results["complement_is_image"] = ctx.complement_is_image();
  r.results["tr_size"] = ctx.tr().size();
  r.results["tb_size"] = ctx.tb().size();

  VariantChecks const v = variant_core(ctx);
  r.results["reg_size"] = v.reg.elements.size();
  if (all || opt.reg) {
    r.check("reg_closed", v.closed, count_text(v.reg.elements.size(), "elements"));
    r.check("reg_witnesses", v.regular, "a * b * a = a for every witness b");
    r.results["reg"] = matrices_json(v.reg.elements);
  }
  if (all || opt.cxn) {
    Mat const& tm = ctx.theta().matrix();
    bool laws = true;
    std::string witness = "every alpha";
    for (auto const& a : all_matrices(ctx.dim(), ctx.modulus())) {
      Endo const at(a * tm);
      Endo const ta(tm * a);
      if (!at.image().is_subspace_of(ctx.image())
          || !ctx.null_space().is_subspace_of(ta.kernel())) {
        laws = false;
        witness = a.to_string();
        break;
      }
    }
    r.check("membership_laws", laws, witness);
    VariantCategories const cats = variant_categories(ctx);
    auto irregular = [](SemigroupTable const& t) -> std::string {
      auto const reg = regular_elements(t);
      for (std::size_t i = 0; i < t.order(); ++i) {
        if (!reg.witness[i]) {
          return " (" + t.labels[i] + " has no inverse)";
        }
      }
      return "";
    };
    r.check("carriers_regular", cats.tr_regular && cats.tb_regular,
            "TR " + std::to_string(cats.tr_table.order())
                + irregular(cats.tr_table) + ", TB "
                + std::to_string(cats.tb_table.order())
                + irregular(cats.tb_table));
    std::set<Mat> const tr(ctx.tr().begin(), ctx.tr().end());
    std::set<Mat> const tb(ctx.tb().begin(), ctx.tb().end());
    bool in_carriers = true;
    for (auto const& pair : v.cxn.pairs) {
      in_carriers = in_carriers && tb.contains(pair.first)
                    && tr.contains(pair.second);
    }
    r.check("phi_in_carriers", in_carriers,
            "theta alpha in TB, alpha theta in TR");
    r.check("phi_injective", v.cxn.phi_injective,
            count_text(v.cxn.pairs.size(), "pairs"));
    r.check("phi_homomorphism", v.cxn.phi_homomorphism, "all pairs in Reg");
    r.check("phi_table_isomorphic", v.cxn.isomorphism.has_value(),
            v.cxn.isomorphism ? "witness found" : "no isomorphism");
    bool const singular = ctx.theta().is_singular();
    r.check("delta_local_isomorphism", v.cxn.delta_local_iso.ok,
            v.cxn.delta_local_iso.detail);
    r.check("gamma_local_isomorphism", v.cxn.gamma_local_iso.ok,
            v.cxn.gamma_local_iso.detail);
    if (singular) {
      r.check("delta_not_object_surjective", !v.cxn.delta_object_surjective,
              "proper local isomorphism");
    }
    if (v.cxn.isomorphism) {
      r.results["isomorphism"] = *v.cxn.isomorphism;
    }
    r.results["r_objects"] = cats.r_objects.size();
    r.results["b_objects"] = cats.b_objects.size();
  }
  if (all || opt.census) {
    NonprincipalCensus const np = nonprincipal_cones(ctx, v.reg);
    r.results["principal_images"] = matrices_json(np.principal);
    r.results["excess"] = matrices_json(np.excess);
    r.results["excess_count"] = np.excess.size();
    r.results["r_cones"] = np.r_cones;
    r.results["r_principal_cones"] = np.r_principal_cones;
    if (!ctx.theta().is_singular()) {
      r.check("nonprincipal_excess", np.excess.empty(),
              count_text(np.excess.size(), "excess elements"));
    } else if (!t.is_zero()) {
      r.check("nonprincipal_excess", !np.excess.empty(),
              np.excess.empty() ? "none" : "first " + np.excess.front().to_string());
    }
  }
  return r;
}

// ------------------------------------------------------------ acceptance

std::vector<Criterion> const& acceptance_criteria() {
  static std::vector<Criterion> const list = {
      {1, "Green's relations: characterization matches principal ideals"},
      {2, "cone census and cone semigroup against Sing(V)"},
      {3, "annihilator duality and the dual cone semigroup"},
      {4, "M-sets by components and by complements"},
      {5, "automorphism-induced cross-connections"},
      {6, "classification of cross-connections"},
      {7, "variant: regular part, phi, and carriers"},
  };
  return list;
}

std::vector<SuiteCheck> acceptance_checks() {
  std::vector<SuiteCheck> out;
  auto add = [&out](int c, std::string name, unsigned p, std::size_t n,
                    std::function<Check()> run) {
    out.push_back({c, std::move(name), p, n, std::move(run)});
  };

  for (std::size_t n : {2, 3}) {
    add(1, "green_oracle_full", 2, n, [n] {
      return green_oracle(all_matrices(n, 2), "");
    });
    add(1, "green_oracle_sing", 2, n, [n] {
      return green_oracle(singular_matrices(n, 2), "");
    });
  }

  add(2, "cone_census_count", 2, 2, [] {
    return cone_census_check(2, 2, nullptr);
  });
  add(2, "cone_table_isomorphic", 2, 2, [] {
    ConeSemigroup const cs = build_cone_semigroup(2, 2);
    std::set<NormalCone> distinct(cs.cones.begin(), cs.cones.end());
    return table_isomorphism("", cs.table, matrix_table(cs.elements),
                             distinct.size() == cs.cones.size());
  });
  add(2, "cone_to_map_roundtrip", 2, 2, [] { return cone_roundtrip(2, 2); });

  for (unsigned p : {2u, 3u}) {
    for (std::size_t n : {1, 2, 3}) {
      add(3, "annihilator_dimension", p, n,
          [=] { return annihilator_dimension(n, p); });
      add(3, "annihilator_involution", p, n,
          [=] { return annihilator_involution(n, p); });
      add(3, "annihilator_order_reversing", p, n,
          [=] { return annihilator_order_reversing(n, p); });
      add(3, "dual_object_count", p, n, [=] { return dual_object_count(n, p); });
      if (p == 3 && n == 3) {
        add(3, "dual_product_law_sampled", p, n,
            [=] { return dual_product_law_sampled(n, p, 2000); });
      } else {
        add(3, "dual_table_anti_isomorphic", p, n,
            [=] { return dual_anti_isomorphism(n, p); });
      }
    }
  }

  for (std::size_t n : {1, 2, 3}) {
    add(4, "m_set_characterizations", 2, n, [n] { return m_set_check(n, 2); });
  }

  for (unsigned p : {2u, 3u}) {
    add(5, "gamma_crossconnection", p, 2, [p] {
      return over_automorphisms("", 2, p, [p](Mat const& t) {
        return crossconnection_failure(2, p, t);
      });
    });
    add(5, "chi_naturality", p, 2, [p] {
      return over_automorphisms("", 2, p, [p](Mat const& t) {
        return naturality_failure(2, p, t);
      });
    });
    add(5, "linked_semigroup_isomorphic", p, 2, [p] {
      return over_automorphisms("", 2, p, [p](Mat const& t) {
        return linked_iso_failure(2, p, t);
      });
    });
  }

  for (unsigned p : {2u, 3u}) {
    add(6, "classification_count", p, 2,
        [p] { return classification_check(2, p, nullptr); });
    add(6, "recover_theta_exact", p, 2, [p] { return recover_exact(2, p); });
  }
  add(6, "gamma_scalar_invariance", 3, 2, [] {
    return over_automorphisms("", 2, 3, [](Mat const& t) {
      return scalar_invariance_failure(2, 3, t);
    });
  });

  auto e11 = [] { return VariantContext(Mat::parse("1,0;0,0", 2)); };
  add(7, "reg_variant_elements", 2, 2, [e11] {
    VariantRegular const reg = reg_variant(e11());
    return Check{"", reg.elements == e11_reg_expected(), join(reg.elements)};
  });
  add(7, "reg_closed", 2, 2, [e11] {
    VariantChecks const v = variant_core(e11());
    return Check{"", v.closed && v.regular,
                 count_text(v.reg.elements.size(), "elements")};
  });
  add(7, "phi_injective_homomorphism", 2, 2, [e11] {
    VariantChecks const v = variant_core(e11());
    return Check{"", v.cxn.phi_injective && v.cxn.phi_homomorphism,
                 count_text(v.cxn.pairs.size(), "distinct pairs")};
  });
  add(7, "phi_table_isomorphic", 2, 2, [e11] {
    VariantChecks const v = variant_core(e11());
    return Check{"", v.cxn.isomorphism.has_value(),
                 v.cxn.isomorphism ? "witness found" : "no isomorphism"};
  });
  add(7, "variant_delta_proper_local_iso", 2, 2, [e11] {
    VariantChecks const v = variant_core(e11());
    return Check{"",
                 v.cxn.delta_local_iso.ok && !v.cxn.delta_object_surjective,
                 v.cxn.delta_local_iso.ok ? "local isomorphism, not surjective"
                                          : v.cxn.delta_local_iso.detail};
  });
  add(7, "nonprincipal_excess", 2, 2, [e11] {
    VariantContext const ctx = e11();
    NonprincipalCensus const np = nonprincipal_cones(ctx, reg_variant(ctx));
    return Check{"", !np.excess.empty(), "excess " + join(np.excess)};
  });
  add(7, "all_theta_closure_phi", 2, 2,
      [] { return variant_batch("", all_matrices(2, 2)); });
  add(7, "rank_one_closure_phi", 2, 3, [] {
    return variant_batch("", {Mat::parse("1,0,0;0,0,0;0,0,0", 2)});
  });
  return out;
}

Report run_acceptance(std::optional<unsigned> p,
                      std::optional<std::size_t> n,
                      std::optional<int> criterion) {
  Report r;
  r.command = "verify-all";
  r.params = {{"p", p ? Json(*p) : Json(nullptr)},
              {"n", n ? Json(*n) : Json(nullptr)}};
  for (auto const& sc : acceptance_checks()) {
    if ((p && sc.p != *p) || (n && sc.n != *n)
        || (criterion && sc.criterion != *criterion)) {
      continue;
    }
    Check c = sc.run();
    c.name = "c" + std::to_string(sc.criterion) + "." + sc.name + "/p"
             + std::to_string(sc.p) + "n" + std::to_string(sc.n);
    r.checks.push_back(std::move(c));
  }
  return r;
}

}  // namespace xconn
