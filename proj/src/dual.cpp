#include "xconn/dual.hpp"

#include <algorithm>
#include <set>

namespace xconn {

HFunctor h_functor_for_key(Subspace const& null_space) {
  if (null_space.is_zero() || null_space.side() != Side::primal) {
    throw Error(ErrorCode::invalid_argument,
                "H-functor key must be a nonzero primal subspace");
  }
  return {null_space,
          idempotent_from(null_space, canonical_complement(null_space))};
}

HFunctor h_functor(Endo const& e) {
  if (!e.is_idempotent() || !e.is_singular()) {
    throw Error(ErrorCode::not_idempotent,
                e.matrix().to_string() + " is not a singular idempotent");
  }
  return h_functor_for_key(e.kernel());
}

std::vector<Mat> h_set(Endo const& e, Subspace const& a) {
  if (!e.is_idempotent()) {
    throw Error(ErrorCode::not_idempotent, e.matrix().to_string());
  }
  std::vector<Mat> out;
  for (auto& m : singular_matrices(e.dim(), e.modulus())) {
    Endo x(m);
    if (e.kernel().is_subspace_of(x.kernel()) && x.image().is_subspace_of(a)) {
      out.push_back(std::move(m));
    }
  }
  return out;
}

std::vector<Mat> h_set_by_definition(Endo const& e, Subspace const& a) {
  if (!e.is_idempotent()) {
    throw Error(ErrorCode::not_idempotent, e.matrix().to_string());
  }
  std::set<Mat> out;
  for (auto const& h : all_morphisms(e.image(), a)) {
    out.insert(e.matrix() * extend_to_ambient(h));
  }
  return {out.begin(), out.end()};
}

Mat h_map(Mat const& a, Morphism const& g) {
  if (!Subspace::span(a).is_subspace_of(g.dom)) {
    throw Error(ErrorCode::not_included,
                "image of " + a.to_string() + " is not in " + g.dom.to_string());
  }
  return a * extend_to_ambient(g);
}

Mat dual_action(Mat const& u) {
  return u.transpose();
}

DualMorphism nat_trans(Endo const& u, Endo const& e, Endo const& f) {
  if (!e.is_idempotent() || !f.is_idempotent()) {
    throw Error(ErrorCode::not_idempotent, "nat_trans needs idempotents");
  }
  if (f.matrix() * u.matrix() * e.matrix() != u.matrix()) {
    throw Error(ErrorCode::not_in_sandwich,
                u.matrix().to_string() + " is not in f Sing(V) e");
  }
  Subspace const from = annihilator(e.kernel());
  Subspace const to = annihilator(f.kernel());
  return {restrict(dual_action(u.matrix()), from, to), u.matrix()};
}

Mat nat_trans_component(Mat const& u, Mat const& f, Mat const& a) {
  return f * u * a;
}

Mat carrier_of(Morphism const& dual_map) {
  if (dual_map.dom.side() != Side::dual) {
    throw Error(ErrorCode::invalid_argument, "carrier_of needs a dual morphism");
  }
  Mat const e = h_functor_for_key(annihilator(dual_map.dom)).witness.matrix();
  Mat const f = h_functor_for_key(annihilator(dual_map.cod)).witness.matrix();
  Mat const u = extend_to_ambient(dual_map).transpose();
  return f * u * e;
}

Subspace functor_P(HFunctor const& h) {
  return annihilator(h.key);
}

std::vector<Mat> sandwich_set(Mat const& f, Mat const& e) {
  std::set<Mat> out;
  for (auto const& x : singular_matrices(f.rows(), f.modulus())) {
    out.insert(f * x * e);
  }
  return {out.begin(), out.end()};
}

std::vector<Subspace> m_set_by_complement(Endo const& e) {
  std::vector<Subspace> out;
  for (auto& w : all_complements(e.kernel())) {
    if (!w.is_full()) {
      out.push_back(std::move(w));
    }
  }
  return out;
}

NormalDual build_normal_dual(std::size_t n, unsigned p) {
  std::set<Subspace> keys;
  for (auto const& e : idempotents(n, p, true)) {
    keys.insert(e.kernel());
  }
  NormalDual nd;
  for (auto const& k : keys) {
    nd.objects.push_back(h_functor_for_key(k));
    nd.p_images.push_back(functor_P(nd.objects.back()));
  }
  return nd;
}

SubspaceCategory annihilator_category(std::size_t n, unsigned p) {
  std::vector<Subspace> objects;
  for (auto const& a : enumerate_subspaces(n, p, SubspaceFilter::nonzero)) {
    objects.push_back(annihilator(a));
  }
  std::sort(objects.begin(), objects.end());
  return SubspaceCategory(std::move(objects));
}

ConeSemigroup build_dual_cone_semigroup(std::size_t n, unsigned p) {
  SubspaceCategory const cat = annihilator_category(n, p);
  ConeSemigroup out;
  out.elements = singular_matrices(n, p);
  out.cones.resize(out.elements.size());
  parallel_for(out.elements.size(), [&](std::size_t i) {
    out.cones[i] = principal_cone(cat, dual_action(out.elements[i]));
  });
  out.table = cone_table(cat, out.cones);
  for (std::size_t i = 0; i < out.elements.size(); ++i) {
    out.table.labels[i] = "lambda(" + out.elements[i].to_string() + ")";
  }
  return out;
}

}  // namespace xconn
