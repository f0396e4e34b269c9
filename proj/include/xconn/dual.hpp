#pragma once

// The normal dual of S(V): H-functors H(e;-), natural transformations
// between them, the functor P into S(V*), and the annihilator category.

#include <cstddef>
#include <string>
#include <vector>

#include "xconn/cones.hpp"
#include "xconn/semigroup.hpp"
#include "xconn/subspace.hpp"

namespace xconn {

// H(e;-) is determined by the null space of e; the witness is the canonical
// idempotent with that null space.
struct HFunctor {
  Subspace key;
  Endo witness;

  friend bool operator==(HFunctor const& a, HFunctor const& b) {
    return a.key == b.key;
  }
};

// Throws not_idempotent unless e is a singular idempotent.
HFunctor h_functor(Endo const& e);
HFunctor h_functor_for_key(Subspace const& null_space);

// H(e;A) = {a in Sing(V) : N_a ⊇ N_e, Im a ⊆ A}, sorted.
std::vector<Mat> h_set(Endo const& e, Subspace const& a);
// {e h : h : Im e -> A}, straight from the definition, sorted.
std::vector<Mat> h_set_by_definition(Endo const& e, Subspace const& a);

// H(e;g) : a -> a g, with g : A -> B applied after a.
Mat h_map(Mat const& a, Morphism const& g);

// A morphism of the annihilator category: u* : (N_e)° -> (N_f)°, α -> uα,
// kept together with a carrier u ∈ f Sing(V) e.
struct DualMorphism {
  Morphism map;  // between dual-side subspaces
  Mat carrier;
  friend bool operator==(DualMorphism const&, DualMorphism const&) = default;
};

// Transpose action of u on functionals: w -> w u^T.
Mat dual_action(Mat const& u);

// The natural transformation H(e;-) -> H(f;-) given by u (requires
// u = f u e; throws not_in_sandwich otherwise).
DualMorphism nat_trans(Endo const& u, Endo const& e, Endo const& f);

// Component of that transformation at any object: a -> f u a.
Mat nat_trans_component(Mat const& u, Mat const& f, Mat const& a);

// Carrier in f Sing(V) e, f/e the canonical witnesses of the codomain and
// domain keys, realizing a morphism between annihilator objects.
Mat carrier_of(Morphism const& dual_map);

// P(H(e;-)) = (N_e)°.
Subspace functor_P(HFunctor const& h);

// {f x e : x in Sing(V)}, sorted.
std::vector<Mat> sandwich_set(Mat const& f, Mat const& e);

// M-set of ρ^e through the complement description {A : A ⊕ N_e = V}.
std::vector<Subspace> m_set_by_complement(Endo const& e);

struct NormalDual {
  std::vector<HFunctor> objects;   // one per null space, key order
  std::vector<Subspace> p_images;  // P of each object
};

// Collects the H-functors of every singular idempotent.
NormalDual build_normal_dual(std::size_t n, unsigned p);

// The annihilator category as a category of dual-side subspaces:
// {A° : A nonzero}, which equals the proper subspaces of V*.
SubspaceCategory annihilator_category(std::size_t n, unsigned p);

// λ^α := principal cone of the transpose action of α in the annihilator
// category, for every α in Sing(V), with its table under cone_compose.
ConeSemigroup build_dual_cone_semigroup(std::size_t n, unsigned p);

}  // namespace xconn
