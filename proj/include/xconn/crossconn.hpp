#pragma once

// Functors between subspace categories, the automorphism-induced
// cross-connections Γ_θ and Δ_θ, their bifunctors and duality χ, the
// linked-pair semigroup, recovery of θ from Δ, and the classification census.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xconn/cones.hpp"
#include "xconn/dual.hpp"
#include "xconn/semigroup.hpp"

namespace xconn {

using CategoryPtr = std::shared_ptr<SubspaceCategory const>;

struct Functor {
  CategoryPtr source;
  CategoryPtr target;
  std::vector<std::size_t> object_map;  // source index -> target index
  // Empty for object-only data (e.g. candidate bijections in a census).
  std::function<Morphism(Morphism const&)> on_morphism;
  std::optional<Mat> generator;

  Subspace const& operator()(std::size_t i) const {
    return (*target)[object_map.at(i)];
  }
  Morphism operator()(Morphism const& f) const { return on_morphism(f); }
};

struct Verdict {
  bool ok = true;
  std::string detail;  // first failing axiom, or a witness summary
  explicit operator bool() const noexcept { return ok; }
};

// Domains/codomains, identities, composition, inclusion preservation.
Verdict check_functor(Functor const& f);

// Inclusion preserving, fully faithful, and an isomorphism of each ideal
// <c> onto <F(c)>.
Verdict is_local_isomorphism(Functor const& f);

// True when is_surjective on objects.
bool is_object_surjective(Functor const& f);

// Γ : A(V) -> A(V) is a cross-connection when it is a local isomorphism
// and every object of S(V) lies in M(Γ(Y)) for some Y, where
// M(N°) = {A : A ⊕ N = V}.  On success, witnesses[i] indexes a Y for the
// i-th object of `subspaces`.
struct CrossConnectionCheck {
  Verdict verdict;
  std::vector<std::size_t> witnesses;
};
CrossConnectionCheck is_crossconnection(Functor const& gamma,
                                        SubspaceCategory const& subspaces);

// f : A -> B carried to A T -> B T by conjugation, T invertible.
Morphism transport(Morphism const& f, Mat const& t);

// Δ_θ(A) = Aθ, Δ_θ(f) = θ^-1 f θ on the given category of S(V).
Functor delta_theta(CategoryPtr subspaces, Mat const& theta);
// Γ_θ(Y) = θ*(Y), Γ_θ(w*) = (θ^-1)* w* θ*, on the annihilator category.
Functor gamma_theta(CategoryPtr annihilators, Mat const& theta);

// Equal object maps, and equal morphism maps on every morphism.
bool functors_equal(Functor const& f, Functor const& g);

// Γ(A,Y) = {α ∈ Sing(V) : Im α ⊆ A, (N_α)° ⊆ Γ(Y)}.
std::vector<Mat> gamma_bifunctor(Subspace const& a,
                                 Subspace const& gamma_y,
                                 std::vector<Endo> const& sing);
// Δ(A,Y) = {α ∈ Sing(V) : Im α ⊆ Δ(A), (N_α)° ⊆ Y}.
std::vector<Mat> delta_bifunctor(Subspace const& delta_a,
                                 Subspace const& y,
                                 std::vector<Endo> const& sing);

// Γ(f,w*) : α -> y α f with y* = Γ(w*).
Mat gamma_bifunctor_map(Mat const& alpha,
                        Morphism const& f,
                        Morphism const& gamma_w);
// Δ(f,w*) : α -> w α Δ(f) with w the carrier of w*.
Mat delta_bifunctor_map(Mat const& alpha,
                        Morphism const& delta_f,
                        Morphism const& w);

// χ(A,Y) : α -> θ^-1 α θ.
Mat chi(Mat const& alpha, Mat const& theta, Mat const& theta_inv);

struct NaturalityReport {
  Verdict verdict;
  std::size_t squares = 0;       // (f, w*, α) triples checked
  std::size_t set_pairs = 0;     // (A, Y) pairs with |Γ(A,Y)| = |Δ(A,Y)|
};

// Every naturality square of χ, and bijectivity of each χ(A,Y).
NaturalityReport chi_naturality(std::size_t n, unsigned p, Mat const& theta);

struct LinkedPair {
  Mat first;   // α
  Mat second;  // θ^-1 α θ
  friend bool operator==(LinkedPair const&, LinkedPair const&) = default;
  friend auto operator<=>(LinkedPair const&, LinkedPair const&) = default;
};

struct LinkedSemigroup {
  std::vector<LinkedPair> pairs;  // pairs[i].first = singular_matrices[i]
  SemigroupTable table;           // componentwise plain product
};

// S̃Γ_θ; throws not_invertible for singular θ.
LinkedSemigroup linked_semigroup(Mat const& theta);

// Canonical θ (first row's leading entry 1) with Δ = Δ_θ.  Uses only the
// object map to lift, then checks equality on objects and, when present,
// on morphisms.  Throws not_induced when no θ fits.
Mat recover_theta(Functor const& delta);

// Scales θ so that its first nonzero row's leading entry is 1.
Mat canonical_projective(Mat const& theta);

std::uint64_t projective_linear_order(std::size_t n, unsigned p);

struct Classification {
  std::size_t bijections = 0;  // inclusion/dimension-preserving bijections
  std::vector<Mat> thetas;     // recovered θ per extendable bijection
  std::size_t not_induced = 0;
};

// Enumerates object bijections of S(V) induced by permutations of lines and
// keeps those realized by some Δ_θ.  Throws too_large past 8 lines.
Classification classify_crossconnections(std::size_t n, unsigned p);

}  // namespace xconn
