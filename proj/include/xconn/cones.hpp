#pragma once

// Normal cones in full subcategories of the subspace category S(V) (or of
// S(V*) for the annihilator side).  A cone stores one morphism per object,
// so non-principal cones are representable and can be searched for.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xconn/semigroup.hpp"
#include "xconn/subspace.hpp"

namespace xconn {

// Full subcategory of the subspaces of GF(p)^n (one side) on a fixed object
// list.  Morphisms are all linear maps between objects.
class SubspaceCategory {
 public:
  explicit SubspaceCategory(std::vector<Subspace> objects);

  // Proper subspaces, {0} included: S(V), or S(V*) ~ A(V) on the dual side.
  static SubspaceCategory proper(std::size_t n,
                                 unsigned p,
                                 Side side = Side::primal);
  // Every subspace, V adjoined (the category of T_V).
  static SubspaceCategory all(std::size_t n,
                              unsigned p,
                              Side side = Side::primal);

  std::vector<Subspace> const& objects() const noexcept { return objects_; }
  std::size_t size() const noexcept { return objects_.size(); }
  Subspace const& operator[](std::size_t i) const { return objects_[i]; }
  std::optional<std::size_t> index_of(Subspace const& a) const;
  bool contains(Subspace const& a) const { return index_of(a).has_value(); }

  std::size_t ambient() const noexcept { return n_; }
  unsigned modulus() const noexcept { return p_; }
  Side side() const noexcept { return side_; }

  // Objects contained in objects_[i] (the principal ideal <c>).
  std::vector<std::size_t> ideal(std::size_t i) const;

 private:
  std::vector<Subspace> objects_;
  std::size_t n_ = 0;
  unsigned p_ = 2;
  Side side_ = Side::primal;
};

struct Factorization {
  Morphism q;  // projection A -> A' along ker f
  Morphism u;  // isomorphism A' -> Im f
  Morphism j;  // inclusion Im f -> B
};

// f = q u j with A' = complement_within(ker f, A).
Factorization normal_factorization(Morphism const& f);

// f° = q u : A -> Im f.
Morphism epimorphic_component(Morphism const& f);

struct NormalCone {
  Subspace vertex;
  std::vector<Morphism> components;  // indexed like the category's objects

  friend bool operator==(NormalCone const&, NormalCone const&) = default;
  friend std::strong_ordering operator<=>(NormalCone const&,
                                          NormalCone const&) = default;
};

struct ConeCheck {
  bool ok = true;
  std::string reason;
  explicit operator bool() const noexcept { return ok; }
};

// j(A,B) σ(B) = σ(A) whenever A ⊆ B, and some component is an isomorphism.
ConeCheck validate_cone(SubspaceCategory const& cat, NormalCone const& cone);

// ρ^α: components α|_A : A -> Im α.  Throws not_singular when Im α is not an
// object of the category (for S(V): α invertible).
NormalCone principal_cone(SubspaceCategory const& cat, Mat const& alpha);

// Reads α off the components at coordinate lines, (b)α := (b)σ(<b>).
// Throws not_a_cone for invalid input and not_principal when σ != ρ^α.
Mat cone_to_map(SubspaceCategory const& cat, NormalCone const& cone);

// γ · δ := γ * (δ(C))°, C the vertex of γ.
NormalCone cone_compose(SubspaceCategory const& cat,
                        NormalCone const& gamma,
                        NormalCone const& delta);

bool is_idempotent_cone(SubspaceCategory const& cat, NormalCone const& cone);

// Objects at which the cone's component is an isomorphism.
std::vector<Subspace> m_set(SubspaceCategory const& cat,
                            NormalCone const& cone);

struct ConeCensus {
  std::vector<NormalCone> cones;  // every valid cone, search order
  std::uint64_t assignments_tried = 0;
};

// Exhaustive search over every assignment of a morphism A -> D to each
// object A, for every vertex D.  Assignments are pruned only by the cone
// law itself (two components must agree on the intersection of their
// domains), so the result is exactly the set of valid cones.  Throws
// too_large when the search exceeds `budget` partial assignments.
ConeCensus cone_census(SubspaceCategory const& cat,
                       std::uint64_t budget = 20'000'000);

// Table of the given cones under cone_compose.
SemigroupTable cone_table(SubspaceCategory const& cat,
                          std::vector<NormalCone> const& cones);

// Principal cones of Sing(V) (or of the supplied matrices) and their table.
struct ConeSemigroup {
  std::vector<Mat> elements;
  std::vector<NormalCone> cones;  // cones[i] = ρ^{elements[i]}
  SemigroupTable table;
};
ConeSemigroup build_cone_semigroup(std::size_t n, unsigned p);

}  // namespace xconn
