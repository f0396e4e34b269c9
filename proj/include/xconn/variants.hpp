#pragma once

// The variant T_V^θ (α ∗ β = α θ β) for arbitrary θ: its regular part, the
// carriers and categories R(V)/B(V), the representation φ(α) = (θα, αθ), and
// the comparison of image-side carriers with principal images.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "xconn/cones.hpp"
#include "xconn/crossconn.hpp"
#include "xconn/semigroup.hpp"

namespace xconn {

class VariantContext {
 public:
  explicit VariantContext(Mat theta);

  Endo const& theta() const noexcept { return theta_; }
  std::size_t dim() const noexcept { return theta_.dim(); }
  unsigned modulus() const noexcept { return theta_.modulus(); }
  Subspace const& null_space() const noexcept { return theta_.kernel(); }
  Subspace const& image() const noexcept { return theta_.image(); }
  // W = Im θ when N_θ ⊕ Im θ = V, else the canonical complement of N_θ.
  Subspace const& complement() const noexcept { return complement_; }
  bool complement_is_image() const noexcept { return complement_is_image_; }

  // TR = {f : Im f ⊆ W} and TB = {f : N_θ ⊆ N_f}, code order.
  std::vector<Mat> const& tr() const noexcept { return tr_; }
  std::vector<Mat> const& tb() const noexcept { return tb_; }

 private:
  Endo theta_;
  bool complement_is_image_ = false;
  Subspace complement_;
  std::vector<Mat> tr_;
  std::vector<Mat> tb_;
};

Mat sandwich(Mat const& a, Mat const& b, VariantContext const& ctx);

struct VariantRegular {
  std::vector<Mat> elements;  // code order
  std::vector<Mat> witness;   // first β with α θ β θ α = α
};

// Exhaustive over T_V.  Throws too_large past p = 3, n = 3.
VariantRegular reg_variant(VariantContext const& ctx);

// Table of (Reg, ∗); throws not_closed when ∗ leaves Reg.
SemigroupTable variant_table(VariantContext const& ctx,
                             std::vector<Mat> const& elements);

std::pair<Mat, Mat> phi(Mat const& a, VariantContext const& ctx);

struct VariantCategories {
  SubspaceCategory r_objects;  // subspaces of W
  SubspaceCategory b_objects;  // A° with N_θ ⊆ A
  SemigroupTable tr_table;
  SemigroupTable tb_table;
  bool tr_regular = false;
  bool tb_regular = false;
};

VariantCategories variant_categories(VariantContext const& ctx);

struct VariantCrossConnection {
  Verdict delta_local_iso;
  Verdict gamma_local_iso;
  bool delta_object_surjective = false;
  bool gamma_object_surjective = false;
  // φ(Reg) under componentwise plain product.
  std::vector<LinkedPair> pairs;
  std::optional<SemigroupTable> pair_table;
  bool phi_injective = false;
  bool phi_homomorphism = false;
  std::optional<std::vector<std::uint32_t>> isomorphism;  // (Reg,∗) -> φ(Reg)
};

// Δ(A) = Aθ on R(V), Γ(Y) = θ*(Y) on B(V), checked as local isomorphisms;
// φ(Reg) compared with (Reg, ∗).
VariantCrossConnection variant_crossconnection(VariantContext const& ctx,
                                               VariantRegular const& reg);

struct NonprincipalCensus {
  std::vector<Mat> principal;   // {αθ : α ∈ Reg}, code order
  std::vector<Mat> excess;      // TR minus principal
  bool principal_in_carrier = false;  // {αθ} ⊆ TR
  // Exhaustive cone search inside R(V), against the distinct restrictions
  // of ρ^{αθ}, α ∈ Reg, that are valid cones there.
  std::size_t r_cones = 0;
  std::size_t r_principal_cones = 0;
};

NonprincipalCensus nonprincipal_cones(VariantContext const& ctx,
                                      VariantRegular const& reg);

}  // namespace xconn
