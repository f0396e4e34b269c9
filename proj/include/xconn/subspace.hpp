#pragma once

// Subspaces of V = GF(p)^n and of its dual V*, held in canonical form.
//
// A dual-side subspace holds functionals w, encoded as coordinate rows that
// act by v -> v . w^T.  Morphisms between subspaces are matrices expressed
// in the canonical bases of their domain and codomain.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xconn/gf.hpp"

namespace xconn {

enum class Side : std::uint8_t { primal, dual };

std::string_view to_string(Side side);

class Subspace {
 public:
  Subspace() = default;

  // Row space of `vectors` (one vector per row) in reduced echelon form.
  static Subspace span(Mat const& vectors, Side side = Side::primal);
  static Subspace span(std::vector<std::vector<unsigned>> const& vectors,
                       std::size_t n,
                       unsigned p,
                       Side side = Side::primal);
  static Subspace zero(std::size_t n, unsigned p, Side side = Side::primal);
  static Subspace full(std::size_t n, unsigned p, Side side = Side::primal);

  std::size_t ambient() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  unsigned modulus() const noexcept { return basis_.modulus(); }
  Side side() const noexcept { return side_; }
  Mat const& basis() const noexcept { return basis_; }
  std::vector<std::size_t> pivots() const;

  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient(); }

  bool contains(Mat const& vectors) const;
  bool is_subspace_of(Subspace const& other) const;

  // Coordinates of each row of `vectors` in the canonical basis, or nullopt
  // when some row lies outside the subspace.
  std::optional<Mat> coordinates(Mat const& vectors) const;

  // Image of the subspace under v -> v * m (m square, same side kept).
  Subspace image_under(Mat const& m) const;

  std::string to_string() const;

  friend bool operator==(Subspace const&, Subspace const&) = default;
  // Dimension-major, then lexicographic on the flattened canonical basis.
  friend std::strong_ordering operator<=>(Subspace const& a,
                                          Subspace const& b) {
    if (auto c = a.basis_ <=> b.basis_; c != 0) {
      return c;
    }
    return a.side_ <=> b.side_;
  }

 private:
  Subspace(Mat basis, Side side) : basis_(std::move(basis)), side_(side) {}

  Mat basis_;
  Side side_ = Side::primal;
};

Subspace sum(Subspace const& a, Subspace const& b);
Subspace intersection(Subspace const& a, Subspace const& b);
bool is_direct_sum(Subspace const& a, Subspace const& b);

struct KernelImage {
  Echelon echelon;
  Subspace kernel;  // {v : v A = 0}
  Subspace image;   // row space of A
  std::size_t rank() const { return echelon.rank(); }
};

KernelImage rref_kernel_image(Mat const& a);

enum class SubspaceFilter { all, proper, nonzero };

// Deterministic order: dimension-major, then lexicographic on the basis.
std::vector<Subspace> enumerate_subspaces(std::size_t n,
                                          unsigned p,
                                          SubspaceFilter filter,
                                          Side side = Side::primal);

// Gaussian binomial coefficient (n choose k)_p.
std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, unsigned p);

// Span of the standard basis vectors at the non-pivot coordinates of `a`.
Subspace canonical_complement(Subspace const& a);

// Every W with a + W = V and a /\ W = {0}; there are p^(k(n-k)) of them.
std::vector<Subspace> all_complements(Subspace const& a);

// Complement of `inner` inside `outer` (inner must be contained in outer):
// the span of the outer basis rows at the non-pivot positions of inner's
// coordinate matrix.  Agrees with canonical_complement when outer = V.
Subspace complement_within(Subspace const& inner, Subspace const& outer);

// A -> A°, functionals vanishing on A (primal in, dual out).  Applied to a
// dual subspace it returns the pre-annihilator on the primal side.
Subspace annihilator(Subspace const& a);

struct Morphism {
  Subspace dom;
  Subspace cod;
  Mat map;  // dim(dom) x dim(cod)

  // Ambient images of the domain's basis rows.
  Mat images() const;
  // Ambient image of arbitrary vectors of dom.
  Mat apply(Mat const& vectors) const;

  Subspace image() const;
  Subspace kernel() const;
  bool is_isomorphism() const;
  bool is_surjective() const;

  std::string to_string() const;

  friend bool operator==(Morphism const&, Morphism const&) = default;
  friend std::strong_ordering operator<=>(Morphism const&,
                                          Morphism const&) = default;
};

Morphism identity_morphism(Subspace const& a);
Morphism zero_morphism(Subspace const& dom, Subspace const& cod);

// f then g.
Morphism compose(Morphism const& f, Morphism const& g);

// The linear map v -> v * m restricted to dom, viewed as a map into cod.
Morphism restrict(Mat const& m, Subspace const& dom, Subspace const& cod);

// j(A, B); throws not_included when A is not contained in B.
Morphism inclusion(Subspace const& a, Subspace const& b);

// q : B -> A with j(A, B) q = 1_A, projecting along complement_within(A, B).
Morphism retraction(Subspace const& a, Subspace const& b);

// The projection of `whole` onto `onto` with kernel `along`; the two parts
// must form a direct sum equal to `whole`.
Morphism projection(Subspace const& whole,
                    Subspace const& onto,
                    Subspace const& along);

// n x n matrix agreeing with f on dom and vanishing on canonical_complement
// of dom.
Mat extend_to_ambient(Morphism const& f);

// Every morphism dom -> cod, ordered by the code of its matrix.
std::vector<Morphism> all_morphisms(Subspace const& dom, Subspace const& cod);
std::uint64_t hom_count(Subspace const& dom, Subspace const& cod);

// The linear map sending each row of `domain_basis` (an invertible n x n
// matrix) to the corresponding row of `images`.
Mat linear_map_from_basis(Mat const& domain_basis, Mat const& images);

}  // namespace xconn
