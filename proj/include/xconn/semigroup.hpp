#pragma once

// The monoid T_V of all n x n matrices over GF(p) and its subsemigroup
// Sing(V) of singular ones, plus finite-semigroup utilities that work on
// multiplication tables: Green's relations by principal ideals, regular
// elements, and isomorphism testing.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xconn/gf.hpp"
#include "xconn/parallel.hpp"
#include "xconn/subspace.hpp"

namespace xconn {

class Endo {
 public:
  explicit Endo(Mat m);

  Mat const& matrix() const noexcept { return matrix_; }
  Subspace const& kernel() const noexcept { return kernel_; }
  Subspace const& image() const noexcept { return image_; }
  std::size_t rank() const noexcept { return image_.dim(); }
  std::size_t dim() const noexcept { return matrix_.rows(); }
  unsigned modulus() const noexcept { return matrix_.modulus(); }

  bool is_singular() const noexcept { return rank() < dim(); }
  bool is_idempotent() const { return matrix_ * matrix_ == matrix_; }

  friend Endo operator*(Endo const& a, Endo const& b) {
    return Endo(a.matrix_ * b.matrix_);
  }
  friend bool operator==(Endo const& a, Endo const& b) {
    return a.matrix_ == b.matrix_;
  }
  friend auto operator<=>(Endo const& a, Endo const& b) {
    return a.matrix_ <=> b.matrix_;
  }

 private:
  Mat matrix_;
  Subspace kernel_;
  Subspace image_;
};

// Every n x n matrix in code order.  Throws too_large past the bound.
std::vector<Mat> all_matrices(std::size_t n, unsigned p);
std::vector<Mat> singular_matrices(std::size_t n, unsigned p);
std::vector<Mat> invertible_matrices(std::size_t n, unsigned p);

struct GreenFlags {
  bool L = false;
  bool R = false;
  bool H = false;
  bool D = false;
  friend bool operator==(GreenFlags, GreenFlags) = default;
};

std::string to_string(GreenFlags flags);

// Image/kernel characterization: L iff equal images, R iff equal kernels,
// D iff equal ranks.  The rank test for D holds in T_V and Sing(V) only.
GreenFlags green(Endo const& a, Endo const& b);

std::vector<Endo> idempotents(std::size_t n, unsigned p, bool singular_only);

// The projection with kernel N and image W; throws not_a_direct_sum.
Endo idempotent_from(Subspace const& kernel, Subspace const& image);

struct SemigroupTable {
  std::vector<std::string> labels;
  std::vector<std::uint32_t> entries;  // row-major, order x order
  bool closed = true;

  std::size_t order() const noexcept { return labels.size(); }
  std::uint32_t operator()(std::size_t a, std::size_t b) const {
    return entries[a * order() + b];
  }
  SemigroupTable opposite() const;
  bool is_idempotent(std::size_t a) const { return (*this)(a, a) == a; }
  bool is_associative() const;
};

// Builds the table of `elements` under `product`.  Every product must land
// back in the list; otherwise throws not_closed.  `label` renders elements.
template <typename T, typename Product, typename Label>
SemigroupTable make_table(std::vector<T> const& elements,
                          Product&& product,
                          Label&& label) {
  std::map<T, std::uint32_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    index.emplace(elements[i], static_cast<std::uint32_t>(i));
  }
  if (index.size() != elements.size()) {
    throw Error(ErrorCode::invalid_argument, "duplicate table elements");
  }
  SemigroupTable t;
  t.labels.reserve(elements.size());
  for (auto const& e : elements) {
    t.labels.push_back(label(e));
  }
  std::size_t const n = elements.size();
  t.entries.assign(n * n, 0);
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto it = index.find(product(elements[i], elements[j]));
      if (it == index.end()) {
        throw Error(ErrorCode::not_closed,
                    "product of " + label(elements[i]) + " and "
                        + label(elements[j]) + " leaves the set");
      }
      t.entries[i * n + j] = it->second;
    }
  });
  return t;
}

SemigroupTable matrix_table(std::vector<Mat> const& elements);

// Indices a with a b a = a for some b, and the first such b in index order.
struct Regularity {
  std::vector<std::size_t> regular;
  std::vector<std::optional<std::size_t>> witness;  // per element
};
Regularity regular_elements(SemigroupTable const& t);

// Green's relations decided from principal ideals S^1 a, a S^1 computed by
// exhaustive multiplication.  Class ids are the least member index.
struct GreenStructure {
  std::vector<std::uint32_t> l_class;
  std::vector<std::uint32_t> r_class;
  std::vector<std::uint32_t> d_class;
  std::vector<std::size_t> left_ideal_size;
  std::vector<std::size_t> right_ideal_size;
  std::vector<std::size_t> two_sided_ideal_size;

  GreenFlags flags(std::size_t a, std::size_t b) const;
};
GreenStructure green_structure(SemigroupTable const& t);

bool is_homomorphism(SemigroupTable const& from,
                     SemigroupTable const& to,
                     std::vector<std::uint32_t> const& map);

// Exact isomorphism test.  Returns the first bijection found (candidates are
// tried in increasing index order), or nullopt.
std::optional<std::vector<std::uint32_t>> are_isomorphic(
    SemigroupTable const& a,
    SemigroupTable const& b);

}  // namespace xconn
