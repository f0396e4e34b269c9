#pragma once

// Exact arithmetic over the prime fields GF(p), p <= 7.
//
// Matrices act on row vectors: v -> v * M.  A product A * B therefore means
// "apply A, then B", which is the left-to-right composition order used
// throughout the library.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "xconn/error.hpp"

namespace xconn {

inline constexpr unsigned kMaxModulus = 7;
inline constexpr std::size_t kMaxAmbient = 5;

bool is_prime(unsigned p);

// Throws invalid_argument unless p is a prime <= kMaxModulus.
void check_modulus(unsigned p);

struct Scalar {
  std::uint8_t value = 0;
  std::uint8_t modulus = 2;

  Scalar() = default;
  Scalar(unsigned value, unsigned modulus);

  friend bool operator==(Scalar, Scalar) = default;
};

Scalar add(Scalar a, Scalar b);
Scalar mul(Scalar a, Scalar b);
Scalar neg(Scalar a);
Scalar inv(Scalar a);

// Table-free helpers on raw residues; callers guarantee a, b < p.
inline unsigned add_mod(unsigned a, unsigned b, unsigned p) {
  return (a + b) % p;
}
inline unsigned sub_mod(unsigned a, unsigned b, unsigned p) {
  return (a + p - b) % p;
}
inline unsigned mul_mod(unsigned a, unsigned b, unsigned p) {
  return (a * b) % p;
}
unsigned inv_mod(unsigned a, unsigned p);

class Mat {
 public:
  static constexpr std::size_t kCapacity = 100;

  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, unsigned p);

  static Mat identity(std::size_t n, unsigned p);
  static Mat from_rows(std::vector<std::vector<unsigned>> const& rows,
                       unsigned p,
                       std::size_t cols);
  static Mat from_rows(std::vector<std::vector<unsigned>> const& rows,
                       unsigned p);

  // Row-major base-p digits, first entry most significant.  Enumerating codes
  // 0 .. p^(r*c)-1 visits every r x c matrix in lexicographic order.
  static Mat from_code(std::size_t rows,
                       std::size_t cols,
                       unsigned p,
                       std::uint64_t code);
  std::uint64_t code() const;

  // "1,0;0,1": rows separated by ';', entries by ','.  Entries must be < p.
  static Mat parse(std::string_view text, unsigned p);
  std::string to_string() const;

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  unsigned modulus() const noexcept { return p_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  unsigned operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, unsigned value) {
    data_[r * cols_ + c] = static_cast<std::uint8_t>(value % p_);
  }
  std::span<std::uint8_t const> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  Mat row_matrix(std::size_t r) const;
  Mat transpose() const;
  Mat scaled(unsigned c) const;
  // Rows of *this followed by rows of other.
  Mat stacked(Mat const& other) const;
  bool is_zero() const;

  friend Mat operator*(Mat const& a, Mat const& b);
  friend Mat operator+(Mat const& a, Mat const& b);
  friend Mat operator-(Mat const& a, Mat const& b);

  friend bool operator==(Mat const&, Mat const&) = default;
  friend std::strong_ordering operator<=>(Mat const&, Mat const&) = default;

 private:
  // Member order fixes the ordering: row count first, so a list of bases
  // sorts dimension-major and then lexicographically on entries.
  std::uint8_t rows_ = 0;
  std::uint8_t cols_ = 0;
  std::uint8_t p_ = 2;
  std::array<std::uint8_t, kCapacity> data_{};
};

struct Echelon {
  Mat rref;                         // reduced, zero rows dropped
  std::vector<std::size_t> pivots;  // strictly increasing
  std::size_t rank() const { return pivots.size(); }
};

Echelon row_reduce(Mat const& a);
std::size_t rank(Mat const& a);

// Rows spanning {v : v * a = 0}, in reduced echelon form.
Mat left_kernel_basis(Mat const& a);

std::optional<Mat> invert(Mat const& a);

// p^(n*n), or nullopt on overflow of the enumeration bound.
std::optional<std::uint64_t> matrix_count(std::size_t n, unsigned p);

// Throws too_large when p^(n*n) exceeds the exhaustive bound.
std::uint64_t checked_matrix_count(std::size_t n, unsigned p);

inline constexpr std::uint64_t kEnumerationBound = std::uint64_t{1} << 20;

// |GL(n, p)|.
std::uint64_t general_linear_order(std::size_t n, unsigned p);

}  // namespace xconn
