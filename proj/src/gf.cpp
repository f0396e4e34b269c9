#include "xconn/gf.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace xconn {

bool is_prime(unsigned p) {
  if (p < 2) {
    return false;
  }
  for (unsigned d = 2; d * d <= p; ++d) {
    if (p % d == 0) {
      return false;
    }
  }
  return true;
}

void check_modulus(unsigned p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::invalid_argument,
                "modulus " + std::to_string(p) + " is not prime");
  }
  if (p > kMaxModulus) {
    throw Error(ErrorCode::invalid_argument,
                "modulus " + std::to_string(p) + " exceeds "
                    + std::to_string(kMaxModulus));
  }
}

Scalar::Scalar(unsigned v, unsigned m)
    : value(static_cast<std::uint8_t>(v % m)),
      modulus(static_cast<std::uint8_t>(m)) {
  check_modulus(m);
}

namespace {
  void same_modulus(Scalar a, Scalar b) {
    if (a.modulus != b.modulus) {
      throw Error(ErrorCode::modulus_mismatch,
                  "GF(" + std::to_string(a.modulus) + ") vs GF("
                      + std::to_string(b.modulus) + ")");
    }
  }
}  // namespace

Scalar add(Scalar a, Scalar b) {
  same_modulus(a, b);
  return Scalar(add_mod(a.value, b.value, a.modulus), a.modulus);
}

Scalar mul(Scalar a, Scalar b) {
  same_modulus(a, b);
  return Scalar(mul_mod(a.value, b.value, a.modulus), a.modulus);
}

Scalar neg(Scalar a) {
  return Scalar(sub_mod(0, a.value, a.modulus), a.modulus);
}

Scalar inv(Scalar a) {
  return Scalar(inv_mod(a.value, a.modulus), a.modulus);
}

unsigned inv_mod(unsigned a, unsigned p) {
  a %= p;
  if (a == 0) {
    throw Error(ErrorCode::division_by_zero, "inverse of 0");
  }
  for (unsigned x = 1; x < p; ++x) {
    if ((a * x) % p == 1) {
      return x;
    }
  }
  throw Error(ErrorCode::division_by_zero, "no inverse (modulus not prime?)");
}

Mat::Mat(std::size_t rows, std::size_t cols, unsigned p)
    : rows_(static_cast<std::uint8_t>(rows)),
      cols_(static_cast<std::uint8_t>(cols)),
      p_(static_cast<std::uint8_t>(p)) {
  if (rows * cols > kCapacity || rows > 255 || cols > 255) {
    throw Error(ErrorCode::shape_error,
                std::to_string(rows) + "x" + std::to_string(cols)
                    + " exceeds matrix capacity");
  }
  check_modulus(p);
}

Mat Mat::identity(std::size_t n, unsigned p) {
  Mat m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i, i, 1);
  }
  return m;
}

Mat Mat::from_rows(std::vector<std::vector<unsigned>> const& rows,
                   unsigned p,
                   std::size_t cols) {
  Mat m(rows.size(), cols, p);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorCode::shape_error,
                  "row " + std::to_string(r) + " has length "
                      + std::to_string(rows[r].size()) + ", expected "
                      + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c] >= p) {
        throw Error(ErrorCode::parse_error,
                    "entry " + std::to_string(rows[r][c]) + " >= p");
      }
      m.set(r, c, rows[r][c]);
    }
  }
  return m;
}

Mat Mat::from_rows(std::vector<std::vector<unsigned>> const& rows,
                   unsigned p) {
  if (rows.empty()) {
    throw Error(ErrorCode::shape_error,
                "column count of an empty row list is ambiguous");
  }
  return from_rows(rows, p, rows.front().size());
}

Mat Mat::from_code(std::size_t rows,
                   std::size_t cols,
                   unsigned p,
                   std::uint64_t code) {
  Mat m(rows, cols, p);
  for (std::size_t k = rows * cols; k-- > 0;) {
    m.data_[k] = static_cast<std::uint8_t>(code % p);
    code /= p;
  }
  return m;
}

std::uint64_t Mat::code() const {
  std::uint64_t c = 0;
  for (std::size_t k = 0; k < std::size_t{rows_} * cols_; ++k) {
    c = c * p_ + data_[k];
  }
  return c;
}

Mat Mat::parse(std::string_view text, unsigned p) {
  check_modulus(p);
  std::vector<std::vector<unsigned>> rows;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
      s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
      s.remove_suffix(1);
    }
    return s;
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find(';', start);
    if (stop == std::string_view::npos) {
      stop = text.size();
    }
    std::string_view row_text = trim(text.substr(start, stop - start));
    std::vector<unsigned> row;
    std::size_t pos = 0;
    while (pos <= row_text.size()) {
      std::size_t comma = row_text.find(',', pos);
      if (comma == std::string_view::npos) {
        comma = row_text.size();
      }
      std::string_view item = trim(row_text.substr(pos, comma - pos));
      unsigned value = 0;
      auto [ptr, ec]
          = std::from_chars(item.data(), item.data() + item.size(), value);
      if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
        throw Error(ErrorCode::parse_error,
                    "bad matrix entry '" + std::string(item) + "' in '"
                        + std::string(text) + "'");
      }
      if (value >= p) {
        throw Error(ErrorCode::parse_error,
                    "entry " + std::to_string(value) + " is not < p = "
                        + std::to_string(p));
      }
      row.push_back(value);
      pos = comma + 1;
    }
    rows.push_back(std::move(row));
    start = stop + 1;
  }
  for (auto const& r : rows) {
    if (r.size() != rows.front().size()) {
      throw Error(ErrorCode::shape_error,
                  "ragged matrix '" + std::string(text) + "'");
    }
  }
  return from_rows(rows, p);
}

std::string Mat::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r > 0) {
      out += ';';
    }
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c > 0) {
        out += ',';
      }
      out += std::to_string((*this)(r, c));
    }
  }
  return out;
}

Mat Mat::row_matrix(std::size_t r) const {
  Mat m(1, cols_, p_);
  for (std::size_t c = 0; c < cols_; ++c) {
    m.set(0, c, (*this)(r, c));
  }
  return m;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_, p_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      t.set(c, r, (*this)(r, c));
    }
  }
  return t;
}

Mat Mat::scaled(unsigned k) const {
  Mat m(rows_, cols_, p_);
  for (std::size_t i = 0; i < std::size_t{rows_} * cols_; ++i) {
    m.data_[i] = static_cast<std::uint8_t>(mul_mod(data_[i], k % p_, p_));
  }
  return m;
}

Mat Mat::stacked(Mat const& other) const {
  if (other.cols_ != cols_ || other.p_ != p_) {
    throw Error(ErrorCode::shape_error, "stacking incompatible matrices");
  }
  Mat m(std::size_t{rows_} + other.rows_, cols_, p_);
  std::copy_n(data_.begin(), std::size_t{rows_} * cols_, m.data_.begin());
  std::copy_n(other.data_.begin(),
              std::size_t{other.rows_} * cols_,
              m.data_.begin() + std::size_t{rows_} * cols_);
  return m;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(),
                     data_.begin() + std::size_t{rows_} * cols_,
                     [](std::uint8_t x) { return x == 0; });
}

Mat operator*(Mat const& a, Mat const& b) {
  if (a.p_ != b.p_) {
    throw Error(ErrorCode::modulus_mismatch, "matrix product");
  }
  if (a.cols_ != b.rows_) {
    throw Error(ErrorCode::shape_error,
                std::to_string(a.rows_) + "x" + std::to_string(a.cols_)
                    + " times " + std::to_string(b.rows_) + "x"
                    + std::to_string(b.cols_));
  }
  Mat out(a.rows_, b.cols_, a.p_);
  unsigned const p = a.p_;
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t c = 0; c < b.cols_; ++c) {
      unsigned acc = 0;
      for (std::size_t k = 0; k < a.cols_; ++k) {
        acc += unsigned{a.data_[r * a.cols_ + k]} * b.data_[k * b.cols_ + c];
      }
      out.data_[r * out.cols_ + c] = static_cast<std::uint8_t>(acc % p);
    }
  }
  return out;
}

Mat operator+(Mat const& a, Mat const& b) {
  if (a.p_ != b.p_) {
    throw Error(ErrorCode::modulus_mismatch, "matrix sum");
  }
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorCode::shape_error, "matrix sum");
  }
  Mat out(a.rows_, a.cols_, a.p_);
  for (std::size_t i = 0; i < std::size_t{a.rows_} * a.cols_; ++i) {
    out.data_[i]
        = static_cast<std::uint8_t>(add_mod(a.data_[i], b.data_[i], a.p_));
  }
  return out;
}

Mat operator-(Mat const& a, Mat const& b) {
  return a + b.scaled(a.p_ - 1);
}

Echelon row_reduce(Mat const& a) {
  unsigned const p = a.modulus();
  Mat m = a;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t pivot_row = lead;
    while (pivot_row < m.rows() && m(pivot_row, c) == 0) {
      ++pivot_row;
    }
    if (pivot_row == m.rows()) {
      continue;
    }
    if (pivot_row != lead) {
      for (std::size_t k = 0; k < m.cols(); ++k) {
        unsigned tmp = m(lead, k);
        m.set(lead, k, m(pivot_row, k));
        m.set(pivot_row, k, tmp);
      }
    }
    unsigned const scale = inv_mod(m(lead, c), p);
    for (std::size_t k = 0; k < m.cols(); ++k) {
      m.set(lead, k, mul_mod(m(lead, k), scale, p));
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      unsigned const factor = m(r, c);
      if (r == lead || factor == 0) {
        continue;
      }
      for (std::size_t k = 0; k < m.cols(); ++k) {
        m.set(r, k, sub_mod(m(r, k), mul_mod(factor, m(lead, k), p), p));
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  Mat reduced(pivots.size(), a.cols(), p);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      reduced.set(r, k, m(r, k));
    }
  }
  return {reduced, std::move(pivots)};
}

std::size_t rank(Mat const& a) {
  return row_reduce(a).rank();
}

Mat left_kernel_basis(Mat const& a) {
  // Reduce [A | I]; rows whose A-part vanishes carry kernel vectors.
  std::size_t const r = a.rows();
  std::size_t const c = a.cols();
  unsigned const p = a.modulus();
  Mat aug(r, c + r, p);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < c; ++k) {
      aug.set(i, k, a(i, k));
    }
    aug.set(i, c + i, 1);
  }
  Echelon e = row_reduce(aug);
  std::vector<std::vector<unsigned>> rows;
  for (std::size_t i = 0; i < e.rref.rows(); ++i) {
    if (e.pivots[i] < c) {
      continue;
    }
    std::vector<unsigned> v(r);
    for (std::size_t k = 0; k < r; ++k) {
      v[k] = e.rref(i, c + k);
    }
    rows.push_back(std::move(v));
  }
  return row_reduce(Mat::from_rows(rows, p, r)).rref;
}

std::optional<Mat> invert(Mat const& a) {
  if (!a.is_square()) {
    throw Error(ErrorCode::shape_error, "inverse of a non-square matrix");
  }
  std::size_t const n = a.rows();
  unsigned const p = a.modulus();
  Mat aug(n, 2 * n, p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      aug.set(i, k, a(i, k));
    }
    aug.set(i, n + i, 1);
  }
  Echelon e = row_reduce(aug);
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) {
    return std::nullopt;
  }
  Mat inv(n, n, p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      inv.set(i, k, e.rref(i, n + k));
    }
  }
  return inv;
}

std::optional<std::uint64_t> matrix_count(std::size_t n, unsigned p) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n * n; ++i) {
    count *= p;
    if (count > kEnumerationBound) {
      return std::nullopt;
    }
  }
  return count;
}

std::uint64_t checked_matrix_count(std::size_t n, unsigned p) {
  check_modulus(p);
  auto count = matrix_count(n, p);
  if (!count || n > kMaxAmbient) {
    throw Error(ErrorCode::too_large,
                std::to_string(p) + "^(" + std::to_string(n) + "^2) matrices"
                    + " exceed the enumeration bound");
  }
  return *count;
}

std::uint64_t general_linear_order(std::size_t n, unsigned p) {
  // prod_{i<n} (p^n - p^i)
  std::uint64_t pn = 1;
  for (std::size_t i = 0; i < n; ++i) {
    pn *= p;
  }
  std::uint64_t order = 1;
  std::uint64_t pi = 1;
  for (std::size_t i = 0; i < n; ++i) {
    order *= pn - pi;
    pi *= p;
  }
  return order;
}

}  // namespace xconn
