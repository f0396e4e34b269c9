#include <random>

#include "helpers.hpp"

using namespace xconn;
using testing::M;

TEST_SUITE("gf") {

TEST_CASE("scalar arithmetic") {
  CHECK(inv(Scalar(3, 5)) == Scalar(2, 5));
  CHECK(add(Scalar(4, 5), Scalar(3, 5)) == Scalar(2, 5));
  CHECK(mul(Scalar(6, 7), Scalar(6, 7)) == Scalar(1, 7));
  CHECK(neg(Scalar(1, 3)) == Scalar(2, 3));
  CHECK(inv_mod(3, 7) == 5);
  CHECK_ERROR(inv(Scalar(0, 5)), division_by_zero);
  CHECK_ERROR(add(Scalar(1, 3), Scalar(1, 5)), modulus_mismatch);
  CHECK(Scalar(5, 5) == Scalar(0, 5));
  CHECK_ERROR(Scalar(1, 4), invalid_argument);
}

TEST_CASE("moduli") {
  CHECK(is_prime(2));
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(6));
  CHECK_ERROR(check_modulus(4), invalid_argument);
  CHECK_ERROR(check_modulus(11), invalid_argument);
}

TEST_CASE("parse and print") {
  Mat const m = M("1,0;2,1", 3);
  CHECK(m.rows() == 2);
  CHECK(m(1, 0) == 2);
  CHECK(m.to_string() == "1,0;2,1");
  CHECK(M(" 1 , 1 ; 0 , 1 ", 2) == M("1,1;0,1", 2));
  CHECK_ERROR(M("1,2;0,1", 2), parse_error);
  CHECK_ERROR(M("1,0;1", 2), shape_error);
  CHECK_ERROR(M("1,x;0,1", 2), parse_error);
  CHECK_ERROR(M("1,0;0,1", 4), invalid_argument);
}

TEST_CASE("codes enumerate matrices in order") {
  for (std::uint64_t c = 0; c < 81; ++c) {
    CHECK(Mat::from_code(2, 2, 3, c).code() == c);
  }
  CHECK(Mat::from_code(2, 2, 2, 8) == M("1,0;0,0", 2));
  CHECK(*matrix_count(2, 2) == 16);
  CHECK(*matrix_count(3, 3) == 19683);
  CHECK_FALSE(matrix_count(5, 7).has_value());
  CHECK_ERROR(checked_matrix_count(5, 7), too_large);
}

TEST_CASE("products compose left to right") {
  Mat const a = M("0,1;0,0", 2);
  Mat const b = M("0,0;1,0", 2);
  Mat v(1, 2, 2);
  v.set(0, 0, 1);
  CHECK(v * (a * b) == (v * a) * b);
  CHECK(a * b == M("1,0;0,0", 2));
  CHECK(b * a == M("0,0;0,1", 2));
}

TEST_CASE("row reduction") {
  Echelon const e = row_reduce(M("2,4,1;1,2,0;0,0,1", 5));
  CHECK(e.rank() == 2);
  CHECK(e.pivots == std::vector<std::size_t>{0, 2});
  CHECK(row_reduce(e.rref).rref == e.rref);
  CHECK(rank(Mat::identity(4, 3)) == 4);
}

TEST_CASE("inverse and left kernel") {
  for (auto const& m : {M("1,1;0,1", 2), M("2,1;1,1", 3), M("1,2,0;0,1,4;3,0,2", 5)}) {
    auto inv = invert(m);
    REQUIRE(inv.has_value());
    CHECK(m * *inv == Mat::identity(m.rows(), m.modulus()));
    CHECK(*inv * m == Mat::identity(m.rows(), m.modulus()));
  }
  CHECK_FALSE(invert(M("1,1;1,1", 2)).has_value());
  CHECK_ERROR(invert(Mat(2, 3, 2)), shape_error);
  Mat const a = M("1,2;2,4;0,1", 5);
  Mat const k = left_kernel_basis(a);
  CHECK(k.rows() == 1);
  CHECK((k * a).is_zero());
}

TEST_CASE("group orders") {
  CHECK(general_linear_order(2, 2) == 6);
  CHECK(general_linear_order(2, 3) == 48);
  CHECK(general_linear_order(3, 2) == 168);
}

TEST_CASE("rank of a product is bounded by both factors") {
  std::mt19937 rng(7);
  for (unsigned p : {2u, 3u, 5u}) {
    std::uniform_int_distribution<std::uint64_t> pick(0, *matrix_count(3, p) - 1);
    for (int k = 0; k < 200; ++k) {
      Mat const a = Mat::from_code(3, 3, p, pick(rng));
      Mat const b = Mat::from_code(3, 3, p, pick(rng));
      std::size_t const r = rank(a * b);
      CHECK(r <= std::min(rank(a), rank(b)));
      CHECK(rank(a.transpose()) == rank(a));
    }
  }
}

}
