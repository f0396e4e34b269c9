#pragma once

#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "xconn/error.hpp"
#include "xconn/gf.hpp"

namespace testing {

inline xconn::Mat M(char const* text, unsigned p) {
  return xconn::Mat::parse(text, p);
}

template <typename Fn>
xconn::ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (xconn::Error const& e) {
    return e.code();
  }
  FAIL("expected an xconn::Error");
  return xconn::ErrorCode::invalid_argument;
}

}  // namespace testing

#define CHECK_ERROR(expr, ecode) \
  CHECK(testing::code_of([&] { (void)(expr); }) == xconn::ErrorCode::ecode)
