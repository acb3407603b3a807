#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "doctest.h"
#include "lrclab/code.hpp"
#include "lrclab/error.hpp"

namespace testing {

inline lrclab::GFMatrix mat(std::uint32_t q, std::size_t rows, std::size_t cols, std::vector<std::uint32_t> v) {
  return lrclab::GFMatrix::from_values(lrclab::FieldSpec::from_order(q), rows, cols, v);
}

inline lrclab::LinearCode gen(std::uint32_t q, std::size_t rows, std::size_t cols, std::vector<std::uint32_t> v) {
  return lrclab::LinearCode::from_generator(mat(q, rows, cols, std::move(v)));
}

inline lrclab::LinearCode hamming74() {
  return lrclab::LinearCode::from_parity(mat(2, 3, 7, {1, 0, 1, 0, 1, 0, 1,  //
                                                      0, 1, 1, 0, 0, 1, 1,  //
                                                      0, 0, 0, 1, 1, 1, 1}));
}

inline lrclab::LinearCode extended_hamming84() {
  return gen(2, 4, 8, {1, 0, 0, 0, 0, 1, 1, 1,  //
                       0, 1, 0, 0, 1, 0, 1, 1,  //
                       0, 0, 1, 0, 1, 1, 0, 1,  //
                       0, 0, 0, 1, 1, 1, 1, 0});
}

inline lrclab::LinearCode repetition(std::uint32_t q, std::size_t n) {
  return gen(q, 1, n, std::vector<std::uint32_t>(n, 1));
}

template <typename F>
std::string error_name(F&& f) {
  try {
    f();
  } catch (const lrclab::Error& e) {
    return std::string(lrclab::errc_name(e.code()));
  }
  return "none";
}

}  // namespace testing
