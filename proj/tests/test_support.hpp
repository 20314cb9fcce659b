// Copyright 2026 The renyi2 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RENYI2_TESTS_TEST_SUPPORT_HPP
#define RENYI2_TESTS_TEST_SUPPORT_HPP

#include <complex>

#include "renyi2/matrix_ops.hpp"

namespace renyi2::test {

inline double entrywise_diff(const CMat& a, const CMat& b) {
  return max_abs(a - b);
}

inline CMat diag2(double x, double y) {
  CMat m = CMat::Zero(2, 2);
  m(0, 0) = x;
  m(1, 1) = y;
  return m;
}

}  // namespace renyi2::test

#endif  // RENYI2_TESTS_TEST_SUPPORT_HPP
