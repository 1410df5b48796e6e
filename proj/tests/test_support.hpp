// Copyright 2026 The qwitness authors
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

#pragma once

#include <doctest.h>

#include "qwitness/matrix.hpp"

namespace qwitness::test {

inline void check_matrix_near(const ComplexMatrix& actual, const ComplexMatrix& expected,
                              double tolerance) {
    REQUIRE(actual.rows() == expected.rows());
    REQUIRE(actual.cols() == expected.cols());
    CHECK(max_abs(actual - expected) <= tolerance);
}

inline ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    ComplexMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

inline ComplexMatrix diag(std::initializer_list<double> values) {
    ComplexMatrix m = ComplexMatrix::Zero(static_cast<Index>(values.size()),
                                          static_cast<Index>(values.size()));
    Index i = 0;
    for (const double v : values) m(i, i) = v, ++i;
    return m;
}

}  // namespace qwitness::test
