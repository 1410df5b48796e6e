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

// Test-side oracles, written independently of the library path they
// check: straight index loops, closed 2x2 formulas, and the exact
// diagonal propagator of the dephasing coupling. Nothing here calls the
// operations under test.

#pragma once

#include <cmath>
#include <complex>

#include <Eigen/Dense>

namespace qwitness::oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// Tr_E by direct double-loop index summation.
inline Matrix ptrace_env(const Matrix& m, Eigen::Index ds, Eigen::Index de) {
    Matrix out = Matrix::Zero(ds, ds);
    for (Eigen::Index i = 0; i < ds; ++i)
        for (Eigen::Index j = 0; j < ds; ++j)
            for (Eigen::Index k = 0; k < de; ++k)
                out(i, j) += m(i * de + k, j * de + k);
    return out;
}

inline Matrix ptrace_sys(const Matrix& m, Eigen::Index ds, Eigen::Index de) {
    Matrix out = Matrix::Zero(de, de);
    for (Eigen::Index k = 0; k < de; ++k)
        for (Eigen::Index l = 0; l < de; ++l)
            for (Eigen::Index i = 0; i < ds; ++i)
                out(k, l) += m(i * de + k, i * de + l);
    return out;
}

// Kronecker product by expanding the definition entrywise.
inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            for (Eigen::Index k = 0; k < b.rows(); ++k)
                for (Eigen::Index l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

// Trace norm of a Hermitian 2x2 matrix from the closed eigenvalue
// formula lambda = m +- s.
inline double trace_norm_2x2(const Matrix& a) {
    const double mean = 0.5 * a.trace().real();
    const double det = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)).real();
    const double s = std::sqrt(std::max(0.0, mean * mean - det));
    return std::abs(mean + s) + std::abs(mean - s);
}

inline double trace_distance_2x2(const Matrix& a, const Matrix& b) {
    return 0.5 * trace_norm_2x2(a - b);
}

// Exact propagator of H = (g/2) sigma_z (x) sigma_z for time t:
// diag(e^{-i g t / 2}, e^{+i g t / 2}, e^{+i g t / 2}, e^{-i g t / 2}).
inline Matrix dephasing_propagator(double g, double t) {
    Matrix u = Matrix::Zero(4, 4);
    const Complex minus = std::exp(Complex(0, -0.5 * g * t));
    const Complex plus = std::exp(Complex(0, +0.5 * g * t));
    u(0, 0) = minus;
    u(1, 1) = plus;
    u(2, 2) = plus;
    u(3, 3) = minus;
    return u;
}

// Richardson extrapolation of a first-order-in-h quantity.
inline double richardson(double at_h, double at_10h) {
    return (10.0 * at_h - at_10h) / 9.0;
}

}  // namespace qwitness::oracle
