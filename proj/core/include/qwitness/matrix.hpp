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

// Dense complex linear algebra for small Hilbert spaces: tensor product,
// partial trace, Hermitian eigendecomposition, skew-Hermitian matrix
// exponential, trace norm, commutator. Everything is a pure function of
// its inputs; matrices are plain Eigen values.

#pragma once

#include <complex>

#include <Eigen/Dense>

#include "qwitness/errors.hpp"

namespace qwitness {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

namespace tol {
// Absolute Hermiticity tolerance: max |A(i,j) - conj(A(j,i))|.
inline constexpr double hermitian = 1e-10;
// Unitarity tolerance on max |U'U - I|.
inline constexpr double unitary = 1e-9;
// Trace and partial-trace residuals of validated states.
inline constexpr double trace = 1e-10;
// Minimum eigenvalue accepted as "positive semidefinite up to noise".
inline constexpr double psd = -1e-10;
// Smallest |eigenvalue| of a state difference for which sgn() is trusted.
inline constexpr double sgn_guard = 1e-8;
// Choi spectrum threshold for declaring a map completely positive.
inline constexpr double choi = -1e-9;
}  // namespace tol

// Largest composite dimension accepted by tensor_product by default.
inline constexpr Index kDefaultMaxDim = 4096;

// Which factor of a bipartite space an operation acts on / removes.
enum class Subsystem { system, environment };

inline const ComplexMatrix& sigma_x() {
    static const ComplexMatrix m = (ComplexMatrix(2, 2) << 0, 1, 1, 0).finished();
    return m;
}
inline const ComplexMatrix& sigma_y() {
    static const ComplexMatrix m =
        (ComplexMatrix(2, 2) << 0, Complex(0, -1), Complex(0, 1), 0).finished();
    return m;
}
inline const ComplexMatrix& sigma_z() {
    static const ComplexMatrix m = (ComplexMatrix(2, 2) << 1, 0, 0, -1).finished();
    return m;
}

// max |A(i,j)| over all entries; 0 for empty matrices.
double max_abs(const ComplexMatrix& a);

// max |A(i,j) - conj(A(j,i))|; requires a square matrix.
double hermiticity_defect(const ComplexMatrix& a);

bool is_hermitian(const ComplexMatrix& a, double tolerance = tol::hermitian);

// Explicit Hermitian repair (A + A')/2. Never applied implicitly.
ComplexMatrix hermitize(const ComplexMatrix& a);

// Kronecker product; (A(x)B)(i*n+k, j*n+l) = A(i,j) B(k,l).
// Throws SizeError when the result would exceed max_dim.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b,
                             Index max_dim = kDefaultMaxDim);

// Partial trace of a (dS*dE)-dimensional matrix over the named subsystem.
ComplexMatrix partial_trace(const ComplexMatrix& m, Index d_system, Index d_environment,
                            Subsystem traced_out);

inline ComplexMatrix trace_out_environment(const ComplexMatrix& m, Index d_system,
                                           Index d_environment) {
    return partial_trace(m, d_system, d_environment, Subsystem::environment);
}
inline ComplexMatrix trace_out_system(const ComplexMatrix& m, Index d_system,
                                      Index d_environment) {
    return partial_trace(m, d_system, d_environment, Subsystem::system);
}

struct EigResult {
    Eigen::VectorXd values;   // ascending
    ComplexMatrix vectors;    // unit-norm columns, A = V diag(values) V'
};

// Eigendecomposition of a Hermitian matrix. Throws ContractError when the
// input fails the Hermiticity tolerance.
EigResult hermitian_eig(const ComplexMatrix& a);

// Eigenvalues only (ascending); same contract as hermitian_eig.
Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& a);

// Trace norm of a Hermitian matrix, sum of |eigenvalues|.
double trace_norm(const ComplexMatrix& a);

// exp(-i H s) for Hermitian H, via eigendecomposition; exactly unitary up
// to eigensolver error.
ComplexMatrix expm_skew(const ComplexMatrix& h, double s);

// A B - B A; operands must share dimensions.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

// Matrix sign function V diag(sgn(lambda)) V' of a Hermitian matrix.
// Throws ContractError when some |eigenvalue| <= guard: the sign (and the
// trace-norm derivative built on it) is not defined there.
ComplexMatrix hermitian_sign(const ComplexMatrix& a, double guard = tol::sgn_guard);

}  // namespace qwitness
