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

#include "qwitness/matrix.hpp"

#include <string>

namespace qwitness {

namespace {

void require_square(const ComplexMatrix& a, const char* who) {
    if (a.rows() != a.cols()) {
        throw DimensionError(std::string(who) + ": matrix is " + std::to_string(a.rows()) +
                             "x" + std::to_string(a.cols()) + ", expected square");
    }
}

void require_hermitian(const ComplexMatrix& a, const char* who) {
    require_square(a, who);
    const double defect = hermiticity_defect(a);
    if (defect > tol::hermitian) {
        throw ContractError(std::string(who) + ": operand is not Hermitian (defect " +
                            std::to_string(defect) + ")");
    }
}

}  // namespace

double max_abs(const ComplexMatrix& a) {
    if (a.size() == 0) return 0.0;
    return a.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix& a) {
    require_square(a, "hermiticity_defect");
    return max_abs(a - a.adjoint());
}

bool is_hermitian(const ComplexMatrix& a, double tolerance) {
    return a.rows() == a.cols() && hermiticity_defect(a) <= tolerance;
}

ComplexMatrix hermitize(const ComplexMatrix& a) {
    require_square(a, "hermitize");
    return 0.5 * (a + a.adjoint());
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b, Index max_dim) {
    require_square(a, "tensor_product");
    require_square(b, "tensor_product");
    const Index m = a.rows();
    const Index n = b.rows();
    if (m != 0 && n > max_dim / m) {
        throw SizeError("tensor_product: " + std::to_string(m) + "*" + std::to_string(n) +
                        " exceeds the maximum dimension " + std::to_string(max_dim));
    }
    ComplexMatrix out(m * n, m * n);
    for (Index i = 0; i < m; ++i) {
        for (Index j = 0; j < m; ++j) {
            out.block(i * n, j * n, n, n) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, Index d_system, Index d_environment,
                            Subsystem traced_out) {
    require_square(m, "partial_trace");
    if (d_system <= 0 || d_environment <= 0 || m.rows() != d_system * d_environment) {
        throw DimensionError("partial_trace: dim " + std::to_string(m.rows()) +
                             " does not factor as " + std::to_string(d_system) + "*" +
                             std::to_string(d_environment));
    }
    if (traced_out == Subsystem::environment) {
        ComplexMatrix out = ComplexMatrix::Zero(d_system, d_system);
        for (Index i = 0; i < d_system; ++i) {
            for (Index j = 0; j < d_system; ++j) {
                Complex sum = 0.0;
                for (Index k = 0; k < d_environment; ++k) {
                    sum += m(i * d_environment + k, j * d_environment + k);
                }
                out(i, j) = sum;
            }
        }
        return out;
    }
    ComplexMatrix out = ComplexMatrix::Zero(d_environment, d_environment);
    for (Index k = 0; k < d_environment; ++k) {
        for (Index l = 0; l < d_environment; ++l) {
            Complex sum = 0.0;
            for (Index i = 0; i < d_system; ++i) {
                sum += m(i * d_environment + k, i * d_environment + l);
            }
            out(k, l) = sum;
        }
    }
    return out;
}

EigResult hermitian_eig(const ComplexMatrix& a) {
    require_hermitian(a, "hermitian_eig");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a);
    if (solver.info() != Eigen::Success) {
        throw Error("hermitian_eig: eigensolver did not converge");
    }
    return EigResult{solver.eigenvalues(), solver.eigenvectors()};
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& a) {
    require_hermitian(a, "hermitian_eigenvalues");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw Error("hermitian_eigenvalues: eigensolver did not converge");
    }
    return solver.eigenvalues();
}

double trace_norm(const ComplexMatrix& a) {
    return hermitian_eigenvalues(a).cwiseAbs().sum();
}

ComplexMatrix expm_skew(const ComplexMatrix& h, double s) {
    const EigResult eig = hermitian_eig(h);
    const auto phases =
        (Complex(0, -s) * eig.values.cast<Complex>().array()).exp().matrix().asDiagonal();
    return eig.vectors * phases * eig.vectors.adjoint();
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_square(a, "commutator");
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("commutator: operand dimensions differ");
    }
    return a * b - b * a;
}

ComplexMatrix hermitian_sign(const ComplexMatrix& a, double guard) {
    const EigResult eig = hermitian_eig(a);
    if (eig.values.cwiseAbs().minCoeff() <= guard) {
        throw ContractError("hermitian_sign: eigenvalue within " + std::to_string(guard) +
                            " of zero, sign is not defined");
    }
    Eigen::VectorXd signs = eig.values.unaryExpr([](double v) { return v > 0.0 ? 1.0 : -1.0; });
    return eig.vectors * signs.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
}

}  // namespace qwitness
