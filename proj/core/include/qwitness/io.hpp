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

// Plain-text exchange formats.
//
// Matrix file:
//   dim dS dE
//   row col re im          (dim^2 lines, row-major, every entry present)
//
// Hamiltonian schedule file:
//   dim dS dE
//   segment t_start t_end  (t_start/t_end may be -inf / inf)
//   row col re im          (dim^2 lines per segment, row-major)
//   ... further segment blocks ...
//
// '#' starts a comment; blank lines are ignored.

#pragma once

#include <filesystem>
#include <iosfwd>

#include "qwitness/dynamics.hpp"

namespace qwitness {

struct MatrixFile {
    Index d_system;
    Index d_environment;
    ComplexMatrix matrix;
};

MatrixFile read_matrix_file(std::istream& in, const std::string& origin = "<stream>");
MatrixFile load_matrix_file(const std::filesystem::path& path);
void write_matrix_file(std::ostream& out, const ComplexMatrix& m, Index d_system,
                       Index d_environment);
void save_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m,
                      Index d_system, Index d_environment);

HamiltonianSchedule read_hamiltonian_file(std::istream& in,
                                          const std::string& origin = "<stream>");
HamiltonianSchedule load_hamiltonian_file(const std::filesystem::path& path);
void write_hamiltonian_file(std::ostream& out, const HamiltonianSchedule& sched);
void save_hamiltonian_file(const std::filesystem::path& path,
                           const HamiltonianSchedule& sched);

}  // namespace qwitness
