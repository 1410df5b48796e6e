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

#include <stdexcept>
#include <string>

namespace qwitness {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operand dimensions do not match what an operation requires.
class DimensionError : public Error {
public:
    using Error::Error;
};

// A composite dimension exceeds the configured maximum.
class SizeError : public Error {
public:
    using Error::Error;
};

// An input violates an operation's contract (non-Hermitian operand,
// non-unitary propagator, budget <= 0, ...).
class ContractError : public Error {
public:
    using Error::Error;
};

// A value failed construction-time validation.
class ValidationError : public Error {
public:
    using Error::Error;
};

class HermiticityError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NormalizationError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class PositivityError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class BlochBallError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class TracePreservationError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// A requested time interval is not covered by a Hamiltonian schedule.
class ScheduleCoverageError : public Error {
public:
    using Error::Error;
};

// Malformed or unreadable run configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Malformed matrix / Hamiltonian exchange file.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace qwitness
