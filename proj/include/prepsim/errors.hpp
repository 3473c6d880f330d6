// Copyright 2026 The prepsim Authors
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

namespace prepsim {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands have incompatible or unexpected dimensions.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// An input violates a documented precondition (non-Hermitian matrix,
/// non-normalized vector, non-trace-preserving channel, ...).
class ContractViolation : public Error {
public:
  using Error::Error;
};

/// A scalar parameter is outside its admissible range.
class DomainError : public Error {
public:
  using Error::Error;
};

/// A projective preparation whose success probability is below the
/// numerical floor: the normalized post-state would be meaningless.
class ImpossiblePreparation : public Error {
public:
  using Error::Error;
};

/// Tomography inputs do not span the operator space.
class DegenerateBasisError : public Error {
public:
  using Error::Error;
};

/// A scenario configuration failed to load or validate.
class ConfigError : public Error {
public:
  using Error::Error;
};

} // namespace prepsim
