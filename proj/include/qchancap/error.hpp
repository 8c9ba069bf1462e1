// Copyright 2026 The qchancap Authors
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

namespace qchancap {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes are incompatible (wrong dims, mismatched lengths).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A matrix asserted to be Hermitian is not, or is not positive semidefinite.
class SpectralError : public Error {
 public:
  using Error::Error;
};

/// A state or ensemble fails its trace / normalization invariant.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// A scalar parameter lies outside its admissible range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A channel Kraus set is not trace preserving.
class ChannelError : public Error {
 public:
  using Error::Error;
};

/// The requested problem exceeds the dense-enumeration caps.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

}  // namespace qchancap
