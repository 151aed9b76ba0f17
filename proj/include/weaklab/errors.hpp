// Copyright 2026 The weaklab authors
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

namespace weaklab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A constructed value failed one or more of its type invariants. The
/// `invariant` field names the first violated invariant ("hermitian",
/// "unit trace", "idempotent", ...).
class ValidationError : public Error {
  public:
    ValidationError(std::string invariant, const std::string &message)
        : Error(message), invariant_(std::move(invariant)) {}
    const std::string &invariant() const { return invariant_; }

  private:
    std::string invariant_;
};

/// Input vector has (numerically) zero norm.
class ZeroVector final : public Error {
  public:
    using Error::Error;
};

/// Operands have incompatible dimensions.
class DimensionMismatch final : public Error {
  public:
    using Error::Error;
};

/// Matrix expected to be Hermitian is not, within tolerance.
class NotHermitian final : public Error {
  public:
    using Error::Error;
};

/// Selection probability Tr(rho*P) is numerically zero; the conditional
/// state and the weak value are undefined.
class NullOutcome final : public Error {
  public:
    using Error::Error;
};

/// Two projectors expected to be orthogonal are not.
class NotOrthogonal final : public Error {
  public:
    using Error::Error;
};

/// Phase angle too close to 0 or +-pi for the imaginary-part reconstruction.
class DegeneratePhase final : public Error {
  public:
    using Error::Error;
};

/// Projector family is not a complete orthogonal decomposition of identity.
class IncompleteBasis final : public Error {
  public:
    using Error::Error;
};

/// Measurement outcome probabilities do not sum to one within tolerance.
class BadSpectrum final : public Error {
  public:
    using Error::Error;
};

/// The post-selected subset of a sampled arm holds fewer than two shots.
class EmptySelection final : public Error {
  public:
    using Error::Error;
};

/// Requested builtin scenario does not exist.
class UnknownScenario final : public Error {
  public:
    using Error::Error;
};

/// A parameter value is outside its allowed range.
class BadParameter final : public Error {
  public:
    using Error::Error;
};

/// Scenario document is structurally malformed.
class ParseError final : public Error {
  public:
    using Error::Error;
};

}  // namespace weaklab
