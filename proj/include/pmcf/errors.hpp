// Copyright 2026 The pmcf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PMCF_ERRORS_HPP_
#define PMCF_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace pmcf {

// Base class for all pmcf failures.  Each subclass carries a stable
// machine-readable token (used verbatim in CLI notes fields).
class Error : public std::runtime_error {
 public:
  Error(std::string token, const std::string& what)
      : std::runtime_error(what), token_(std::move(token)) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

// The radicand is a perfect p-th power: the "field" would be Q itself.
class DegenerateRadicand : public Error {
 public:
  explicit DegenerateRadicand(const std::string& what)
      : Error("degenerate_radicand", what) {}
};

// p outside the supported set {3, 5, 7}, or an operation restricted to
// p = 3 was called with another prime.
class InvalidPrime : public Error {
 public:
  explicit InvalidPrime(const std::string& what)
      : Error("invalid_prime", what) {}
};

// Factorization effort bound exceeded.
class FactorizationIncomplete : public Error {
 public:
  explicit FactorizationIncomplete(const std::string& what)
      : Error("factorization_incomplete", what) {}
};

// A certified numeric computation could not be completed at the top of
// the precision ladder.  Never downgraded to a guess.
class PrecisionExhausted : public Error {
 public:
  explicit PrecisionExhausted(const std::string& what)
      : Error("precision_exhausted", what) {}
};

// Cube-root recognition ended without an exact confirmation or a
// certified refutation.
class RecognitionFailed : public Error {
 public:
  explicit RecognitionFailed(const std::string& what)
      : Error("recognition_failed", what) {}
};

// The class-group relation lattice could not be saturated within the
// configured search bounds.
class RelationSearchIncomplete : public Error {
 public:
  explicit RelationSearchIncomplete(const std::string& what)
      : Error("relation_search_incomplete", what) {}
};

// An exact self-check failed; indicates an arithmetic bug, aborts the
// computation rather than producing wrong output.
class InternalInconsistency : public Error {
 public:
  explicit InternalInconsistency(const std::string& what)
      : Error("internal_inconsistency", what) {}
};

// A classified field produced a (U, A) pair outside the admissible
// lattice; this would falsify the implementation, not the theory.
class InadmissiblePair : public Error {
 public:
  explicit InadmissiblePair(const std::string& what)
      : Error("inadmissible_pair", what) {}
};

}  // namespace pmcf

#endif  // PMCF_ERRORS_HPP_
