// Copyright 2026 The pmcf Authors
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

#ifndef PMCF_RECORD_HPP_
#define PMCF_RECORD_HPP_

#include <optional>
#include <string>
#include <vector>

#include "pmcf/dpf.hpp"
#include "pmcf/radicand.hpp"

namespace pmcf {

// One classification result, serializable to CSV and JSON with the fixed
// column set d,p,a,b,species,disc,conductor,h_L,three_rank,U,P,A,R,type,
// theorem1,notes.  Absent values (p = 5, 7 report only splitting data)
// serialize as empty CSV fields / JSON nulls.
struct ClassificationRecord {
  Int d;  // normalized radicand
  unsigned p = 3;
  std::optional<Int> a;
  std::optional<Int> b;
  std::optional<Species> species;
  std::optional<Int> disc;       // discriminant of the cubic field L
  std::optional<Int> conductor;  // conductor of N/K
  std::optional<Int> h_L;
  std::optional<int> three_rank;
  std::optional<int> U;
  std::optional<int> P;
  std::optional<int> A;
  std::optional<int> R;
  std::optional<CoarseType> type;
  bool theorem1 = false;
  std::vector<std::string> notes;

  // True when a computational failure left the record partial; the failure
  // token is then present in notes.  Not serialized.
  bool failed = false;

  bool operator==(const ClassificationRecord& o) const {
    return d == o.d && p == o.p && a == o.a && b == o.b &&
           species == o.species && disc == o.disc && conductor == o.conductor &&
           h_L == o.h_L && three_rank == o.three_rank && U == o.U && P == o.P &&
           A == o.A && R == o.R && type == o.type && theorem1 == o.theorem1 &&
           notes == o.notes;
  }
};

// The exact CSV header line (no trailing newline).
std::string csv_header();

// One RFC-4180 row (no trailing newline); fields containing comma, quote or
// newline are quoted with doubled inner quotes.
std::string to_csv_row(const ClassificationRecord& r);

// Parses one CSV row (inverse of to_csv_row); throws InternalInconsistency
// on malformed rows.
ClassificationRecord from_csv_row(const std::string& line);

// One JSON object with the same keys; notes is an array of tokens.
std::string to_json_string(const ClassificationRecord& r);
ClassificationRecord from_json_string(const std::string& text);

// Runs the classification pipeline for a raw radicand:
//   p = 3: full invariants (units, class group, saturation, DPF type);
//   p = 5, 7: splitting reports for the primes dividing d plus the
//   h_divisibility_unverified note.
// DegenerateRadicand and InvalidPrime propagate (no field to describe);
// computational failures are caught into a partial record with the failure
// token appended to notes and failed = true.
ClassificationRecord classify_radicand(const Int& d_raw, unsigned p);

}  // namespace pmcf

#endif  // PMCF_RECORD_HPP_
