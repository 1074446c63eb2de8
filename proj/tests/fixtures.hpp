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

#ifndef PMCF_TESTS_FIXTURES_HPP_
#define PMCF_TESTS_FIXTURES_HPP_

#include <cstdint>

namespace pmcf_fixtures {

// Reference values for every normalized cubic radicand d < 50, computed
// independently of the library and kept verbatim.  Fundamental units are
// recorded as numerators (eu, ev, ew) over denominator 3 in the coordinates
// (1, theta, theta') with theta = cbrt(d), theta' = theta^2 / b.
// regulator < 0 means no certified reference value is recorded for that d.
struct FieldFixture {
  long d;
  long a;
  long b;
  bool type_one;  // d = +-1 (mod 9)
  long h;
  int three_rank;
  int U, P, A, R;
  const char* type;
  double regulator;
  const char* eu;
  const char* ev;
  const char* ew;
};

inline constexpr FieldFixture kFields[] = {
    {2, 2, 1, false, 1, 0, 1, 2, 2, 0, "beta", 1.347377, "3", "3", "3"},
    {3, 3, 1, false, 1, 0, 0, 1, 1, 0, "gamma", 2.524681, "12", "9", "6"},
    {5, 5, 1, false, 1, 0, 1, 2, 2, 0, "beta", 4.811987, "123", "72", "42"},
    {6, 6, 1, false, 1, 0, 1, 2, 2, 0, "beta", 5.789932, "327", "180", "99"},
    {7, 7, 1, false, 3, 1, 1, 2, 1, 1, "alpha", 2.441056, "12", "6", "3"},
    {10, 10, 1, true, 1, 0, 1, 2, 2, 0, "beta", 3.148550, "23", "11", "5"},
    {11, 11, 1, false, 2, 0, 1, 2, 2, 0, "beta", 5.587207, "267", "120", "54"},
    {12, 3, 2, false, 1, 0, 1, 2, 2, 0, "beta", 5.105835, "165", "72", "63"},
    {13, 13, 1, false, 3, 1, 1, 2, 1, 1, "alpha", 5.642058, "282", "120",
     "51"},
    {14, 14, 1, false, 3, 1, 1, 2, 2, 0, "beta", -1.0, "87", "36", "15"},
    {15, 15, 1, false, 2, 0, 1, 2, 2, 0, "beta", -1.0, "16203", "6570",
     "2664"},
    {17, 17, 1, true, 1, 0, 0, 1, 1, 0, "gamma", 6.879299, "972", "378",
     "147"},
    {18, 2, 3, false, 1, 0, 1, 2, 2, 0, "beta", 5.105835, "165", "63", "72"},
    {19, 19, 1, true, 3, 1, 1, 2, 1, 1, "alpha", 2.629073, "14", "5", "2"},
    {20, 5, 2, false, 3, 1, 1, 2, 2, 0, "beta", -1.0, "33", "12", "9"},
    {21, 21, 1, false, 3, 1, 1, 2, 1, 1, "alpha", -1.0, "5115", "1854",
     "672"},
    {22, 22, 1, false, 3, 1, 1, 2, 2, 0, "beta", -1.0, "2379", "849", "303"},
    {23, 23, 1, false, 1, 0, 1, 2, 2, 0, "beta", 22.595071, "6500020803",
     "2285627580", "803704110"},
    {26, 26, 1, true, 3, 1, 1, 2, 1, 1, "alpha", -1.0, "27", "9", "3"},
    {28, 7, 2, true, 3, 1, 1, 2, 1, 1, "alpha", -1.0, "5", "2", "1"},
    {29, 29, 1, false, 1, 0, 1, 2, 2, 0, "beta", 40.270821,
     "308599625272805067", "100445247929114526", "32693649004344360"},
    {30, 30, 1, false, 3, 1, 1, 2, 2, 0, "beta", -1.0, "2433", "783", "252"},
    {31, 31, 1, false, 3, 1, 1, 2, 1, 1, "alpha", -1.0, "303627", "96654",
     "30768"},
    {33, 33, 1, false, 1, 0, 1, 2, 2, 0, "beta", 31.455568, "45812022222387",
     "14282628807420", "4452837394086"},
    {34, 34, 1, false, 3, 1, 1, 2, 2, 0, "beta", -1.0, "1002459", "309438",
     "95517"},
    {35, 35, 1, true, 3, 1, 1, 2, 1, 1, "alpha", -1.0, "278", "85", "26"},
    {37, 37, 1, true, 3, 1, 1, 2, 1, 1, "alpha", -1.0, "300", "90", "27"},
    {38, 38, 1, false, 3, 1, 1, 2, 2, 0, "beta", -1.0, "87213", "25941",
     "7716"},
    {39, 39, 1, false, 6, 1, 1, 2, 1, 1, "alpha", -1.0, "1587", "468", "138"},
    {41, 41, 1, false, 1, 0, 1, 2, 2, 0, "beta", 56.289370,
     "2793591287345692762343187", "810155246203577862102780",
     "234949015600204972909074"},
    {42, 42, 1, false, 3, 1, 1, 2, 2, 0, "beta", -1.0, "63507", "18270",
     "5256"},
    {43, 43, 1, false, 12, 1, 1, 2, 1, 1, "alpha", -1.0, "147", "42", "12"},
    {44, 11, 2, true, 1, 0, 1, 2, 2, 0, "beta", -1.0, "4007", "1135", "643"},
    {45, 5, 3, false, 1, 0, 1, 2, 2, 0, "beta", -1.0, "4432323", "1246122",
     "1051020"},
    {46, 46, 1, true, 1, 0, 1, 2, 2, 0, "beta", 17.714391, "49347147",
     "13772394", "3843765"},
    {47, 47, 1, false, 2, 0, 1, 2, 2, 0, "beta", 28.155059, "1688832878307",
     "467972919948", "129674556090"},
};

inline constexpr int kNumFields = sizeof(kFields) / sizeof(kFields[0]);

// Septic radicand family below 200.
inline constexpr std::uint64_t kTheorem1Reference[] = {
    2, 11, 23, 37, 53, 67, 79, 107, 109, 137, 149, 151, 163, 179, 191, 193};

// Independent class-number oracle subset.
inline constexpr long kOracleH[][2] = {{2, 1},  {3, 1},  {5, 1},  {6, 1},
                                       {7, 3},  {10, 1}, {11, 2}, {12, 1},
                                       {17, 1}, {19, 3}};

}  // namespace pmcf_fixtures

#endif  // PMCF_TESTS_FIXTURES_HPP_
