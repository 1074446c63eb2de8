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

#include <atomic>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "pmcf/cyclotomic.hpp"
#include "pmcf/dpf.hpp"
#include "pmcf/errors.hpp"
#include "pmcf/record.hpp"

namespace {

using pmcf::ClassificationRecord;
using pmcf::Int;

void print_human(const ClassificationRecord& r) {
  auto line = [](const char* key, const std::string& val) {
    std::printf("%-11s %s\n", key, val.c_str());
  };
  auto opt_int = [](const std::optional<Int>& v) {
    return v ? v->get_str() : std::string("-");
  };
  auto opt_small = [](const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  line("d:", r.d.get_str());
  line("p:", std::to_string(r.p));
  line("a:", opt_int(r.a));
  line("b:", opt_int(r.b));
  line("species:", r.species ? pmcf::species_name(*r.species) : "-");
  line("disc:", opt_int(r.disc));
  line("conductor:", opt_int(r.conductor));
  line("h_L:", opt_int(r.h_L));
  line("three_rank:", opt_small(r.three_rank));
  line("U:", opt_small(r.U));
  line("P:", opt_small(r.P));
  line("A:", opt_small(r.A));
  line("R:", opt_small(r.R));
  line("type:", r.type ? pmcf::coarse_type_name(*r.type) : "-");
  line("theorem1:", r.theorem1 ? "true" : "false");
  std::string notes;
  for (size_t i = 0; i < r.notes.size(); ++i) {
    if (i) notes += ';';
    notes += r.notes[i];
  }
  line("notes:", notes.empty() ? "-" : notes);
}

int run_classify(long d, unsigned p, const std::string& format) {
  ClassificationRecord rec = pmcf::classify_radicand(Int(d), p);
  if (format == "csv") {
    std::cout << pmcf::csv_header() << "\n" << pmcf::to_csv_row(rec) << "\n";
  } else if (format == "json") {
    std::cout << pmcf::to_json_string(rec) << "\n";
  } else {
    print_human(rec);
  }
  return rec.failed ? 3 : 0;
}

int run_scan(unsigned p, long dmin, long dmax,
             const std::string& format, unsigned jobs) {
  std::vector<long> ds;
  for (long d = dmin; d <= dmax; ++d) ds.push_back(d);

  // Worker pool over radicands; results are kept indexed so that output
  // order (ascending raw d) is identical for every --jobs setting.
  std::vector<std::optional<ClassificationRecord>> results(ds.size());
  std::vector<std::string> skip_notes(ds.size());
  std::atomic<size_t> cursor{0};
  auto worker = [&]() {
    while (true) {
      size_t i = cursor.fetch_add(1);
      if (i >= ds.size()) return;
      try {
        results[i] = pmcf::classify_radicand(Int(ds[i]), p);
      } catch (const pmcf::DegenerateRadicand&) {
        skip_notes[i] = "scan: skipping d=" + std::to_string(ds[i]) +
                        ": degenerate_radicand";
      } catch (const pmcf::Error& e) {
        // Per-record failure must not abort the scan: emit a stub record
        // carrying the failure token.
        ClassificationRecord stub;
        stub.d = Int(ds[i]);
        stub.p = p;
        stub.notes.push_back(e.token());
        stub.failed = true;
        results[i] = stub;
      }
    }
  };
  unsigned n = std::max(1u, jobs);
  n = static_cast<unsigned>(
      std::min<size_t>(n, std::max<size_t>(ds.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned k = 0; k + 1 < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  bool json = format == "json";
  if (json) {
    std::cout << "[\n";
  } else {
    std::cout << pmcf::csv_header() << "\n";
  }
  bool first = true;
  for (size_t i = 0; i < ds.size(); ++i) {
    if (!skip_notes[i].empty()) std::cerr << skip_notes[i] << "\n";
    if (!results[i]) continue;
    if (json) {
      if (!first) std::cout << ",\n";
      std::cout << pmcf::to_json_string(*results[i]);
      first = false;
    } else {
      std::cout << pmcf::to_csv_row(*results[i]) << "\n";
    }
  }
  if (json) std::cout << (first ? "]\n" : "\n]\n");
  return 0;
}

int run_theorem1(std::uint64_t limit) {
  std::vector<std::uint64_t> primes = pmcf::theorem1_radicands(limit);
  std::cout << "theorem1 radicands below " << limit << ":";
  for (std::uint64_t q : primes) std::cout << " " << q;
  std::cout << " (" << primes.size() << " primes)\n";
  if (limit == 200) {
    static const std::vector<std::uint64_t> kReference = {
        2,   11,  23,  37,  53,  67,  79,  107,
        109, 137, 149, 151, 163, 179, 191, 193};
    std::cout << "reference comparison: "
              << (primes == kReference ? "MATCH" : "MISMATCH") << "\n";
  }
  return 0;
}

int run_lattice(unsigned p) {
  std::vector<pmcf::LatticeEntry> entries = pmcf::type_lattice(p);
  std::vector<std::pair<int, int>> cells;
  for (const auto& e : entries) {
    std::pair<int, int> c{e.U, e.A};
    bool seen = false;
    for (const auto& d : cells) seen = seen || d == c;
    if (!seen) cells.push_back(c);
  }
  std::printf("coarse type lattice p=%u: %zu labels, %zu cells\n", p,
              entries.size(), cells.size());
  std::printf("%-9s %s %s %s %-7s %-7s %s\n", "label", "U", "A", "R",
              "diagram", "marker", "partner");
  for (const auto& e : entries) {
    int rr = e.U + 1 - e.A;
    std::printf("%-9s %d %d %d %-7s %-7s %s\n", e.label.c_str(), e.U, e.A, rr,
                e.marked ? "filled" : "open",
                pmcf::fine_marker(e.U, e.A) ? "filled" : "open",
                e.norm_split_partner.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coarse type classification of pure metacyclic fields"};
  app.require_subcommand(1);

  auto* cmd_classify =
      app.add_subcommand("classify", "classify a single radicand");
  long cl_d = 0;
  unsigned cl_p = 3;
  std::string cl_format = "human";
  cmd_classify->add_option("--d", cl_d, "radicand")->required();
  cmd_classify->add_option("--p", cl_p, "prime degree")
      ->check(CLI::IsMember({3u, 5u, 7u}));
  cmd_classify->add_option("--format", cl_format, "output format")
      ->check(CLI::IsMember({"human", "csv", "json"}));

  auto* cmd_scan = app.add_subcommand("scan", "classify a radicand range");
  long sc_dmin = 0, sc_dmax = 0;
  unsigned sc_p = 3, sc_jobs = 1;
  std::string sc_format = "csv";
  cmd_scan->add_option("--dmin", sc_dmin, "first raw radicand")
      ->required()
      ->check(CLI::Range(2L, (1L << 62)));
  cmd_scan->add_option("--dmax", sc_dmax, "last raw radicand (inclusive)")
      ->required()
      ->check(CLI::Range(2L, (1L << 62)));
  cmd_scan->add_option("--p", sc_p, "prime degree")
      ->check(CLI::IsMember({3u, 5u, 7u}));
  cmd_scan->add_option("--format", sc_format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_scan->add_option("--jobs", sc_jobs, "worker threads")
      ->check(CLI::Range(1u, 256u));

  auto* cmd_theorem1 =
      app.add_subcommand("theorem1",
                         "prime radicands with two-prime splitting in the "
                         "septic cyclotomic field");
  std::uint64_t th_limit = 200;
  cmd_theorem1->add_option("--limit", th_limit, "upper bound (exclusive)")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40));

  auto* cmd_lattice = app.add_subcommand("lattice", "print the type lattice");
  unsigned la_p = 3;
  cmd_lattice->add_option("--p", la_p, "prime degree")
      ->required()
      ->check(CLI::IsMember({3u, 5u, 7u}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_classify) return run_classify(cl_d, cl_p, cl_format);
    if (*cmd_scan) {
      if (sc_dmax < sc_dmin) {
        std::cerr << "error: --dmax must be >= --dmin\n";
        return 1;
      }
      return run_scan(sc_p, sc_dmin, sc_dmax, sc_format, sc_jobs);
    }
    if (*cmd_theorem1) return run_theorem1(th_limit);
    if (*cmd_lattice) return run_lattice(la_p);
  } catch (const pmcf::DegenerateRadicand& e) {
    std::cerr << "error: " << e.token() << ": " << e.what() << "\n";
    return 2;
  } catch (const pmcf::Error& e) {
    std::cerr << "error: " << e.token() << ": " << e.what() << "\n";
    return 3;
  }
  return 0;
}
