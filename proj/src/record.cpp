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

#include "pmcf/record.hpp"

#include <string>
#include <vector>

#include "json.hpp"
#include "pmcf/class_group.hpp"
#include "pmcf/cubic_field.hpp"
#include "pmcf/cyclotomic.hpp"
#include "pmcf/errors.hpp"
#include "pmcf/saturation.hpp"
#include "pmcf/units.hpp"

namespace pmcf {
namespace {

using Json = nlohmann::ordered_json;

const char* const kHeader =
    "d,p,a,b,species,disc,conductor,h_L,three_rank,U,P,A,R,type,theorem1,"
    "notes";

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += "\"\"";
    else q += ch;
  }
  q += '"';
  return q;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += ch;
      }
    } else if (ch == '"' && cur.empty()) {
      quoted = true;
    } else if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (quoted) throw InternalInconsistency("unterminated CSV quote");
  out.push_back(cur);
  return out;
}

std::string opt_int_str(const std::optional<Int>& v) {
  return v ? v->get_str() : std::string();
}

std::string opt_small_str(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::optional<Int> parse_opt_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return Int(s);
}

std::optional<int> parse_opt_small(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return std::stoi(s);
}

std::string join_notes(const std::vector<std::string>& notes) {
  std::string s;
  for (size_t i = 0; i < notes.size(); ++i) {
    if (i) s += ';';
    s += notes[i];
  }
  return s;
}

std::vector<std::string> split_notes(const std::string& s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(';', start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

Species species_from_name(const std::string& s) {
  if (s == "TypeI") return Species::TypeI;
  if (s == "TypeII") return Species::TypeII;
  throw InternalInconsistency("unknown species name: " + s);
}

CoarseType type_from_name(const std::string& s) {
  if (s == "alpha") return CoarseType::kAlpha;
  if (s == "beta") return CoarseType::kBeta;
  if (s == "gamma") return CoarseType::kGamma;
  throw InternalInconsistency("unknown type name: " + s);
}

Json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json opt_int_to_json(const std::optional<Int>& v) {
  return v ? int_to_json(*v) : Json(nullptr);
}

Json opt_small_to_json(const std::optional<int>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Int int_from_json(const Json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  return Int(static_cast<long>(j.get<long long>()));
}

std::optional<Int> opt_int_from_json(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return int_from_json(j);
}

std::optional<int> opt_small_from_json(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<int>();
}

void append_split_notes(std::vector<std::string>* notes,
                        const SplittingReport& rep) {
  std::string ell = std::to_string(rep.ell);
  notes->push_back("split:" + ell + ":" + std::to_string(rep.e) + ":" +
                   std::to_string(rep.f) + ":" + std::to_string(rep.g));
  if (rep.ishida) notes->push_back("ishida:" + ell);
  if (rep.kobayashi) notes->push_back("kobayashi:" + ell);
  if (rep.septic_two_split) notes->push_back("septic2:" + ell);
}

}  // namespace

std::string csv_header() { return kHeader; }

std::string to_csv_row(const ClassificationRecord& r) {
  std::vector<std::string> f = {
      r.d.get_str(),
      std::to_string(r.p),
      opt_int_str(r.a),
      opt_int_str(r.b),
      r.species ? species_name(*r.species) : "",
      opt_int_str(r.disc),
      opt_int_str(r.conductor),
      opt_int_str(r.h_L),
      opt_small_str(r.three_rank),
      opt_small_str(r.U),
      opt_small_str(r.P),
      opt_small_str(r.A),
      opt_small_str(r.R),
      r.type ? coarse_type_name(*r.type) : "",
      r.theorem1 ? "true" : "false",
      join_notes(r.notes)};
  std::string row;
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) row += ',';
    row += csv_escape(f[i]);
  }
  return row;
}

ClassificationRecord from_csv_row(const std::string& line) {
  std::vector<std::string> f = split_csv(line);
  if (f.size() != 16)
    throw InternalInconsistency("CSV row has " + std::to_string(f.size()) +
                                " fields, expected 16");
  ClassificationRecord r;
  r.d = Int(f[0]);
  r.p = static_cast<unsigned>(std::stoul(f[1]));
  r.a = parse_opt_int(f[2]);
  r.b = parse_opt_int(f[3]);
  if (!f[4].empty()) r.species = species_from_name(f[4]);
  r.disc = parse_opt_int(f[5]);
  r.conductor = parse_opt_int(f[6]);
  r.h_L = parse_opt_int(f[7]);
  r.three_rank = parse_opt_small(f[8]);
  r.U = parse_opt_small(f[9]);
  r.P = parse_opt_small(f[10]);
  r.A = parse_opt_small(f[11]);
  r.R = parse_opt_small(f[12]);
  if (!f[13].empty()) r.type = type_from_name(f[13]);
  if (f[14] == "true") {
    r.theorem1 = true;
  } else if (f[14] == "false") {
    r.theorem1 = false;
  } else {
    throw InternalInconsistency("bad theorem1 field: " + f[14]);
  }
  r.notes = split_notes(f[15]);
  return r;
}

std::string to_json_string(const ClassificationRecord& r) {
  Json j;
  j["d"] = int_to_json(r.d);
  j["p"] = r.p;
  j["a"] = opt_int_to_json(r.a);
  j["b"] = opt_int_to_json(r.b);
  j["species"] = r.species ? Json(species_name(*r.species)) : Json(nullptr);
  j["disc"] = opt_int_to_json(r.disc);
  j["conductor"] = opt_int_to_json(r.conductor);
  j["h_L"] = opt_int_to_json(r.h_L);
  j["three_rank"] = opt_small_to_json(r.three_rank);
  j["U"] = opt_small_to_json(r.U);
  j["P"] = opt_small_to_json(r.P);
  j["A"] = opt_small_to_json(r.A);
  j["R"] = opt_small_to_json(r.R);
  j["type"] = r.type ? Json(coarse_type_name(*r.type)) : Json(nullptr);
  j["theorem1"] = r.theorem1;
  j["notes"] = r.notes;
  return j.dump();
}

ClassificationRecord from_json_string(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw InternalInconsistency(std::string("JSON parse failure: ") +
                                e.what());
  }
  ClassificationRecord r;
  r.d = int_from_json(j.at("d"));
  r.p = j.at("p").get<unsigned>();
  r.a = opt_int_from_json(j.at("a"));
  r.b = opt_int_from_json(j.at("b"));
  if (!j.at("species").is_null())
    r.species = species_from_name(j.at("species").get<std::string>());
  r.disc = opt_int_from_json(j.at("disc"));
  r.conductor = opt_int_from_json(j.at("conductor"));
  r.h_L = opt_int_from_json(j.at("h_L"));
  r.three_rank = opt_small_from_json(j.at("three_rank"));
  r.U = opt_small_from_json(j.at("U"));
  r.P = opt_small_from_json(j.at("P"));
  r.A = opt_small_from_json(j.at("A"));
  r.R = opt_small_from_json(j.at("R"));
  if (!j.at("type").is_null())
    r.type = type_from_name(j.at("type").get<std::string>());
  r.theorem1 = j.at("theorem1").get<bool>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

ClassificationRecord classify_radicand(const Int& d_raw, unsigned p) {
  Radicand rad = normalize(d_raw, p);
  ClassificationRecord rec;
  rec.d = rad.d;
  rec.p = p;

  if (p == 3) {
    rec.a = rad.a;
    rec.b = rad.b;
    rec.species = rad.species;
    Conductor cond = conductor_p3(rad);
    rec.conductor = cond.value;
    for (const auto& [ell, rep] : cond.prime_divisors)
      append_split_notes(&rec.notes, rep);
    Int conj = conjugate_radicand(rad);
    if (conj < rad.d) rec.notes.push_back("conjugate_of:" + conj.get_str());
    try {
      CubicField F = build_field(rad);
      rec.disc = F.discriminant;
      UnitGroupL units = fundamental_unit(F);
      ClassGroupResult cg = class_group(F, units);
      rec.h_L = cg.h;
      rec.three_rank = cg.three_rank;
      SaturationResult sat = cube_saturate_units(F, units);
      DpfClassification dc = classify_p3(F, units, sat);
      rec.U = dc.inv.U;
      rec.P = dc.inv.P;
      rec.A = dc.inv.A;
      rec.R = dc.inv.R;
      rec.type = dc.type;
    } catch (const Error& e) {
      rec.notes.push_back(e.token());
      rec.failed = true;
    }
    return rec;
  }

  // p = 5, 7: splitting report over the primes dividing d; the class number
  // divisibility statements for these degrees are not verified here.
  for (const auto& [ell, mult] : factorize(rad.d)) {
    if (!ell.fits_ulong_p())
      throw FactorizationIncomplete("radicand prime exceeds machine range");
    append_split_notes(&rec.notes, split_in_cyclotomic(ell.get_ui(), p));
  }
  rec.notes.push_back("h_divisibility_unverified");
  if (p == 7 && is_prime(rad.d)) {
    Int m = rad.d % 7;
    rec.theorem1 = (m == 2 || m == 4);
  }
  return rec;
}

}  // namespace pmcf
