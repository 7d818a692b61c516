// Copyright 2026 The Authors.
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

#ifndef LPM_SERIALIZE_HPP
#define LPM_SERIALIZE_HPP

#include <json.hpp>

#include <string>

#include "lpm/coflow.hpp"
#include "lpm/matroid.hpp"
#include "lpm/rational.hpp"
#include "lpm/sets.hpp"
#include "lpm/structure.hpp"
#include "lpm/transversal.hpp"

namespace lpm {

// ordered_json keeps insertion order, so every emitter below produces
// byte-stable documents with the documented field order.
using Json = nlohmann::ordered_json;

inline long long to_int64(const Int& x) {
  if (x > std::numeric_limits<long long>::max() ||
      x < std::numeric_limits<long long>::min()) {
    throw Error("coefficient does not fit in 64 bits");
  }
  return x.convert_to<long long>();
}

inline Json json_of_set(Mask s) {
  Json arr = Json::array();
  for (int e : set_elements(s)) arr.push_back(e);
  return arr;
}

inline Json json_of(const StrongLpm& M) {
  Json j;
  j["n"] = M.n();
  j["p"] = M.pair().p.word();
  j["q"] = M.pair().q.word();
  Json pres = Json::array();
  for (auto [lo, hi] : M.level_intervals()) pres.push_back(Json::array({lo, hi}));
  j["presentation"] = pres;
  return j;
}

inline const char* kind_name(CopointKind k) {
  return k == CopointKind::simple ? "simple" : "multiple";
}

inline Json json_of(const ColineReport& rep) {
  Json j;
  j["coline"] = json_of_set(rep.coline);
  Json cps = Json::array();
  for (const auto& [set, kind] : rep.copoints) {
    Json c;
    c["set"] = json_of_set(set);
    c["kind"] = kind_name(kind);
    cps.push_back(c);
  }
  j["copoints"] = cps;
  j["quite_simple"] = rep.quite_simple;
  return j;
}

inline Json json_of(const WesternColineResult& w) {
  Json j;
  j["coline"] = json_of_set(w.coline);
  Json cps = Json::array();
  {
    Json c;
    c["set"] = json_of_set(w.prefix_copoint);
    c["kind"] = kind_name(w.prefix_copoint_kind);
    cps.push_back(c);
  }
  for (Mask Y : w.eastern_simple_copoints) {
    Json c;
    c["set"] = json_of_set(Y);
    c["kind"] = "simple";
    cps.push_back(c);
  }
  j["copoints"] = cps;
  const int simple = static_cast<int>(w.eastern_simple_copoints.size()) +
                     (w.prefix_copoint_kind == CopointKind::simple ? 1 : 0);
  const int multiple = w.prefix_copoint_kind == CopointKind::multiple ? 1 : 0;
  j["quite_simple"] = simple > multiple;
  j["j1"] = w.j1;
  j["j2"] = w.j2;
  return j;
}

inline Json json_of(const ThreeColorCertificate& cert) {
  Json j;
  j["F"] = cert.coflow;
  Json coeff = Json::array();
  for (const Int& c : cert.coefficients) coeff.push_back(to_int64(c));
  j["coefficients"] = coeff;
  j["max_abs"] = cert.max_abs;
  j["verified"] = cert.verified;
  return j;
}

inline Json json_of(const Coflow& f) {
  Json j;
  j["F"] = f.values;
  Json coeff = Json::array();
  for (const Int& c : f.coefficients) coeff.push_back(to_int64(c));
  j["coefficients"] = coeff;
  return j;
}

inline Json json_of(const GspReport& rep) {
  Json j;
  j["all_pass"] = rep.all_pass;
  j["minors_total"] = rep.minors_total;
  j["nontrivial_checked"] = rep.nontrivial_checked;
  j["trivial_skipped"] = rep.trivial_skipped;
  Json recs = Json::array();
  for (const GspMinorRecord& r : rep.records) {
    Json rec;
    rec["delete"] = json_of_set(r.deleted);
    rec["contract"] = json_of_set(r.contracted);
    rec["minor_size"] = r.minor_size;
    rec["simple_size"] = r.simple_size;
    rec["coflow"] = r.coflow;
    recs.push_back(rec);
  }
  j["minors"] = recs;
  return j;
}

}  // namespace lpm

#endif  // LPM_SERIALIZE_HPP
