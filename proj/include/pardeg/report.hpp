// Copyright 2026 The pardeg Authors
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

// JSON serialization of reports, verdicts and certificates.

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pardeg/compare.hpp"
#include "pardeg/definability.hpp"
#include "pardeg/function.hpp"
#include "pardeg/plevel.hpp"
#include "pardeg/relation.hpp"

namespace pardeg {

using Json = nlohmann::ordered_json;

inline Json to_json(const ExtNat& e) {
  if (e.is_infinite()) return "inf";
  return e.value();
}

inline Json to_json(const Tuple& t) { return t.str(); }

inline Json to_json(const MonotoneFn& f) {
  Json trace = Json::array();
  for (const TraceEntry& e : f.trace())
    trace.push_back(Json::array({e.input.str(), std::string(1, to_char(e.output))}));
  Json j;
  j["name"] = f.name();
  j["arity"] = f.arity();
  j["trace"] = std::move(trace);
  return j;
}

// {name, arity, trace_size, cc, bcc, plevel: [i, j], classes, degree_alias}
inline Json analysis_report(const MonotoneFn& f, std::size_t bound = kDefaultTraceBound) {
  const ClassReport r = classify(f, bound);
  Json j;
  j["name"] = f.name();
  j["arity"] = f.arity();
  j["trace_size"] = f.trace_size();
  j["cc"] = to_json(r.cc);
  j["bcc"] = to_json(r.bcc);
  j["plevel"] = Json::array({to_json(r.plevel.i), to_json(r.plevel.j)});
  j["classes"] = r.classes();
  j["degree_alias"] = alias_name(r.alias);
  return j;
}

inline Json to_json(const InvarianceWitness& w) {
  Json rows = Json::array();
  for (const Tuple& t : w.inputs) rows.push_back(t.str());
  Json j;
  j["relation"] = w.relation.str();
  j["inputs"] = std::move(rows);
  j["output"] = w.output.str();
  return j;
}

inline Json to_json(const Certificate& c) {
  Json payload;
  if (const auto* m = std::get_if<BMMapping>(&c.payload)) {
    payload["map"] = m->map;
  } else if (const auto* s = std::get_if<Separation>(&c.payload)) {
    payload["relation"] = s->relation.str();
    payload["witness"] = to_json(s->witness);
  } else {
    const auto& t = std::get<TermCertificate>(c.payload);
    payload["construction"] = t.construction;
    payload["arity"] = t.term.arity;
    payload["term"] = t.term.str();
  }
  Json j;
  j["kind"] = certificate_kind_name(c.kind);
  j["source"] = to_json(c.source());
  j["target"] = to_json(c.target());
  j["payload"] = std::move(payload);
  j["verified"] = c.verify();
  return j;
}

inline Json to_json(const DirectionResult& d) {
  Json j;
  j["status"] = definability_name(d.status);
  j["certificate"] = d.certificate ? to_json(*d.certificate) : Json(nullptr);
  j["notes"] = d.notes;
  return j;
}

inline Json to_json(const CompareVerdict& v, const MonotoneFn& left, const MonotoneFn& right) {
  Json j;
  j["left"] = left.name();
  j["right"] = right.name();
  j["verdict"] = verdict_name(v.verdict);
  j["left_below_right"] = to_json(v.left_below_right);
  j["right_below_left"] = to_json(v.right_below_left);
  return j;
}

inline Json to_json(const InvarianceResult& r, const MonotoneFn& f, const SeqRel& rel) {
  Json j;
  j["function"] = f.name();
  j["relation"] = rel.str();
  j["invariant"] = r.invariant();
  j["strategy"] = strategy_name(r.strategy);
  j["states"] = r.states;
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  return j;
}

}  // namespace pardeg
