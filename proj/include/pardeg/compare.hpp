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

// Verdicts on relative definability between two functions, backed by
// certificates that can be replayed independently.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pardeg/definability.hpp"
#include "pardeg/error.hpp"
#include "pardeg/function.hpp"
#include "pardeg/plevel.hpp"
#include "pardeg/relation.hpp"
#include "pardeg/term.hpp"
#include "pardeg/zoo.hpp"

namespace pardeg {

inline constexpr std::size_t kDefaultMaxRelArity = 5;

// A relation preserving `keeps` but not `breaks`; proves breaks is not
// definable from keeps.
struct Separation {
  MonotoneFn breaks;
  MonotoneFn keeps;
  SeqRel relation;
  InvarianceWitness witness;

  bool replays() const {
    if (witness.relation != relation || !witness.replays(breaks)) return false;
    InvarianceOptions o;
    return is_invariant(keeps, relation, o).invariant();
  }
};

struct SeparationSearch {
  std::optional<Separation> separation;
  std::vector<std::string> skipped;  // checks abandoned on budget or bounds
};

struct SeparationConfig {
  std::size_t max_rel_arity = kDefaultMaxRelArity;
  std::uint64_t budget = kDefaultBudget;
  std::vector<SeqRel> extra;  // user-supplied relations, tried last
};

// Looks for a relation preserving g but not f: first the canonical relations
// the p-levels single out, then chain relations up to the arity limit, then
// the extra ones. Every candidate is checked by search on both functions.
inline SeparationSearch find_separating_relation(const MonotoneFn& f, const MonotoneFn& g,
                                                 const SeparationConfig& config = {}) {
  SeparationSearch out;
  std::vector<SeqRel> candidates;
  try {
    for (const PreseqRel& r : separating_canonical_relations(p_level(f), p_level(g)))
      candidates.emplace_back(r);
  } catch (const Error& e) {
    out.skipped.push_back(std::string("p-levels: ") + e.what());
  }
  for (std::size_t j = 2; j <= config.max_rel_arity; ++j) candidates.push_back(chain_relation(j));
  for (const SeqRel& r : config.extra) candidates.push_back(r);

  InvarianceOptions opts;
  opts.budget = config.budget;
  for (const SeqRel& r : candidates) {
    try {
      InvarianceResult on_f = is_invariant(f, r, opts);
      if (on_f.invariant()) continue;
      if (!is_invariant(g, r, opts).invariant()) continue;
      if (!on_f.witness->replays(f))
        throw Error(ErrorCode::Internal, "invariance witness failed to replay");
      out.separation = Separation{f, g, r, std::move(*on_f.witness)};
      return out;
    } catch (const BudgetExceeded& e) {
      out.skipped.push_back(r.str() + ": " + e.what());
    }
  }
  return out;
}

// ---- certificates ----

enum class CertificateKind { BmMapping, Separation, Term };

inline const char* certificate_kind_name(CertificateKind k) {
  switch (k) {
    case CertificateKind::BmMapping: return "bm_mapping";
    case CertificateKind::Separation: return "separation";
    default: return "term";
  }
}

// eval_term(term, oracle) equals result exactly.
struct TermCertificate {
  std::string construction;
  Term term;
  MonotoneFn oracle;
  MonotoneFn result;

  bool replays() const { return eval_term(term, oracle) == result; }
};

// bm_mapping and term: source is definable from target.
// separation: source is not definable from target.
struct Certificate {
  CertificateKind kind;
  std::variant<BMMapping, Separation, TermCertificate> payload;

  const MonotoneFn& source() const {
    if (auto* m = std::get_if<BMMapping>(&payload)) return m->source;
    if (auto* s = std::get_if<Separation>(&payload)) return s->breaks;
    return std::get<TermCertificate>(payload).result;
  }
  const MonotoneFn& target() const {
    if (auto* m = std::get_if<BMMapping>(&payload)) return m->target;
    if (auto* s = std::get_if<Separation>(&payload)) return s->keeps;
    return std::get<TermCertificate>(payload).oracle;
  }
  bool positive() const { return kind != CertificateKind::Separation; }

  bool verify() const {
    if (auto* m = std::get_if<BMMapping>(&payload)) return check_bm(*m);
    if (auto* s = std::get_if<Separation>(&payload)) return s->replays();
    return std::get<TermCertificate>(payload).replays();
  }
};

// ---- term templates ----

namespace detail {

inline std::optional<std::size_t> por_index(const MonotoneFn& f) {
  if (f.arity() >= 2 && f == zoo::por(f.arity())) return f.arity();
  return std::nullopt;
}

inline std::optional<std::pair<std::size_t, std::size_t>> bg_index(const MonotoneFn& f) {
  if (f.arity() < 3 || f.arity() % 2 == 0) return std::nullopt;
  const std::size_t i = (f.arity() - 1) / 2;
  for (std::size_t j = 0; j <= i; ++j)
    if (f == zoo::bg(i, j)) return std::make_pair(i, j);
  return std::nullopt;
}

inline std::optional<TermCertificate> check_template(std::string construction, Term t,
                                                     const MonotoneFn& f, const MonotoneFn& g) {
  if (t.arity != f.arity() || t.arity > kDefaultTableBound) return std::nullopt;
  MonotoneFn h = eval_term(t, g);
  if (!(h == f)) return std::nullopt;
  return TermCertificate{std::move(construction), std::move(t), g, f};
}

}  // namespace detail

// Tries the known term constructions for f from g; every hit is verified by
// table equality.
inline std::optional<TermCertificate> find_term_certificate(const MonotoneFn& f,
                                                            const MonotoneFn& g) {
  if (const auto pf = detail::por_index(f), pg = detail::por_index(g); pf && pg && *pf >= *pg)
    if (auto c = detail::check_template("por_step chain", por_chain_term(*pg, *pf), f, g))
      return c;

  if (const auto bf = detail::bg_index(f), bg = detail::bg_index(g);
      bf && bg && bf->first == bg->first && bf->second >= 1 && bg->second >= 1) {
    const RotationTerms rt = bg_rotation_terms(bf->first);
    std::vector<Expr> xs;
    for (std::size_t c = 1; c <= f.arity(); ++c) xs.push_back(var(c));
    Term t{f.arity(), apply_g(std::move(xs))};
    const bool up = bf->second >= bg->second;
    const std::size_t steps = up ? bf->second - bg->second : bg->second - bf->second;
    for (std::size_t s = 0; s < steps; ++s) t = substitute_oracle(up ? rt.m1 : rt.m2, t);
    if (auto c = detail::check_template(up ? "bg rotation m1" : "bg rotation m2", t, f, g))
      return c;
  }

  if (is_monovalued(f) && f.trace_size() <= kMaxArity) {
    const Term base = mono_to_det_term(f);
    const std::size_t n = f.trace_size();
    if (g == zoo::ntdet(n))
      if (auto c = detail::check_template("monovalued to ntdet", base, f, g)) return c;
    if (g == zoo::ttdet())
      if (auto c = detail::check_template("monovalued to ttdet",
                                          substitute_oracle(base, ntdet_fold_term(n)), f, g))
        return c;
  }
  return std::nullopt;
}

// ---- verdicts ----

enum class Definability { Yes, No, Unknown };

inline const char* definability_name(Definability d) {
  switch (d) {
    case Definability::Yes: return "yes";
    case Definability::No: return "no";
    default: return "unknown";
  }
}

enum class Verdict {
  Equiparallel,
  LeftBelowStrict,
  RightBelowStrict,
  Incomparable,
  LeftBelow,      // left <= right; the converse is unresolved
  RightBelow,
  LeftNotBelow,   // left not <= right; the converse is unresolved
  RightNotBelow,
  Unknown,
};

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Equiparallel: return "equiparallel";
    case Verdict::LeftBelowStrict: return "left_below_strict";
    case Verdict::RightBelowStrict: return "right_below_strict";
    case Verdict::Incomparable: return "incomparable";
    case Verdict::LeftBelow: return "left_below";
    case Verdict::RightBelow: return "right_below";
    case Verdict::LeftNotBelow: return "left_not_below";
    case Verdict::RightNotBelow: return "right_not_below";
    default: return "unknown";
  }
}

inline bool is_resolved(Verdict v) {
  return v == Verdict::Equiparallel || v == Verdict::LeftBelowStrict ||
         v == Verdict::RightBelowStrict || v == Verdict::Incomparable;
}

struct DirectionResult {
  Definability status = Definability::Unknown;
  std::optional<Certificate> certificate;
  std::vector<std::string> notes;
};

struct CompareConfig {
  std::uint64_t budget = kDefaultBudget;
  std::size_t max_rel_arity = kDefaultMaxRelArity;
  bool allow_terms = false;
  std::vector<SeqRel> relations;
};

struct CompareVerdict {
  Verdict verdict = Verdict::Unknown;
  DirectionResult left_below_right;
  DirectionResult right_below_left;
};

namespace detail {

inline Verdict combine(Definability lr, Definability rl) {
  using D = Definability;
  if (lr == D::Yes && rl == D::Yes) return Verdict::Equiparallel;
  if (lr == D::Yes && rl == D::No) return Verdict::LeftBelowStrict;
  if (lr == D::No && rl == D::Yes) return Verdict::RightBelowStrict;
  if (lr == D::No && rl == D::No) return Verdict::Incomparable;
  if (lr == D::Yes) return Verdict::LeftBelow;
  if (rl == D::Yes) return Verdict::RightBelow;
  if (lr == D::No) return Verdict::LeftNotBelow;
  if (rl == D::No) return Verdict::RightNotBelow;
  return Verdict::Unknown;
}

// Is f definable from g?
inline DirectionResult decide_direction(const MonotoneFn& f, const MonotoneFn& g,
                                        const CompareConfig& config) {
  DirectionResult d;
  std::optional<Certificate> positive, negative;
  try {
    BmSearchOptions o;
    o.budget = config.budget;
    if (auto m = bm_search(f, g, o)) positive = Certificate{CertificateKind::BmMapping, *m};
    else d.notes.push_back("no trace mapping exists");
  } catch (const Error& e) {
    d.notes.push_back(std::string("trace mapping search abandoned: ") + e.what());
  }
  if (!positive && config.allow_terms) {
    try {
      if (auto t = find_term_certificate(f, g))
        positive = Certificate{CertificateKind::Term, *t};
      else
        d.notes.push_back("no term template applies");
    } catch (const Error& e) {
      d.notes.push_back(std::string("term templates abandoned: ") + e.what());
    }
  }
  SeparationConfig sc;
  sc.max_rel_arity = config.max_rel_arity;
  sc.budget = config.budget;
  sc.extra = config.relations;
  SeparationSearch s = find_separating_relation(f, g, sc);
  for (std::string& note : s.skipped) d.notes.push_back("skipped " + note);
  if (s.separation) negative = Certificate{CertificateKind::Separation, std::move(*s.separation)};
  else d.notes.push_back("no separating relation found within bounds");

  if (positive && negative)
    throw Error(ErrorCode::Internal, "conflicting evidence: " + f.name() + " vs " + g.name());
  for (const std::optional<Certificate>* c : {&positive, &negative})
    if (*c && !(*c)->verify())
      throw Error(ErrorCode::Internal, "certificate failed to replay");
  if (positive) {
    d.status = Definability::Yes;
    d.certificate = std::move(positive);
  } else if (negative) {
    d.status = Definability::No;
    d.certificate = std::move(negative);
  }
  return d;
}

}  // namespace detail

// Runs positive and negative searches in both directions. Absence of a
// certificate is reported as unknown, never as a negative.
inline CompareVerdict compare(const MonotoneFn& left, const MonotoneFn& right,
                              const CompareConfig& config = {}) {
  CompareVerdict v;
  v.left_below_right = detail::decide_direction(left, right, config);
  v.right_below_left = detail::decide_direction(right, left, config);
  v.verdict = detail::combine(v.left_below_right.status, v.right_below_left.status);
  return v;
}

}  // namespace pardeg
