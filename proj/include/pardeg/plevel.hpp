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

// Coefficients of coherence and presequentiality levels.
//
// For a monotone f, cc(f) is the least size >= 2 of a coherent set of trace
// inputs and bcc(f) the least size >= 3 of a coherent set whose outputs hold
// both tt and ff; either is infinite when no such set exists. The p-level is
// (bcc - 1, cc - 1), and f is invariant under S^n_{A,B} exactly when
// |A| = |B| <= i, or |A| < |B| and |A| <= j.

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pardeg/error.hpp"
#include "pardeg/function.hpp"
#include "pardeg/lattice.hpp"
#include "pardeg/relation.hpp"

namespace pardeg {

inline constexpr std::size_t kDefaultTraceBound = 20;
inline constexpr std::size_t kDefaultEnumerationArity = 2;

// Natural number or infinity; infinity is above every natural and inf - 1 = inf.
class ExtNat {
 public:
  enum class Kind : std::uint8_t { Finite, Infinite };

  constexpr ExtNat() = default;
  constexpr explicit ExtNat(std::uint64_t v) : kind_(Kind::Finite), value_(v) {}
  static constexpr ExtNat infinity() {
    ExtNat e;
    e.kind_ = Kind::Infinite;
    return e;
  }

  constexpr bool is_infinite() const { return kind_ == Kind::Infinite; }
  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  std::uint64_t value() const {
    if (is_infinite()) throw Error(ErrorCode::InvalidArgument, "value() of infinity");
    return value_;
  }

  constexpr ExtNat minus_one() const {
    if (is_infinite()) return *this;
    return ExtNat(value_ == 0 ? 0 : value_ - 1);
  }

  std::string str() const { return is_infinite() ? "inf" : std::to_string(value_); }

  friend constexpr bool operator==(const ExtNat& a, const ExtNat& b) {
    if (a.kind_ != b.kind_) return false;
    return a.is_infinite() || a.value_ == b.value_;
  }
  friend constexpr std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b) {
    if (a.is_infinite() || b.is_infinite()) {
      if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
      return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return a.value_ <=> b.value_;
  }

 private:
  Kind kind_ = Kind::Finite;
  std::uint64_t value_ = 0;
};

inline constexpr ExtNat kInf = ExtNat::infinity();

inline ExtNat min(const ExtNat& a, const ExtNat& b) { return a <= b ? a : b; }

struct PLevel {
  ExtNat i;
  ExtNat j;

  std::string str() const { return "(" + i.str() + "," + j.str() + ")"; }
  friend bool operator==(const PLevel&, const PLevel&) = default;
};

namespace detail {

inline void require_trace_bound(const MonotoneFn& f, std::size_t bound) {
  if (f.trace_size() > bound)
    throw Error(ErrorCode::BoundExceeded, "trace of size " + std::to_string(f.trace_size()) +
                                              " exceeds enumeration bound " +
                                              std::to_string(bound));
}

// Calls visit(indices, acc) for every subset of the given size, in
// lexicographic index order, until it returns true.
inline bool for_each_subset(const MonotoneFn& f, std::size_t size,
                            const std::function<bool(const std::vector<std::size_t>&,
                                                     const CoherenceAccumulator&)>& visit) {
  const std::size_t n = f.trace_size();
  if (size > n) return false;
  std::vector<std::uint64_t> def(n), tt(n), ff(n);
  for (std::size_t t = 0; t < n; ++t) {
    def[t] = f.trace()[t].input.defined_mask();
    tt[t] = f.trace()[t].input.tt_mask();
    ff[t] = f.trace()[t].input.ff_mask();
  }
  std::vector<std::size_t> pick(size);
  std::function<bool(std::size_t, std::size_t, CoherenceAccumulator)> rec =
      [&](std::size_t depth, std::size_t from, CoherenceAccumulator acc) {
        if (depth == size) return visit(pick, acc);
        for (std::size_t t = from; t + (size - depth) <= n; ++t) {
          CoherenceAccumulator next = acc;
          next.add(def[t], tt[t], ff[t]);
          pick[depth] = t;
          if (rec(depth + 1, t + 1, next)) return true;
        }
        return false;
      };
  return rec(0, 0, CoherenceAccumulator{});
}

inline std::optional<std::vector<std::size_t>> least_coherent_subset(const MonotoneFn& f,
                                                                     std::size_t min_size,
                                                                     bool bivalued,
                                                                     std::size_t bound) {
  require_trace_bound(f, bound);
  std::optional<std::vector<std::size_t>> found;
  for (std::size_t s = min_size; s <= f.trace_size() && !found; ++s) {
    for_each_subset(f, s, [&](const std::vector<std::size_t>& pick,
                              const CoherenceAccumulator& acc) {
      if (!acc.coherent()) return false;
      if (bivalued) {
        bool tt = false, ff = false;
        for (std::size_t t : pick) (f.trace()[t].output == Tri::Tt ? tt : ff) = true;
        if (!(tt && ff)) return false;
      }
      found = pick;
      return true;
    });
  }
  return found;
}

}  // namespace detail

// Trace indices of a smallest coherent set of size >= 2 (first in
// lexicographic order), if any.
inline std::optional<std::vector<std::size_t>> minimal_coherent_subset(
    const MonotoneFn& f, std::size_t bound = kDefaultTraceBound) {
  return detail::least_coherent_subset(f, 2, false, bound);
}

inline std::optional<std::vector<std::size_t>> minimal_bivalued_coherent_subset(
    const MonotoneFn& f, std::size_t bound = kDefaultTraceBound) {
  return detail::least_coherent_subset(f, 3, true, bound);
}

inline ExtNat cc(const MonotoneFn& f, std::size_t bound = kDefaultTraceBound) {
  auto s = minimal_coherent_subset(f, bound);
  return s ? ExtNat(s->size()) : kInf;
}

inline ExtNat bcc(const MonotoneFn& f, std::size_t bound = kDefaultTraceBound) {
  auto s = minimal_bivalued_coherent_subset(f, bound);
  return s ? ExtNat(s->size()) : kInf;
}

inline PLevel p_level(const MonotoneFn& f, std::size_t bound = kDefaultTraceBound) {
  return PLevel{bcc(f, bound).minus_one(), cc(f, bound).minus_one()};
}

inline bool predict_invariant(const PLevel& p, const PreseqRel& r) {
  const ExtNat a(r.a().size());
  if (r.a().size() == r.b().size()) return a <= p.i;
  return a <= p.j;
}

inline PLevel p_level_of_sum(const PLevel& pf, const PLevel& pg) {
  return PLevel{min(pf.i, pg.i), min(pf.j, pg.j)};
}

// Inexpressibility that follows from comparing p-levels alone.
struct PLevelSeparation {
  bool left_not_below_right = false;  // f is not definable from g
  bool right_not_below_left = false;  // g is not definable from f

  bool any() const { return left_not_below_right || right_not_below_left; }
};

inline PLevelSeparation inexpressible_by_plevel(const PLevel& pf, const PLevel& pg) {
  PLevelSeparation s;
  s.right_not_below_left = pf.i > pg.i || pf.j > pg.j;
  s.left_not_below_right = pg.i > pf.i || pg.j > pf.j;
  return s;
}

inline PLevelSeparation inexpressible_by_plevel(const MonotoneFn& f, const MonotoneFn& g) {
  return inexpressible_by_plevel(p_level(f), p_level(g));
}

// Canonical presequentiality relation that preserves a function of p-level
// `keeps` but not one of p-level `breaks`, when their levels say one exists.
inline std::vector<PreseqRel> separating_canonical_relations(const PLevel& breaks,
                                                             const PLevel& keeps) {
  std::vector<PreseqRel> out;
  if (keeps.i > breaks.i) out.push_back(PreseqRel::equal_block(breaks.i.value() + 1));
  if (keeps.j > breaks.j) out.push_back(PreseqRel::strict_block(breaks.j.value() + 1));
  return out;
}

enum class DegreeAlias { None, BP, DET };

inline const char* alias_name(DegreeAlias a) {
  switch (a) {
    case DegreeAlias::BP: return "BP";
    case DegreeAlias::DET: return "DET";
    default: return "none";
  }
}

struct ClassReport {
  ExtNat cc;
  ExtNat bcc;
  PLevel plevel;
  bool sequential = false;
  bool stable = false;
  bool unstable = false;
  bool monovalued = false;
  bool bivalued = false;
  bool stable_dominating = false;
  bool subsequential = false;
  DegreeAlias alias = DegreeAlias::None;

  // Names of the set flags, in a fixed order.
  std::vector<std::string> classes() const {
    std::vector<std::string> out;
    if (sequential) out.push_back("sequential");
    if (stable) out.push_back("stable");
    if (unstable) out.push_back("unstable");
    if (monovalued) out.push_back("monovalued");
    if (bivalued) out.push_back("bivalued");
    if (stable_dominating) out.push_back("stable_dominating");
    if (subsequential) out.push_back("subsequential");
    return out;
  }
};

// Everything here derives from cc, bcc and the trace outputs.
inline ClassReport classify(const MonotoneFn& f, std::size_t bound = kDefaultTraceBound) {
  ClassReport r;
  r.cc = cc(f, bound);
  r.bcc = bcc(f, bound);
  r.plevel = PLevel{r.bcc.minus_one(), r.cc.minus_one()};
  const ExtNat one(1), two(2);
  r.sequential = r.plevel.i.is_infinite() && r.plevel.j.is_infinite();
  r.stable = r.plevel.j >= two;
  r.unstable = r.plevel.j == one;
  r.monovalued = is_monovalued(f);
  r.bivalued = is_bivalued(f);
  r.stable_dominating = r.plevel.i == two && r.plevel.j == one;
  r.subsequential = r.plevel.i.is_infinite();
  if (r.plevel.i == two && r.plevel.j == two) r.alias = DegreeAlias::BP;
  if (r.plevel.i.is_infinite() && r.plevel.j == one) r.alias = DegreeAlias::DET;
  return r;
}

// Calls visit on every monotone function B^k -> B exactly once, built as a
// consistent antichain of trace entries.
inline void for_each_monotone(std::size_t k, const std::function<void(const MonotoneFn&)>& visit,
                              std::size_t bound = kDefaultEnumerationArity) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "arity must be at least 1");
  if (k > bound)
    throw Error(ErrorCode::BoundExceeded, "monotone enumeration at arity " + std::to_string(k) +
                                              " exceeds bound " + std::to_string(bound));
  const std::vector<Tuple> points = all_tuples(k);
  std::vector<TraceEntry> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t p) {
    if (p == points.size()) {
      visit(MonotoneFn(k, chosen));
      return;
    }
    rec(p + 1);
    const Tuple& x = points[p];
    for (Tri out : {Tri::Tt, Tri::Ff}) {
      bool ok = true;
      for (const TraceEntry& e : chosen) {
        if (leq(e.input, x) || leq(x, e.input) ||
            (compatible(e.input, x) && e.output != out)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back({x, out});
      rec(p + 1);
      chosen.pop_back();
    }
  };
  rec(0);
}

inline std::vector<MonotoneFn> enumerate_monotone(std::size_t k,
                                                  std::size_t bound = kDefaultEnumerationArity) {
  std::vector<MonotoneFn> out;
  for_each_monotone(k, [&](const MonotoneFn& f) { out.push_back(f); }, bound);
  return out;
}

}  // namespace pardeg
