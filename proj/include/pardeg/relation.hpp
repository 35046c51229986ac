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

// Presequentiality relations S^n_{A,B}, their finite intersections, and exact
// invariance checking with replayable counterexamples.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pardeg/error.hpp"
#include "pardeg/function.hpp"
#include "pardeg/lattice.hpp"

namespace pardeg {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

namespace detail {

inline std::uint64_t mask_of_indices(const std::vector<std::size_t>& idx) {
  std::uint64_t m = 0;
  for (std::size_t i : idx) m |= std::uint64_t{1} << (i - 1);
  return m;
}

inline std::string join_indices(const std::vector<std::size_t>& idx) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(idx[i]);
  }
  return s;
}

inline std::vector<std::size_t> iota1(std::size_t count) {
  std::vector<std::size_t> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = i + 1;
  return v;
}

}  // namespace detail

// S^n_{A,B}(d) <=> (some i in A has d_i = bot) or (all d_i, i in B, are equal).
// Index sets are 1-based.
class PreseqRel {
 public:
  PreseqRel(std::size_t n, std::vector<std::size_t> a, std::vector<std::size_t> b)
      : n_(n), a_(std::move(a)), b_(std::move(b)) {
    if (n_ == 0) throw Error(ErrorCode::InvalidArgument, "relation arity must be at least 1");
    if (n_ > kMaxArity)
      throw Error(ErrorCode::BoundExceeded, "relation arity " + std::to_string(n_));
    normalize(a_, "A");
    normalize(b_, "B");
    if (!std::includes(b_.begin(), b_.end(), a_.begin(), a_.end()))
      throw Error(ErrorCode::InvalidArgument, "A must be a subset of B");
    a_mask_ = detail::mask_of_indices(a_);
    b_mask_ = detail::mask_of_indices(b_);
  }

  // S^m_{{1..m},{1..m}}.
  static PreseqRel equal_block(std::size_t m) {
    return PreseqRel(m, detail::iota1(m), detail::iota1(m));
  }
  // S^{m+1}_{{1..m},{1..m+1}}.
  static PreseqRel strict_block(std::size_t m) {
    return PreseqRel(m + 1, detail::iota1(m), detail::iota1(m + 1));
  }

  std::size_t n() const { return n_; }
  const std::vector<std::size_t>& a() const { return a_; }
  const std::vector<std::size_t>& b() const { return b_; }
  std::uint64_t a_mask() const { return a_mask_; }
  std::uint64_t b_mask() const { return b_mask_; }

  bool member(const Tuple& d) const {
    if (d.arity() != n_)
      throw Error(ErrorCode::ArityMismatch, "relation of arity " + std::to_string(n_) +
                                                " tested on " + d.str());
    return member_masks(d.defined_mask(), d.tt_mask(), d.ff_mask());
  }

  bool member_masks(std::uint64_t defined, std::uint64_t tt, std::uint64_t ff) const {
    if ((a_mask_ & ~defined) != 0) return true;
    const std::uint64_t bd = b_mask_ & defined;
    if (bd != b_mask_) return bd == 0;  // some B entry is bot: all of B must be bot
    return (b_mask_ & tt) == b_mask_ || (b_mask_ & ff) == b_mask_;
  }

  std::string str() const {
    return "preseq n=" + std::to_string(n_) + " A=" + detail::join_indices(a_) +
           " B=" + detail::join_indices(b_);
  }

  friend bool operator==(const PreseqRel&, const PreseqRel&) = default;

 private:
  void normalize(std::vector<std::size_t>& s, const char* what) const {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw Error(ErrorCode::InvalidArgument, std::string(what) + " has a repeated index");
    for (std::size_t i : s)
      if (i < 1 || i > n_)
        throw Error(ErrorCode::InvalidArgument, std::string(what) + " index " +
                                                    std::to_string(i) + " outside 1.." +
                                                    std::to_string(n_));
  }

  std::size_t n_;
  std::vector<std::size_t> a_;
  std::vector<std::size_t> b_;
  std::uint64_t a_mask_ = 0;
  std::uint64_t b_mask_ = 0;
};

// Intersection of presequentiality relations of a common arity.
class SeqRel {
 public:
  SeqRel(const PreseqRel& r) : n_(r.n()), conjuncts_{r} {}  // NOLINT: implicit by intent

  SeqRel(std::size_t n, std::vector<PreseqRel> conjuncts)
      : n_(n), conjuncts_(std::move(conjuncts)) {
    if (conjuncts_.empty())
      throw Error(ErrorCode::InvalidArgument, "a sequentiality relation needs a conjunct");
    for (const PreseqRel& r : conjuncts_)
      if (r.n() != n_)
        throw Error(ErrorCode::ArityMismatch, "conjunct " + r.str() + " is not of arity " +
                                                  std::to_string(n_));
  }

  std::size_t n() const { return n_; }
  const std::vector<PreseqRel>& conjuncts() const { return conjuncts_; }
  bool is_preseq() const { return conjuncts_.size() == 1; }

  bool member(const Tuple& d) const {
    if (d.arity() != n_)
      throw Error(ErrorCode::ArityMismatch, "relation of arity " + std::to_string(n_) +
                                                " tested on " + d.str());
    return member_masks(d.defined_mask(), d.tt_mask(), d.ff_mask());
  }

  bool member_masks(std::uint64_t defined, std::uint64_t tt, std::uint64_t ff) const {
    for (const PreseqRel& r : conjuncts_)
      if (!r.member_masks(defined, tt, ff)) return false;
    return true;
  }

  // Member tuples of B^n in code order.
  std::vector<Tuple> members() const {
    std::vector<Tuple> out;
    for (Tuple& t : all_tuples(n_))
      if (member(t)) out.push_back(std::move(t));
    return out;
  }

  std::string str() const {
    if (is_preseq()) return conjuncts_.front().str();
    std::string s = "seqrel n=" + std::to_string(n_);
    for (const PreseqRel& r : conjuncts_)
      s += " {A=" + detail::join_indices(r.a()) + " B=" + detail::join_indices(r.b()) + "}";
    return s;
  }

  friend bool operator==(const SeqRel&, const SeqRel&) = default;

 private:
  std::size_t n_;
  std::vector<PreseqRel> conjuncts_;
};

inline bool member(const SeqRel& r, const Tuple& d) { return r.member(d); }

// Canonical representative: S^{|A|}_{|A|,|A|} when A = B, otherwise
// S^{|A|+1}_{|A|,|A|+1}. The image of A = B = {} is S^1_{{},{}}, the
// universal relation.
inline PreseqRel canonicalize(const PreseqRel& r) {
  const std::size_t a = r.a().size();
  if (r.a().size() == r.b().size()) {
    if (a == 0) return PreseqRel(1, {}, {});
    return PreseqRel::equal_block(a);
  }
  return PreseqRel::strict_block(a);
}

inline bool is_canonical(const PreseqRel& r) { return canonicalize(r) == r; }

// R = S^j_{{1,2},{1,2}} ∩ ... ∩ S^j_{{1..j},{1..j}}.
inline SeqRel chain_relation(std::size_t j) {
  if (j < 2) throw Error(ErrorCode::InvalidArgument, "chain relation needs j >= 2");
  std::vector<PreseqRel> cs;
  for (std::size_t m = 2; m <= j; ++m)
    cs.emplace_back(j, detail::iota1(m), detail::iota1(m));
  return SeqRel(j, std::move(cs));
}

// Applies a permutation p of {1..n} (given 1-based, p[i-1] = image of i).
inline PreseqRel permute(const PreseqRel& r, const std::vector<std::size_t>& p) {
  if (p.size() != r.n()) throw Error(ErrorCode::ArityMismatch, "permutation size");
  std::vector<std::size_t> a, b;
  for (std::size_t i : r.a()) a.push_back(p.at(i - 1));
  for (std::size_t i : r.b()) b.push_back(p.at(i - 1));
  return PreseqRel(r.n(), std::move(a), std::move(b));
}

// Same A and B at a different arity (must still contain B).
inline PreseqRel with_arity(const PreseqRel& r, std::size_t n) {
  return PreseqRel(n, r.a(), r.b());
}

// k tuples in R whose columnwise image under f falls outside R.
struct InvarianceWitness {
  SeqRel relation;
  std::vector<Tuple> inputs;
  Tuple output;

  // Re-checks the violation from scratch.
  bool replays(const MonotoneFn& f) const {
    if (inputs.size() != f.arity()) return false;
    for (const Tuple& row : inputs)
      if (row.arity() != relation.n() || !relation.member(row)) return false;
    std::vector<Tri> out(relation.n());
    for (std::size_t l = 0; l < relation.n(); ++l) {
      std::vector<Tri> col(f.arity());
      for (std::size_t a = 0; a < f.arity(); ++a) col[a] = inputs[a][l];
      out[l] = f.eval(Tuple(std::move(col)));
    }
    Tuple y(std::move(out));
    return y == output && !relation.member(y);
  }
};

enum class InvarianceStrategy { Auto, Exhaustive, Columnar };

inline const char* strategy_name(InvarianceStrategy s) {
  switch (s) {
    case InvarianceStrategy::Exhaustive: return "exhaustive";
    case InvarianceStrategy::Columnar: return "columnar";
    default: return "auto";
  }
}

struct InvarianceOptions {
  std::uint64_t budget = kDefaultBudget;
  InvarianceStrategy strategy = InvarianceStrategy::Auto;
};

struct InvarianceResult {
  std::optional<InvarianceWitness> witness;
  InvarianceStrategy strategy = InvarianceStrategy::Exhaustive;
  std::uint64_t states = 0;

  bool invariant() const { return !witness.has_value(); }
};

namespace detail {

inline std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  // Multiplicative formula with exact division at each step; use 128-bit
  // intermediates and saturate.
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

constexpr std::size_t kBitmapArity = 12;
constexpr std::size_t kMaxExhaustiveRelArity = 14;

// Row-enumeration search: every k-fold selection of member tuples, in
// lexicographic order of member codes, argument 1 outermost.
class ExhaustiveSearch {
 public:
  ExhaustiveSearch(const MonotoneFn& f, const SeqRel& rel)
      : f_(f), rel_(rel), k_(f.arity()), n_(rel.n()) {
    table_ = f.tabulate(std::max<std::size_t>(k_, kDefaultTableBound)).values;
    for (const Tuple& t : rel.members()) {
      std::vector<std::uint64_t> trits(n_);
      for (std::size_t l = 0; l < n_; ++l) trits[l] = static_cast<std::uint64_t>(t[l]);
      member_trits_.push_back(std::move(trits));
    }
    if (n_ <= kBitmapArity) {
      bitmap_.assign(pow3(n_), 0);
      for (std::uint64_t c = 0; c < bitmap_.size(); ++c)
        bitmap_[c] = rel.member(Tuple::decode(c, n_)) ? 1 : 0;
    }
    weights_.resize(k_);
    for (std::size_t a = 0; a < k_; ++a) weights_[a] = pow3(k_ - 1 - a);
  }

  std::uint64_t required_states() const {
    return saturating_pow(member_trits_.size(), k_);
  }

  std::optional<InvarianceWitness> run(std::uint64_t& states) {
    choice_.assign(k_, 0);
    cols_.assign((k_ + 1) * n_, 0);
    states_ = 0;
    const bool found = descend(0);
    states = states_;
    if (!found) return std::nullopt;
    std::vector<Tuple> inputs;
    for (std::size_t a = 0; a < k_; ++a) {
      std::vector<Tri> row(n_);
      for (std::size_t l = 0; l < n_; ++l)
        row[l] = static_cast<Tri>(member_trits_[choice_[a]][l]);
      inputs.emplace_back(std::move(row));
    }
    std::vector<Tri> out(n_);
    for (std::size_t l = 0; l < n_; ++l) out[l] = table_[cols_[k_ * n_ + l]];
    return InvarianceWitness{rel_, std::move(inputs), Tuple(std::move(out))};
  }

 private:
  bool descend(std::size_t a) {
    const std::uint64_t* prev = &cols_[a * n_];
    if (a == k_) {
      ++states_;
      return !output_member(prev);
    }
    std::uint64_t* next = &cols_[(a + 1) * n_];
    const std::uint64_t w = weights_[a];
    for (std::size_t m = 0; m < member_trits_.size(); ++m) {
      const auto& trits = member_trits_[m];
      for (std::size_t l = 0; l < n_; ++l) next[l] = prev[l] + trits[l] * w;
      choice_[a] = m;
      if (descend(a + 1)) return true;
    }
    return false;
  }

  bool output_member(const std::uint64_t* cols) const {
    if (!bitmap_.empty()) {
      std::uint64_t code = 0;
      for (std::size_t l = 0; l < n_; ++l)
        code = code * 3 + static_cast<std::uint64_t>(table_[cols[l]]);
      return bitmap_[code] != 0;
    }
    std::uint64_t defined = 0, tt = 0, ff = 0;
    for (std::size_t l = 0; l < n_; ++l) {
      const Tri y = table_[cols[l]];
      if (y != Tri::Bot) defined |= std::uint64_t{1} << l;
      if (y == Tri::Tt) tt |= std::uint64_t{1} << l;
      if (y == Tri::Ff) ff |= std::uint64_t{1} << l;
    }
    return rel_.member_masks(defined, tt, ff);
  }

  const MonotoneFn& f_;
  const SeqRel& rel_;
  std::size_t k_;
  std::size_t n_;
  std::vector<Tri> table_;
  std::vector<std::vector<std::uint64_t>> member_trits_;
  std::vector<std::uint8_t> bitmap_;
  std::vector<std::uint64_t> weights_;
  std::vector<std::size_t> choice_;
  std::vector<std::uint64_t> cols_;
  std::uint64_t states_ = 0;
};

// Exact search for a single presequentiality relation that works column by
// column. Any counterexample can be lowered so that every A-column is exactly
// a trace input (rows only gain bots at A-coordinates, which keeps them in
// the relation, and A-outputs are unchanged). Given those columns, rows with
// no bot among them must carry their common value at every B\A coordinate and
// all other row entries are free; the least such B\A column decides whether
// some B\A output can differ. Columns at A-coordinates are interchangeable,
// so only multisets of trace entries are visited.
class ColumnarSearch {
 public:
  ColumnarSearch(const MonotoneFn& f, const PreseqRel& rel)
      : f_(f), rel_(rel), a_count_(rel.a().size()) {}

  std::uint64_t required_states() const {
    if (a_count_ == 0) return 1;
    const std::uint64_t t = f_.trace_size();
    if (t == 0) return 1;
    return saturating_binomial(t + a_count_ - 1, a_count_);
  }

  std::optional<InvarianceWitness> run(std::uint64_t& states) {
    states = 0;
    // Rows constant on B make all B-columns identical, hence equal outputs.
    if (a_count_ == 0 || f_.trace().empty()) {
      states = 1;
      return std::nullopt;
    }
    pick_.assign(a_count_, 0);
    const bool found = descend(0, 0, CoherenceAccumulator{});
    states = states_;
    if (!found) return std::nullopt;
    return build_witness();
  }

 private:
  bool descend(std::size_t depth, std::size_t from, CoherenceAccumulator acc) {
    if (depth == a_count_) {
      ++states_;
      return violates(acc);
    }
    for (std::size_t t = from; t < f_.trace_size(); ++t) {
      CoherenceAccumulator next = acc;
      next.add(f_.trace()[t].input);
      pick_[depth] = t;
      if (descend(depth + 1, t, next)) return true;
    }
    return false;
  }

  bool violates(const CoherenceAccumulator& acc) {
    if (!acc.coherent()) return false;
    const Tri first = f_.trace()[pick_.front()].output;
    for (std::size_t t : pick_)
      if (f_.trace()[t].output != first) {
        forced_ = forced_column(acc);
        return true;
      }
    if (rel_.b().size() == rel_.a().size()) return false;
    forced_ = forced_column(acc);
    return f_.eval(*forced_) != first;
  }

  Tuple forced_column(const CoherenceAccumulator& acc) const {
    std::vector<Tri> c(f_.arity(), Tri::Bot);
    for (std::size_t i = 0; i < f_.arity(); ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if (acc.all_tt & acc.all_defined & bit) c[i] = Tri::Tt;
      if (acc.all_ff & acc.all_defined & bit) c[i] = Tri::Ff;
    }
    return Tuple(std::move(c));
  }

  InvarianceWitness build_witness() const {
    const std::size_t n = rel_.n(), k = f_.arity();
    std::vector<Tuple> columns(n, Tuple::bottom(k));
    std::size_t next_pick = 0;
    for (std::size_t l = 1; l <= n; ++l) {
      const bool in_a = (rel_.a_mask() >> (l - 1)) & 1;
      const bool in_b = (rel_.b_mask() >> (l - 1)) & 1;
      if (in_a) columns[l - 1] = f_.trace()[pick_[next_pick++]].input;
      else if (in_b) columns[l - 1] = *forced_;
    }
    std::vector<Tuple> rows;
    for (std::size_t a = 0; a < k; ++a) {
      std::vector<Tri> row(n);
      for (std::size_t l = 0; l < n; ++l) row[l] = columns[l][a];
      rows.emplace_back(std::move(row));
    }
    std::vector<Tri> out(n);
    for (std::size_t l = 0; l < n; ++l) out[l] = f_.eval(columns[l]);
    return InvarianceWitness{SeqRel(rel_), std::move(rows), Tuple(std::move(out))};
  }

  const MonotoneFn& f_;
  const PreseqRel& rel_;
  std::size_t a_count_;
  std::vector<std::size_t> pick_;
  std::optional<Tuple> forced_;
  std::uint64_t states_ = 0;
};

}  // namespace detail

// States the row-enumeration search would visit: |R|^k.
inline std::uint64_t exhaustive_states(const MonotoneFn& f, const SeqRel& rel) {
  if (rel.n() > detail::kMaxExhaustiveRelArity) return UINT64_MAX;
  std::uint64_t members = 0;
  for (const Tuple& t : all_tuples(rel.n())) members += rel.member(t) ? 1 : 0;
  return detail::saturating_pow(members, f.arity());
}

// Decides whether f is invariant under rel. Exhaustive enumerates |R|^k row
// selections; Columnar (single presequentiality relations only) enumerates
// multisets of trace entries. Auto prefers Exhaustive when it fits the budget.
inline InvarianceResult is_invariant(const MonotoneFn& f, const SeqRel& rel,
                                     const InvarianceOptions& options = {}) {
  using S = InvarianceStrategy;
  InvarianceResult result;
  const std::uint64_t exhaustive = exhaustive_states(f, rel);
  const bool exhaustive_fits = exhaustive <= options.budget && f.arity() <= 12;
  S strategy = options.strategy;
  if (strategy == S::Auto) {
    if (exhaustive_fits || !rel.is_preseq()) strategy = S::Exhaustive;
    else strategy = S::Columnar;
  }
  if (strategy == S::Columnar && !rel.is_preseq())
    throw Error(ErrorCode::InvalidArgument,
                "columnar search handles a single presequentiality relation");
  result.strategy = strategy;
  if (strategy == S::Exhaustive) {
    if (!exhaustive_fits)
      throw BudgetExceeded("exhaustive invariance check of " + rel.str(), exhaustive,
                           options.budget);
    detail::ExhaustiveSearch search(f, rel);
    result.witness = search.run(result.states);
  } else {
    const PreseqRel& r = rel.conjuncts().front();
    detail::ColumnarSearch search(f, r);
    const std::uint64_t need = search.required_states();
    if (need > options.budget)
      throw BudgetExceeded("columnar invariance check of " + rel.str(), need, options.budget);
    result.witness = search.run(result.states);
  }
  return result;
}

}  // namespace pardeg
