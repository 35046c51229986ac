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

// Monotone functions B^k -> B represented by their traces.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pardeg/error.hpp"
#include "pardeg/lattice.hpp"

namespace pardeg {

inline constexpr std::size_t kDefaultTableBound = 9;
inline constexpr std::size_t kDefaultSequentialityBound = 6;

struct TraceEntry {
  Tuple input;
  Tri output;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
  friend auto operator<=>(const TraceEntry& a, const TraceEntry& b) {
    if (auto c = a.input <=> b.input; c != 0) return c;
    return a.output <=> b.output;
  }
};

// Dense value table over B^k, indexed by Tuple::code().
struct Table {
  std::size_t arity = 0;
  std::vector<Tri> values;

  Tri at(const Tuple& x) const { return values[x.code()]; }
};

namespace detail {

inline void require_table_bound(std::size_t arity, std::size_t bound) {
  if (arity > bound)
    throw Error(ErrorCode::BoundExceeded, "table of arity " + std::to_string(arity) +
                                              " exceeds bound " + std::to_string(bound));
}

}  // namespace detail

// A first-order monotone boolean function. Construction enforces that trace
// inputs are pairwise incomparable and that compatible inputs agree on output.
// Entry order is preserved (it is the order used in files and mappings);
// equality is set equality.
class MonotoneFn {
 public:
  MonotoneFn(std::size_t arity, std::vector<TraceEntry> trace, std::string name = {})
      : arity_(arity), trace_(std::move(trace)), name_(std::move(name)) {
    validate();
  }

  std::size_t arity() const { return arity_; }
  const std::vector<TraceEntry>& trace() const { return trace_; }
  std::size_t trace_size() const { return trace_.size(); }
  const std::string& name() const { return name_; }

  MonotoneFn renamed(std::string name) const {
    MonotoneFn f = *this;
    f.name_ = std::move(name);
    return f;
  }

  Tri eval(const Tuple& x) const {
    if (x.arity() != arity_)
      throw Error(ErrorCode::ArityMismatch, "function of arity " + std::to_string(arity_) +
                                                " applied to " + x.str());
    for (const TraceEntry& e : trace_)
      if (leq(e.input, x)) return e.output;
    return Tri::Bot;
  }

  Table tabulate(std::size_t bound = kDefaultTableBound) const {
    detail::require_table_bound(arity_, bound);
    Table t{arity_, std::vector<Tri>(pow3(arity_), Tri::Bot)};
    for (std::uint64_t c = 0; c < t.values.size(); ++c)
      t.values[c] = eval(Tuple::decode(c, arity_));
    return t;
  }

  std::vector<Tuple> inputs() const {
    std::vector<Tuple> out;
    for (const TraceEntry& e : trace_) out.push_back(e.input);
    return out;
  }

  std::vector<TraceEntry> sorted_trace() const {
    std::vector<TraceEntry> s = trace_;
    std::sort(s.begin(), s.end());
    return s;
  }

  friend bool operator==(const MonotoneFn& a, const MonotoneFn& b) {
    return a.arity_ == b.arity_ && a.sorted_trace() == b.sorted_trace();
  }

 private:
  void validate() const {
    if (arity_ == 0) throw Error(ErrorCode::InvalidArgument, "arity must be at least 1");
    if (arity_ > kMaxArity)
      throw Error(ErrorCode::BoundExceeded, "arity " + std::to_string(arity_) + " too large");
    for (std::size_t i = 0; i < trace_.size(); ++i) {
      const TraceEntry& a = trace_[i];
      if (a.input.arity() != arity_)
        throw Error(ErrorCode::ArityMismatch, "row " + std::to_string(i + 1) + " (" +
                                                  a.input.str() + ") does not have arity " +
                                                  std::to_string(arity_));
      if (a.output == Tri::Bot)
        throw Error(ErrorCode::InvalidArgument,
                    "row " + std::to_string(i + 1) + " has output bot");
      for (std::size_t j = 0; j < i; ++j) {
        const TraceEntry& b = trace_[j];
        const std::string rows =
            "rows " + std::to_string(j + 1) + " and " + std::to_string(i + 1);
        if (a.input == b.input)
          throw Error(ErrorCode::DuplicateEntry, rows + " share input " + a.input.str());
        if (leq(a.input, b.input) || leq(b.input, a.input))
          throw Error(ErrorCode::ComparableRows,
                      rows + " (" + b.input.str() + ", " + a.input.str() + ") are comparable");
        if (compatible(a.input, b.input) && a.output != b.output)
          throw Error(ErrorCode::InconsistentOutputs,
                      rows + " are compatible but return different values");
      }
    }
  }

  std::size_t arity_;
  std::vector<TraceEntry> trace_;
  std::string name_;
};

inline MonotoneFn validate_trace(std::size_t arity, std::vector<TraceEntry> entries,
                                 std::string name = {}) {
  return MonotoneFn(arity, std::move(entries), std::move(name));
}

inline Tri eval(const MonotoneFn& f, const Tuple& x) { return f.eval(x); }

// Recovers the trace from a total table; throws NotMonotone naming a
// violating pair when the table is not monotone.
inline MonotoneFn trace_from_table(const Table& table, std::string name = {}) {
  const std::size_t k = table.arity;
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "arity must be at least 1");
  if (table.values.size() != pow3(k))
    throw Error(ErrorCode::InvalidArgument, "table is not total over B^" + std::to_string(k));
  std::vector<TraceEntry> trace;
  for (std::uint64_t c = 0; c < table.values.size(); ++c) {
    const Tuple x = Tuple::decode(c, k);
    const Tri fx = table.values[c];
    bool minimal = fx != Tri::Bot;
    // Checking immediate predecessors suffices: the order on B^k is generated
    // by lowering one coordinate to bot.
    for (std::size_t i = 0; i < k; ++i) {
      if (x[i] == Tri::Bot) continue;
      const Tuple below = x.with(i, Tri::Bot);
      const Tri fb = table.values[below.code()];
      if (!leq(fb, fx))
        throw Error(ErrorCode::NotMonotone, "f(" + below.str() + ") = " + to_char(fb) +
                                                " but f(" + x.str() + ") = " + to_char(fx));
      if (fb != Tri::Bot) minimal = false;
    }
    if (minimal) trace.push_back({x, fx});
  }
  return MonotoneFn(k, std::move(trace), std::move(name));
}

inline MonotoneFn neg(const MonotoneFn& f) {
  std::vector<TraceEntry> t;
  for (const TraceEntry& e : f.trace()) t.push_back({e.input, flip(e.output)});
  return MonotoneFn(f.arity(), std::move(t),
                    f.name().empty() ? std::string() : "neg(" + f.name() + ")");
}

// f+g: the wider argument is prefixed with tt, the other with l+1 ff's where
// l is the arity difference.
inline MonotoneFn sum(const MonotoneFn& f, const MonotoneFn& g) {
  const bool swap = f.arity() < g.arity();
  const MonotoneFn& wide = swap ? g : f;
  const MonotoneFn& narrow = swap ? f : g;
  const std::size_t l = wide.arity() - narrow.arity();
  std::vector<TraceEntry> t;
  for (const TraceEntry& e : wide.trace()) {
    std::vector<Tri> v{Tri::Tt};
    v.insert(v.end(), e.input.entries().begin(), e.input.entries().end());
    t.push_back({Tuple(std::move(v)), e.output});
  }
  for (const TraceEntry& e : narrow.trace()) {
    std::vector<Tri> v(l + 1, Tri::Ff);
    v.insert(v.end(), e.input.entries().begin(), e.input.entries().end());
    t.push_back({Tuple(std::move(v)), e.output});
  }
  std::string name;
  if (!f.name().empty() && !g.name().empty()) name = "sum(" + f.name() + "," + g.name() + ")";
  return MonotoneFn(wide.arity() + 1, std::move(t), std::move(name));
}

inline bool is_stable(const MonotoneFn& f) {
  const auto& tr = f.trace();
  for (std::size_t i = 0; i < tr.size(); ++i)
    for (std::size_t j = i + 1; j < tr.size(); ++j)
      if (compatible(tr[i].input, tr[j].input)) return false;
  return true;
}

inline bool is_monovalued(const MonotoneFn& f) {
  const auto& tr = f.trace();
  if (tr.empty()) return false;
  return std::all_of(tr.begin(), tr.end(),
                     [&](const TraceEntry& e) { return e.output == tr.front().output; });
}

inline bool is_bivalued(const MonotoneFn& f) {
  bool tt = false, ff = false;
  for (const TraceEntry& e : f.trace()) (e.output == Tri::Tt ? tt : ff) = true;
  return tt && ff;
}

namespace detail {

// Residual of a table after fixing argument `index` to `value`.
inline std::vector<Tri> fix_argument(const std::vector<Tri>& values, std::size_t arity,
                                     std::size_t index, Tri value) {
  // Code weight of coordinate `index` is 3^(arity-1-index).
  const std::uint64_t low = pow3(arity - 1 - index);
  const std::uint64_t high = pow3(index);
  std::vector<Tri> out;
  out.reserve(values.size() / 3);
  for (std::uint64_t h = 0; h < high; ++h)
    for (std::uint64_t l = 0; l < low; ++l)
      out.push_back(values[(h * 3 + static_cast<std::uint64_t>(value)) * low + l]);
  return out;
}

inline bool m_sequential_table(const std::vector<Tri>& values, std::size_t arity) {
  if (std::all_of(values.begin(), values.end(), [&](Tri t) { return t == values.front(); }))
    return true;
  for (std::size_t i = 0; i < arity; ++i) {
    const std::vector<Tri> at_bot = fix_argument(values, arity, i, Tri::Bot);
    if (!std::all_of(at_bot.begin(), at_bot.end(), [](Tri t) { return t == Tri::Bot; }))
      continue;
    if (m_sequential_table(fix_argument(values, arity, i, Tri::Tt), arity - 1) &&
        m_sequential_table(fix_argument(values, arity, i, Tri::Ff), arity - 1))
      return true;
  }
  return false;
}

}  // namespace detail

// Milner sequentiality, decided recursively on the value table.
inline bool is_m_sequential(const MonotoneFn& f,
                            std::size_t bound = kDefaultSequentialityBound) {
  detail::require_table_bound(f.arity(), bound);
  return detail::m_sequential_table(f.tabulate(bound).values, f.arity());
}

// Index of sequentiality tried first that succeeds, if any (1-based); nullopt
// for constant functions and non-sequential ones.
inline std::optional<std::size_t> sequentiality_index(
    const MonotoneFn& f, std::size_t bound = kDefaultSequentialityBound) {
  detail::require_table_bound(f.arity(), bound);
  const std::vector<Tri> values = f.tabulate(bound).values;
  const std::size_t k = f.arity();
  for (std::size_t i = 0; i < k; ++i) {
    const auto at_bot = detail::fix_argument(values, k, i, Tri::Bot);
    if (!std::all_of(at_bot.begin(), at_bot.end(), [](Tri t) { return t == Tri::Bot; }))
      continue;
    if (detail::m_sequential_table(detail::fix_argument(values, k, i, Tri::Tt), k - 1) &&
        detail::m_sequential_table(detail::fix_argument(values, k, i, Tri::Ff), k - 1))
      return i + 1;
  }
  return std::nullopt;
}

}  // namespace pardeg
