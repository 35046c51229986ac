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

// The flat boolean domain {bot, tt, ff} and tuples over it.

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pardeg/error.hpp"

namespace pardeg {

// Trit values double as the base-3 digit used by tuple codes.
enum class Tri : std::uint8_t { Bot = 0, Tt = 1, Ff = 2 };

inline constexpr std::size_t kMaxArity = 32;

constexpr bool leq(Tri a, Tri b) { return a == Tri::Bot || a == b; }

constexpr bool compatible(Tri a, Tri b) {
  return a == Tri::Bot || b == Tri::Bot || a == b;
}

constexpr bool is_defined(Tri a) { return a != Tri::Bot; }

constexpr Tri flip(Tri a) {
  switch (a) {
    case Tri::Tt: return Tri::Ff;
    case Tri::Ff: return Tri::Tt;
    default: return Tri::Bot;
  }
}

constexpr char to_char(Tri a) {
  switch (a) {
    case Tri::Tt: return 'T';
    case Tri::Ff: return 'F';
    default: return '_';
  }
}

inline Tri tri_from_char(char c) {
  switch (c) {
    case 'T': return Tri::Tt;
    case 'F': return Tri::Ff;
    case '_': return Tri::Bot;
    default:
      throw Error(ErrorCode::ParseError,
                  std::string("expected one of T, F, _ but got '") + c + "'");
  }
}

inline std::uint64_t pow3(std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= 3;
  return r;
}

// A tuple in B^k, k >= 1.
class Tuple {
 public:
  explicit Tuple(std::vector<Tri> entries) : entries_(std::move(entries)) {
    check_arity(entries_.size());
  }
  Tuple(std::initializer_list<Tri> entries) : Tuple(std::vector<Tri>(entries)) {}

  // All-bottom tuple of the given arity.
  static Tuple bottom(std::size_t arity) {
    return Tuple(std::vector<Tri>(arity, Tri::Bot));
  }

  // Inverse of code(); coordinate 1 is the most significant trit.
  static Tuple decode(std::uint64_t code, std::size_t arity) {
    check_arity(arity);
    std::vector<Tri> e(arity);
    for (std::size_t c = arity; c-- > 0;) {
      e[c] = static_cast<Tri>(code % 3);
      code /= 3;
    }
    return Tuple(std::move(e));
  }

  // Parses the text form, e.g. "_TF".
  static Tuple parse(std::string_view text) {
    if (text.empty()) throw Error(ErrorCode::ParseError, "empty tuple");
    std::vector<Tri> e;
    e.reserve(text.size());
    for (char c : text) e.push_back(tri_from_char(c));
    return Tuple(std::move(e));
  }

  std::size_t arity() const { return entries_.size(); }
  Tri operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Tri> entries() const { return entries_; }

  // Base-3 code; numeric order equals lexicographic order with bot < tt < ff.
  std::uint64_t code() const {
    std::uint64_t r = 0;
    for (Tri t : entries_) r = r * 3 + static_cast<std::uint64_t>(t);
    return r;
  }

  std::string str() const {
    std::string s;
    s.reserve(entries_.size());
    for (Tri t : entries_) s.push_back(to_char(t));
    return s;
  }

  Tuple with(std::size_t i, Tri value) const {
    Tuple t = *this;
    t.entries_.at(i) = value;
    return t;
  }

  // Bitmask of defined coordinates, and of coordinates holding tt / ff.
  std::uint64_t defined_mask() const { return mask_of([](Tri t) { return t != Tri::Bot; }); }
  std::uint64_t tt_mask() const { return mask_of([](Tri t) { return t == Tri::Tt; }); }
  std::uint64_t ff_mask() const { return mask_of([](Tri t) { return t == Tri::Ff; }); }

  friend bool operator==(const Tuple&, const Tuple&) = default;
  friend auto operator<=>(const Tuple& a, const Tuple& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  static void check_arity(std::size_t k) {
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "arity must be at least 1");
    if (k > kMaxArity)
      throw Error(ErrorCode::BoundExceeded,
                  "arity " + std::to_string(k) + " exceeds " + std::to_string(kMaxArity));
  }

  template <typename Pred>
  std::uint64_t mask_of(Pred pred) const {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (pred(entries_[i])) m |= std::uint64_t{1} << i;
    return m;
  }

  std::vector<Tri> entries_;
};

namespace detail {

inline void require_same_arity(const Tuple& x, const Tuple& y) {
  if (x.arity() != y.arity())
    throw Error(ErrorCode::ArityMismatch, "tuples " + x.str() + " and " + y.str() +
                                              " have different arities");
}

inline void require_uniform_arity(std::span<const Tuple> set) {
  for (const Tuple& t : set) require_same_arity(set.front(), t);
}

}  // namespace detail

inline bool leq(const Tuple& x, const Tuple& y) {
  detail::require_same_arity(x, y);
  for (std::size_t i = 0; i < x.arity(); ++i)
    if (!leq(x[i], y[i])) return false;
  return true;
}

inline bool compatible(const Tuple& x, const Tuple& y) {
  detail::require_same_arity(x, y);
  for (std::size_t i = 0; i < x.arity(); ++i)
    if (!compatible(x[i], y[i])) return false;
  return true;
}

// Pointwise least upper bound of two compatible tuples.
inline Tuple join(const Tuple& x, const Tuple& y) {
  if (!compatible(x, y))
    throw Error(ErrorCode::InvalidArgument, x.str() + " and " + y.str() + " are incompatible");
  std::vector<Tri> e(x.arity());
  for (std::size_t i = 0; i < x.arity(); ++i) e[i] = x[i] == Tri::Bot ? y[i] : x[i];
  return Tuple(std::move(e));
}

// Incremental linear-coherence state over bitmasks. A set is coherent iff at
// every coordinate defined in all members, the members agree.
struct CoherenceAccumulator {
  std::uint64_t all_defined = ~std::uint64_t{0};
  std::uint64_t all_tt = ~std::uint64_t{0};
  std::uint64_t all_ff = ~std::uint64_t{0};

  void add(std::uint64_t defined, std::uint64_t tt, std::uint64_t ff) {
    all_defined &= defined;
    all_tt &= tt;
    all_ff &= ff;
  }
  void add(const Tuple& t) { add(t.defined_mask(), t.tt_mask(), t.ff_mask()); }
  bool coherent() const { return (all_tt | all_ff) == all_defined; }
};

inline bool is_coherent(std::span<const Tuple> set) {
  if (set.empty()) return true;
  detail::require_uniform_arity(set);
  CoherenceAccumulator acc;
  for (const Tuple& t : set) acc.add(t);
  return acc.coherent();
}

inline bool is_bot_covering(std::span<const Tuple> set) {
  if (set.empty()) return false;
  detail::require_uniform_arity(set);
  std::uint64_t covered = 0;
  for (const Tuple& t : set) covered |= ~t.defined_mask();
  const std::size_t k = set.front().arity();
  const std::uint64_t all = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  return (covered & all) == all;
}

// True iff `lower` is an Egli-Milner lowerbound for `upper`.
inline bool is_egli_milner_lowerbound(std::span<const Tuple> lower,
                                      std::span<const Tuple> upper) {
  if (!lower.empty()) detail::require_uniform_arity(lower);
  if (!upper.empty()) detail::require_uniform_arity(upper);
  if (!lower.empty() && !upper.empty()) detail::require_same_arity(lower.front(), upper.front());
  for (const Tuple& x : upper) {
    bool found = false;
    for (const Tuple& y : lower) found = found || leq(y, x);
    if (!found) return false;
  }
  for (const Tuple& y : lower) {
    bool found = false;
    for (const Tuple& x : upper) found = found || leq(y, x);
    if (!found) return false;
  }
  return true;
}

// Every tuple of B^k in code order.
inline std::vector<Tuple> all_tuples(std::size_t arity) {
  std::vector<Tuple> out;
  const std::uint64_t n = pow3(arity);
  out.reserve(n);
  for (std::uint64_t c = 0; c < n; ++c) out.push_back(Tuple::decode(c, arity));
  return out;
}

}  // namespace pardeg
