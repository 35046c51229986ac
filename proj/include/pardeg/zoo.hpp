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

// Named functions and families: POR_i, BP, Gustave, G_i, BG_i^j, DET, ttDET,
// ntDET_n and left-strict AND, plus sum/neg expressions over them.

#pragma once

#include <cctype>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pardeg/error.hpp"
#include "pardeg/function.hpp"
#include "pardeg/lattice.hpp"

namespace pardeg::zoo {

namespace detail {

inline std::vector<TraceEntry> rows(std::initializer_list<std::pair<const char*, Tri>> rs) {
  std::vector<TraceEntry> out;
  for (const auto& [in, out_value] : rs) out.push_back({Tuple::parse(in), out_value});
  return out;
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

}  // namespace detail

inline MonotoneFn bp() {
  return MonotoneFn(3, detail::rows({{"_TF", Tri::Tt}, {"TF_", Tri::Ff}, {"F_T", Tri::Ff}}),
                    "bp");
}

// The Gustave function with rows in its customary order; same trace set as
// gustave_i(1).
inline MonotoneFn gustave() {
  return MonotoneFn(3, detail::rows({{"_TF", Tri::Tt}, {"TF_", Tri::Tt}, {"F_T", Tri::Tt}}),
                    "gustave");
}

// Row r (1-based) of the (2i+1)-ary Gustave-style matrix: bot at r, and at
// column c the value tt when (c - r) mod (2i+1) is odd, ff when even.
inline Tuple gustave_row(std::size_t i, std::size_t r) {
  const std::size_t n = 2 * i + 1;
  std::vector<Tri> v(n);
  for (std::size_t c = 1; c <= n; ++c) {
    if (c == r) v[c - 1] = Tri::Bot;
    else v[c - 1] = ((c + n - r) % n) % 2 == 1 ? Tri::Tt : Tri::Ff;
  }
  return Tuple(std::move(v));
}

// BG_i^j: the G_i inputs, rows 1..j return ff and the rest tt. j = 0 gives G_i.
inline MonotoneFn bg(std::size_t i, std::size_t j) {
  detail::require(i >= 1, "bg needs i >= 1");
  detail::require(j <= i, "bg needs j <= i");
  std::vector<TraceEntry> t;
  for (std::size_t r = 1; r <= 2 * i + 1; ++r)
    t.push_back({gustave_row(i, r), r <= j ? Tri::Ff : Tri::Tt});
  return MonotoneFn(2 * i + 1, std::move(t),
                    "bg(" + std::to_string(i) + "," + std::to_string(j) + ")");
}

inline MonotoneFn gustave_i(std::size_t i) {
  detail::require(i >= 1, "gustave_i needs i >= 1");
  return bg(i, 0).renamed("gustave_i(" + std::to_string(i) + ")");
}

// i rows of all-tt with one bot (bot moving right to left), then all-ff -> ff.
inline MonotoneFn por(std::size_t i) {
  detail::require(i >= 2, "por_i needs i >= 2");
  std::vector<TraceEntry> t;
  for (std::size_t p = i; p-- > 0;) {
    std::vector<Tri> v(i, Tri::Tt);
    v[p] = Tri::Bot;
    t.push_back({Tuple(std::move(v)), Tri::Tt});
  }
  t.push_back({Tuple(std::vector<Tri>(i, Tri::Ff)), Tri::Ff});
  return MonotoneFn(i, std::move(t), "por_i(" + std::to_string(i) + ")");
}

inline MonotoneFn det() {
  return MonotoneFn(
      2,
      detail::rows({{"T_", Tri::Tt}, {"F_", Tri::Tt}, {"_T", Tri::Tt}, {"_F", Tri::Tt}}),
      "det");
}

inline MonotoneFn ttdet() {
  return MonotoneFn(2, detail::rows({{"T_", Tri::Tt}, {"_T", Tri::Tt}}), "ttdet");
}

// tt as soon as one of the n arguments is tt.
inline MonotoneFn ntdet(std::size_t n) {
  detail::require(n >= 1, "ntdet needs n >= 1");
  std::vector<TraceEntry> t;
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<Tri> v(n, Tri::Bot);
    v[p] = Tri::Tt;
    t.push_back({Tuple(std::move(v)), Tri::Tt});
  }
  return MonotoneFn(n, std::move(t), "ntdet(" + std::to_string(n) + ")");
}

// x and y := if x then y else ff.
inline MonotoneFn land() {
  return MonotoneFn(2, detail::rows({{"F_", Tri::Ff}, {"TT", Tri::Tt}, {"TF", Tri::Ff}}),
                    "land");
}

struct CatalogEntry {
  std::string pattern;
  std::string description;
};

inline std::vector<CatalogEntry> catalog() {
  return {
      {"bp", "Berry-Plotkin function, arity 3"},
      {"gustave", "Gustave function, arity 3"},
      {"gustave_i(i)", "Gustave hierarchy G_i, i >= 1, arity 2i+1"},
      {"bg(i,j)", "Bivalued-Gustave BG_i^j, 1 <= j <= i, arity 2i+1"},
      {"por_i(i)", "parallel-or hierarchy POR_i, i >= 2, arity i"},
      {"det", "Detector, arity 2"},
      {"ttdet", "tt-Detector, arity 2"},
      {"ntdet(n)", "tt when some argument is tt, n >= 1, arity n"},
      {"land", "left-strict and, arity 2"},
      {"sum(f,g)", "f+g, arity max(k,k')+1"},
      {"neg(f)", "outputs swapped"},
  };
}

// Concrete members of every family, as used by the self-checks.
inline std::vector<MonotoneFn> instances() {
  std::vector<MonotoneFn> out{bp(), gustave(), det(), ttdet(), land()};
  for (std::size_t i = 1; i <= 4; ++i) {
    out.push_back(gustave_i(i));
    for (std::size_t j = 1; j <= i; ++j) out.push_back(bg(i, j));
  }
  for (std::size_t i = 2; i <= 6; ++i) out.push_back(por(i));
  for (std::size_t n = 1; n <= 4; ++n) out.push_back(ntdet(n));
  return out;
}

namespace detail {

class NameParser {
 public:
  explicit NameParser(std::string_view text) : text_(text) {}

  MonotoneFn parse() {
    MonotoneFn f = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing text");
    return f;
  }

 private:
  MonotoneFn expr() {
    const std::string id = ident();
    if (id == "sum") {
      expect('(');
      MonotoneFn f = expr();
      expect(',');
      MonotoneFn g = expr();
      expect(')');
      return pardeg::sum(f, g).renamed("sum(" + f.name() + "," + g.name() + ")");
    }
    if (id == "neg") {
      expect('(');
      MonotoneFn f = expr();
      expect(')');
      return pardeg::neg(f).renamed("neg(" + f.name() + ")");
    }
    if (id == "bp") return bp();
    if (id == "gustave") return gustave();
    if (id == "det") return det();
    if (id == "ttdet") return ttdet();
    if (id == "land") return land();
    if (id == "gustave_i") return gustave_i(one_number());
    if (id == "por_i") return por(one_number());
    if (id == "ntdet") return ntdet(one_number());
    if (id == "bg") {
      expect('(');
      const std::size_t i = number();
      expect(',');
      const std::size_t j = number();
      expect(')');
      require(j >= 1, "bg needs j >= 1");
      return bg(i, j);
    }
    fail("unknown function '" + id + "'");
  }

  std::size_t one_number() {
    expect('(');
    const std::size_t v = number();
    expect(')');
    return v;
  }

  std::string ident() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t number() {
    skip_space();
    const std::size_t start = pos_;
    std::size_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (v > 1000) fail("parameter too large");
      ++pos_;
    }
    if (start == pos_) fail("expected a number");
    return v;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, "zoo name '" + std::string(text_) + "' at column " +
                                           std::to_string(pos_ + 1) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Builds a function from a name such as "bg(2,1)" or "sum(bp,ttdet)".
inline MonotoneFn make(std::string_view name) { return detail::NameParser(name).parse(); }

}  // namespace pardeg::zoo
