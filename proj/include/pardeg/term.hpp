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

// First-order applicative terms over one oracle symbol `g`, evaluated to
// monotone functions by tabulation.

#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pardeg/error.hpp"
#include "pardeg/function.hpp"
#include "pardeg/lattice.hpp"

namespace pardeg {

enum class Builtin { Ite, Not, And, Or, AllEq };

inline const char* builtin_name(Builtin b) {
  switch (b) {
    case Builtin::Ite: return "ite";
    case Builtin::Not: return "not";
    case Builtin::And: return "and";
    case Builtin::Or: return "or";
    default: return "alleq";
  }
}

inline Tri apply_builtin(Builtin b, const std::vector<Tri>& a) {
  switch (b) {
    case Builtin::Ite:
      if (a[0] == Tri::Bot) return Tri::Bot;
      return a[0] == Tri::Tt ? a[1] : a[2];
    case Builtin::Not: return flip(a[0]);
    case Builtin::And:
      if (a[0] == Tri::Bot) return Tri::Bot;
      return a[0] == Tri::Tt ? a[1] : Tri::Ff;
    case Builtin::Or:
      if (a[0] == Tri::Bot) return Tri::Bot;
      return a[0] == Tri::Tt ? Tri::Tt : a[1];
    default:
      for (Tri t : a)
        if (t == Tri::Bot || t != a.front()) return Tri::Bot;
      return a.front();
  }
}

struct Expr {
  enum class Kind { Var, Const, Oracle, Call };

  Kind kind = Kind::Const;
  std::size_t var = 0;  // 1-based, for Var
  Tri value = Tri::Bot;  // for Const
  Builtin builtin = Builtin::Ite;  // for Call
  std::vector<Expr> args;  // for Oracle and Call

  static Expr variable(std::size_t index) {
    Expr e;
    e.kind = Kind::Var;
    e.var = index;
    return e;
  }
  static Expr constant(Tri v) {
    Expr e;
    e.value = v;
    return e;
  }
  static Expr oracle(std::vector<Expr> args) {
    Expr e;
    e.kind = Kind::Oracle;
    e.args = std::move(args);
    return e;
  }
  static Expr call(Builtin b, std::vector<Expr> args) {
    Expr e;
    e.kind = Kind::Call;
    e.builtin = b;
    e.args = std::move(args);
    return e;
  }

  std::size_t oracle_applications() const {
    std::size_t n = kind == Kind::Oracle ? 1 : 0;
    for (const Expr& a : args) n += a.oracle_applications();
    return n;
  }

  std::string str() const {
    switch (kind) {
      case Kind::Var: return "x" + std::to_string(var);
      case Kind::Const:
        return value == Tri::Tt ? "tt" : value == Tri::Ff ? "ff" : "bot";
      default: {
        std::string s = "(";
        s += kind == Kind::Oracle ? "g" : builtin_name(builtin);
        for (const Expr& a : args) s += " " + a.str();
        return s + ")";
      }
    }
  }

  friend bool operator==(const Expr&, const Expr&) = default;
};

inline Expr var(std::size_t i) { return Expr::variable(i); }
inline Expr tt() { return Expr::constant(Tri::Tt); }
inline Expr ff() { return Expr::constant(Tri::Ff); }
inline Expr apply_g(std::vector<Expr> args) { return Expr::oracle(std::move(args)); }
inline Expr ite(Expr c, Expr x, Expr y) {
  return Expr::call(Builtin::Ite, {std::move(c), std::move(x), std::move(y)});
}
inline Expr lnot(Expr x) { return Expr::call(Builtin::Not, {std::move(x)}); }
inline Expr land(Expr x, Expr y) { return Expr::call(Builtin::And, {std::move(x), std::move(y)}); }
inline Expr lor(Expr x, Expr y) { return Expr::call(Builtin::Or, {std::move(x), std::move(y)}); }
inline Expr alleq(std::vector<Expr> args) { return Expr::call(Builtin::AllEq, std::move(args)); }

// lambda x1..xk. body
struct Term {
  std::size_t arity = 0;
  Expr body;

  std::string str() const { return body.str(); }
  friend bool operator==(const Term&, const Term&) = default;
};

namespace detail {

inline void check_expr(const Expr& e, std::size_t arity, std::optional<std::size_t> oracle) {
  using K = Expr::Kind;
  if (e.kind == K::Var && (e.var < 1 || e.var > arity))
    throw Error(ErrorCode::InvalidArgument, "variable x" + std::to_string(e.var) +
                                                " outside x1..x" + std::to_string(arity));
  if (e.kind == K::Oracle && oracle && e.args.size() != *oracle)
    throw Error(ErrorCode::ArityMismatch, "oracle of arity " + std::to_string(*oracle) +
                                              " applied to " + std::to_string(e.args.size()) +
                                              " arguments in " + e.str());
  if (e.kind == K::Oracle && e.args.empty())
    throw Error(ErrorCode::ArityMismatch, "oracle applied to no arguments");
  if (e.kind == K::Call) {
    std::size_t want = 0;
    switch (e.builtin) {
      case Builtin::Ite: want = 3; break;
      case Builtin::Not: want = 1; break;
      case Builtin::And:
      case Builtin::Or: want = 2; break;
      case Builtin::AllEq: want = 0; break;
    }
    if (want != 0 && e.args.size() != want)
      throw Error(ErrorCode::ArityMismatch, std::string(builtin_name(e.builtin)) + " takes " +
                                                std::to_string(want) + " arguments in " + e.str());
    if (e.builtin == Builtin::AllEq && e.args.empty())
      throw Error(ErrorCode::ArityMismatch, "alleq needs at least one argument");
  }
  for (const Expr& a : e.args) check_expr(a, arity, oracle);
}

inline Tri eval_expr(const Expr& e, const Tuple& x, const Table& oracle) {
  switch (e.kind) {
    case Expr::Kind::Var: return x[e.var - 1];
    case Expr::Kind::Const: return e.value;
    case Expr::Kind::Oracle: {
      std::uint64_t code = 0;
      for (const Expr& a : e.args) code = code * 3 + static_cast<std::uint64_t>(eval_expr(a, x, oracle));
      return oracle.values[code];
    }
    default: {
      std::vector<Tri> a;
      a.reserve(e.args.size());
      for (const Expr& sub : e.args) a.push_back(eval_expr(sub, x, oracle));
      return apply_builtin(e.builtin, a);
    }
  }
}

inline Expr substitute_vars(const Expr& e, const std::vector<Expr>& values) {
  if (e.kind == Expr::Kind::Var) return values[e.var - 1];
  Expr out = e;
  for (Expr& a : out.args) a = substitute_vars(a, values);
  return out;
}

}  // namespace detail

// Checks variable range and builtin arities; oracle arity when given.
inline void validate_term(const Term& t, std::optional<std::size_t> oracle_arity = {}) {
  if (t.arity == 0) throw Error(ErrorCode::InvalidArgument, "term arity must be at least 1");
  if (t.arity > kMaxArity)
    throw Error(ErrorCode::BoundExceeded, "term arity " + std::to_string(t.arity) + " too large");
  detail::check_expr(t.body, t.arity, oracle_arity);
}

// Evaluates t at every point of B^k with g := oracle. The result goes through
// trace_from_table, so a non-monotone outcome would raise NotMonotone.
inline MonotoneFn eval_term(const Term& t, const MonotoneFn& oracle,
                            std::size_t bound = kDefaultTableBound, std::string name = {}) {
  validate_term(t, oracle.arity());
  detail::require_table_bound(t.arity, bound);
  const Table table = oracle.tabulate(bound);
  Table out{t.arity, std::vector<Tri>(pow3(t.arity), Tri::Bot)};
  for (std::uint64_t c = 0; c < out.values.size(); ++c)
    out.values[c] = detail::eval_expr(t.body, Tuple::decode(c, t.arity), table);
  return trace_from_table(out, std::move(name));
}

// Replaces every oracle application in `outer` by `inner` instantiated at its
// arguments. The result uses inner's oracle.
inline Term substitute_oracle(const Term& outer, const Term& inner) {
  validate_term(outer, inner.arity);
  validate_term(inner);
  auto rec = [&](auto&& self, const Expr& e) -> Expr {
    if (e.kind == Expr::Kind::Var || e.kind == Expr::Kind::Const) return e;
    std::vector<Expr> args;
    for (const Expr& a : e.args) args.push_back(self(self, a));
    if (e.kind == Expr::Kind::Oracle) return detail::substitute_vars(inner.body, args);
    return Expr::call(e.builtin, std::move(args));
  };
  return Term{outer.arity, rec(rec, outer.body)};
}

// alleq over the i+1 oracle applications to i-subsets of x1..x_{i+1}, x_j left
// out of the j-th.
inline Term por_step_term(std::size_t i) {
  if (i < 2) throw Error(ErrorCode::InvalidArgument, "por_step_term needs i >= 2");
  std::vector<Expr> ts;
  for (std::size_t j = 1; j <= i + 1; ++j) {
    std::vector<Expr> args;
    for (std::size_t c = 1; c <= i + 1; ++c)
      if (c != j) args.push_back(var(c));
    ts.push_back(apply_g(std::move(args)));
  }
  return Term{i + 1, alleq(std::move(ts))};
}

// Term over POR_from computing POR_to, by chaining por_step_term.
inline Term por_chain_term(std::size_t from, std::size_t to) {
  if (from < 2 || to < from)
    throw Error(ErrorCode::InvalidArgument, "por_chain_term needs 2 <= from <= to");
  std::vector<Expr> xs;
  for (std::size_t c = 1; c <= from; ++c) xs.push_back(var(c));
  Term t{from, apply_g(std::move(xs))};
  for (std::size_t m = from; m < to; ++m) t = substitute_oracle(por_step_term(m), t);
  return t;
}

struct RotationTerms {
  Term m1;  // BG_i^{j-1} -> BG_i^j
  Term m2;  // BG_i^j -> BG_i^{j-1}
};

inline RotationTerms bg_rotation_terms(std::size_t i) {
  if (i < 1) throw Error(ErrorCode::InvalidArgument, "bg_rotation_terms needs i >= 1");
  const std::size_t n = 2 * i + 1;
  std::vector<Expr> id, left, right;
  for (std::size_t c = 1; c <= n; ++c) {
    id.push_back(var(c));
    left.push_back(var(c % n + 1));
    right.push_back(var((c + n - 2) % n + 1));
  }
  Term m1{n, ite(apply_g(id), apply_g(left), ff())};
  Term m2{n, ite(apply_g(id), tt(), apply_g(right))};
  return {std::move(m1), std::move(m2)};
}

// For monovalued f with n trace rows: g(t_1, ..., t_n) where t_j is the
// left-strict conjunction of the literals of row j, negated when f returns ff.
// Meant for the oracle ntDET_n.
inline Term mono_to_det_term(const MonotoneFn& f) {
  if (!is_monovalued(f))
    throw Error(ErrorCode::Inapplicable, f.name() + " is not monovalued");
  std::vector<Expr> ts;
  for (const TraceEntry& e : f.trace()) {
    std::optional<Expr> conj;
    for (std::size_t c = 0; c < f.arity(); ++c) {
      if (e.input[c] == Tri::Bot) continue;
      Expr lit = e.input[c] == Tri::Tt ? var(c + 1) : lnot(var(c + 1));
      conj = conj ? land(std::move(*conj), std::move(lit)) : std::move(lit);
    }
    ts.push_back(conj ? std::move(*conj) : tt());
  }
  Expr body = apply_g(std::move(ts));
  if (f.trace().front().output == Tri::Ff) body = lnot(std::move(body));
  return Term{f.arity(), std::move(body)};
}

// g(...g(g(x1,x2),x3)...,xn) over a binary oracle; g(x1,x1) when n = 1. With
// ttDET as oracle this is ntDET_n.
inline Term ntdet_fold_term(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "ntdet_fold_term needs n >= 1");
  if (n == 1) return Term{1, apply_g({var(1), var(1)})};
  Expr e = apply_g({var(1), var(2)});
  for (std::size_t c = 3; c <= n; ++c) e = apply_g({std::move(e), var(c)});
  return Term{n, std::move(e)};
}

namespace detail {

class TermParser {
 public:
  explicit TermParser(std::string_view text, std::size_t line = 1) : text_(text), line_(line) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (pos_ < text_.size()) fail("unexpected trailing text");
    return e;
  }

 private:
  Expr expr() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of term");
    if (text_[pos_] == ')') fail("unexpected ')'");
    if (text_[pos_] != '(') return atom(word());
    ++pos_;
    const std::string head = word();
    std::vector<Expr> args;
    for (;;) {
      skip();
      if (pos_ >= text_.size()) fail("missing ')'");
      if (text_[pos_] == ')') break;
      args.push_back(expr());
    }
    ++pos_;
    if (head == "g") return Expr::oracle(std::move(args));
    if (head == "ite") return Expr::call(Builtin::Ite, std::move(args));
    if (head == "not") return Expr::call(Builtin::Not, std::move(args));
    if (head == "and") return Expr::call(Builtin::And, std::move(args));
    if (head == "or") return Expr::call(Builtin::Or, std::move(args));
    if (head == "alleq") return Expr::call(Builtin::AllEq, std::move(args));
    fail("unknown function '" + head + "'");
  }

  Expr atom(const std::string& w) {
    if (w == "tt") return Expr::constant(Tri::Tt);
    if (w == "ff") return Expr::constant(Tri::Ff);
    if (w == "bot") return Expr::constant(Tri::Bot);
    if (w.size() >= 2 && w[0] == 'x' && w.size() <= 4 &&
        w.find_first_not_of("0123456789", 1) == std::string::npos)
      return Expr::variable(std::stoul(w.substr(1)));
    fail("unknown atom '" + w + "'");
  }

  std::string word() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')')
      ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        if (c == '\n') ++line_;
        ++pos_;
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

}  // namespace detail

// Parses a prefix expression such as "(alleq (g x1 x2) (g x2 x1))".
inline Expr parse_expr(std::string_view text, std::size_t first_line = 1) {
  return detail::TermParser(text, first_line).parse();
}

}  // namespace pardeg
