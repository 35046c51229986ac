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

// Text formats for traces, relations and terms.
//
// Trace file:
//   # name: bp            (optional; other '#' lines are comments)
//   arity 3
//   _TF -> T
//
// Relation file, one per line:
//   preseq n=4 A=1,2 B=1,2,3
//   seqrel n=3 {A=1,2 B=1,2} {A=1,2,3 B=1,2,3}
//
// Term file:
//   arity 3
//   (alleq (g x1 x2) (g x2 x3) (g x1 x3))

#pragma once

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pardeg/error.hpp"
#include "pardeg/function.hpp"
#include "pardeg/lattice.hpp"
#include "pardeg/relation.hpp"
#include "pardeg/term.hpp"

namespace pardeg {

namespace detail {

[[noreturn]] inline void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  return lines;
}

inline std::size_t parse_count(const std::string& s, std::size_t line, const char* what) {
  if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string::npos)
    parse_fail(line, std::string("expected a number for ") + what + ", got '" + s + "'");
  return std::stoul(s);
}

// "arity <k>"; returns false if the line is something else.
inline bool parse_arity_line(const std::string& l, std::size_t line, std::size_t& arity) {
  if (l.rfind("arity", 0) != 0) return false;
  arity = parse_count(trim(l.substr(5)), line, "arity");
  if (arity == 0) parse_fail(line, "arity must be at least 1");
  return true;
}

}  // namespace detail

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  out << text;
}

// ---- traces ----

inline std::string format_trace(const MonotoneFn& f) {
  std::string s;
  if (!f.name().empty()) s += "# name: " + f.name() + "\n";
  s += "arity " + std::to_string(f.arity()) + "\n";
  for (const TraceEntry& e : f.trace())
    s += e.input.str() + " -> " + std::string(1, to_char(e.output)) + "\n";
  return s;
}

// Validation errors of the trace itself are rethrown unchanged.
inline MonotoneFn parse_trace(const std::string& text, std::string default_name = {}) {
  std::string name = std::move(default_name);
  std::size_t arity = 0;
  bool have_arity = false;
  std::vector<TraceEntry> entries;
  const auto lines = detail::split_lines(text);
  for (std::size_t n = 1; n <= lines.size(); ++n) {
    const std::string l = detail::trim(lines[n - 1]);
    if (l.empty()) continue;
    if (l[0] == '#') {
      const std::string body = detail::trim(std::string_view(l).substr(1));
      if (body.rfind("name:", 0) == 0) name = detail::trim(std::string_view(body).substr(5));
      continue;
    }
    if (!have_arity) {
      if (!detail::parse_arity_line(l, n, arity)) detail::parse_fail(n, "expected 'arity <k>'");
      if (arity > kMaxArity) detail::parse_fail(n, "arity " + std::to_string(arity) + " too large");
      have_arity = true;
      continue;
    }
    const auto arrow = l.find("->");
    if (arrow == std::string::npos) detail::parse_fail(n, "expected '<tuple> -> <T|F>'");
    const std::string in = detail::trim(std::string_view(l).substr(0, arrow));
    const std::string out = detail::trim(std::string_view(l).substr(arrow + 2));
    if (in.size() != arity)
      detail::parse_fail(n, "tuple '" + in + "' does not have arity " + std::to_string(arity));
    if (out != "T" && out != "F") detail::parse_fail(n, "output must be T or F, got '" + out + "'");
    Tuple x = Tuple::bottom(arity);
    try {
      x = Tuple::parse(in);
    } catch (const Error& e) {
      detail::parse_fail(n, e.what());
    }
    entries.push_back({std::move(x), out == "T" ? Tri::Tt : Tri::Ff});
  }
  if (!have_arity) detail::parse_fail(lines.size() + 1, "missing 'arity <k>' line");
  return MonotoneFn(arity, std::move(entries), std::move(name));
}

// ---- relations ----

namespace detail {

inline std::vector<std::size_t> parse_index_list(const std::string& s, std::size_t line) {
  std::vector<std::size_t> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = s.find(',', start);
    out.push_back(parse_count(s.substr(start, comma - start), line, "index"));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::vector<std::size_t> parse_keyed_list(const std::string& tok, const char* key,
                                                 std::size_t line) {
  const std::string prefix = std::string(key) + "=";
  if (tok.rfind(prefix, 0) != 0) parse_fail(line, "expected '" + prefix + "...', got '" + tok + "'");
  return parse_index_list(tok.substr(prefix.size()), line);
}

inline std::vector<std::string> words(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

template <typename F>
auto at_line(std::size_t line, F&& build) {
  try {
    return build();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    parse_fail(line, e.what());
  }
}

}  // namespace detail

inline SeqRel parse_relation_line(const std::string& raw, std::size_t line = 1) {
  const std::string l = detail::trim(raw);
  auto w = detail::words(l);
  if (w.empty()) detail::parse_fail(line, "empty relation");
  if (w[0] == "preseq") {
    if (w.size() != 4) detail::parse_fail(line, "expected 'preseq n=<n> A=<list> B=<list>'");
    const auto nv = detail::parse_keyed_list(w[1], "n", line);
    if (nv.size() != 1) detail::parse_fail(line, "n must be a single number");
    auto a = detail::parse_keyed_list(w[2], "A", line);
    auto b = detail::parse_keyed_list(w[3], "B", line);
    return detail::at_line(line, [&] { return SeqRel(PreseqRel(nv[0], a, b)); });
  }
  if (w[0] == "seqrel") {
    if (w.size() < 2) detail::parse_fail(line, "expected 'seqrel n=<n> {A=.. B=..} ...'");
    const auto nv = detail::parse_keyed_list(w[1], "n", line);
    if (nv.size() != 1) detail::parse_fail(line, "n must be a single number");
    std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> parts;
    for (std::size_t t = 2; t < w.size(); t += 2) {
      if (t + 1 >= w.size() || w[t].front() != '{' || w[t + 1].back() != '}')
        detail::parse_fail(line, "expected '{A=<list> B=<list>}'");
      auto a = detail::parse_keyed_list(w[t].substr(1), "A", line);
      auto b = detail::parse_keyed_list(w[t + 1].substr(0, w[t + 1].size() - 1), "B", line);
      parts.emplace_back(std::move(a), std::move(b));
    }
    return detail::at_line(line, [&] {
      std::vector<PreseqRel> cs;
      for (auto& [a, b] : parts) cs.emplace_back(nv[0], a, b);
      return SeqRel(nv[0], std::move(cs));
    });
  }
  detail::parse_fail(line, "expected 'preseq' or 'seqrel', got '" + w[0] + "'");
}

inline std::vector<SeqRel> parse_relations(const std::string& text) {
  std::vector<SeqRel> out;
  const auto lines = detail::split_lines(text);
  for (std::size_t n = 1; n <= lines.size(); ++n) {
    const std::string l = detail::trim(lines[n - 1]);
    if (l.empty() || l[0] == '#') continue;
    out.push_back(parse_relation_line(l, n));
  }
  return out;
}

inline std::string format_relations(const std::vector<SeqRel>& rs) {
  std::string s;
  for (const SeqRel& r : rs) s += r.str() + "\n";
  return s;
}

// ---- terms ----

inline std::string format_term(const Term& t) {
  return "arity " + std::to_string(t.arity) + "\n" + t.str() + "\n";
}

inline Term parse_term(const std::string& text) {
  const auto lines = detail::split_lines(text);
  std::size_t n = 1;
  std::size_t arity = 0;
  for (; n <= lines.size(); ++n) {
    const std::string l = detail::trim(lines[n - 1]);
    if (l.empty() || l[0] == '#') continue;
    if (!detail::parse_arity_line(l, n, arity)) detail::parse_fail(n, "expected 'arity <k>'");
    break;
  }
  if (arity == 0) detail::parse_fail(lines.size() + 1, "missing 'arity <k>' line");
  std::string rest;
  for (std::size_t m = n + 1; m <= lines.size(); ++m) rest += (m > n + 1 ? "\n" : "") + lines[m - 1];
  Term t{arity, parse_expr(rest, n + 1)};
  detail::at_line(n, [&] {
    validate_term(t);
    return 0;
  });
  return t;
}

}  // namespace pardeg
