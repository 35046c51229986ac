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

// Bridges between library values and the string-based reference oracles.

#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "oracle.hpp"
#include "pardeg/function.hpp"

namespace support {

inline oracle::Trace to_oracle(const pardeg::MonotoneFn& f) {
  oracle::Trace t;
  for (const pardeg::TraceEntry& e : f.trace())
    t.emplace_back(e.input.str(), pardeg::to_char(e.output));
  return t;
}

inline oracle::Fn oracle_table(const pardeg::MonotoneFn& f) {
  return oracle::table(to_oracle(f), f.arity());
}

inline pardeg::MonotoneFn from_oracle(const oracle::Fn& table, std::size_t k) {
  std::vector<pardeg::TraceEntry> t;
  for (const auto& [in, out] : oracle::trace_of(table))
    t.push_back({pardeg::Tuple::parse(in), out == 'T' ? pardeg::Tri::Tt : pardeg::Tri::Ff});
  return pardeg::MonotoneFn(k, std::move(t));
}

inline std::set<std::pair<std::string, char>> trace_set(const pardeg::MonotoneFn& f) {
  std::set<std::pair<std::string, char>> s;
  for (const auto& e : to_oracle(f)) s.insert(e);
  return s;
}

inline pardeg::MonotoneFn fn(std::size_t k,
                             std::initializer_list<std::pair<const char*, char>> rows,
                             std::string name = {}) {
  std::vector<pardeg::TraceEntry> t;
  for (const auto& [in, out] : rows)
    t.push_back({pardeg::Tuple::parse(in), out == 'T' ? pardeg::Tri::Tt : pardeg::Tri::Ff});
  return pardeg::MonotoneFn(k, std::move(t), std::move(name));
}

}  // namespace support
