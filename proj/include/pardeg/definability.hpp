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

// Positive definability evidence from trace mappings.
//
// A map alpha: tr(f) -> tr(g) proves f is definable from g when, for every
// set A of trace entries of f whose inputs form a non-singleton coherent set,
// (1) the inputs of alpha(A) form a non-singleton coherent set, and
// (2) entries of A with different outputs are sent to entries with different
//     outputs.
// Coherence is not closed under subsets, so every subset is inspected.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pardeg/error.hpp"
#include "pardeg/function.hpp"
#include "pardeg/lattice.hpp"
#include "pardeg/plevel.hpp"
#include "pardeg/zoo.hpp"

namespace pardeg {

inline constexpr std::size_t kMaxMappingSource = 16;

struct BMMapping {
  MonotoneFn source;
  MonotoneFn target;
  std::vector<std::size_t> map;  // source trace index -> target trace index
};

namespace detail {

struct MaskedTrace {
  std::vector<std::uint64_t> def, tt, ff;
  std::vector<Tri> out;

  explicit MaskedTrace(const MonotoneFn& f) {
    for (const TraceEntry& e : f.trace()) {
      def.push_back(e.input.defined_mask());
      tt.push_back(e.input.tt_mask());
      ff.push_back(e.input.ff_mask());
      out.push_back(e.output);
    }
  }

  bool coherent(std::uint32_t subset) const {
    CoherenceAccumulator acc;
    for (std::size_t t = 0; t < def.size(); ++t)
      if ((subset >> t) & 1) acc.add(def[t], tt[t], ff[t]);
    return acc.coherent();
  }
};

inline void require_mapping_bound(const MonotoneFn& f) {
  if (f.trace_size() > kMaxMappingSource)
    throw Error(ErrorCode::BoundExceeded, "source trace of size " +
                                              std::to_string(f.trace_size()) + " exceeds " +
                                              std::to_string(kMaxMappingSource));
}

// Non-singleton coherent subsets of tr(f), grouped by their largest index.
inline std::vector<std::vector<std::uint32_t>> coherent_subsets_by_max(const MonotoneFn& f) {
  require_mapping_bound(f);
  const MaskedTrace mt(f);
  const std::size_t n = f.trace_size();
  std::vector<std::vector<std::uint32_t>> by_max(n);
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
    if ((s & (s - 1)) == 0) continue;  // singleton
    if (!mt.coherent(s)) continue;
    std::size_t top = 31 - static_cast<std::size_t>(__builtin_clz(s));
    by_max[top].push_back(s);
  }
  return by_max;
}

// Conditions 1 and 2 for one coherent source subset under `map`.
inline bool subset_ok(std::uint32_t subset, const std::vector<std::size_t>& map,
                      const MaskedTrace& src, const MaskedTrace& dst) {
  std::uint64_t image = 0;
  for (std::size_t t = 0; t < src.def.size(); ++t)
    if ((subset >> t) & 1) image |= std::uint64_t{1} << map[t];
  if ((image & (image - 1)) == 0) return false;
  CoherenceAccumulator acc;
  for (std::size_t u = 0; u < dst.def.size(); ++u)
    if ((image >> u) & 1) acc.add(dst.def[u], dst.tt[u], dst.ff[u]);
  if (!acc.coherent()) return false;
  for (std::size_t x = 0; x < src.def.size(); ++x) {
    if (!((subset >> x) & 1)) continue;
    for (std::size_t y = x + 1; y < src.def.size(); ++y) {
      if (!((subset >> y) & 1)) continue;
      if (src.out[x] != src.out[y] && dst.out[map[x]] == dst.out[map[y]]) return false;
    }
  }
  return true;
}

}  // namespace detail

inline bool check_bm(const BMMapping& m) {
  detail::require_mapping_bound(m.source);
  if (m.map.size() != m.source.trace_size()) return false;
  if (m.target.trace_size() > 64) return false;
  for (std::size_t t : m.map)
    if (t >= m.target.trace_size()) return false;
  const detail::MaskedTrace src(m.source), dst(m.target);
  const std::size_t n = m.source.trace_size();
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
    if ((s & (s - 1)) == 0) continue;
    if (!src.coherent(s)) continue;
    if (!detail::subset_ok(s, m.map, src, dst)) return false;
  }
  return true;
}

struct BmSearchOptions {
  std::uint64_t budget = kDefaultBudget;
};

// Depth-first search over maps in lexicographic order of target indices,
// checking each coherent subset as soon as its last entry is assigned. A miss
// proves nothing: the condition is sufficient, not necessary.
inline std::optional<BMMapping> bm_search(const MonotoneFn& f, const MonotoneFn& g,
                                          const BmSearchOptions& options = {}) {
  const auto by_max = detail::coherent_subsets_by_max(f);
  if (g.trace_size() > 64)
    throw Error(ErrorCode::BoundExceeded, "target trace larger than 64 entries");
  const detail::MaskedTrace src(f), dst(g);
  const std::size_t n = f.trace_size(), m = g.trace_size();
  if (n == 0) return BMMapping{f, g, {}};
  if (m == 0) return std::nullopt;
  std::vector<std::size_t> map(n, 0);
  std::uint64_t nodes = 0;
  auto rec = [&](auto&& self, std::size_t t) -> bool {
    if (t == n) return true;
    for (std::size_t u = 0; u < m; ++u) {
      if (++nodes > options.budget)
        throw BudgetExceeded("trace-mapping search " + f.name() + " -> " + g.name(),
                             detail::saturating_pow(m, n), options.budget);
      map[t] = u;
      bool ok = true;
      for (std::uint32_t s : by_max[t])
        if (!detail::subset_ok(s, map, src, dst)) {
          ok = false;
          break;
        }
      if (ok && self(self, t + 1)) return true;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return BMMapping{f, g, map};
}

struct CofinalWitness {
  std::size_t index;  // i with G_i definable from f
  BMMapping mapping;
};

// For stable non-sequential f: i = cc(f) and a verified mapping G_i -> f onto a
// smallest coherent set of trace inputs.
inline CofinalWitness cofinal_witness(const MonotoneFn& f,
                                      std::size_t bound = kDefaultTraceBound) {
  if (!is_stable(f))
    throw Error(ErrorCode::Inapplicable, "cofinal witness needs a stable function; " +
                                             f.name() + " has compatible trace inputs");
  const auto subset = minimal_coherent_subset(f, bound);
  if (!subset)
    throw Error(ErrorCode::Inapplicable,
                "cofinal witness needs a non-sequential function; cc is infinite");
  const std::size_t i = subset->size();
  if (2 * i + 1 > kMaxMappingSource)
    throw Error(ErrorCode::BoundExceeded, "G_" + std::to_string(i) + " trace too large");
  MonotoneFn gi = zoo::gustave_i(i);
  std::vector<std::size_t> map(gi.trace_size());
  for (std::size_t r = 0; r < map.size(); ++r) map[r] = (*subset)[r % i];
  BMMapping m{std::move(gi), f, std::move(map)};
  if (!check_bm(m))
    throw Error(ErrorCode::Internal, "cofinal mapping failed verification");
  return CofinalWitness{i, std::move(m)};
}

}  // namespace pardeg
