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

// Self-check suites over the zoo: plevels, lemmas, hierarchies, terms.

#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "pardeg/compare.hpp"
#include "pardeg/definability.hpp"
#include "pardeg/function.hpp"
#include "pardeg/lattice.hpp"
#include "pardeg/plevel.hpp"
#include "pardeg/relation.hpp"
#include "pardeg/term.hpp"
#include "pardeg/zoo.hpp"

namespace pardeg {

struct Check {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<Check> checks;

  bool passed() const {
    for (const Check& c : checks)
      if (!c.passed) return false;
    return true;
  }
  void append(const VerifyReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
};

namespace detail {

class Recorder {
 public:
  explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

  // Runs body; an exception counts as a failure carrying its message.
  void check(const std::string& name, const std::function<bool(std::string&)>& body) {
    Check c{suite_, name, false, {}};
    try {
      c.passed = body(c.detail);
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    report_.checks.push_back(std::move(c));
  }

  VerifyReport take() { return std::move(report_); }

 private:
  std::string suite_;
  VerifyReport report_;
};

inline bool expect_plevel(const MonotoneFn& f, const PLevel& want, std::string& detail) {
  const PLevel got = p_level(f);
  detail = f.name() + " " + got.str();
  if (got != want) detail += " expected " + want.str();
  return got == want;
}

inline PLevel plevel(ExtNat i, ExtNat j) { return PLevel{i, j}; }
inline ExtNat nat(std::size_t v) { return ExtNat(v); }

// Tuple matrix from strings.
inline MonotoneFn from_rows(std::size_t arity, const std::vector<std::string>& rows, Tri out) {
  std::vector<TraceEntry> t;
  for (const std::string& r : rows) t.push_back({Tuple::parse(r), out});
  return MonotoneFn(arity, std::move(t));
}

}  // namespace detail

namespace zoo {

// Golden properties of each family: trace sizes, cc, bcc, stability and the
// G_i closed form against the printed small matrices.
inline VerifyReport verify_zoo_invariants() {
  pardeg::detail::Recorder r("zoo");
  using pardeg::detail::from_rows;
  r.check("gustave_i(1) matches the printed Gustave matrix", [](std::string&) {
    return gustave_i(1) == from_rows(3, {"_TF", "TF_", "F_T"}, Tri::Tt) &&
           gustave_i(1) == gustave();
  });
  r.check("gustave_i(2) matches the printed matrix", [](std::string&) {
    return gustave_i(2) ==
           from_rows(5, {"_TFTF", "F_TFT", "TF_TF", "FTF_T", "TFTF_"}, Tri::Tt);
  });
  for (std::size_t i = 1; i <= 4; ++i) {
    r.check("gustave_i(" + std::to_string(i) + ") trace size = cc = 2i+1", [i](std::string& d) {
      const MonotoneFn g = gustave_i(i);
      d = "size " + std::to_string(g.trace_size()) + " cc " + cc(g).str();
      return g.trace_size() == 2 * i + 1 && cc(g) == ExtNat(2 * i + 1) &&
             bcc(g).is_infinite() && is_monovalued(g) && is_stable(g);
    });
    for (std::size_t j = 1; j <= i; ++j)
      r.check("bg(" + std::to_string(i) + "," + std::to_string(j) + ") cc = bcc = 2i+1",
              [i, j](std::string& d) {
                const MonotoneFn f = bg(i, j);
                d = "cc " + cc(f).str() + " bcc " + bcc(f).str();
                return f.trace_size() == 2 * i + 1 && cc(f) == ExtNat(2 * i + 1) &&
                       bcc(f) == ExtNat(2 * i + 1) && is_stable(f) && is_bivalued(f);
              });
  }
  for (std::size_t i = 2; i <= 6; ++i)
    r.check("por_i(" + std::to_string(i) + ") cc = 2, bcc = i+1", [i](std::string& d) {
      const MonotoneFn f = por(i);
      d = "cc " + cc(f).str() + " bcc " + bcc(f).str();
      return f.trace_size() == i + 1 && cc(f) == ExtNat(2) && bcc(f) == ExtNat(i + 1) &&
             !is_stable(f);
    });
  r.check("bp cc = bcc = 3", [](std::string&) {
    return bp().trace_size() == 3 && cc(bp()) == ExtNat(3) && bcc(bp()) == ExtNat(3) &&
           is_stable(bp());
  });
  r.check("det and ttdet are unstable and monovalued", [](std::string&) {
    return !is_stable(det()) && !is_stable(ttdet()) && is_monovalued(det()) &&
           is_monovalued(ttdet());
  });
  r.check("det and ttdet are equiparallel by trace mappings", [](std::string&) {
    return bm_search(det(), ttdet()).has_value() && bm_search(ttdet(), det()).has_value();
  });
  return r.take();
}

}  // namespace zoo

inline VerifyReport verify_plevels() {
  using detail::nat;
  using detail::plevel;
  detail::Recorder r("plevels");
  auto golden = [&](const MonotoneFn& f, PLevel want) {
    r.check("p_level " + f.name(),
            [f, want](std::string& d) { return detail::expect_plevel(f, want, d); });
  };
  golden(zoo::bp(), plevel(nat(2), nat(2)));
  for (std::size_t i = 1; i <= 4; ++i) {
    golden(zoo::gustave_i(i), plevel(kInf, nat(2 * i)));
    for (std::size_t j = 1; j <= i; ++j) golden(zoo::bg(i, j), plevel(nat(2 * i), nat(2 * i)));
  }
  for (std::size_t i = 2; i <= 6; ++i) golden(zoo::por(i), plevel(nat(i), nat(1)));
  golden(zoo::det(), plevel(kInf, nat(1)));
  golden(zoo::ttdet(), plevel(kInf, nat(1)));
  golden(sum(zoo::bp(), zoo::ttdet()), plevel(nat(2), nat(1)));
  golden(zoo::land(), plevel(kInf, kInf));

  r.check("bg(1,1) has alias BP", [](std::string&) {
    return classify(zoo::bg(1, 1)).alias == DegreeAlias::BP;
  });
  r.check("every zoo function at (inf,1) has alias DET", [](std::string& d) {
    for (const MonotoneFn& f : zoo::instances()) {
      const ClassReport c = classify(f);
      if (c.plevel == PLevel{kInf, ExtNat(1)} && c.alias != DegreeAlias::DET) {
        d = f.name();
        return false;
      }
    }
    return true;
  });
  VerifyReport out = r.take();
  out.append(zoo::verify_zoo_invariants());
  return out;
}

namespace detail {

inline std::vector<MonotoneFn> small_zoo() {
  std::vector<MonotoneFn> out;
  for (const MonotoneFn& f : zoo::instances())
    if (f.arity() <= 3) out.push_back(f);
  out.push_back(neg(zoo::bp()));
  out.push_back(sum(zoo::ttdet(), zoo::land()));
  return out;
}

inline std::vector<PreseqRel> all_preseq(std::size_t n) {
  std::vector<PreseqRel> out;
  // Each index is outside B, in B \ A, or in A.
  for (std::uint64_t c = 0; c < pow3(n); ++c) {
    std::vector<std::size_t> a, b;
    std::uint64_t x = c;
    for (std::size_t i = 1; i <= n; ++i, x /= 3) {
      if (x % 3 >= 1) b.push_back(i);
      if (x % 3 == 2) a.push_back(i);
    }
    out.emplace_back(n, std::move(a), std::move(b));
  }
  return out;
}

inline bool invariant(const MonotoneFn& f, const PreseqRel& r) {
  InvarianceOptions o;
  o.strategy = InvarianceStrategy::Exhaustive;
  return is_invariant(f, r, o).invariant();
}

}  // namespace detail

inline VerifyReport verify_lemmas() {
  detail::Recorder r("lemmas");
  r.check("invariance matches p-level prediction on all monotone functions of arity <= 2",
          [](std::string& d) {
            std::vector<PreseqRel> rels;
            for (std::size_t m = 0; m <= 4; ++m) {
              if (m >= 1) rels.push_back(PreseqRel::equal_block(m));
              rels.push_back(PreseqRel::strict_block(m));
            }
            std::size_t checked = 0;
            for (std::size_t k = 1; k <= 2; ++k) {
              bool ok = true;
              for_each_monotone(k, [&](const MonotoneFn& f) {
                if (!ok) return;
                const PLevel p = p_level(f);
                for (const PreseqRel& rel : rels) {
                  ++checked;
                  if (detail::invariant(f, rel) != predict_invariant(p, rel)) {
                    ok = false;
                    d = rel.str();
                    return;
                  }
                }
              });
              if (!ok) return false;
            }
            d = std::to_string(checked) + " pairs";
            return true;
          });
  r.check("invariance is unchanged by canonicalization", [](std::string& d) {
    for (const MonotoneFn& f : detail::small_zoo())
      for (std::size_t n = 1; n <= 4; ++n)
        for (const PreseqRel& rel : detail::all_preseq(n))
          if (detail::invariant(f, rel) != detail::invariant(f, canonicalize(rel))) {
            d = f.name() + " " + rel.str();
            return false;
          }
    return true;
  });
  r.check("closure implications", [](std::string& d) {
    using R = PreseqRel;
    for (const MonotoneFn& f : detail::small_zoo())
      for (std::size_t m = 1; m <= 3; ++m) {
        const bool eq_m = detail::invariant(f, R::equal_block(m));
        const bool eq_m1 = detail::invariant(f, R::equal_block(m + 1));
        const bool st_m = detail::invariant(f, R::strict_block(m));
        const bool st_m1 = detail::invariant(f, R::strict_block(m + 1));
        if ((eq_m1 && !eq_m) || (st_m && !eq_m) || (st_m1 && !st_m)) {
          d = f.name() + " m=" + std::to_string(m);
          return false;
        }
      }
    return true;
  });
  r.check("sequential iff cc infinite iff p-level (inf,inf), arity <= 2", [](std::string& d) {
    std::size_t checked = 0;
    bool ok = true;
    for (std::size_t k = 1; k <= 2; ++k)
      for_each_monotone(k, [&](const MonotoneFn& f) {
        const bool seq = is_m_sequential(f);
        const PLevel p = p_level(f);
        const bool top = p.i.is_infinite() && p.j.is_infinite();
        if (seq != cc(f).is_infinite() || seq != top) ok = false;
        ++checked;
      });
    d = std::to_string(checked) + " functions";
    return ok;
  });
  const std::vector<MonotoneFn> base{zoo::bp(), zoo::gustave(), zoo::por(2),
                                     zoo::det(), zoo::ttdet(),  zoo::land()};
  for (std::size_t a = 0; a < base.size(); ++a)
    for (std::size_t b = a + 1; b < base.size(); ++b) {
      const MonotoneFn& f = base[a];
      const MonotoneFn& g = base[b];
      r.check("sum laws " + f.name() + " + " + g.name(), [f, g](std::string& d) {
        const MonotoneFn s = sum(f, g);
        const PLevel got = p_level(s);
        const PLevel want = p_level_of_sum(p_level(f), p_level(g));
        d = got.str();
        return got == want && bm_search(f, s).has_value() && bm_search(g, s).has_value();
      });
    }
  return r.take();
}

inline VerifyReport verify_hierarchies() {
  detail::Recorder r("hierarchies");
  for (std::size_t i = 1; i <= 4; ++i)
    for (std::size_t j = i + 1; j <= 4; ++j) {
      r.check("bg(" + std::to_string(i) + ",1) not below bg(" + std::to_string(j) + ",1)",
              [i, j](std::string& d) {
                auto s = find_separating_relation(zoo::bg(i, 1), zoo::bg(j, 1));
                if (s.separation) d = s.separation->relation.str();
                return s.separation && s.separation->replays();
              });
      r.check("gustave_i(" + std::to_string(i) + ") not below gustave_i(" +
                  std::to_string(j) + ")",
              [i, j](std::string& d) {
                auto s = find_separating_relation(zoo::gustave_i(i), zoo::gustave_i(j));
                if (s.separation) d = s.separation->relation.str();
                return s.separation && s.separation->replays();
              });
    }
  for (std::size_t i = 1; i <= 3; ++i)
    for (std::size_t j = i; j <= 3; ++j) {
      r.check("bg(" + std::to_string(j) + ",1) below bg(" + std::to_string(i) + ",1)",
              [i, j](std::string&) {
                auto m = bm_search(zoo::bg(j, 1), zoo::bg(i, 1));
                return m && check_bm(*m);
              });
      r.check("gustave_i(" + std::to_string(j) + ") below gustave_i(" + std::to_string(i) + ")",
              [i, j](std::string&) {
                auto m = bm_search(zoo::gustave_i(j), zoo::gustave_i(i));
                return m && check_bm(*m);
              });
    }
  r.check("chain relation separates bp+por_i(2) from bp+por_i(3)", [](std::string& d) {
    const SeqRel rel = chain_relation(3);
    const MonotoneFn keeps = sum(zoo::bp(), zoo::por(3));
    const MonotoneFn breaks = sum(zoo::bp(), zoo::por(2));
    InvarianceOptions o;
    o.strategy = InvarianceStrategy::Exhaustive;
    const InvarianceResult k = is_invariant(keeps, rel, o);
    const InvarianceResult b = is_invariant(breaks, rel, o);
    if (b.witness) d = "witness output " + b.witness->output.str();
    return k.invariant() && b.witness && b.witness->replays(breaks);
  });
  r.check("no trace mapping from por_i(3) to por_i(2)",
          [](std::string&) { return !bm_search(zoo::por(3), zoo::por(2)).has_value(); });
  r.check("compare por_i(3) por_i(2) leaves that direction unknown", [](std::string& d) {
    const CompareVerdict v = compare(zoo::por(3), zoo::por(2));
    d = verdict_name(v.verdict);
    return v.left_below_right.status == Definability::Unknown;
  });
  return r.take();
}

inline VerifyReport verify_terms() {
  detail::Recorder r("terms");
  for (std::size_t i = 2; i <= 4; ++i)
    r.check("por_step_term(" + std::to_string(i) + ") at por_i(" + std::to_string(i) + ")",
            [i](std::string&) { return eval_term(por_step_term(i), zoo::por(i)) == zoo::por(i + 1); });
  for (std::size_t i = 1; i <= 3; ++i)
    r.check("bg_rotation_terms(" + std::to_string(i) + ")", [i](std::string&) {
      const RotationTerms t = bg_rotation_terms(i);
      for (std::size_t j = 2; j <= i; ++j) {
        if (!(eval_term(t.m1, zoo::bg(i, j - 1)) == zoo::bg(i, j))) return false;
        if (!(eval_term(t.m2, zoo::bg(i, j)) == zoo::bg(i, j - 1))) return false;
      }
      eval_term(t.m1, zoo::bg(i, i));
      eval_term(t.m2, zoo::bg(i, i));
      return true;
    });
  for (std::size_t i = 1; i <= 2; ++i)
    r.check("mono_to_det_term(gustave_i(" + std::to_string(i) + "))", [i](std::string&) {
      const MonotoneFn g = zoo::gustave_i(i);
      return eval_term(mono_to_det_term(g), zoo::ntdet(2 * i + 1)) == g;
    });
  return r.take();
}

inline const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"plevels", "lemmas", "hierarchies", "terms"};
  return names;
}

inline VerifyReport verify_suite(const std::string& suite) {
  if (suite == "plevels") return verify_plevels();
  if (suite == "lemmas") return verify_lemmas();
  if (suite == "hierarchies") return verify_hierarchies();
  if (suite == "terms") return verify_terms();
  if (suite == "all") {
    VerifyReport out;
    for (const std::string& s : verify_suite_names()) out.append(verify_suite(s));
    return out;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown suite '" + suite + "'");
}

}  // namespace pardeg
