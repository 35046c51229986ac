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

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "pardeg/plevel.hpp"
#include "pardeg/relation.hpp"
#include "pardeg/zoo.hpp"
#include "support.hpp"

namespace pardeg {
namespace {

Tuple T(const char* s) { return Tuple::parse(s); }

oracle::Rel oracle_rel(const SeqRel& r) {
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> cs;
  for (const PreseqRel& c : r.conjuncts()) cs.emplace_back(c.a(), c.b());
  return [cs](const oracle::Point& d) {
    for (const auto& [a, b] : cs)
      if (!oracle::preseq_member(d, a, b)) return false;
    return true;
  };
}

// Every PreseqRel of arity n.
std::vector<PreseqRel> all_preseq(std::size_t n) {
  std::vector<PreseqRel> out;
  for (std::uint64_t c = 0; c < pow3(n); ++c) {
    std::vector<std::size_t> a, b;
    std::uint64_t x = c;
    for (std::size_t i = 1; i <= n; ++i, x /= 3) {
      if (x % 3 >= 1) b.push_back(i);
      if (x % 3 == 2) a.push_back(i);
    }
    out.emplace_back(n, a, b);
  }
  return out;
}

bool inv(const MonotoneFn& f, const SeqRel& r,
         InvarianceStrategy s = InvarianceStrategy::Auto) {
  return is_invariant(f, r, {kDefaultBudget, s}).invariant();
}

TEST(MemberTest, Examples) {
  const PreseqRel r(2, {1}, {1, 2});
  EXPECT_TRUE(r.member(T("_T")));
  EXPECT_FALSE(r.member(T("TF")));
  EXPECT_TRUE(r.member(T("FF")));
  EXPECT_FALSE(r.member(T("T_")));
  const PreseqRel universal(3, {}, {});
  for (const Tuple& d : all_tuples(3)) EXPECT_TRUE(universal.member(d));
  EXPECT_THROW(r.member(T("T")), Error);
}

TEST(MemberTest, MatchesDefinition) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const PreseqRel& r : all_preseq(n))
      for (const Tuple& d : all_tuples(n))
        ASSERT_EQ(r.member(d), oracle::preseq_member(d.str(), r.a(), r.b())) << r.str();
}

TEST(MemberTest, SeqRelIsIntersection) {
  const SeqRel s(3, {PreseqRel(3, {1}, {1, 2}), PreseqRel(3, {2, 3}, {2, 3})});
  for (const Tuple& d : all_tuples(3))
    EXPECT_EQ(s.member(d), s.conjuncts()[0].member(d) && s.conjuncts()[1].member(d));
}

TEST(RelationTest, RejectsMalformed) {
  EXPECT_THROW(PreseqRel(0, {}, {}), Error);
  EXPECT_THROW(PreseqRel(3, {1, 2}, {1}), Error);
  EXPECT_THROW(PreseqRel(3, {}, {4}), Error);
  EXPECT_THROW(PreseqRel(3, {1, 1}, {1, 2}), Error);
  EXPECT_THROW(SeqRel(3, {}), Error);
  EXPECT_THROW(SeqRel(3, {PreseqRel(2, {}, {})}), Error);
}

TEST(InvarianceTest, Examples) {
  EXPECT_TRUE(inv(zoo::gustave(), PreseqRel(3, {1, 2}, {1, 2, 3})));
  const auto r = is_invariant(zoo::por(2), PreseqRel(3, {1, 2, 3}, {1, 2, 3}));
  ASSERT_FALSE(r.invariant());
  EXPECT_TRUE(r.witness->replays(zoo::por(2)));
  for (const MonotoneFn& f : zoo::instances())
    if (f.arity() <= 5) {
      EXPECT_TRUE(inv(f, PreseqRel(2, {}, {}))) << f.name();
    }
}

TEST(InvarianceTest, WitnessesReplayAndAreFirstInOrder) {
  for (const MonotoneFn& f : {zoo::por(2), zoo::bp(), zoo::det(), zoo::ttdet(), zoo::land()})
    for (std::size_t n = 1; n <= 3; ++n)
      for (const PreseqRel& r : all_preseq(n)) {
        const auto res = is_invariant(f, r, {kDefaultBudget, InvarianceStrategy::Exhaustive});
        const auto first =
            oracle::first_violation(support::oracle_table(f), f.arity(), n, oracle_rel(r));
        ASSERT_EQ(res.invariant(), first.empty()) << f.name() << " " << r.str();
        if (first.empty()) continue;
        ASSERT_TRUE(res.witness->replays(f));
        for (std::size_t a = 0; a < f.arity(); ++a)
          EXPECT_EQ(res.witness->inputs[a].str(), first[a]);
      }
}

TEST(InvarianceTest, ExhaustiveMatchesOracleForAllBinaryFunctions) {
  for (std::size_t k = 1; k <= 2; ++k)
    for (const oracle::Fn& table : oracle::all_monotone(k)) {
      const MonotoneFn f = support::from_oracle(table, k);
      for (std::size_t n = 1; n <= 3; ++n)
        for (const PreseqRel& r : all_preseq(n))
          ASSERT_EQ(inv(f, r, InvarianceStrategy::Exhaustive),
                    oracle::invariant(table, k, n, oracle_rel(r)))
              << r.str();
      for (std::size_t j = 2; j <= 3; ++j)
        ASSERT_EQ(inv(f, chain_relation(j)),
                  oracle::invariant(table, k, j, oracle_rel(chain_relation(j))));
    }
}

TEST(InvarianceTest, ColumnarAgreesWithExhaustive) {
  for (std::size_t k = 1; k <= 2; ++k)
    for (const MonotoneFn& f : enumerate_monotone(k))
      for (std::size_t n = 1; n <= 4; ++n)
        for (const PreseqRel& r : all_preseq(n)) {
          const auto c = is_invariant(f, r, {kDefaultBudget, InvarianceStrategy::Columnar});
          ASSERT_EQ(c.invariant(), inv(f, r, InvarianceStrategy::Exhaustive)) << r.str();
          if (!c.invariant()) {
            ASSERT_TRUE(c.witness->replays(f));
          }
        }
  for (const MonotoneFn& f : {zoo::bp(), zoo::gustave(), zoo::por(3), zoo::bg(1, 1)})
    for (std::size_t n = 1; n <= 4; ++n)
      for (const PreseqRel& r : all_preseq(n)) {
        const auto c = is_invariant(f, r, {kDefaultBudget, InvarianceStrategy::Columnar});
        ASSERT_EQ(c.invariant(), inv(f, r, InvarianceStrategy::Exhaustive))
            << f.name() << " " << r.str();
        if (!c.invariant()) {
          ASSERT_TRUE(c.witness->replays(f));
        }
      }
  EXPECT_THROW(is_invariant(zoo::bp(), chain_relation(3),
                            {kDefaultBudget, InvarianceStrategy::Columnar}),
               Error);
}

TEST(InvarianceTest, BudgetExceeded) {
  try {
    is_invariant(zoo::bp(), chain_relation(3), {10, InvarianceStrategy::Exhaustive});
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.allowed(), 10u);
    EXPECT_EQ(e.required(), exhaustive_states(zoo::bp(), chain_relation(3)));
    EXPECT_GT(e.required(), 10u);
  }
  EXPECT_THROW(is_invariant(zoo::bp(), PreseqRel(3, {1, 2}, {1, 2, 3}),
                            {1, InvarianceStrategy::Columnar}),
               BudgetExceeded);
}

TEST(CanonicalizeTest, Examples) {
  EXPECT_EQ(canonicalize(PreseqRel(5, {2, 4}, {2, 4, 5})), PreseqRel(3, {1, 2}, {1, 2, 3}));
  EXPECT_EQ(canonicalize(PreseqRel(4, {1, 3}, {1, 3})), PreseqRel(2, {1, 2}, {1, 2}));
  EXPECT_EQ(canonicalize(PreseqRel(4, {}, {})), PreseqRel(1, {}, {}));
  EXPECT_EQ(canonicalize(PreseqRel(4, {}, {2, 3})), PreseqRel(1, {}, {1}));
  for (std::size_t n = 1; n <= 4; ++n)
    for (const PreseqRel& r : all_preseq(n)) {
      const PreseqRel c = canonicalize(r);
      EXPECT_EQ(canonicalize(c), c);
      EXPECT_TRUE(is_canonical(c));
    }
}

TEST(CanonicalizeTest, PreservesInvariance) {
  std::vector<MonotoneFn> fs;
  for (const MonotoneFn& f : zoo::instances())
    if (f.arity() <= 3) fs.push_back(f);
  for (const MonotoneFn& f : fs)
    for (std::size_t n = 1; n <= 4; ++n)
      for (const PreseqRel& r : all_preseq(n))
        ASSERT_EQ(inv(f, r), inv(f, canonicalize(r))) << f.name() << " " << r.str();
}

TEST(ChainRelationTest, Examples) {
  EXPECT_EQ(chain_relation(2), SeqRel(PreseqRel(2, {1, 2}, {1, 2})));
  const SeqRel c3 = chain_relation(3);
  EXPECT_EQ(c3.n(), 3u);
  EXPECT_EQ(c3.conjuncts().size(), 2u);
  EXPECT_FALSE(c3.member(T("TTF")));
  EXPECT_TRUE(c3.conjuncts()[0].member(T("TTF")));
  EXPECT_THROW(chain_relation(1), Error);
  std::size_t count = 0;
  const auto r = oracle_rel(c3);
  for (const auto& p : oracle::points(3)) count += r(p) ? 1 : 0;
  EXPECT_EQ(c3.members().size(), count);
}

TEST(RelationPropertyTest, ClosureImplications) {
  for (const MonotoneFn& f : zoo::instances()) {
    if (f.arity() > 3) continue;
    for (std::size_t m = 1; m <= 3; ++m) {
      const bool eq_m = inv(f, PreseqRel::equal_block(m));
      if (inv(f, PreseqRel::equal_block(m + 1))) {
        EXPECT_TRUE(eq_m) << f.name();
      }
      if (inv(f, PreseqRel::strict_block(m))) {
        EXPECT_TRUE(eq_m) << f.name();
      }
      if (inv(f, PreseqRel::strict_block(m + 1))) {
        EXPECT_TRUE(inv(f, PreseqRel::strict_block(m))) << f.name();
      }
    }
  }
}

TEST(RelationPropertyTest, PaddingDoesNotMatter) {
  for (const MonotoneFn& f : zoo::instances()) {
    if (f.arity() > 3) continue;
    for (std::size_t n = 1; n <= 3; ++n)
      for (const PreseqRel& r : all_preseq(n))
        ASSERT_EQ(inv(f, r), inv(f, with_arity(r, n + 1))) << f.name() << " " << r.str();
  }
}

TEST(RelationPropertyTest, PermutationDoesNotMatter) {
  std::mt19937 rng(11);
  std::vector<MonotoneFn> fs{zoo::bp(), zoo::gustave(), zoo::por(2), zoo::por(3), zoo::det()};
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const auto rels = all_preseq(n);
    const PreseqRel& r = rels[rng() % rels.size()];
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::shuffle(p.begin(), p.end(), rng);
    const MonotoneFn& f = fs[rng() % fs.size()];
    ASSERT_EQ(inv(f, r), inv(f, permute(r, p))) << f.name() << " " << r.str();
  }
}

}  // namespace
}  // namespace pardeg
