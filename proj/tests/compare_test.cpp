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

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "pardeg/compare.hpp"
#include "pardeg/report.hpp"
#include "pardeg/zoo.hpp"

namespace pardeg {
namespace {

std::vector<std::string> keys(const Json& j) {
  std::vector<std::string> out;
  for (const auto& [k, v] : j.items()) out.push_back(k);
  return out;
}

TEST(SeparationTest, Examples) {
  const auto g = find_separating_relation(zoo::gustave_i(1), zoo::gustave_i(2));
  ASSERT_TRUE(g.separation.has_value());
  EXPECT_EQ(g.separation->relation, SeqRel(PreseqRel(4, {1, 2, 3}, {1, 2, 3, 4})));
  EXPECT_TRUE(g.separation->replays());

  for (const MonotoneFn& f : {zoo::bp(), zoo::gustave(), zoo::por(3), zoo::ttdet()})
    EXPECT_FALSE(find_separating_relation(f, f).separation.has_value()) << f.name();

  const MonotoneFn bp_por2 = sum(zoo::bp(), zoo::por(2));
  const MonotoneFn bp_por3 = sum(zoo::bp(), zoo::por(3));
  const auto c = find_separating_relation(bp_por2, bp_por3);
  ASSERT_TRUE(c.separation.has_value());
  EXPECT_EQ(c.separation->relation, chain_relation(3));
  EXPECT_TRUE(c.separation->replays());
  EXPECT_TRUE(is_invariant(bp_por2, chain_relation(2)).invariant());
}

TEST(SeparationTest, SkipsOverBudgetChecks) {
  SeparationConfig cfg;
  cfg.budget = 1;
  const auto s = find_separating_relation(zoo::bp(), zoo::gustave(), cfg);
  EXPECT_FALSE(s.separation.has_value());
  EXPECT_FALSE(s.skipped.empty());
}

TEST(SeparationTest, UsesExtraRelations) {
  const MonotoneFn bp_por2 = sum(zoo::bp(), zoo::por(2));
  const MonotoneFn bp_por3 = sum(zoo::bp(), zoo::por(3));
  const SeqRel shuffled(3, {PreseqRel(3, {2, 3}, {2, 3}), PreseqRel(3, {1, 2, 3}, {1, 2, 3})});
  SeparationConfig cfg;
  cfg.max_rel_arity = 2;
  EXPECT_FALSE(find_separating_relation(bp_por2, bp_por3, cfg).separation.has_value());
  cfg.extra = {shuffled};
  const auto s = find_separating_relation(bp_por2, bp_por3, cfg);
  ASSERT_TRUE(s.separation.has_value());
  EXPECT_EQ(s.separation->relation, shuffled);
  EXPECT_TRUE(s.separation->replays());
}

TEST(CompareTest, Examples) {
  EXPECT_EQ(compare(zoo::bg(2, 1), zoo::bg(1, 1)).verdict, Verdict::LeftBelowStrict);
  EXPECT_EQ(compare(zoo::gustave_i(1), zoo::bg(1, 1)).verdict, Verdict::LeftBelowStrict);
  EXPECT_EQ(compare(zoo::gustave_i(1), zoo::ttdet()).verdict, Verdict::LeftBelowStrict);
  EXPECT_EQ(compare(zoo::ttdet(), zoo::gustave_i(1)).verdict, Verdict::RightBelowStrict);
  EXPECT_EQ(compare(zoo::det(), zoo::ttdet()).verdict, Verdict::Equiparallel);
  for (const MonotoneFn& f : {zoo::bp(), zoo::por(2), zoo::gustave_i(2), zoo::land()})
    EXPECT_EQ(compare(f, f).verdict, Verdict::Equiparallel) << f.name();
  EXPECT_EQ(compare(zoo::bp(), zoo::por(3)).verdict, Verdict::Incomparable);
}

TEST(CompareTest, CertificatesReplay) {
  const CompareVerdict v = compare(zoo::bg(2, 1), zoo::bg(1, 1));
  ASSERT_TRUE(v.left_below_right.certificate.has_value());
  ASSERT_TRUE(v.right_below_left.certificate.has_value());
  EXPECT_EQ(v.left_below_right.certificate->kind, CertificateKind::BmMapping);
  EXPECT_EQ(v.right_below_left.certificate->kind, CertificateKind::Separation);
  EXPECT_TRUE(v.left_below_right.certificate->verify());
  EXPECT_TRUE(v.right_below_left.certificate->verify());
  EXPECT_EQ(v.right_below_left.certificate->source(), zoo::bg(1, 1));
}

TEST(CompareTest, PorNeedsTerms) {
  const CompareVerdict plain = compare(zoo::por(3), zoo::por(2));
  EXPECT_EQ(plain.left_below_right.status, Definability::Unknown);
  EXPECT_EQ(plain.right_below_left.status, Definability::No);
  EXPECT_FALSE(is_resolved(plain.verdict));
  EXPECT_FALSE(plain.left_below_right.notes.empty());

  CompareConfig cfg;
  cfg.allow_terms = true;
  const CompareVerdict with_terms = compare(zoo::por(3), zoo::por(2), cfg);
  EXPECT_EQ(with_terms.verdict, Verdict::LeftBelowStrict);
  ASSERT_TRUE(with_terms.left_below_right.certificate.has_value());
  EXPECT_EQ(with_terms.left_below_right.certificate->kind, CertificateKind::Term);
  EXPECT_TRUE(with_terms.left_below_right.certificate->verify());
}

TEST(CompareTest, TermTemplates) {
  for (std::size_t j = 2; j <= 4; ++j)
    for (std::size_t i = j; i <= 5; ++i) {
      const auto t = find_term_certificate(zoo::por(i), zoo::por(j));
      ASSERT_TRUE(t.has_value()) << i << " " << j;
      EXPECT_TRUE(t->replays());
    }
  const auto rot = find_term_certificate(zoo::bg(3, 3), zoo::bg(3, 1));
  ASSERT_TRUE(rot.has_value());
  EXPECT_TRUE(rot->replays());
  const auto mono = find_term_certificate(zoo::gustave_i(2), zoo::ntdet(5));
  ASSERT_TRUE(mono.has_value());
  EXPECT_TRUE(mono->replays());
  const auto viatt = find_term_certificate(zoo::gustave_i(1), zoo::ttdet());
  ASSERT_TRUE(viatt.has_value());
  EXPECT_TRUE(viatt->replays());
  EXPECT_FALSE(find_term_certificate(zoo::bp(), zoo::ttdet()).has_value());
}

TEST(CompareTest, BudgetDegradesToUnknown) {
  CompareConfig cfg;
  cfg.budget = 1;
  const CompareVerdict v = compare(zoo::bg(2, 1), zoo::bg(1, 1), cfg);
  EXPECT_EQ(v.verdict, Verdict::Unknown);
}

TEST(ReportTest, AnalysisShape) {
  const Json j = analysis_report(zoo::ttdet());
  EXPECT_EQ(keys(j), (std::vector<std::string>{"name", "arity", "trace_size", "cc", "bcc",
                                               "plevel", "classes", "degree_alias"}));
  EXPECT_EQ(j["plevel"], Json::parse(R"(["inf", 1])"));
  EXPECT_EQ(j["degree_alias"], "DET");
  EXPECT_EQ(analysis_report(zoo::bp())["plevel"], Json::parse("[2, 2]"));
}

TEST(ReportTest, CertificateShape) {
  const CompareVerdict v = compare(zoo::bg(2, 1), zoo::bg(1, 1));
  for (const DirectionResult* d : {&v.left_below_right, &v.right_below_left}) {
    const Json c = to_json(*d->certificate);
    EXPECT_EQ(keys(c), (std::vector<std::string>{"kind", "source", "target", "payload", "verified"}));
    EXPECT_EQ(c["verified"], true);
    EXPECT_EQ(keys(c["source"]), (std::vector<std::string>{"name", "arity", "trace"}));
  }
  EXPECT_EQ(to_json(*v.left_below_right.certificate)["kind"], "bm_mapping");
  const Json sep = to_json(*v.right_below_left.certificate);
  EXPECT_EQ(sep["kind"], "separation");
  EXPECT_TRUE(sep["payload"].contains("witness"));
  const Json whole = to_json(v, zoo::bg(2, 1), zoo::bg(1, 1));
  EXPECT_EQ(whole["verdict"], "left_below_strict");
}

}  // namespace
}  // namespace pardeg
