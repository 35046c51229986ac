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

// pardeg: command-line front end.
//
// Exit codes: 0 resolved or pass, 1 failed check or internal error,
// 2 unknown verdict, 3 input error, 4 budget exceeded.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include "pardeg/pardeg.hpp"

namespace {

using pardeg::Json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitInput = 3;
constexpr int kExitBudget = 4;

// "zoo:NAME" or a trace file path.
pardeg::MonotoneFn load_function(const std::string& source) {
  if (source.rfind("zoo:", 0) == 0) return pardeg::zoo::make(source.substr(4));
  const std::string stem = std::filesystem::path(source).stem().string();
  return pardeg::parse_trace(pardeg::read_file(source), stem);
}

std::vector<pardeg::SeqRel> load_relations(const std::vector<std::string>& files,
                                           const std::vector<std::string>& inline_rels) {
  std::vector<pardeg::SeqRel> out;
  for (const std::string& f : files)
    for (pardeg::SeqRel& r : pardeg::parse_relations(pardeg::read_file(f))) out.push_back(r);
  for (const std::string& s : inline_rels) out.push_back(pardeg::parse_relation_line(s));
  return out;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string describe(const pardeg::DirectionResult& d) {
  std::string s = pardeg::definability_name(d.status);
  if (d.certificate) {
    s += " (" + std::string(pardeg::certificate_kind_name(d.certificate->kind));
    if (const auto* sep = std::get_if<pardeg::Separation>(&d.certificate->payload))
      s += ": " + sep->relation.str();
    if (const auto* t = std::get_if<pardeg::TermCertificate>(&d.certificate->payload))
      s += ": " + t->construction;
    s += ")";
  }
  return s;
}

int run_analyze(const std::string& input) {
  print_json(pardeg::analysis_report(load_function(input)));
  return kExitOk;
}

struct CompareArgs {
  std::string left, right;
  std::uint64_t budget = pardeg::kDefaultBudget;
  std::size_t max_rel_arity = pardeg::kDefaultMaxRelArity;
  std::string cert_path;
  bool allow_terms = false;
  std::vector<std::string> relation_files;
  bool json = false;
};

int run_compare(const CompareArgs& a) {
  const pardeg::MonotoneFn f = load_function(a.left);
  const pardeg::MonotoneFn g = load_function(a.right);
  pardeg::CompareConfig config;
  config.budget = a.budget;
  config.max_rel_arity = a.max_rel_arity;
  config.allow_terms = a.allow_terms;
  config.relations = load_relations(a.relation_files, {});
  const pardeg::CompareVerdict v = pardeg::compare(f, g, config);
  if (!a.cert_path.empty()) {
    Json certs = Json::array();
    for (const auto* d : {&v.left_below_right, &v.right_below_left})
      if (d->certificate) certs.push_back(pardeg::to_json(*d->certificate));
    pardeg::write_file(a.cert_path, certs.dump(2) + "\n");
  }
  if (a.json) {
    print_json(pardeg::to_json(v, f, g));
  } else {
    std::cout << "left:    " << f.name() << "\n"
              << "right:   " << g.name() << "\n"
              << "verdict: " << pardeg::verdict_name(v.verdict) << "\n"
              << f.name() << " <= " << g.name() << ": " << describe(v.left_below_right) << "\n"
              << g.name() << " <= " << f.name() << ": " << describe(v.right_below_left) << "\n";
    for (const auto* d : {&v.left_below_right, &v.right_below_left})
      if (d->status == pardeg::Definability::Unknown)
        for (const std::string& n : d->notes) std::cout << "  note: " << n << "\n";
  }
  return pardeg::is_resolved(v.verdict) ? kExitOk : kExitUnknown;
}

struct InvarianceArgs {
  std::string input;
  std::vector<std::string> relation_files;
  std::vector<std::string> relations;
  std::uint64_t budget = pardeg::kDefaultBudget;
  std::string strategy = "auto";
  bool json = false;
};

int run_invariance(const InvarianceArgs& a) {
  const pardeg::MonotoneFn f = load_function(a.input);
  const auto rels = load_relations(a.relation_files, a.relations);
  if (rels.empty()) throw pardeg::Error(pardeg::ErrorCode::InvalidArgument, "no relation given");
  pardeg::InvarianceOptions o;
  o.budget = a.budget;
  if (a.strategy == "exhaustive") o.strategy = pardeg::InvarianceStrategy::Exhaustive;
  else if (a.strategy == "columnar") o.strategy = pardeg::InvarianceStrategy::Columnar;
  Json all = Json::array();
  for (const pardeg::SeqRel& r : rels) {
    const pardeg::InvarianceResult res = pardeg::is_invariant(f, r, o);
    if (a.json) {
      all.push_back(pardeg::to_json(res, f, r));
      continue;
    }
    std::cout << r.str() << ": " << (res.invariant() ? "invariant" : "not invariant") << "\n";
    if (res.witness) {
      for (const pardeg::Tuple& row : res.witness->inputs) std::cout << "  " << row.str() << "\n";
      std::cout << "  -> " << res.witness->output.str() << "\n";
    }
  }
  if (a.json) print_json(all);
  return kExitOk;
}

pardeg::Term template_term(const std::string& name, const std::string& arg) {
  auto number = [&] {
    if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos)
      throw pardeg::Error(pardeg::ErrorCode::InvalidArgument,
                          "template " + name + " needs a number");
    return static_cast<std::size_t>(std::stoul(arg));
  };
  if (name == "por_step") return pardeg::por_step_term(number());
  if (name == "bg_m1") return pardeg::bg_rotation_terms(number()).m1;
  if (name == "bg_m2") return pardeg::bg_rotation_terms(number()).m2;
  if (name == "ntdet_fold") return pardeg::ntdet_fold_term(number());
  if (name == "mono_to_det") return pardeg::mono_to_det_term(load_function(arg));
  throw pardeg::Error(pardeg::ErrorCode::InvalidArgument, "unknown template '" + name + "'");
}

int run_term_eval(const std::string& file, const std::string& oracle, const std::string& expect,
                  bool json) {
  const pardeg::Term t = pardeg::parse_term(pardeg::read_file(file));
  const pardeg::MonotoneFn g = load_function(oracle);
  const std::string name = std::filesystem::path(file).stem().string() + "[" + g.name() + "]";
  const pardeg::MonotoneFn f = pardeg::eval_term(t, g, pardeg::kDefaultTableBound, name);
  std::optional<bool> matches;
  if (!expect.empty()) matches = f == load_function(expect);
  if (json) {
    Json j = pardeg::analysis_report(f);
    j["trace"] = pardeg::to_json(f)["trace"];
    if (matches) j["matches_expected"] = *matches;
    print_json(j);
  } else {
    std::cout << pardeg::format_trace(f);
    if (matches) std::cout << "# matches " << expect << ": " << (*matches ? "yes" : "no") << "\n";
  }
  return matches.value_or(true) ? kExitOk : kExitFailed;
}

int run_zoo_list() {
  for (const auto& e : pardeg::zoo::catalog())
    std::cout << e.pattern << "\t" << e.description << "\n";
  return kExitOk;
}

int run_zoo_emit(const std::string& name, const std::string& out) {
  const std::string text = pardeg::format_trace(pardeg::zoo::make(name));
  if (out.empty()) std::cout << text;
  else pardeg::write_file(out, text);
  return kExitOk;
}

int run_verify(const std::string& suite, bool json) {
  const pardeg::VerifyReport r = pardeg::verify_suite(suite);
  if (json) {
    Json checks = Json::array();
    for (const pardeg::Check& c : r.checks)
      checks.push_back({{"suite", c.suite}, {"name", c.name}, {"passed", c.passed},
                        {"detail", c.detail}});
    print_json({{"suite", suite}, {"passed", r.passed()}, {"checks", checks}});
  } else {
    for (const pardeg::Check& c : r.checks) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.suite << ": " << c.name;
      if (!c.detail.empty()) std::cout << " [" << c.detail << "]";
      std::cout << "\n";
    }
    std::size_t failed = 0;
    for (const pardeg::Check& c : r.checks) failed += c.passed ? 0 : 1;
    std::cout << r.checks.size() - failed << "/" << r.checks.size() << " checks passed\n";
  }
  return r.passed() ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degrees of parallelism of first-order monotone boolean functions"};
  app.require_subcommand(1);

  std::string analyze_input;
  auto* analyze = app.add_subcommand("analyze", "JSON report: cc, bcc, p-level, classes");
  analyze->add_option("input", analyze_input, "trace file or zoo:NAME")->required();

  CompareArgs cmp;
  auto* compare = app.add_subcommand("compare", "relative definability verdict");
  compare->add_option("left", cmp.left, "trace file or zoo:NAME")->required();
  compare->add_option("right", cmp.right, "trace file or zoo:NAME")->required();
  compare->add_option("--budget", cmp.budget, "state budget per search")->capture_default_str();
  compare->add_option("--max-rel-arity", cmp.max_rel_arity, "largest chain relation tried")
      ->capture_default_str();
  compare->add_option("--emit-cert", cmp.cert_path, "write certificates as JSON");
  compare->add_flag("--allow-terms", cmp.allow_terms, "also try term constructions");
  compare->add_option("--relations", cmp.relation_files, "extra relation files");
  compare->add_flag("--json", cmp.json, "JSON output");

  InvarianceArgs inv;
  auto* invariance = app.add_subcommand("invariance", "invariance under relations");
  invariance->add_option("input", inv.input, "trace file or zoo:NAME")->required();
  invariance->add_option("relation-files", inv.relation_files, "relation files");
  invariance->add_option("-r,--relation", inv.relations, "relation given inline");
  invariance->add_option("--budget", inv.budget, "state budget")->capture_default_str();
  invariance->add_option("--strategy", inv.strategy, "auto, exhaustive or columnar")
      ->check(CLI::IsMember({"auto", "exhaustive", "columnar"}))
      ->capture_default_str();
  invariance->add_flag("--json", inv.json, "JSON output");

  auto* term = app.add_subcommand("term", "evaluate or print terms");
  term->require_subcommand(1);
  std::string term_file, term_oracle, term_expect;
  bool term_json = false;
  auto* term_eval = term->add_subcommand("eval", "evaluate a term file at an oracle");
  term_eval->add_option("file", term_file, "term file")->required();
  term_eval->add_option("oracle", term_oracle, "trace file or zoo:NAME")->required();
  term_eval->add_option("--expect", term_expect, "compare the result with this function");
  term_eval->add_flag("--json", term_json, "JSON output");
  std::string tmpl_name, tmpl_arg;
  auto* term_tmpl = term->add_subcommand(
      "template", "print a built-in term: por_step I, bg_m1 I, bg_m2 I, ntdet_fold N, "
                  "mono_to_det FUNCTION");
  term_tmpl->add_option("name", tmpl_name, "template name")->required();
  term_tmpl->add_option("arg", tmpl_arg, "parameter")->required();

  auto* zoo = app.add_subcommand("zoo", "named functions");
  zoo->require_subcommand(1);
  auto* zoo_list = zoo->add_subcommand("list", "list families");
  std::string emit_name, emit_out;
  auto* zoo_emit = zoo->add_subcommand("emit", "write a trace file");
  zoo_emit->add_option("name", emit_name, "zoo name, e.g. bg(2,1)")->required();
  zoo_emit->add_option("-o,--output", emit_out, "output path (stdout if omitted)");

  std::string suite = "all";
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "run self-check suites");
  verify->add_option("suite", suite, "all, plevels, lemmas, hierarchies or terms")
      ->check(CLI::IsMember({"all", "plevels", "lemmas", "hierarchies", "terms"}))
      ->capture_default_str();
  verify->add_flag("--json", verify_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (analyze->parsed()) return run_analyze(analyze_input);
    if (compare->parsed()) return run_compare(cmp);
    if (invariance->parsed()) return run_invariance(inv);
    if (term_eval->parsed()) return run_term_eval(term_file, term_oracle, term_expect, term_json);
    if (term_tmpl->parsed()) {
      std::cout << pardeg::format_term(template_term(tmpl_name, tmpl_arg));
      return kExitOk;
    }
    if (zoo_list->parsed()) return run_zoo_list();
    if (zoo_emit->parsed()) return run_zoo_emit(emit_name, emit_out);
    if (verify->parsed()) return run_verify(suite, verify_json);
  } catch (const pardeg::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const pardeg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == pardeg::ErrorCode::Internal ? kExitFailed : kExitInput;
  }
  return kExitInput;
}
