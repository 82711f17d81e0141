// prand: command-line workbench over the prand_core library.
//
// Exit codes: 0 pass, 1 property failure, 2 usage or parse error, 3 resource cap exceeded.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "prand/duality.hpp"
#include "prand/errors.hpp"
#include "prand/expression.hpp"
#include "prand/io.hpp"
#include "prand/levin_schnorr.hpp"
#include "prand/suite.hpp"
#include "prand/witness.hpp"

namespace {

using namespace prand;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Flags {
  std::string h;
  std::string measure;
  std::string rule;
  std::size_t imax = 4;
  std::int64_t cap = kDefaultExponentCap;
  std::size_t kmax = 3;
  std::size_t universe = 2;
  std::uint64_t seed = 20120118;
  std::optional<std::size_t> limit;
  std::string strategy = "runlength";
  bool serial = false;
  bool entries = false;
  bool inject_fixture = false;
  std::vector<std::string> inputs;
  std::string scale;
};

ExpressionContext context(const Flags& f) {
  ExpressionContext ctx;
  ctx.cap = f.cap;
  if (!f.h.empty()) ctx.default_h = parse_h(f.h);
  return ctx;
}

Exec exec_of(const Flags& f) { return f.serial ? Exec::serial : Exec::parallel; }

int report_exit(const CheckReport& r) {
  std::cout << r;
  return r.pass ? kExitPass : kExitFail;
}

int eval_measure(const Flags& f) {
  const PreMeasure m = parse_measure(f.measure, context(f));
  const StringSet s = io::read_string_set(f.inputs.at(0));
  std::cout << "value=" << m(s).str() << "\n";
  return kExitPass;
}

int rule_member(const Flags& f) {
  const Rule r = parse_rule(f.rule, context(f));
  const FiniteComplexity c = io::read_complexity(f.inputs.at(0));
  std::cout << "member=" << (r(c) ? "true" : "false") << " rule=" << r.describe() << " pairs=" << c.size() << "\n";
  return kExitPass;
}

int sqrt_of_measure(const Flags& f) {
  const PreMeasure m = parse_measure(f.measure, context(f));
  const FiniteComplexity c = io::read_complexity(f.inputs.at(0));
  std::cout << "member=" << (sqrt_rule_member(m, c) ? "true" : "false") << " rule=msqrt(" << m.describe()
            << ")\n";
  return kExitPass;
}

int sqrt_of_rule(const Flags& f) {
  const Rule r = parse_rule(f.rule, context(f));
  const StringSet s = io::read_string_set(f.inputs.at(0));
  const SqrtValue v = sqrt_premeasure_eval(r, s, f.cap);
  std::cout << "value=" << v.value.str() << " cap_hit=" << (v.cap_hit ? "true" : "false") << "\n";
  for (std::size_t i = 0; i < v.blocks.size(); ++i) {
    std::cout << "block " << to_string(v.blocks[i]) << " e_max=" << v.exponents[i] << "\n";
  }
  return kExitPass;
}

int dual_check(const Flags& f) {
  const ExpressionContext ctx = context(f);
  const PreMeasure m = parse_measure(f.measure, ctx);
  const Rule r = parse_rule(f.rule, ctx);
  return report_exit(check_dual_pair(m, r, universe(f.universe), f.kmax, 2, f.cap, exec_of(f)));
}

int prop_suite(const Flags& f) {
  SuiteOptions o;
  o.scale = f.scale;
  o.exec = exec_of(f);
  o.seed = f.seed;
  o.cap = f.cap;
  o.inject_fixture = f.inject_fixture;
  const SuiteResult r = run_suite(o, std::cout);
  std::size_t failed = 0;
  for (const auto& rep : r.reports) failed += rep.pass ? 0 : 1;
  std::cout << (r.pass() ? "PASS" : "FAIL") << " prop-suite scale=" << f.scale << " checks=" << r.reports.size()
            << " failed=" << failed << "\n";
  return r.pass() ? kExitPass : kExitFail;
}

int to_tests(const Flags& f) {
  std::cout << io::format_test_family(tests_from_witness(io::read_complexity(f.inputs.at(0)), f.imax));
  return kExitPass;
}

int to_witness(const Flags& f) {
  std::cout << io::format_complexity(witness_from_tests(io::read_test_family(f.inputs.at(0))));
  return kExitPass;
}

int merge_tests(const Flags& f) {
  std::vector<TestFamily> tests;
  for (const auto& p : f.inputs) tests.push_back(io::read_test_family(p));
  std::cout << io::format_test_family(merge_universal(tests, f.imax));
  return kExitPass;
}

int verify_test_cmd(const Flags& f) {
  return report_exit(verify_test(parse_measure(f.measure, context(f)), io::read_test_family(f.inputs.at(0))));
}

int verify_witness_cmd(const Flags& f) {
  return report_exit(verify_witness(parse_measure(f.measure, context(f)), io::read_complexity(f.inputs.at(0))));
}

int profile(const Flags& f) {
  const BinaryString x = io::read_bitstream(f.inputs.at(0), f.limit);
  const FiniteComplexity r = io::read_complexity(f.inputs.at(1));
  const DeficiencyProfile p = deficiency_profile(x, r);
  std::size_t defined = 0;
  for (const auto& e : p.entries) defined += e.is_finite() ? 1 : 0;
  std::cout << "length=" << x.size() << " defined=" << defined << " max_deficiency=" << p.max_finite.str()
            << " tail_min=" << p.tail_min.str() << "\n";
  if (f.entries) {
    for (std::size_t n = 1; n <= p.entries.size(); ++n) {
      if (p.entries[n - 1].is_finite()) std::cout << n << " " << p.entries[n - 1].str() << "\n";
    }
  }
  return kExitPass;
}

int gen_witness(const Flags& f) {
  const BinaryString x = io::read_bitstream(f.inputs.at(0), f.limit);
  std::cout << io::format_complexity(generate_witness(x, WitnessGenerator::parse(f.strategy)));
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prand: exact-arithmetic workbench for pre-measures, complexity rules and their duality"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Flags f;

  auto add_h = [&](CLI::App* c) { c->add_option("--h", f.h, "default weight: len | scaled:p/q | table:path"); };
  auto add_measure = [&](CLI::App* c) { c->add_option("--measure", f.measure, "measure expression")->required(); };
  auto add_rule = [&](CLI::App* c) { c->add_option("--rule", f.rule, "rule expression")->required(); };
  auto add_cap = [&](CLI::App* c) { c->add_option("--cap", f.cap, "exponent search cap")->capture_default_str(); };
  auto add_serial = [&](CLI::App* c) { c->add_flag("--serial", f.serial, "run sweeps on the serial reference path"); };
  auto add_inputs = [&](CLI::App* c, const std::string& what, int n) {
    c->add_option("inputs", f.inputs, what)->required()->expected(n)->check(CLI::ExistingFile);
  };

  struct Sub {
    CLI::App* app;
    int (*run)(const Flags&);
  };
  std::vector<Sub> subs;

  auto* c = app.add_subcommand("eval-measure", "evaluate a measure on a string-set file");
  add_measure(c), add_h(c), add_cap(c), add_inputs(c, "string-set file", 1);
  subs.push_back({c, eval_measure});

  c = app.add_subcommand("rule-member", "decide membership of a complexity file in a rule");
  add_rule(c), add_h(c), add_cap(c), add_inputs(c, "complexity file", 1);
  subs.push_back({c, rule_member});

  c = app.add_subcommand("sqrt-of-measure", "decide membership of a complexity file in msqrt(measure)");
  add_measure(c), add_h(c), add_cap(c), add_inputs(c, "complexity file", 1);
  subs.push_back({c, sqrt_of_measure});

  c = app.add_subcommand("sqrt-of-rule", "evaluate rsqrt(rule) on a string-set file");
  add_rule(c), add_h(c), add_cap(c), add_inputs(c, "string-set file", 1);
  subs.push_back({c, sqrt_of_rule});

  c = app.add_subcommand("dual-check", "ratio bounds between a measure and rsqrt(rule)");
  add_measure(c), add_rule(c), add_h(c), add_cap(c), add_serial(c);
  c->add_option("--universe", f.universe, "strings of length <= L")->capture_default_str();
  c->add_option("--kmax", f.kmax, "largest tested set size")->capture_default_str();
  subs.push_back({c, dual_check});

  c = app.add_subcommand("prop-suite", "run every property check at a scale");
  c->add_option("scale", f.scale, "tiny | small")->required()->check(CLI::IsMember({"tiny", "small"}));
  c->add_option("--seed", f.seed, "seed for sampled checks")->capture_default_str();
  c->add_flag("--inject-fixture", f.inject_fixture)->group("");
  add_cap(c), add_serial(c);
  subs.push_back({c, prop_suite});

  c = app.add_subcommand("to-tests", "test family U_i = {s : K(s) <= |s| - i} from a complexity file");
  c->add_option("--imax", f.imax, "highest level")->capture_default_str();
  add_inputs(c, "complexity file", 1);
  subs.push_back({c, to_tests});

  c = app.add_subcommand("to-witness", "complexity {(s, |s| - i) : s in U_2i} from a test-family file");
  add_inputs(c, "test-family file", 1);
  subs.push_back({c, to_witness});

  c = app.add_subcommand("merge-tests", "universal merge of test-family files");
  c->add_option("--imax", f.imax, "highest level")->capture_default_str();
  c->add_option("inputs", f.inputs, "test-family files")->check(CLI::ExistingFile);
  subs.push_back({c, merge_tests});

  c = app.add_subcommand("verify-test", "check m(U_i) <= 2^-i at every level");
  add_measure(c), add_h(c), add_cap(c), add_inputs(c, "test-family file", 1);
  subs.push_back({c, verify_test_cmd});

  c = app.add_subcommand("verify-witness", "check a complexity file lies in msqrt(measure)");
  add_measure(c), add_h(c), add_cap(c), add_inputs(c, "complexity file", 1);
  subs.push_back({c, verify_witness_cmd});

  c = app.add_subcommand("profile", "deficiency profile n - K(X|n) of a bitstream against a complexity file");
  c->add_option("--limit", f.limit, "truncate the bitstream");
  c->add_flag("--entries", f.entries, "print every defined entry");
  add_inputs(c, "bitstream file, complexity file", 2);
  subs.push_back({c, profile});

  c = app.add_subcommand("gen-witness", "complexity pairs for power-of-two prefixes of a bitstream");
  c->add_option("--limit", f.limit, "truncate the bitstream");
  c->add_option("--strategy", f.strategy, "runlength | blockcode:<b>")->capture_default_str();
  add_inputs(c, "bitstream file", 1);
  subs.push_back({c, gen_witness});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    for (const auto& s : subs) {
      if (s.app->parsed()) return s.run(f);
    }
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const BoundedUniverseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
