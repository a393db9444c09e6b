// Command-line front end: validate and project models, build and render
// test suites (full and spinal), run them against model-backed or external
// implementations, check orthogonality, and drive randomized verification.
//
// Exit codes: 0 success or Pass verdict, 1 Fail verdict / not orthogonal /
// refuted property, 2 usage error, 3 invalid model or formula.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "ftskit/adapter.hh"
#include "ftskit/dot.hh"
#include "ftskit/harness.hh"
#include "ftskit/text.hh"

using namespace ftskit;

namespace {

std::shared_ptr<const Iofts> load(const std::string& path) {
  return std::make_shared<const Iofts>(load_model_from_file(path));
}

const ProductConfig& product_by_name(const Iofts& m, const std::string& name) {
  for (const ProductConfig& p : m.products) {
    if (p.name == name) return p;
  }
  throw Error("model '" + m.name + "' has no product named '" + name + "'");
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

std::string render_trace(const Trace& t) {
  return t.empty() ? "()" : "(" + trace_to_string(t) + ")";
}

std::string render_suite(const TestSuite& suite) {
  std::string out;
  for (const auto& [trace, node] : suite.nodes()) {
    out += "node " + render_trace(trace) + " X={";
    for (std::size_t i = 0; i < node.x.size(); ++i) {
      if (i != 0) out += ",";
      out += node.x[i];
    }
    out += "}\n";
    for (const auto& [action, targets] : node.edges) {
      std::string dests;
      if (targets.inner) dests += render_trace(trace.extended(action));
      if (targets.pass) dests += std::string(dests.empty() ? "" : ", ") + "pass";
      if (targets.fail) dests += std::string(dests.empty() ? "" : ", ") + "fail";
      out += "  " + action.name + " -> " + dests + "\n";
    }
  }
  return out;
}

int cmd_validate(const std::string& model_path) {
  const Iofts m = load_model_from_file(model_path);
  std::cout << "ok: " << m.name << ": " << m.states.size() << " states, "
            << m.transitions.size() << " transitions, " << m.products.size() << " products\n";
  return 0;
}

int cmd_project(const std::string& model_path, const std::string& formula_text) {
  const std::shared_ptr<const Iofts> base = load(model_path);
  const FeatureSpec spec = project(base, parse_formula(formula_text, base->features));
  std::cout << print_spec(spec);
  return 0;
}

int cmd_suite(const std::string& model_path, const std::string& formula_text, int depth,
              const std::string& dot_path) {
  const std::shared_ptr<const Iofts> base = load(model_path);
  const FeatureSpec spec = project(base, parse_formula(formula_text, base->features));
  const TestSuite suite = build_suite(spec, depth);
  std::cout << "suite of " << base->name << " under " << spec.phi().to_string() << ", depth "
            << depth << ": " << suite.nodes().size() << " inner states\n";
  std::cout << render_suite(suite);
  if (!dot_path.empty()) write_file(dot_path, to_dot(suite));
  return 0;
}

int cmd_testcases(const std::string& model_path, const std::string& formula_text, int depth,
                  std::size_t limit) {
  const std::shared_ptr<const Iofts> base = load(model_path);
  const FeatureSpec spec = project(base, parse_formula(formula_text, base->features));
  const TestSuite suite = build_suite(spec, depth);
  const std::vector<TestCase> cases = extract_test_cases(suite, limit);
  std::cout << cases.size() << " test cases\n";
  for (std::size_t i = 0; i < cases.size(); ++i) {
    std::cout << "case " << i << ":\n" << cases[i].to_string();
  }
  return 0;
}

int cmd_spinal(const std::string& model_path, const std::string& formula_text,
               const std::string& product_name, int depth, const std::string& dot_path) {
  const std::shared_ptr<const Iofts> base = load(model_path);
  const FeatureSpec spec = project(base, parse_formula(formula_text, base->features));
  const TestSuite suite = build_suite(spec, depth);
  const SpinalSuite spinal = build_spinal(suite, product_by_name(*base, product_name));
  std::cout << "spinal suite of " << base->name << " under " << spec.phi().to_string()
            << " w.r.t. product " << product_name << ", depth " << depth << ": "
            << spinal.suite.nodes().size() << " of " << suite.nodes().size()
            << " inner states retained\n";
  std::cout << "remaining products:";
  if (spinal.remaining_products.empty()) std::cout << " none";
  for (const ProductConfig& p : spinal.remaining_products) std::cout << " " << p.name;
  std::cout << "\n";
  std::cout << render_suite(spinal.suite);
  if (!dot_path.empty()) write_file(dot_path, to_dot(spinal.suite));
  return 0;
}

int report_run(const RunResult& result) {
  if (result.passed()) {
    std::cout << "verdict: Pass\n";
    return 0;
  }
  std::cout << "verdict: Fail\n";
  for (const Trace& t : result.failing_traces) {
    std::cout << trace_to_string(t) << "\n";
  }
  return 1;
}

int cmd_run(const std::string& model_path, const std::string& formula_text,
            const std::string& impl_path, const std::string& impl_formula_text,
            const std::string& adapter_spec, int depth, bool assume_input_enabled) {
  const std::shared_ptr<const Iofts> base = load(model_path);
  const FeatureSpec spec = project(base, parse_formula(formula_text, base->features));
  const TestSuite suite = build_suite(spec, depth);
  RunOptions opts;
  opts.assume_input_enabled = assume_input_enabled;
  if (!impl_path.empty()) {
    const std::shared_ptr<const Iofts> impl_base = load(impl_path);
    const FeatureSpec impl = project(impl_base, parse_formula(impl_formula_text, impl_base->features));
    return report_run(run_suite(suite, impl, opts));
  }
  AdapterPort port(adapter_spec.substr(5));
  return report_run(run_suite(suite, port, opts));
}

int cmd_orthogonal(const std::string& model_path, const std::string& formula_text,
                   const std::string& product_name, const std::string& impl_path, int depth) {
  const std::shared_ptr<const Iofts> base = load(model_path);
  const FeatureSpec spec = project(base, parse_formula(formula_text, base->features));
  const std::shared_ptr<const Iofts> impl_base = load(impl_path);
  const FeatureSpec impl = project(impl_base, Formula::constant(true));
  const OrthogonalityReport report =
      check_orthogonal(impl, spec, product_by_name(*base, product_name), depth);
  if (report.orthogonal()) {
    std::cout << "orthogonal (depth " << report.searched_depth << ")\n";
    return 0;
  }
  std::cout << "not orthogonal (depth " << report.searched_depth << ")\n";
  std::cout << "sigma': " << trace_to_string(report.witness->sigma_prime) << "\n";
  std::cout << "a: " << report.witness->action.name << "\n";
  std::cout << "sigma'': " << trace_to_string(report.witness->sigma_double_prime) << "\n";
  return 1;
}

void merge_report(PropertyReport& total, PropertyReport one, std::size_t case_index) {
  total.cases_run += one.cases_run;
  total.cases_applicable += one.cases_applicable;
  for (Counterexample& ce : one.counterexamples) {
    ce.case_index = case_index;
    total.counterexamples.push_back(std::move(ce));
  }
}

void write_bundles(const std::string& out_dir, const std::string& check,
                   const PropertyReport& report, std::ostream& manifest) {
  for (std::size_t i = 0; i < report.counterexamples.size(); ++i) {
    const Counterexample& ce = report.counterexamples[i];
    const std::string stem = check + "-" + std::to_string(ce.case_index) + "-" + std::to_string(i);
    manifest << check << " case " << ce.case_index << ": " << ce.description << "\n";
    manifest << "  formula: " << ce.formula << "\n";
    manifest << "  product: " << ce.product << "\n";
    for (const Trace& t : ce.traces) manifest << "  trace: " << trace_to_string(t) << "\n";
    write_file(out_dir + "/" + stem + "-spec.iofts", ce.spec_text);
    manifest << "  spec: " << stem + "-spec.iofts" << "\n";
    if (!ce.impl_text.empty()) {
      write_file(out_dir + "/" + stem + "-impl.iofts", ce.impl_text);
      manifest << "  impl: " << stem + "-impl.iofts" << "\n";
    }
  }
}

int cmd_verify(std::uint64_t seed, std::size_t cases, int depth, const std::string& out_dir) {
  PropertyReport conformance;
  PropertyReport transfer;
  PropertyReport incremental;
  conformance.seed = transfer.seed = incremental.seed = seed;

  for (std::size_t i = 0; i < cases; ++i) {
    GenParams params;
    params.seed = seed + i;
    params.depth = depth;
    const Iofts m = random_iofts(params);
    const std::shared_ptr<const Iofts> base = std::make_shared<const Iofts>(m);
    const FeatureSpec spec = project(base, Formula::constant(true));
    const TestSuite suite = build_suite(spec, depth);

    merge_report(conformance, check_product_conformance(m, Formula::constant(true), depth), i);
    for (const ProductConfig& lambda : m.products) {
      merge_report(transfer, check_lemma_spine_fail(suite, lambda, depth), i);
    }
    const ProductConfig& lambda = m.products[i % m.products.size()];
    const FeatureSpec impl = mutate_impl(spec, seed + i);
    merge_report(incremental, check_theorem_incremental(spec, lambda, impl, depth), i);
  }

  const auto summarize = [](const std::string& name, const PropertyReport& r) {
    std::cout << name << ": " << r.cases_run << " cases, " << r.cases_applicable
              << " applicable, " << r.counterexamples.size() << " counterexamples\n";
  };
  std::cout << "seed " << seed << ", " << cases << " models, depth " << depth << "\n";
  summarize("product conformance", conformance);
  summarize("failure transfer", transfer);
  summarize("incremental completeness", incremental);

  const bool refuted = !conformance.ok() || !transfer.ok() || !incremental.ok();
  if (refuted && !out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    std::ofstream manifest(out_dir + "/manifest.txt");
    if (!manifest) throw Error("cannot write '" + out_dir + "/manifest.txt'");
    manifest << "seed " << seed << ", " << cases << " models, depth " << depth << "\n";
    write_bundles(out_dir, "product-conformance", conformance, manifest);
    write_bundles(out_dir, "failure-transfer", transfer, manifest);
    write_bundles(out_dir, "incremental-completeness", incremental, manifest);
    std::cout << "counterexample bundles written to " << out_dir << "\n";
  }
  return refuted ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"input-output conformance testing for software product lines"};
  app.require_subcommand(1);
  int code = 0;

  std::string model_path;
  std::string formula_text;
  std::string impl_path;
  std::string impl_formula_text = "true";
  std::string adapter_spec;
  std::string product_name;
  std::string dot_path;
  std::string out_dir;
  int depth = 0;
  int verify_depth = 5;
  std::size_t limit = 1000;
  bool assume_input_enabled = false;
  std::uint64_t seed = 42;
  std::size_t cases = 50;

  CLI::App* validate = app.add_subcommand("validate", "check a model file for well-formedness");
  validate->add_option("model", model_path, "model file")->required();
  validate->callback([&] { code = cmd_validate(model_path); });

  CLI::App* project_cmd = app.add_subcommand("project", "project a model onto a feature constraint");
  project_cmd->add_option("model", model_path, "model file")->required();
  project_cmd->add_option("--formula", formula_text, "feature constraint")->required();
  project_cmd->callback([&] { code = cmd_project(model_path, formula_text); });

  CLI::App* suite_cmd = app.add_subcommand("suite", "build the depth-bounded test suite");
  suite_cmd->add_option("model", model_path, "model file")->required();
  suite_cmd->add_option("--formula", formula_text, "feature constraint")->required();
  suite_cmd->add_option("--depth", depth, "trace length bound")
      ->required()
      ->check(CLI::NonNegativeNumber);
  suite_cmd->add_option("--dot", dot_path, "write a Graphviz rendering to this file");
  suite_cmd->callback([&] { code = cmd_suite(model_path, formula_text, depth, dot_path); });

  CLI::App* testcases_cmd = app.add_subcommand("testcases", "enumerate executable test cases");
  testcases_cmd->add_option("model", model_path, "model file")->required();
  testcases_cmd->add_option("--formula", formula_text, "feature constraint")->required();
  testcases_cmd->add_option("--depth", depth, "trace length bound")
      ->required()
      ->check(CLI::NonNegativeNumber);
  testcases_cmd->add_option("--limit", limit,
                            "abort beyond this many cases (0 removes the limit)");
  testcases_cmd->callback([&] { code = cmd_testcases(model_path, formula_text, depth, limit); });

  CLI::App* spinal_cmd =
      app.add_subcommand("spinal", "build the spinal test suite w.r.t. a tested product");
  spinal_cmd->add_option("model", model_path, "model file")->required();
  spinal_cmd->add_option("--formula", formula_text, "feature constraint")->required();
  spinal_cmd->add_option("--product", product_name, "already-tested product")->required();
  spinal_cmd->add_option("--depth", depth, "trace length bound")
      ->required()
      ->check(CLI::NonNegativeNumber);
  spinal_cmd->add_option("--dot", dot_path, "write a Graphviz rendering to this file");
  spinal_cmd->callback(
      [&] { code = cmd_spinal(model_path, formula_text, product_name, depth, dot_path); });

  CLI::App* run_cmd = app.add_subcommand("run", "run the suite against an implementation");
  run_cmd->add_option("model", model_path, "specification model file")->required();
  run_cmd->add_option("--formula", formula_text, "feature constraint")->required();
  CLI::Option* impl_opt = run_cmd->add_option("--impl", impl_path, "implementation model file");
  run_cmd->add_option("--impl-formula", impl_formula_text,
                      "feature constraint for the implementation model")
      ->needs(impl_opt);
  CLI::Option* adapter_opt =
      run_cmd->add_option("--adapter", adapter_spec, "external implementation, as exec:<command>");
  adapter_opt->excludes(impl_opt);
  run_cmd->add_option("--depth", depth, "trace length bound")
      ->required()
      ->check(CLI::NonNegativeNumber);
  run_cmd->add_flag("--assume-input-enabled", assume_input_enabled,
                    "treat refused stimuli as self-loops");
  run_cmd->callback([&] {
    if (impl_path.empty() && adapter_spec.empty()) {
      throw CLI::RequiredError("run: one of --impl or --adapter");
    }
    if (!adapter_spec.empty() && adapter_spec.rfind("exec:", 0) != 0) {
      throw CLI::ValidationError("--adapter", "expected exec:<command>");
    }
    code = cmd_run(model_path, formula_text, impl_path, impl_formula_text, adapter_spec, depth,
                   assume_input_enabled);
  });

  CLI::App* orth_cmd =
      app.add_subcommand("orthogonal", "check orthogonality of an implementation");
  orth_cmd->add_option("model", model_path, "specification model file")->required();
  orth_cmd->add_option("--formula", formula_text, "feature constraint")->required();
  orth_cmd->add_option("--product", product_name, "already-tested product")->required();
  orth_cmd->add_option("--impl", impl_path, "implementation model file")->required();
  orth_cmd->add_option("--depth", depth, "trace length bound")
      ->required()
      ->check(CLI::NonNegativeNumber);
  orth_cmd->callback(
      [&] { code = cmd_orthogonal(model_path, formula_text, product_name, impl_path, depth); });

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "randomized verification of the testing properties");
  verify_cmd->add_option("--seed", seed, "base seed");
  verify_cmd->add_option("--cases", cases, "number of random models");
  verify_cmd->add_option("--depth", verify_depth, "trace length bound")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--out", out_dir, "directory for counterexample bundles");
  verify_cmd->callback([&] { code = cmd_verify(seed, cases, verify_depth, out_dir); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const Error& e) {
    std::cerr << "ftskit: " << e.what() << "\n";
    return 3;
  }
  return code;
}
