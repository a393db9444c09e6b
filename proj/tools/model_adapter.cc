// Reference implementation adapter: exposes a model file as an external
// implementation under test speaking the line protocol of AdapterPort
// (I <name> / ? / R on stdin; O <name> / Q on stdout).
//
// The adapter is deterministic: on each observation prompt it reports the
// alphabetically smallest enabled output, or quiescence when no output is
// enabled. Stimuli that the model cannot take in its current configuration
// are absorbed, so the wrapped model behaves as an input-enabled system.

#include <algorithm>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ftskit/text.hh"

using namespace ftskit;

int main(int argc, char** argv) {
  CLI::App app{"serve a model file as an external implementation under test"};
  std::string model_path;
  std::string formula_text = "true";
  app.add_option("model", model_path, "model file to serve")->required();
  app.add_option("--formula", formula_text, "feature constraint selecting the served behavior");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const auto base = std::make_shared<const Iofts>(load_model_from_file(model_path));
    const FeatureSpec spec = project(base, parse_formula(formula_text, base->features));
    const StepRelation& rel = spec.step_relation();
    std::vector<std::string> outputs = base->outputs;
    std::sort(outputs.begin(), outputs.end());

    std::set<std::string> config = spec.initial_closure();
    std::string line;
    while (std::getline(std::cin, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line == "R") {
        config = spec.initial_closure();
      } else if (line == "?") {
        Action observed = Action::delta();
        for (const std::string& name : outputs) {
          if (!rel.successors(config, Action::output(name)).empty()) {
            observed = Action::output(name);
            break;
          }
        }
        if (observed.is_delta()) {
          std::cout << "Q" << std::endl;
          const std::set<std::string> next = rel.successors(config, observed);
          if (!next.empty()) config = next;
        } else {
          std::cout << "O " << observed.name << std::endl;
          config = rel.successors(config, observed);
        }
      } else if (line.rfind("I ", 0) == 0) {
        const std::set<std::string> next = rel.successors(config, Action::input(line.substr(2)));
        if (!next.empty()) config = next;  // unavailable stimuli are absorbed
      } else if (!line.empty()) {
        std::cerr << "ftskit-model-adapter: unexpected line '" << line << "'" << std::endl;
        return 3;
      }
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "ftskit-model-adapter: " << e.what() << std::endl;
    return 3;
  }
}
