#include "ftskit/spinal.hh"

#include <algorithm>

namespace ftskit {

namespace {

const TestSuite::Node& inner_node(const TestSuite& suite, const Trace& sigma,
                                  const char* who) {
  const TestSuite::Node* node = suite.find(sigma);
  if (!node) throw Error(std::string(who) + ": trace does not index an Inner state");
  return *node;
}

void require_product_of(const TestSuite& suite, const ProductConfig& lambda) {
  const FeatureSpec& spec = suite.spec();
  if (!spec.phi().evaluate(lambda))
    throw Error("product '" + lambda.name + "' does not satisfy the suite's formula");
  bool member = std::any_of(spec.products().begin(), spec.products().end(),
                            [&](const ProductConfig& p) {
                              return p.same_assignment(lambda);
                            });
  if (!member)
    throw Error("product '" + lambda.name + "' is not a product of the suite's spec");
}

}  // namespace

bool bt_holds(const TestSuite& suite, const Trace& sigma) {
  inner_node(suite, sigma, "bt_holds");
  std::vector<std::vector<std::string>> seen;
  for (std::size_t len = 0; len <= sigma.size(); ++len) {
    const TestSuite::Node& node = inner_node(suite, sigma.prefix(len), "bt_holds");
    if (std::find(seen.begin(), seen.end(), node.x) != seen.end()) return false;
    seen.push_back(node.x);
  }
  return true;
}

bool is_spine(const TestSuite& suite, const Trace& sigma, const Trace& sigma_prime) {
  const TestSuite::Node& a = inner_node(suite, sigma, "is_spine");
  const TestSuite::Node& b = inner_node(suite, sigma_prime, "is_spine");
  return sigma.is_subsequence_of(sigma_prime) && a.x == b.x && bt_holds(suite, sigma);
}

bool new_behavior_from(const FeatureSpec& spec, const ProductConfig& lambda,
                       const std::vector<std::string>& x, const Action& a) {
  for (const Transition& t : spec.transitions()) {
    if (t.action != a) continue;
    if (std::find(x.begin(), x.end(), t.src) == x.end()) continue;
    if (!t.guard.evaluate(lambda)) return true;
  }
  return false;
}

bool is_new(const FeatureSpec& spec, const ProductConfig& lambda,
            const Trace& sigma, const Action& a) {
  if (!spec.phi().evaluate(lambda))
    throw Error("is_new: product '" + lambda.name + "' does not satisfy the spec's formula");
  FeatureSpec product = derive_product(spec.base(), lambda);
  if (steps(product.step_relation(), {product.initial()}, sigma).empty()) return false;
  std::set<std::string> after =
      steps(spec.step_relation(), {spec.initial()}, sigma);
  return new_behavior_from(spec, lambda, {after.begin(), after.end()}, a);
}

SpinalSuite build_spinal(const TestSuite& suite, const ProductConfig& lambda) {
  require_product_of(suite, lambda);
  const FeatureSpec& spec = suite.spec();
  FeatureSpec product = derive_product(spec.base(), lambda);
  const StepRelation& product_rel = product.step_relation();

  // Retention pass. std::map iterates traces with prefixes first, so a
  // node's parent is always decided before the node itself.
  std::map<Trace, bool> retained;
  std::set<std::string> init{product.initial()};
  for (const auto& [sigma, node] : suite.nodes()) {
    bool in_lambda_traces = !steps(product_rel, init, sigma).empty();
    bool keep = in_lambda_traces && bt_holds(suite, sigma);
    if (!keep && !sigma.empty()) {
      Trace parent = sigma.prefix(sigma.size() - 1);
      auto it = retained.find(parent);
      if (it != retained.end() && it->second) {
        const TestSuite::Node& pnode = *suite.find(parent);
        keep = new_behavior_from(spec, lambda, pnode.x, sigma.back());
      }
    }
    retained[sigma] = keep;
  }

  std::map<Trace, TestSuite::Node> nodes;
  for (const auto& [sigma, node] : suite.nodes()) {
    if (!retained[sigma]) continue;
    TestSuite::Node restricted;
    restricted.x = node.x;
    for (const auto& [a, targets] : node.edges) {
      TestSuite::EdgeTargets t = targets;
      if (t.inner) {
        auto child = retained.find(sigma.extended(a));
        t.inner = child != retained.end() && child->second;
      }
      if (t.inner || t.pass || t.fail) restricted.edges[a] = t;
    }
    nodes.emplace(sigma, std::move(restricted));
  }

  std::vector<ProductConfig> remaining;
  for (const ProductConfig& p : spec.products())
    if (!p.same_assignment(lambda)) remaining.push_back(p);

  return SpinalSuite{TestSuite(spec, suite.depth(), std::move(nodes)), lambda,
                     std::move(remaining)};
}

}  // namespace ftskit
