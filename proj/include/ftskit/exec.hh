#pragma once

#include "ftskit/suite.hh"

namespace ftskit {

/// One side of the synchronous composition: something that can be reset to
/// its initial configuration and asked to synchronize on visible actions.
///
/// apply() returns false when the implementation cannot take part: an input
/// it refuses, an output or quiescence it does not produce. Ports need not
/// support undo; the runner restores positions by replaying traces from
/// reset, so implementations behind a port should be deterministic enough to
/// reproduce a trace they have executed before.
class ImplementationPort {
 public:
  virtual ~ImplementationPort() = default;
  virtual void reset() = 0;
  virtual bool apply(const Action& a) = 0;

  /// reset() followed by apply() per action. With `angelic_inputs`, refused
  /// inputs are absorbed as self-loops instead of failing the replay.
  bool replay(const Trace& t, bool angelic_inputs = false);
};

/// In-process port over a feature specification: the configuration is the
/// tau-closed set of states the implementation may be in. Delta availability
/// comes from the specification's own delta self-loops, so raw models should
/// be wrapped via project(m, true) first.
class ModelPort final : public ImplementationPort {
 public:
  explicit ModelPort(FeatureSpec impl);

  void reset() override;
  bool apply(const Action& a) override;

  const FeatureSpec& spec() const { return impl_; }
  const std::set<std::string>& configuration() const { return config_; }

 private:
  FeatureSpec impl_;
  std::set<std::string> config_;
};

struct RunOptions {
  /// Treat inputs the implementation refuses as self-loops (angelic
  /// completion) instead of dead branches.
  bool assume_input_enabled = false;
};

struct RunResult {
  enum class Verdict { Pass, Fail };
  Verdict verdict = Verdict::Pass;
  /// Every trace that drives the composition into Fail, sorted by length
  /// then lexicographically by action names.
  std::vector<Trace> failing_traces;
  /// Synchronized configurations visited.
  std::size_t explored = 0;

  bool passed() const { return verdict == Verdict::Pass; }
};

/// Model-backed synchronous step: targets reachable from (st, impl_states)
/// in one synchronization on `a`, as (suite target, implementation
/// configuration) pairs. Impl tau-moves are already absorbed by the
/// configuration representation.
std::vector<std::pair<SuiteState, std::set<std::string>>> sync_step(
    const TestSuite& suite, const SuiteState& st,
    const std::set<std::string>& impl_states, const Action& a,
    const FeatureSpec& impl, const RunOptions& opts = {});

/// Exhaustive exploration of the synchronized product of suite and
/// implementation, collecting every trace that reaches Fail.
RunResult run_suite(const TestSuite& suite, const FeatureSpec& impl,
                    const RunOptions& opts = {});

/// The same exploration through a port. For model ports this coincides with
/// the overload above; for external ports, branches the implementation does
/// not reproduce on replay are skipped (observations are sampled, not
/// enumerated).
RunResult run_suite(const TestSuite& suite, ImplementationPort& port,
                    const RunOptions& opts = {});

bool passes(const FeatureSpec& impl, const TestSuite& suite,
            const RunOptions& opts = {});
bool passes(ImplementationPort& port, const TestSuite& suite,
            const RunOptions& opts = {});

/// Depth-bounded product-line conformance: does `impl` pass the suite of
/// `spec` at depth k?
bool conforms(const FeatureSpec& impl, const FeatureSpec& spec, int depth,
              const RunOptions& opts = {});

/// All (reachable state, declared input) pairs with no transition: empty
/// iff the specification is input-enabled. Sorted by state then input.
std::vector<std::pair<std::string, Action>> check_input_enabled(const FeatureSpec& spec);

}  // namespace ftskit
