#pragma once

#include <cstdio>

#include "ftskit/exec.hh"

namespace ftskit {

/// Implementation port over an external process speaking a line protocol:
///
///   tester -> adapter: `I <name>` (stimulus), `?` (observation prompt),
///                      `R` (reset)
///   adapter -> tester: `O <name>` (output observed) or `Q` (quiescence),
///                      exactly one reply per prompt
///
/// Inputs are assumed accepted — the protocol has no refusal reply — and
/// quiescence detection (for instance by timeout) is the adapter's
/// responsibility. The command is run through `sh -c` and must exit when its
/// standard input closes.
class AdapterPort final : public ImplementationPort {
 public:
  explicit AdapterPort(const std::string& command);
  ~AdapterPort() override;
  AdapterPort(const AdapterPort&) = delete;
  AdapterPort& operator=(const AdapterPort&) = delete;

  void reset() override;
  bool apply(const Action& a) override;

 private:
  void send(const std::string& line);
  std::string receive();

  long pid_ = -1;
  std::FILE* to_child_ = nullptr;
  std::FILE* from_child_ = nullptr;
};

}  // namespace ftskit
