#pragma once

#include <string>

#include "ftskit/suite.hh"

namespace ftskit {

/// Graphviz rendering of a model: one node per state, one edge per
/// transition labeled with the action token and guard. Output is
/// deterministic (states in declaration order, edges sorted) so renders can
/// be compared byte for byte.
std::string to_dot(const Iofts& m);

/// Graphviz rendering of a test suite (full or spinal): one node per Inner
/// state labeled with its X-component and trace, shared pass/fail verdict
/// nodes, and observation edges grouped per verdict. Deterministic output.
std::string to_dot(const TestSuite& suite);

}  // namespace ftskit
