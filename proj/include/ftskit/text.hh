#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "ftskit/projection.hh"

namespace ftskit {

/// Parses the line-oriented model format:
///
///   iofts <name>
///   features <f>...
///   inputs <i>...
///   outputs <o>...
///   initial <state>
///   trans <src> ?<input>|!<output>|tau <dst> [<guard>]
///   product <name> <f>=0|1 ...
///
/// `#` starts a comment; blank lines are ignored; the guard defaults to
/// [true]; states are implicit (initial plus transition endpoints, in order
/// of first mention); delta never appears in model files. The result is
/// validated; parse errors carry a line number, validation failures list
/// their diagnostics.
Iofts load_model(std::istream& in, const std::string& origin = "<input>");
Iofts load_model_from_string(std::string_view text, const std::string& origin = "<string>");
Iofts load_model_from_file(const std::string& path);

/// Canonical document form; load_model(print_model(m)) reproduces m and
/// printing is idempotent from then on.
std::string print_model(const Iofts& m);

/// Projection printed in the same document form, with synthesized delta
/// self-loops as `trans s delta s [guard]` lines and the surviving products.
/// Such documents describe derived behavior and are not loadable as models.
std::string print_spec(const FeatureSpec& spec);

/// Space-separated action names, `delta` for quiescence; empty for the
/// empty trace.
std::string trace_to_string(const Trace& t);

/// Parses a space-separated trace against a model's alphabet ("delta"
/// resolves to quiescence); unknown or internal actions are errors.
Trace parse_trace(std::string_view text, const Iofts& m);

}  // namespace ftskit
