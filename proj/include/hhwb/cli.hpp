#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hhwb/io.hpp"

namespace hhwb::cli {

enum ExitCode { positive = 0, negative = 1, failure = 2 };

/// SHA-256 of the canonical (sorted keys, no whitespace) serialization,
/// as "sha256:<hex>".
std::string input_digest(const io::Json& doc);

/// Runs the command line (args excludes the program name). The JSON report
/// goes to `out` with --json, a text summary otherwise; diagnostics go to
/// `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hhwb::cli
