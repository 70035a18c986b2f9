#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "regulous/serialize.hpp"

namespace regulous {

/// Exit codes of the command line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUnsupported = 2;
inline constexpr int kExitUsage = 64;

/// Runs one command; `args` excludes the program name. Reports go to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Exact samples of f (or of a partial derivative of f) along t -> (X(t), Y(t)) at t = 2^-1 .. 2^-depth.
/// `derivative` is a word over {x, y} naming the partial, e.g. "xy".
json sample_report(const RatFunc& f, const std::string& arc, unsigned depth, const std::string& derivative = "");

/// The regression fixture table; each row carries the command it runs and its outcome.
json fixtures_report(const std::string& golden_dir = "", bool write_golden = false);

}  // namespace regulous
