#pragma once

#include "aaslab/group.hpp"
#include "aaslab/lattice.hpp"
#include "aaslab/report.hpp"
#include "aaslab/spec_parser.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace aaslab::cli {

enum ExitCode : int {
    kOk = 0,
    kNegative = 1, // a yes/no query answered no
    kError = 2,
    kUnknown = 3,  // budget ran out before a certificate was found
};

struct Options {
    bool json = false;
    /// 0 = available parallelism
    unsigned threads = 0;
    /// Order cap for building groups; for scan also the upper end of the range.
    std::optional<std::size_t> max_order;
    /// Search nodes per signature.
    std::uint64_t budget = 10'000'000;
    /// Wall-clock budget for sig-nonsigs.
    double seconds = 300.0;
    std::optional<unsigned> genus_max;
    std::optional<std::string> cache_dir;
    bool no_cache = false;
    std::size_t lattice_cap = kDefaultLatticeCap;
    /// aas-check: also compute the effective bounds.
    bool bounds = false;
};

struct Command {
    std::string name;
    std::vector<std::string> args;
    Options options;
};

struct Outcome {
    report::Json report;
    std::string text;
    int exit_code = kOk;
};

std::vector<std::string> command_names();

/// Runs one command. Errors become a report with an "error" member and exit
/// code 2; nothing escapes as an exception.
Outcome execute(const Command& cmd);

/// Parses argv, executes, writes the JSON report or the text rendering.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace aaslab::cli
