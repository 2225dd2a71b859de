#pragma once

// Command-line front end: argument parsing into a Command and dispatch to the
// library. Exit codes: 0 success, 1 usage or domain error (including a failed
// verification suite), 2 search budget exhausted.

#include "turanlab/patterns.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace turanlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitBudget = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Command {
    std::string verb;    // construct | check | cliques | bound | exact | drc | verify
    std::string target;  // construct family or bound id
    // Verb options by long name without dashes, e.g. {"n", "7"}.
    std::map<std::string, std::string> options;
    std::vector<std::string> flags;  // boolean verb flags that were given
    ConstraintSet constraints;       // --forbid-sub then --forbid-ind, in order
    std::string format = "text";     // text | json | csv
    std::string output;              // empty: standard output
    std::uint64_t seed = 1;
    int threads = 1;
    std::uint64_t budget = 0;  // search node budget; 0: default
    double time_limit = 0;     // seconds; 0: none
    std::string help;          // set when --help was requested

    bool has(const std::string& name) const { return options.count(name) != 0; }
    bool flag(const std::string& name) const;
};

// Pattern mini-language, case-insensitive: Ck (cycle), Pk (path), Kr
// (complete), Ka,b[,c...] (complete multipartite), Ek (independent set),
// Petersen, or @file.g6 (first graph of a graph6 file).
PatternSpec parse_pattern(const std::string& text, Mode mode);

// args excludes the program name. Throws UsageError with an actionable
// message on unknown flags, missing values or unparseable patterns.
Command parse_args(const std::vector<std::string>& args);

// Runs a parsed command, writing the report to `out` (or cmd.output) and
// diagnostics to `err`. Returns the exit code.
int execute(const Command& cmd, std::ostream& out, std::ostream& err);

// parse_args + execute with every error mapped to its exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace turanlab::cli
