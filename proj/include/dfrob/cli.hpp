#pragma once

/**
 * @file cli.hpp
 * @brief Command-line pipeline: basic-polys, discretize, solve, verify, special, limit.
 *
 * Exit status: 0 success, 1 usage error, 2 invalid problem or input,
 * 3 verification failure, 4 unsupported case.
 */

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dfrob/rational.hpp"

namespace dfrob {

enum class Command { basic_polys, discretize, solve, verify, special, limit };

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitInvalid = 2, kExitVerifyFail = 3, kExitUnsupported = 4 };

struct RunConfig {
    Command command = Command::solve;
    std::string problem_path;            // --problem
    std::string family;                  // --family (special takes it positionally)
    std::string lambda, nu, alpha, beta; // family parameters
    std::string values_path;             // verify --values: solve JSON or index,x,u CSV
    std::string op = "forward";          // --operator
    std::size_t order = 50;
    std::optional<std::size_t> length;   // defaults per command
    Rational step = 1;
    std::string format = "csv";
    std::optional<int> float_digits;     // unset: exact only (limit: 30)
    std::string normalize = "default";
    bool raw = false;                    // discretize: skip simplification
    Rational x = 1;                      // limit evaluation point
    std::vector<long> ns{8, 16, 32, 64};
    std::size_t reference_order = 0;     // limit: 0 selects 4n + 64
};

/// Thrown for malformed command lines (exit status 1).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses the arguments after the program name. Throws UsageError.
RunConfig parse_args(const std::vector<std::string>& args);

/// Executes one command, writing results to `out` and diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run, with --help and usage errors reported on `out` / `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dfrob
