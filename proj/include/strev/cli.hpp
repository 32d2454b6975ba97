#ifndef STREV_CLI_HPP
#define STREV_CLI_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "strev/verify.hpp"

namespace strev {

enum class OutputFormat { Json, Text };

/// Exit codes.
///   classify: 0 strongly reversible, 1 reversible only, 2 not reversible
///   witness:  0 verified, 1 involutive requested but impossible, 2 not reversible
///   verify:   0 iff reverses, involution and det 1 all hold, else 1
///   selftest: 0 iff no check failed, else 1
/// Any parse, validation or usage error exits with 3.
constexpr int kExitUsage = 3;

/// Entry point shared by the executable and the tests. args excludes the
/// program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The selftest subcommand with an injectable classifier.
int run_selftest_command(int max_n, std::uint64_t seed, OutputFormat format, std::ostream& out,
                         const Classifier& classifier = is_strongly_reversible);

}  // namespace strev

#endif  // STREV_CLI_HPP
