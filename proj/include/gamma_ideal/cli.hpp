#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gamma_ideal::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitNonMember = 1;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Name of the environment variable overriding the default seed.
inline constexpr const char* kSeedEnv = "GAMMA_IDEAL_SEED";

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gamma_ideal::cli

#include <cstdint>

#include "gamma_ideal/numeric.hpp"

namespace gamma_ideal::cli {

/// Worked identities (exact and numeric) followed by the evaluator's
/// functional-equation checks.
SelfTestReport run_selftest(const GammaEvaluator& gamma = GammaEvaluator(), std::uint64_t seed = 0);

}  // namespace gamma_ideal::cli
