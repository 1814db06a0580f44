#ifndef FREQPRED_CLI_HPP
#define FREQPRED_CLI_HPP

// Command implementations behind the `freqpred` executable. Each command
// builds a Table and emits it as CSV or JSON to a file or to `out`; errors go
// to `err`. Exit status: 0 on success (including an "unreachable" threshold),
// kExitError on parse/IO/domain errors, kExitDisagreement when accuracy
// paths disagree.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "freqpred/table.hpp"

namespace freqpred::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitDisagreement = 3;

enum class Format { csv, json };

struct OutputEnvelope {
  Format format = Format::csv;
  std::string destination;  // empty: standard output
  int digits = 10;          // significant digits for decimal columns
};

Table coeffs_table(long a_max);
/// `path` is one of direct, ttable, recursive, condensed, expanded, all.
/// Sets `agree` to whether every emitted value matches.
Table accuracy_table(long k, const std::string& theta, const std::string& path, int digits,
                     bool& agree);
Table curve_table(const std::string& theta, long k_max, int digits);
Table threshold_table(const std::string& theta, const std::string& target);
Table posterior_table(const std::string& prior, long k, long n, int digits);
Table simulate_table(const std::string& theta_or_prior, long k_max, long reps, std::uint64_t seed,
                     unsigned threads, int digits);

int cmd_coeffs(long a_max, const OutputEnvelope& env, std::ostream& out, std::ostream& err);
int cmd_accuracy(long k, const std::string& theta, const std::string& path,
                 const OutputEnvelope& env, std::ostream& out, std::ostream& err);
int cmd_curve(const std::string& theta, long k_max, const OutputEnvelope& env, std::ostream& out,
              std::ostream& err);
int cmd_threshold(const std::string& theta, const std::string& target, const OutputEnvelope& env,
                  std::ostream& out, std::ostream& err);
int cmd_posterior(const std::string& prior, long k, long n, const OutputEnvelope& env,
                  std::ostream& out, std::ostream& err);
int cmd_simulate(const std::string& theta_or_prior, long k_max, long reps, std::uint64_t seed,
                 unsigned threads, const OutputEnvelope& env, std::ostream& out,
                 std::ostream& err);

/// Parses argv-style arguments (args[0] is the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace freqpred::cli

#endif  // FREQPRED_CLI_HPP
