#pragma once

#include <kacrep/algebra.hpp>
#include <kacrep/serialize.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace kacrep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 1;
inline constexpr int kExitInput = 2;

/// One pipeline run. Unset optionals fall back to per-action defaults.
struct JobConfig {
  std::string action;  // build | verify | typicality | replicate | twist | heisenberg | export
  SuperAlgebraSpec spec{2, 1, Flavor::sl};
  std::vector<int> labels;          // empty: all zero
  std::optional<Rational> b;        // nullopt: symbolic
  std::optional<Rational> c;
  std::optional<int> N;
  std::vector<Rational> lambdas;    // empty: all one
  std::vector<Rational> nu;         // (nu_y) for sl, (nu_y, nu_c) for gl; empty: (1, 0...)
  std::optional<int> n_twist;
  std::string out;
  std::string report;

  /// Schema check: known keys only, right types. Throws PreconditionError.
  static JobConfig from_json(const Json& j);
  /// Echo without the output paths, so artifacts do not depend on where they are written.
  Json to_json() const;
};

/// "sl", "gl", "sl(2|1)" or "sl(2/1)". Sets flavor, and m, n when given.
void apply_algebra_text(JobConfig& cfg, const std::string& text);

/// Runs a validated config; prints the human-readable report to `out`.
int execute(const JobConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses the command line (args exclude the program name) and executes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kacrep::cli
