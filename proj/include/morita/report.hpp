#ifndef MORITA_REPORT_HPP_
#define MORITA_REPORT_HPP_

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace morita {

/// Outcome of a check. Exit codes follow the CLI contract:
/// pass 0, fail 1, consistent-up-to-bound 2, hypothesis failure 3.
enum class Verdict { pass, fail, consistent_up_to_bound, hypothesis_failure };

int exit_code(Verdict v) noexcept;
std::string to_string(Verdict v);

struct Clause {
  std::string name;
  Verdict verdict = Verdict::pass;
  std::string detail;
  // Informational clauses are recorded but never move the overall verdict.
  // Used for statements about infinite families that can only be sampled.
  bool informational = false;
};

struct CheckReport {
  std::string check;
  Verdict verdict = Verdict::pass;
  std::vector<Clause> clauses;
  std::vector<std::string> witnesses;
  std::vector<std::string> hypotheses;
  std::map<std::string, long long> parameters;

  bool passed() const noexcept { return verdict == Verdict::pass; }
  bool refuted() const noexcept { return verdict == Verdict::fail; }

  Clause& add(std::string name, Verdict v, std::string detail = {});
  Clause& add(std::string name, bool ok, std::string detail = {}) {
    return add(std::move(name), ok ? Verdict::pass : Verdict::fail, std::move(detail));
  }
  void note(std::string name, std::string detail);
  void hypothesis(std::string text, bool holds);
  void witness(std::string text) { witnesses.push_back(std::move(text)); }

  /// Folds the clause verdicts into the overall verdict. Hypothesis failures
  /// dominate, then refutations, then bounded consistency.
  void finalize();

  /// Appends the clauses of `sub` with a name prefix and merges its trail.
  /// With `informational` the absorbed clauses no longer move the verdict.
  void absorb(CheckReport const& sub, std::string const& prefix, bool informational = false);
};

nlohmann::json to_json(CheckReport const& r);
std::string render_table(CheckReport const& r);

}  // namespace morita

#endif  // MORITA_REPORT_HPP_
