#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latpoly/equivalence.hpp"
#include "latpoly/io.hpp"

namespace latpoly {

enum class CheckStatus { Pass, Fail, Indeterminate };

const char* to_string(CheckStatus s);

struct Check {
  std::string id;
  CheckStatus status = CheckStatus::Pass;
  std::string details;
  Json witness;  ///< null when absent
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  /// Summary lines always shown in text output.
  std::vector<std::string> notes;
  double seconds = 0;

  std::size_t count(CheckStatus s) const;
  /// No check failed (indeterminate checks do not count as failures).
  bool passed() const { return count(CheckStatus::Fail) == 0; }
  /// Every check passed.
  bool clean() const { return count(CheckStatus::Pass) == checks.size(); }
  Json to_json() const;
  /// One line per non-passing check, plus the summary line.
  std::string to_text(bool verbose = false) const;
};

struct SuiteOptions {
  std::size_t dmax = 0;  ///< 0 selects the suite default
  Int kmax = 0;          ///< 0 selects the suite default
  std::uint64_t seed = 1;
  std::size_t budget = kDefaultSearchBudget;
  std::size_t workers = 0;
  std::size_t samples = 0;  ///< 0 selects the suite default
};

/// Table-1 simplices with d <= dmax (default 9): δ, volume, no pyramid by the group and geometric tests.
Report verify_table1(const SuiteOptions& opts);
/// The 24 spanning polytopes: δ, spanning, no pyramid, pairwise inequivalent.
Report verify_table2(const SuiteOptions& opts);
/// The non-spanning families for k = 2..kmax (default 4): δ, spanning, pyramids, half-sum invariants.
Report verify_table3(const SuiteOptions& opts);
/// Explicit matrix identities for k = 2..kmax (default 5).
Report verify_matrices(const SuiteOptions& opts);
/// Group δ against counting δ on seeded random simplices (default 500, d <= 5).
Report verify_oracle(const SuiteOptions& opts);
/// HNF sweep against group sweep against named families and Table 1, d <= dmax (default 5).
Report verify_enumeration(const SuiteOptions& opts);
/// Feasibility predicate against enumeration ground truth, d <= dmax (default 6).
Report verify_feasibility(const SuiteOptions& opts);
/// Triangulation split, monotonicity, Stanley and Hibi inequalities, δ invariance.
Report verify_lemmas(const SuiteOptions& opts);
/// generate, transform, add pyramids, classify and replay the witness for every catalog entry.
Report verify_roundtrip(const SuiteOptions& opts);

const std::vector<std::string>& suite_names();
/// Runs a named suite ("tables" combines the three table checks). Throws InvalidArgument on an unknown name.
Report run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace latpoly
