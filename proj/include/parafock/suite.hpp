#pragma once

#include <optional>
#include <string>
#include <vector>

namespace parafock {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double measured = 0.0;   // worst observed value of the gated quantity
  double threshold = 0.0;  // the gate
  double seconds = 0.0;
  std::string detail;
};

struct SuiteOptions {
  /// Added to the p grids of the algebraic checks (criteria 1 to 3).
  std::optional<double> extra_p;
  /// Cutoff used by criteria 1 and 2.
  int cutoff = 8;
};

CriterionResult check_triple_relations(const SuiteOptions& opt);
CriterionResult check_unitarity(const SuiteOptions& opt);
CriterionResult check_zero_modes(const SuiteOptions& opt);
CriterionResult check_coherent_norms(const SuiteOptions& opt);
CriterionResult check_eigen_residuals(const SuiteOptions& opt);
CriterionResult check_b2_elements(const SuiteOptions& opt);
CriterionResult check_bicoherent(const SuiteOptions& opt);
CriterionResult check_special_functions(const SuiteOptions& opt);
CriterionResult check_moments(const SuiteOptions& opt);
CriterionResult check_resolution(const SuiteOptions& opt);

/// Criteria 1 to 10 in order. Exceptions inside a check turn into a failed
/// result carrying the message.
std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& opt = {});

}  // namespace parafock
