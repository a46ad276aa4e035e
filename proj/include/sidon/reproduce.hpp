#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace sidon {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct ReproduceOptions {
  /// Replaces the computed singular-integral value in the bracket criterion only.
  std::optional<double> integral_override;
  unsigned threads = 0;
};

/// Runs every acceptance criterion in order. Criteria never throw; an exception inside
/// one is reported as its failure.
std::vector<CriterionResult> run_acceptance(const ReproduceOptions& options = {});

bool all_passed(const std::vector<CriterionResult>& results);
std::string acceptance_text(const std::vector<CriterionResult>& results);
nlohmann::json acceptance_json(const std::vector<CriterionResult>& results);

// Individual criteria, exposed for targeted runs.
CriterionResult check_singular_bracket(const ReproduceOptions& options = {});
CriterionResult check_truncation_bound();
CriterionResult check_final_constant();
CriterionResult check_beta_identity();
CriterionResult check_growth_of_s(const ReproduceOptions& options = {});
CriterionResult check_z_expectation();
CriterionResult check_riemann_convergence();
CriterionResult check_goguel_density(const ReproduceOptions& options = {});
CriterionResult check_oracle_equivalence();
CriterionResult check_concentration(const ReproduceOptions& options = {});

}  // namespace sidon
