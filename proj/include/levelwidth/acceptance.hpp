#ifndef LEVELWIDTH_ACCEPTANCE_HPP
#define LEVELWIDTH_ACCEPTANCE_HPP

#include <functional>
#include <string>
#include <vector>

namespace lw {

/// One line of the acceptance table. measured and target are formatted
/// numbers; seconds is wall time and stays out of the data rows.
struct CriterionResult {
  std::string id;
  std::string description;
  bool pass = false;
  std::string measured;
  std::string target;
  double seconds = 0.0;
};

/// Called after each criterion group finishes, e.g. for progress output.
using CriterionHook = std::function<void(const std::vector<CriterionResult>&)>;

/// Criteria 1 to 9.
std::vector<CriterionResult> run_physics_criteria(const CriterionHook& hook = {});

/// Criteria 1 to 9, then criterion 10: a second evaluation of 1 to 9 must
/// produce byte-identical data rows.
std::vector<CriterionResult> run_acceptance(const CriterionHook& hook = {});

/// Data rows "id,pass,measured,target" without comments or timings.
std::string acceptance_rows(const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace lw

#endif  // LEVELWIDTH_ACCEPTANCE_HPP
