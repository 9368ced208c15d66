#ifndef AGC_FEASIBILITY_HPP
#define AGC_FEASIBILITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "agc/profile.hpp"

namespace agc {

// Necessary conditions collected from the invariant formulas.  Passing all
// of them certifies nothing beyond necessity: no realizability claim.

struct ConstraintCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct ConstraintReport {
  std::vector<ConstraintCheck> checks;
  bool admissible() const;
  const ConstraintCheck* find(const std::string& name) const;
};

/// Runs the nine checks in a fixed order: genus_nonneg,
/// dual_degree_positive, R2_positive, cusp_divisibility, node_divisibility,
/// chi_integral, hodge_inequality, pseudo_node_rule, structural_validity.
/// Never throws on infeasible input.
ConstraintReport check_constraints(const SingularProfile& p);

struct EnumerationQuery {
  long d = 1;
  std::optional<long> N;         // absent: all N the constraints allow
  long k_max = 0;                // class indices k <= k_max
  std::optional<long> count_cap; // per-class cap; absent: delta budget only
  unsigned long node_limit = 20'000'000;
  int jobs = 1;
  bool brute_force = false;      // full box scan, no delta-budget pruning
};

struct EnumeratedProfile {
  SingularProfile profile;
  ConstraintReport report;
};

/// Emits exactly the admissible profiles inside the query box, sorted by
/// (total delta, count vector, N).  The pruned search walks count vectors
/// with the budget sum(delta) <= (2d-1)(d-1) implied by genus >= 0; the
/// brute-force mode scans the whole capped box and filters, as an oracle.
/// Throws BudgetExceeded when the box exceeds node_limit.
std::vector<EnumeratedProfile> enumerate_profiles(const EnumerationQuery& q);

}  // namespace agc

#endif
