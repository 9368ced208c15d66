#ifndef AGC_SURFACE_INVARIANTS_HPP
#define AGC_SURFACE_INVARIANTS_HPP

#include <optional>

#include "agc/profile.hpp"

namespace agc {

// Closed-form invariants of the covering surface X and the branch curve B.
// Every function evaluates its formula exactly and unconditionally; whether
// the resulting numbers are geometrically admissible is the feasibility
// module's business.

/// g(B) = (2d-1)(d-1) - c - n - s.  May be negative.
BigInt genus_branch(const SingularProfile& p);

/// Degree of the dual curve, 2d(2d-1) - 3c - 2n.
BigInt dual_degree(const SingularProfile& p);

/// (R^2)_X = 2d^2 - c - n.
BigInt ram_self_intersection(const SingularProfile& p);

/// K_X^2 = 9N + 2(d^2 - 6d) - c - n.
BigInt canonical_square(const SingularProfile& p);

/// e(X) = 3N + 2d(2d-3) - 3c - 2n.
BigInt euler_X(const SingularProfile& p);

// Pieces of the Euler-characteristic assembly
//   e(X) = N(e(P^2) - e(B)) + (N-1) e(B \ Sing B) + (N-2) e(Sing B).
BigInt euler_branch_curve(const SingularProfile& p);        // e(B)
BigInt euler_branch_smooth_locus(const SingularProfile& p); // e(B \ Sing B)

/// e(X) assembled from the three part-formulas; equals euler_X identically.
BigInt euler_X_assembled(const SingularProfile& p);

struct ChiResult {
  BigRational value;
  bool integral;
};

/// chi(O_X) = N + d(d-3)/2 - c/3 - n/4, exact.
ChiResult chi_structure(const SingularProfile& p);

/// Noether's identity K^2 + e = 12 chi, checked exactly.
bool noether_check(const SingularProfile& p);

struct HodgeResult {
  BigRational bound;  // 4d^2 / (2d^2 - c - n)
  bool satisfied;     // N (2d^2 - c - n) <= 4d^2
  bool equality;
};

/// Throws NonPositiveDenominator when 2d^2 - c - n <= 0.
HodgeResult hodge_bound(const SingularProfile& p);

/// true iff N < 6 or the profile has pseudo-nodes.
bool pseudo_node_rule(const SingularProfile& p);

struct InvariantReport {
  BigInt genus_B;
  BigInt dual_degree;
  BigInt R_square;
  BigInt K_square;
  BigInt euler_X;
  BigRational chi_OX;
  bool chi_integral;
  bool noether_ok;
  // Absent when R^2 <= 0 (the bound's derivation needs R^2 > 0).
  std::optional<BigRational> hodge_bound;
  std::optional<bool> hodge_ok;
};

InvariantReport make_invariant_report(const SingularProfile& p);

}  // namespace agc

#endif
