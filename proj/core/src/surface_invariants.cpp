#include "agc/surface_invariants.hpp"

namespace agc {

BigInt genus_branch(const SingularProfile& p) {
  const Aggregates a = aggregates(p);
  return BigInt(2 * p.d - 1) * (p.d - 1) - a.pseudo_cusps - a.pseudo_nodes -
         a.superabundance;
}

BigInt dual_degree(const SingularProfile& p) {
  const Aggregates a = aggregates(p);
  return BigInt(2 * p.d) * (2 * p.d - 1) - 3 * a.pseudo_cusps -
         2 * a.pseudo_nodes;
}

BigInt ram_self_intersection(const SingularProfile& p) {
  const Aggregates a = aggregates(p);
  return 2 * BigInt(p.d) * p.d - a.pseudo_cusps - a.pseudo_nodes;
}

BigInt canonical_square(const SingularProfile& p) {
  const Aggregates a = aggregates(p);
  return 9 * BigInt(p.N) + 2 * (BigInt(p.d) * p.d - 6 * p.d) -
         a.pseudo_cusps - a.pseudo_nodes;
}

BigInt euler_X(const SingularProfile& p) {
  const Aggregates a = aggregates(p);
  return 3 * BigInt(p.N) + 2 * BigInt(p.d) * (2 * p.d - 3) -
         3 * a.pseudo_cusps - 2 * a.pseudo_nodes;
}

BigInt euler_branch_curve(const SingularProfile& p) {
  // e(B) = (2 - 2g) - sum_{k>=1} (m_k + t_k); the bibranch points (even
  // A-index families) each glue one extra point pair in the normalization.
  BigInt correction = 0;
  for (const auto& [k, mk] : p.m) correction += mk;
  for (const auto& [k, tk] : p.t) correction += tk;
  return 2 - 2 * genus_branch(p) - correction;
}

BigInt euler_branch_smooth_locus(const SingularProfile& p) {
  // e(B \ Sing B) = (2 - 2g) - n_0 - sum_{k>=1} (n_k + 2 m_k + 2 t_k),
  // removing one normalization preimage per unibranch point and two per
  // bibranch point.
  BigInt removed = 0;
  for (const auto& [k, nk] : p.n) removed += nk;
  for (const auto& [k, mk] : p.m) removed += 2 * mk;
  for (const auto& [k, tk] : p.t) removed += 2 * tk;
  return 2 - 2 * genus_branch(p) - removed;
}

BigInt euler_X_assembled(const SingularProfile& p) {
  const BigInt e_B = euler_branch_curve(p);
  const BigInt e_smooth = euler_branch_smooth_locus(p);
  const BigInt e_sing = singular_point_count(p);
  return p.N * (3 - e_B) + (p.N - 1) * e_smooth + (p.N - 2) * e_sing;
}

ChiResult chi_structure(const SingularProfile& p) {
  const Aggregates a = aggregates(p);
  BigRational chi(p.N);
  chi += make_rational(BigInt(p.d) * (p.d - 3), 2);
  chi -= make_rational(a.pseudo_cusps, 3);
  chi -= make_rational(a.pseudo_nodes, 4);
  return {chi, is_integral(chi)};
}

bool noether_check(const SingularProfile& p) {
  BigRational lhs(canonical_square(p) + euler_X(p));
  return lhs == 12 * chi_structure(p).value;
}

HodgeResult hodge_bound(const SingularProfile& p) {
  const BigInt r2 = ram_self_intersection(p);
  if (r2 <= 0) {
    throw NonPositiveDenominator("2d^2 - c - n = " + r2.get_str() +
                                 " is not positive");
  }
  const BigInt four_d2 = 4 * BigInt(p.d) * p.d;
  HodgeResult h;
  h.bound = make_rational(four_d2, r2);
  h.satisfied = p.N * r2 <= four_d2;
  h.equality = p.N * r2 == four_d2;
  return h;
}

bool pseudo_node_rule(const SingularProfile& p) {
  return p.N < 6 || aggregates(p).pseudo_nodes > 0;
}

InvariantReport make_invariant_report(const SingularProfile& p) {
  InvariantReport r;
  r.genus_B = genus_branch(p);
  r.dual_degree = agc::dual_degree(p);
  r.R_square = ram_self_intersection(p);
  r.K_square = canonical_square(p);
  r.euler_X = agc::euler_X(p);
  const ChiResult chi = chi_structure(p);
  r.chi_OX = chi.value;
  r.chi_integral = chi.integral;
  r.noether_ok = noether_check(p);
  if (r.R_square > 0) {
    const HodgeResult h = hodge_bound(p);
    r.hodge_bound = h.bound;
    r.hodge_ok = h.satisfied;
  }
  return r;
}

}  // namespace agc
