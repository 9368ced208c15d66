#ifndef AGC_GALOIS_INVARIANTS_HPP
#define AGC_GALOIS_INVARIANTS_HPP

#include <string>
#include <vector>

#include "agc/profile.hpp"

namespace agc {

// Invariants of the Galois closure cover Y -> P^2 (degree N!) and of the
// minimal resolution Z of Y.  Several quantities admit two evaluation
// routes: the formula as printed, and a recomputation from the local germ
// types (an A_{j} surface point resolves to a chain of j (-2)-curves).
// Both are computed and mismatches are flagged, not adjudicated.

/// Chain length of the exceptional locus over one singular point of Y
/// lying above a branch point of the given class:
/// S2(k) -> k-1, S3_odd(k) -> 2k, S3_even(k) -> 2k-1.
long resolution_chain_length(const SingularityClass& c);

/// S = N!( (1/6) sum_{k>=1}(n_k+m_k) + (1/4) sum_{k>=2} t_k ).
/// Exact rational; integral for every structurally valid profile.
BigRational galois_singular_count(const SingularProfile& p);

struct PrintedAndChain {
  BigRational printed;
  BigRational chain;
  bool agree() const { return printed == chain; }
};

/// Number M of (-2)-curves contracted by Z -> Y.  printed follows the
/// formula's t-coefficient (2k-1); chain uses germ chain lengths (k-1).
PrintedAndChain exceptional_curve_count(const SingularProfile& p);

/// e of the preimage of Sing B in Z.  printed uses the t-coefficient 2k
/// (k>=2); chain uses e = chain length + 1 per point, i.e. coefficient k.
PrintedAndChain euler_preimage_sing(const SingularProfile& p);

/// K_Z^2 = (d-3)^2 N!.
BigInt canonical_square_Z(const SingularProfile& p);

/// e(Z): closed form as printed vs the three-part assembly
/// N!(e(P^2)-e(B)) + (N!/2) e(B \ Sing B) + e(preimage of Sing B).
struct EulerZResult {
  BigRational closed;
  BigRational assembled;
  bool agree() const { return closed == assembled; }
};
EulerZResult euler_Z(const SingularProfile& p);

struct ChiZResult {
  BigRational value;
  bool integral;
};

/// (K_Z^2 + e(Z) assembled) / 12.
ChiZResult chi_Z(const SingularProfile& p);
/// Same with the closed-form e(Z); integrality failure is a diagnostic.
ChiZResult chi_Z_from_closed(const SingularProfile& p);

struct GaloisReport {
  BigRational S_sing;
  BigRational M_printed;
  BigRational M_chain;
  BigRational e_presing_printed;
  BigRational e_presing_chain;
  BigInt KZ_square;
  BigRational eZ_closed;
  BigRational eZ_assembled;
  BigRational chiZ_from_assembled;
  bool chiZ_from_assembled_integral;
  BigRational chiZ_from_closed;
  bool chiZ_from_closed_integral;
  std::vector<std::string> discrepancy_flags;
};

/// Flag names: "M_t_coefficient", "eS_t_coefficient",
/// "eZ_closed_vs_assembled", "chiZ_from_closed_nonintegral".
GaloisReport make_galois_report(const SingularProfile& p);

}  // namespace agc

#endif
