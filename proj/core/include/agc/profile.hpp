#ifndef AGC_PROFILE_HPP
#define AGC_PROFILE_HPP

#include <map>
#include <string>
#include <vector>

#include "agc/numbers.hpp"

namespace agc {

/// The three families of branch-curve singular points, keyed by their
/// index k.  S2(k) is an A_{k,2} point (curve singularity A_{2k-1},
/// local group Z2 x Z2).  S3_odd(k) is an A_{2k+1,3} point (A_{6k+2},
/// local group S3) and S3_even(k) an A_{2k,3} point (A_{6k-1}).
enum class Family { S2, S3Odd, S3Even };

std::string family_name(Family f);

class SingularityClass {
 public:
  /// Throws IndexOutOfRange unless k >= 1 for S2/S3Even, k >= 0 for S3Odd.
  SingularityClass(Family family, long k);

  Family family() const { return family_; }
  long k() const { return k_; }

  bool operator==(const SingularityClass&) const = default;

 private:
  Family family_;
  long k_;
};

/// Validating factory; same contract as the constructor.
SingularityClass make_class(Family family, long k);

/// Index m of the underlying curve singularity A_m:
/// S2(k) -> A_{2k-1}, S3_odd(k) -> A_{6k+2}, S3_even(k) -> A_{6k-1}.
long underlying_A_index(const SingularityClass& c);

/// delta-invariant: S2(k) -> k, S3_odd(k) -> 3k+1, S3_even(k) -> 3k.
BigInt delta_invariant(const SingularityClass& c);

struct VirtualCounts {
  BigInt cusps;
  BigInt nodes;
  bool operator==(const VirtualCounts&) const = default;
};

/// Virtual cusp/node counts entering the generalized Pluecker formula:
/// S2(k) -> (0,k), S3_odd(k) -> (1,3k), S3_even(k) -> (0,3k).
VirtualCounts virtual_counts(const SingularityClass& c);

/// Sparse nonnegative counts keyed by class index k, ascending.
using CountMap = std::map<long, BigInt>;

/// A singularity profile of a branch curve of degree 2d under a cover of
/// degree N: counts n_k (S3_odd), m_k (S3_even), t_k (S2).  Plain data;
/// structural invariants are reported by validate_profile.
struct SingularProfile {
  long d = 1;
  long N = 2;
  CountMap n;  // S3_odd, k >= 0
  CountMap m;  // S3_even, k >= 1
  CountMap t;  // S2, k >= 1

  bool operator==(const SingularProfile&) const = default;
};

struct Aggregates {
  BigInt pseudo_cusps;     // c = sum (2k+1)n_k + 2k m_k
  BigInt pseudo_nodes;     // n = sum k t_k
  BigInt superabundance;   // s = sum k (n_k + m_k)
  bool operator==(const Aggregates&) const = default;
};

Aggregates aggregates(const SingularProfile& p);

/// Total number of singular points.
BigInt singular_point_count(const SingularProfile& p);

/// Sum of delta-invariants over all singular points; equals
/// pseudo_cusps + pseudo_nodes + superabundance.
BigInt total_delta(const SingularProfile& p);

/// Structural violations, empty iff the profile is valid.  Violations are
/// stable identifier strings, e.g. "S2-requires-N>=4".
std::vector<std::string> validate_profile(const SingularProfile& p);

inline bool is_valid(const SingularProfile& p) {
  return validate_profile(p).empty();
}

/// Classes present in the profile with their counts, in canonical order
/// (S3_odd ascending k, then S3_even, then S2).
std::vector<std::pair<SingularityClass, BigInt>> support(
    const SingularProfile& p);

// Profile JSON format: {"d": int, "N": int, "s3_odd": {"k": count, ...},
// "s3_even": {...}, "s2": {...}}, string keys for k, absent maps empty.
SingularProfile profile_from_json_text(const std::string& text);
std::string profile_to_json_text(const SingularProfile& p);

}  // namespace agc

#endif
