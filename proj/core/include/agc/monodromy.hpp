#ifndef AGC_MONODROMY_HPP
#define AGC_MONODROMY_HPP

#include <complex>
#include <set>
#include <vector>

#include "agc/permutation.hpp"

namespace agc {

using Complex = std::complex<double>;

struct TrackingParams {
  double newton_tol = 1e-12;      // residual bound after correction
  double max_step_fraction = 0.2; // of the current minimal root gap
  double clearance_fraction = 0.1;// of the branch-point separation
  int max_newton_iters = 50;
  double min_separation = 1e-9;   // roots closer than this: PathTooClose
};

/// A line section of one of the local cover models, carrying the fiber
/// polynomial in w whose roots are tracked.  The loop coordinate s moves in
/// the v-plane for S3Cover, in the u-plane for Smooth2 and S2Pair.
class FiberModel {
 public:
  enum class Kind { Smooth2, S2Pair, S3Cover };

  /// w^2 - u over the u-disc; basepoint u = 1.
  static FiberModel smooth2();
  /// Quartic (w^2 - u)(w^2 - (u - v0^k)) on the line v = v0; the two
  /// branches u = 0 and u = v0^k are circled in the u-plane.
  static FiberModel s2_pair(long k, Complex v0 = Complex(1.2, 0.0));
  /// Cubic w^3 - 3 u0^n w - v on the line u = u0, loops in the v-plane;
  /// basepoint v = 0.
  static FiberModel s3_cover(long n, Complex u0 = Complex(1.0, 0.0));

  Kind kind() const { return kind_; }
  long index() const { return index_; }
  /// Basepoint (u0, v0); the moving coordinate's start is base().
  Complex u0() const { return u0_; }
  Complex v0() const { return v0_; }
  Complex base() const;

  int fiber_degree() const;
  /// Coefficients of the fiber polynomial in w at loop coordinate s,
  /// constant term first.
  std::vector<Complex> coefficients(Complex s) const;
  Complex dF_ds(Complex w, Complex s) const;
  /// Branch values in the moving plane, sorted deterministically.
  std::vector<Complex> branch_points() const;

 private:
  FiberModel(Kind kind, long index, Complex u0, Complex v0)
      : kind_(kind), index_(index), u0_(u0), v0_(v0) {}
  Kind kind_;
  long index_;
  Complex u0_, v0_;
};

struct PathPiece {
  enum class Kind { Segment, Arc };
  Kind kind;
  Complex a, b;        // segment endpoints
  Complex center;      // arc data
  double radius = 0.0;
  double theta0 = 0.0, theta1 = 0.0;

  Complex at(double t) const;        // t in [0, 1]
  Complex velocity(double t) const;  // d(at)/dt
};

/// Piecewise path starting and ending at the basepoint.
struct Loop {
  std::vector<PathPiece> pieces;
  Complex start() const { return pieces.front().at(0.0); }
};

/// Segment to a circle of `radius` around `center`, the circle
/// (counterclockwise), and the return segment.
Loop loop_around(Complex base, Complex center, double radius);
/// Same shape with the circle entered along direction `approach` from the
/// center; used for large circles enclosing several branch points.
Loop loop_around_via(Complex base, Complex center, double radius,
                     Complex approach);
Loop reversed(const Loop& loop);
Loop concatenated(const Loop& first, const Loop& second);

/// Throws PathTooClose unless every piece keeps at least `clearance` away
/// from every listed point.
void validate_loop(const Loop& loop, const std::vector<Complex>& branch_points,
                   double clearance);

/// All roots of a polynomial with the given coefficients (constant first),
/// by Durand-Kerner iteration with Newton polish.  Degree <= 4 here.
std::vector<Complex> all_roots(const std::vector<Complex>& coeffs);

struct TrackResult {
  PermutationWord permutation;
  double max_newton_residual = 0.0;
  long steps = 0;
};

/// Tracks the fiber along the loop by adaptive Euler prediction + Newton
/// correction and matches end roots to start roots by minimal-total-distance
/// assignment.  Throws PathTooClose / NoConvergence.
TrackResult track_fiber(const FiberModel& model, const Loop& loop,
                        const TrackingParams& params = {});

/// One standard loop per branch point, in branch_points() order.
std::vector<Loop> standard_loops(const FiberModel& model,
                                 const TrackingParams& params = {});

struct MonodromyCertificate {
  std::vector<PermutationWord> generators;  // one per branch point
  GroupDescriptor group;
  std::vector<Complex> branch_points;
  double max_newton_residual = 0.0;
};

/// Tracks every standard loop and generates the local monodromy group.
MonodromyCertificate local_monodromy_group(const FiberModel& model,
                                           const TrackingParams& params = {});

/// Whether the local fundamental-group relation
/// (g1 g2)^k g1^{1-delta} = (g2 g1)^k g2^{1-delta}  (m = 2k - delta)
/// holds in S3 under g1 -> (1 3), g2 -> (2 3).
bool presentation_admissible(long m);

/// { m <= m_max : presentation_admissible(m) }.
std::set<long> admissible_set(long m_max);

}  // namespace agc

#endif
