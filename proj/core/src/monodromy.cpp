#include "agc/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace agc {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

Complex cpow(Complex base, long e) {
  Complex acc(1.0, 0.0);
  for (long i = 0; i < e; ++i) acc *= base;
  return acc;
}

bool lex_less(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

FiberModel FiberModel::smooth2() {
  return FiberModel(Kind::Smooth2, 0, Complex(1.0, 0.0), Complex(0.0, 0.0));
}

FiberModel FiberModel::s2_pair(long k, Complex v0) {
  if (k < 1) throw IndexOutOfRange("s2_pair needs k >= 1");
  // Basepoint below the midpoint of the two branch values 0 and v0^k, so
  // the standard loops stay clear of the opposite branch point.
  const Complex scale = cpow(v0, k);
  return FiberModel(Kind::S2Pair, k, scale * Complex(0.5, -0.75), v0);
}

FiberModel FiberModel::s3_cover(long n, Complex u0) {
  if (n < 1) throw IndexOutOfRange("s3_cover needs n >= 1");
  return FiberModel(Kind::S3Cover, n, u0, Complex(0.0, 0.0));
}

Complex FiberModel::base() const {
  return kind_ == Kind::S3Cover ? v0_ : u0_;
}

int FiberModel::fiber_degree() const {
  switch (kind_) {
    case Kind::Smooth2: return 2;
    case Kind::S3Cover: return 3;
    case Kind::S2Pair: return 4;
  }
  return 0;
}

std::vector<Complex> FiberModel::coefficients(Complex s) const {
  switch (kind_) {
    case Kind::Smooth2:
      return {-s, Complex(0.0), Complex(1.0)};
    case Kind::S3Cover:
      return {-s, -3.0 * cpow(u0_, index_), Complex(0.0), Complex(1.0)};
    case Kind::S2Pair: {
      // (w^2 - s)(w^2 - (s - c)) with c = v0^k
      const Complex c = cpow(v0_, index_);
      return {s * (s - c), Complex(0.0), -(2.0 * s - c), Complex(0.0),
              Complex(1.0)};
    }
  }
  return {};
}

Complex FiberModel::dF_ds(Complex w, Complex s) const {
  switch (kind_) {
    case Kind::Smooth2:
    case Kind::S3Cover:
      return Complex(-1.0);
    case Kind::S2Pair:
      return -2.0 * w * w + 2.0 * s - cpow(v0_, index_);
  }
  return Complex(0.0);
}

std::vector<Complex> FiberModel::branch_points() const {
  std::vector<Complex> pts;
  switch (kind_) {
    case Kind::Smooth2:
      pts = {Complex(0.0)};
      break;
    case Kind::S3Cover: {
      // Discriminant on the line: 27 (4 u0^{3n} - v^2) = 0.
      const Complex root = std::sqrt(cpow(u0_, 3 * index_));
      pts = {2.0 * root, -2.0 * root};
      break;
    }
    case Kind::S2Pair:
      pts = {Complex(0.0), cpow(v0_, index_)};
      break;
  }
  std::sort(pts.begin(), pts.end(), lex_less);
  return pts;
}

Complex PathPiece::at(double t) const {
  if (kind == Kind::Segment) return a + t * (b - a);
  const double theta = theta0 + t * (theta1 - theta0);
  return center + radius * Complex(std::cos(theta), std::sin(theta));
}

Complex PathPiece::velocity(double t) const {
  if (kind == Kind::Segment) return b - a;
  const double theta = theta0 + t * (theta1 - theta0);
  return radius * (theta1 - theta0) *
         Complex(-std::sin(theta), std::cos(theta));
}

Loop loop_around(Complex base, Complex center, double radius) {
  return loop_around_via(base, center, radius, base - center);
}

Loop loop_around_via(Complex base, Complex center, double radius,
                     Complex approach) {
  const Complex dir = approach / std::abs(approach);
  const Complex entry = center + radius * dir;
  const double theta = std::arg(dir);
  Loop loop;
  loop.pieces.push_back(
      {PathPiece::Kind::Segment, base, entry, Complex(0.0), 0.0, 0.0, 0.0});
  loop.pieces.push_back({PathPiece::Kind::Arc, Complex(0.0), Complex(0.0),
                         center, radius, theta, theta + kTau});
  loop.pieces.push_back(
      {PathPiece::Kind::Segment, entry, base, Complex(0.0), 0.0, 0.0, 0.0});
  return loop;
}

Loop reversed(const Loop& loop) {
  Loop out;
  for (auto it = loop.pieces.rbegin(); it != loop.pieces.rend(); ++it) {
    PathPiece p = *it;
    if (p.kind == PathPiece::Kind::Segment) {
      std::swap(p.a, p.b);
    } else {
      std::swap(p.theta0, p.theta1);
    }
    out.pieces.push_back(p);
  }
  return out;
}

Loop concatenated(const Loop& first, const Loop& second) {
  Loop out = first;
  out.pieces.insert(out.pieces.end(), second.pieces.begin(),
                    second.pieces.end());
  return out;
}

namespace {

double segment_distance(Complex a, Complex b, Complex p) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  double t = ((p - a).real() * ab.real() + (p - a).imag() * ab.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

double arc_distance(const PathPiece& arc, Complex p) {
  const Complex d = p - arc.center;
  const double dist = std::abs(d);
  const double lo = std::min(arc.theta0, arc.theta1);
  const double hi = std::max(arc.theta0, arc.theta1);
  if (hi - lo >= kTau - 1e-12) return std::abs(dist - arc.radius);
  double phi = std::arg(d);
  while (phi < lo) phi += kTau;
  if (phi <= hi) return std::abs(dist - arc.radius);
  return std::min(std::abs(p - arc.at(0.0)), std::abs(p - arc.at(1.0)));
}

double piece_distance(const PathPiece& piece, Complex p) {
  if (piece.kind == PathPiece::Kind::Segment) {
    return segment_distance(piece.a, piece.b, p);
  }
  return arc_distance(piece, p);
}

Complex poly_eval(const std::vector<Complex>& coeffs, Complex w) {
  Complex acc(0.0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * w + *it;
  }
  return acc;
}

Complex poly_eval_deriv(const std::vector<Complex>& coeffs, Complex w) {
  Complex acc(0.0);
  for (size_t i = coeffs.size() - 1; i >= 1; --i) {
    acc = acc * w + static_cast<double>(i) * coeffs[i];
  }
  return acc;
}

double min_pairwise_gap(const std::vector<Complex>& pts) {
  double gap = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t j = i + 1; j < pts.size(); ++j) {
      gap = std::min(gap, std::abs(pts[i] - pts[j]));
    }
  }
  return gap;
}

/// Newton iteration to |F| < tol; returns false on stall.
bool newton_correct(const std::vector<Complex>& coeffs, Complex& w, double tol,
                    int max_iters, double* residual_out) {
  for (int it = 0; it < max_iters; ++it) {
    const Complex f = poly_eval(coeffs, w);
    const double resid = std::abs(f);
    if (resid < tol) {
      if (residual_out) *residual_out = resid;
      return true;
    }
    const Complex df = poly_eval_deriv(coeffs, w);
    if (std::abs(df) < 1e-300) return false;
    w -= f / df;
  }
  return std::abs(poly_eval(coeffs, w)) < tol;
}

}  // namespace

void validate_loop(const Loop& loop, const std::vector<Complex>& branch_points,
                   double clearance) {
  for (const auto& piece : loop.pieces) {
    for (const Complex& b : branch_points) {
      const double dist = piece_distance(piece, b);
      if (dist < clearance) {
        throw PathTooClose("path passes within " + std::to_string(dist) +
                           " of branch point (clearance " +
                           std::to_string(clearance) + ")");
      }
    }
  }
}

std::vector<Complex> all_roots(const std::vector<Complex>& coeffs) {
  const int deg = static_cast<int>(coeffs.size()) - 1;
  double bound = 0.0;
  for (int i = 0; i < deg; ++i) {
    bound = std::max(bound, std::abs(coeffs[i] / coeffs[deg]));
  }
  bound = 1.0 + bound;
  // Durand-Kerner from standard staggered starting values.
  std::vector<Complex> roots(deg);
  const Complex seed(0.4, 0.9);
  Complex v(1.0, 0.0);
  for (int i = 0; i < deg; ++i) {
    v *= seed;
    roots[i] = bound * v;
  }
  for (int iter = 0; iter < 200; ++iter) {
    double shift = 0.0;
    for (int i = 0; i < deg; ++i) {
      Complex denom = coeffs[deg];
      for (int j = 0; j < deg; ++j) {
        if (j != i) denom *= roots[i] - roots[j];
      }
      const Complex delta = poly_eval(coeffs, roots[i]) / denom;
      roots[i] -= delta;
      shift = std::max(shift, std::abs(delta));
    }
    if (shift < 1e-14) break;
  }
  for (auto& r : roots) {
    newton_correct(coeffs, r, 1e-13, 100, nullptr);
  }
  std::sort(roots.begin(), roots.end(), lex_less);
  return roots;
}

namespace {

/// Minimal-total-distance assignment end[i] -> start[sigma(i)], brute force
/// over all permutations (fibers have at most 4 points).
PermutationWord match_roots(const std::vector<Complex>& start,
                            const std::vector<Complex>& end) {
  const int d = static_cast<int>(start.size());
  std::vector<int> perm(d), best(d);
  for (int i = 0; i < d; ++i) perm[i] = i;
  double best_cost = std::numeric_limits<double>::infinity();
  do {
    double cost = 0.0;
    for (int i = 0; i < d; ++i) cost += std::abs(end[i] - start[perm[i]]);
    if (cost < best_cost) {
      best_cost = cost;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  const double start_gap = min_pairwise_gap(start);
  if (best_cost > 0.25 * start_gap * d) {
    throw NoConvergence("tracked roots did not return near the start fiber");
  }
  return PermutationWord::from_images(best);
}

}  // namespace

TrackResult track_fiber(const FiberModel& model, const Loop& loop,
                        const TrackingParams& params) {
  const auto branch = model.branch_points();
  const double branch_gap =
      branch.size() > 1 ? min_pairwise_gap(branch) : std::abs(loop.start() - branch.front());
  validate_loop(loop, branch, params.clearance_fraction * branch_gap);

  if (std::abs(loop.start() - model.base()) > 1e-12) {
    throw PathTooClose("loop must start at the model basepoint");
  }

  TrackResult result;
  std::vector<Complex> roots = all_roots(model.coefficients(model.base()));
  const std::vector<Complex> start_roots = roots;

  for (const auto& piece : loop.pieces) {
    double t = 0.0;
    while (t < 1.0) {
      const double gap = min_pairwise_gap(roots);
      if (gap < params.min_separation) {
        throw PathTooClose("fiber roots collided during tracking");
      }
      const Complex s = piece.at(t);
      const auto coeffs = model.coefficients(s);
      // Root velocity dw/dt = -(dF/ds * ds/dt) / (dF/dw).
      double vmax = 1e-12;
      std::vector<Complex> dw_dt(roots.size());
      const Complex ds_dt = piece.velocity(t);
      for (size_t i = 0; i < roots.size(); ++i) {
        const Complex dfdw = poly_eval_deriv(coeffs, roots[i]);
        dw_dt[i] = -model.dF_ds(roots[i], s) * ds_dt / dfdw;
        vmax = std::max(vmax, std::abs(dw_dt[i]));
      }
      double dt = std::min(1.0 - t, params.max_step_fraction * gap / vmax);
      bool accepted = false;
      while (!accepted) {
        if (dt < 1e-12) {
          throw NoConvergence("step size underflow during tracking");
        }
        const Complex s_next = piece.at(t + dt);
        const auto coeffs_next = model.coefficients(s_next);
        std::vector<Complex> corrected(roots.size());
        bool ok = true;
        double worst_resid = 0.0;
        for (size_t i = 0; i < roots.size() && ok; ++i) {
          Complex w = roots[i] + dw_dt[i] * dt;  // Euler predictor
          double resid = 0.0;
          ok = newton_correct(coeffs_next, w, params.newton_tol,
                              params.max_newton_iters, &resid);
          // The corrected root must stay within the trust region around
          // its predecessor, otherwise we may have hopped sheets.
          ok = ok && std::abs(w - roots[i]) <= 0.5 * gap;
          corrected[i] = w;
          worst_resid = std::max(worst_resid, resid);
        }
        ok = ok && min_pairwise_gap(corrected) >= params.min_separation;
        if (ok) {
          roots = std::move(corrected);
          result.max_newton_residual =
              std::max(result.max_newton_residual, worst_resid);
          t += dt;
          ++result.steps;
          accepted = true;
        } else {
          dt *= 0.5;
        }
      }
    }
  }

  result.permutation = match_roots(start_roots, roots);
  return result;
}

std::vector<Loop> standard_loops(const FiberModel& model,
                                 const TrackingParams& params) {
  (void)params;
  const auto branch = model.branch_points();
  const Complex base = model.base();
  std::vector<Loop> loops;
  for (size_t i = 0; i < branch.size(); ++i) {
    double nearest = std::numeric_limits<double>::infinity();
    for (size_t j = 0; j < branch.size(); ++j) {
      if (j != i) nearest = std::min(nearest, std::abs(branch[i] - branch[j]));
    }
    const double radius = branch.size() > 1
                              ? 0.25 * nearest
                              : 0.5 * std::abs(base - branch[i]);
    loops.push_back(loop_around(base, branch[i], radius));
  }
  return loops;
}

MonodromyCertificate local_monodromy_group(const FiberModel& model,
                                           const TrackingParams& params) {
  MonodromyCertificate cert;
  cert.branch_points = model.branch_points();
  for (const Loop& loop : standard_loops(model, params)) {
    TrackResult tracked = track_fiber(model, loop, params);
    cert.max_newton_residual =
        std::max(cert.max_newton_residual, tracked.max_newton_residual);
    cert.generators.push_back(std::move(tracked.permutation));
  }
  cert.group = describe_group(cert.generators);
  return cert;
}

bool presentation_admissible(long m) {
  if (m < 1) throw IndexOutOfRange("presentation index m must be >= 1");
  const long delta = m % 2;
  const long k = (m + delta) / 2;  // m = 2k - delta
  const PermutationWord t1 = PermutationWord::transposition(3, 0, 2);  // (1 3)
  const PermutationWord t2 = PermutationWord::transposition(3, 1, 2);  // (2 3)
  const PermutationWord lhs = t1.then(t2).power(k).then(t1.power(1 - delta));
  const PermutationWord rhs = t2.then(t1).power(k).then(t2.power(1 - delta));
  return lhs == rhs;
}

std::set<long> admissible_set(long m_max) {
  if (m_max < 1) throw IndexOutOfRange("m_max must be >= 1");
  std::set<long> out;
  for (long m = 1; m <= m_max; ++m) {
    if (presentation_admissible(m)) out.insert(m);
  }
  return out;
}

}  // namespace agc
