#ifndef AGC_LOCAL_MODELS_HPP
#define AGC_LOCAL_MODELS_HPP

#include "agc/bivariate.hpp"

namespace agc {

// Exact symbolic verification of the local normal-form covers
//   u = z, v = w^3 - 3 z^n w   (v = w^3 when n = 0),
// their ramification and branch curves, the residual curve of the induced
// Galois closure, and the surface germ types over the singular points.

/// Local three-sheeted cover normal form of index n >= 0.
struct CoverGerm {
  long n;
  explicit CoverGerm(long index) : n(index) {
    if (n < 0) throw IndexOutOfRange("cover germ index must be >= 0");
  }
};

/// The v-component of the cover in source coordinates (z, w).
BivariatePolynomial cover_v_component(const CoverGerm& g);

/// Ramification-curve equation (dv/dw)/3: w^2 - z^n (w^2 when n = 0).
BivariatePolynomial jacobian_ramification(const CoverGerm& g);

struct GermClassification {
  enum class Kind { Smooth, A, NotRecognized };
  Kind kind = Kind::NotRecognized;
  long m = 0;  // valid when kind == A

  static GermClassification smooth() { return {Kind::Smooth, 0}; }
  static GermClassification a_type(long m) { return {Kind::A, m}; }
  static GermClassification not_recognized() {
    return {Kind::NotRecognized, 0};
  }
  bool operator==(const GermClassification&) const = default;
};

std::string to_string(const GermClassification& c);

struct DiscriminantResult {
  BivariatePolynomial resultant;   // Sylvester determinant, disc sign
  BivariatePolynomial normalized;  // primitive, monic in v
};

/// Discriminant of the cover's fiber cubic, eliminating w between
/// v(z,w) - v and its w-derivative by a fraction-free Sylvester
/// determinant.  Equals -27 (v^2 - 4 u^{3n}) for n >= 1 and -27 v^2 for
/// n = 0; `normalized` strips content and sign.
DiscriminantResult discriminant_curve(long n);

/// Recognizes plane-curve germs F(u, v) that are quadratic in v with a
/// constant leading coefficient: F = c v^2 + a(u) v + b(u).  Returns Smooth
/// when the multiplicity at the origin is < 2, A(m) with
/// m = ord_0(a^2 - 4cb) - 1 otherwise, NotRecognized for non-reduced input.
/// Throws UnsupportedShape for any other shape.
GermClassification classify_plane_Am(const BivariatePolynomial& F);

/// Classification of the branch curve of the cover of index n: A(3n-1) for
/// n >= 1 via the discriminant pipeline; Smooth for n = 0 (the branch
/// divisor v^2 = 0 has smooth reduced curve v = 0).
GermClassification classify_branch_germ(long n);

/// The curve C_n complementary to 2 R_n inside the pullback of the branch
/// curve: exact quotient of (w^3 - 3 z^n w)^2 - 4 z^{3n} by (w^2 - z^n)^2.
/// Equals w^2 - 4 z^n; throws InexactDivision if the division leaves a
/// remainder (internal-consistency failure).
BivariatePolynomial residual_curve(long n);

enum class LocalGroupCase { S2, S3 };

/// Surface germ type of the Galois closure over a branch point whose local
/// index is n: Smooth for n = 1, A(n-1) for n >= 2.  Derived by matching
/// the germ (w^2 = z^2 - v^n for S2, y^2 = w^2 - 4 z^n for S3) to the
/// suspension x^2 + y^2 + c s^n after diagonalizing its rank-2 quadratic
/// part.
GermClassification galois_local_type(LocalGroupCase c, long n);

/// Substitutes the branch-curve parametrization (u, v) = (t^2, -2 t^{3n})
/// for odd n, (z, -+2 z^{3n/2}) for even n, into the normalized
/// discriminant and checks that it vanishes identically.
bool branch_parametrization_check(long n);

}  // namespace agc

#endif
