#include "agc/local_models.hpp"

namespace agc {

namespace {

const std::array<std::string, 2> kSourceVars{"z", "w"};
const std::array<std::string, 2> kTargetVars{"u", "v"};

}  // namespace

BivariatePolynomial cover_v_component(const CoverGerm& g) {
  BivariatePolynomial v = BivariatePolynomial::monomial(0, 3, 1, kSourceVars);
  if (g.n >= 1) {
    v += BivariatePolynomial::monomial(g.n, 1, -3, kSourceVars);
  }
  return v;
}

BivariatePolynomial jacobian_ramification(const CoverGerm& g) {
  const BivariatePolynomial v = cover_v_component(g);
  BivariatePolynomial dv(kSourceVars);
  for (const auto& [e, c] : v.terms()) {
    if (e.second > 0) dv.add_term(e.first, e.second - 1, c * e.second);
  }
  return divide_exact(dv, BivariatePolynomial::constant(3, kSourceVars));
}

std::string to_string(const GermClassification& c) {
  switch (c.kind) {
    case GermClassification::Kind::Smooth: return "smooth";
    case GermClassification::Kind::A: return "A" + std::to_string(c.m);
    case GermClassification::Kind::NotRecognized: return "not-recognized";
  }
  return "?";
}

DiscriminantResult discriminant_curve(long n) {
  if (n < 0) throw IndexOutOfRange("discriminant_curve needs n >= 0");
  // Fiber equation w^3 - 3 u^n w - v = 0 as a cubic in w over Z[u,v].
  const BivariatePolynomial zero(kTargetVars);
  const BivariatePolynomial one =
      BivariatePolynomial::constant(1, kTargetVars);
  std::vector<BivariatePolynomial> f{
      BivariatePolynomial::monomial(0, 1, -1, kTargetVars),  // -v
      n >= 1 ? BivariatePolynomial::monomial(n, 0, -3, kTargetVars) : zero,
      zero, one};
  std::vector<BivariatePolynomial> dfdw{f[1], zero,
                                        BivariatePolynomial::constant(3, kTargetVars)};
  const BivariatePolynomial res = sylvester_resultant(f, dfdw);
  // disc = (-1)^{m(m-1)/2} Res(f, f')/lc(f); for a monic cubic that is -Res.
  DiscriminantResult out;
  out.resultant = -res;
  out.normalized = normalized_primitive(out.resultant, 1);
  return out;
}

GermClassification classify_plane_Am(const BivariatePolynomial& F) {
  if (F.is_zero()) throw UnsupportedShape("cannot classify zero polynomial");
  if (F.order_at_origin() < 2) return GermClassification::smooth();
  if (F.degree(1) != 2) {
    throw UnsupportedShape("germ is not quadratic in " + F.vars()[1]);
  }
  const BivariatePolynomial lead = F.coefficient_of(1, 2);
  if (lead.degree(0) != 0) {
    throw UnsupportedShape("leading v-coefficient is not constant");
  }
  const BigInt c = lead.terms().begin()->second;
  const BivariatePolynomial a = F.coefficient_of(1, 1);
  const BivariatePolynomial b = F.coefficient_of(1, 0);
  // Complete the square: the germ is equivalent to v^2 - D(u)/(4c^2) with
  // D = a^2 - 4cb, so the A-index is ord_0(D) - 1.
  const BivariatePolynomial D = a * a - 4 * c * b;
  if (D.is_zero()) return GermClassification::not_recognized();
  const long ord = D.min_exponent(0);
  if (ord < 2) return GermClassification::not_recognized();
  return GermClassification::a_type(ord - 1);
}

GermClassification classify_branch_germ(long n) {
  if (n < 0) throw IndexOutOfRange("classify_branch_germ needs n >= 0");
  if (n == 0) return GermClassification::smooth();
  return classify_plane_Am(discriminant_curve(n).normalized);
}

BivariatePolynomial residual_curve(long n) {
  if (n < 1) throw IndexOutOfRange("residual_curve needs n >= 1");
  const BivariatePolynomial v = cover_v_component(CoverGerm(n));
  const BivariatePolynomial pullback =
      v * v - BivariatePolynomial::monomial(3 * n, 0, 4, kSourceVars);
  const BivariatePolynomial ram = jacobian_ramification(CoverGerm(n));
  auto [quotient, remainder] = divrem_in_var(pullback, ram * ram, 1);
  if (!remainder.is_zero()) {
    throw InexactDivision("residual curve division left remainder " +
                          remainder.str());
  }
  return quotient;
}

namespace {

/// Surface germ q(x, y) + c s^n with q an integral binary quadratic form.
struct SuspensionGerm {
  BigInt qxx, qxy, qyy;
  BigInt c;
  long n;
};

GermClassification classify_suspension(const SuspensionGerm& g) {
  // Rank-2 quadratic part diagonalizes to x^2 + y^2; the germ is then the
  // n-suspension x^2 + y^2 + (unit) s^n, an A_{n-1} surface point.
  const BigInt disc = g.qxy * g.qxy - 4 * g.qxx * g.qyy;
  if (disc == 0 || g.c == 0 || g.n < 1) {
    return GermClassification::not_recognized();
  }
  if (g.n == 1) return GermClassification::smooth();
  return GermClassification::a_type(g.n - 1);
}

}  // namespace

GermClassification galois_local_type(LocalGroupCase c, long n) {
  if (n < 1) throw IndexOutOfRange("galois_local_type needs n >= 1");
  switch (c) {
    case LocalGroupCase::S2:
      // w^2 = z^2 - v^n  ->  w^2 - z^2 + v^n
      return classify_suspension({1, 0, -1, 1, n});
    case LocalGroupCase::S3:
      // y^2 = w^2 - 4 z^n  ->  y^2 - w^2 + 4 z^n
      return classify_suspension({1, 0, -1, 4, n});
  }
  return GermClassification::not_recognized();
}

bool branch_parametrization_check(long n) {
  if (n < 1) throw IndexOutOfRange("branch_parametrization_check needs n >= 1");
  const BivariatePolynomial curve = discriminant_curve(n).normalized;
  if (n % 2 == 1) {
    // u = t^2, v = -2 t^{3n}
    return substitute_parametrization(curve, 1, 2, -2, 3 * n).empty();
  }
  // u = z, v = -+2 z^{3n/2}, both sign branches
  const long half = 3 * n / 2;
  return substitute_parametrization(curve, 1, 1, -2, half).empty() &&
         substitute_parametrization(curve, 1, 1, 2, half).empty();
}

}  // namespace agc
