#ifndef AGC_BIVARIATE_HPP
#define AGC_BIVARIATE_HPP

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "agc/numbers.hpp"

namespace agc {

/// Sparse exact-integer polynomial in two variables.  Terms are kept in a
/// canonical lex-sorted map keyed by the exponent pair; zero coefficients
/// are never stored.
class BivariatePolynomial {
 public:
  using Exponents = std::pair<long, long>;
  using TermMap = std::map<Exponents, BigInt>;

  BivariatePolynomial() = default;
  explicit BivariatePolynomial(std::array<std::string, 2> vars)
      : vars_(std::move(vars)) {}

  static BivariatePolynomial constant(const BigInt& c,
                                      std::array<std::string, 2> vars = {"u",
                                                                         "v"});
  static BivariatePolynomial monomial(long i, long j, const BigInt& c,
                                      std::array<std::string, 2> vars = {"u",
                                                                         "v"});

  const TermMap& terms() const { return terms_; }
  const std::array<std::string, 2>& vars() const { return vars_; }

  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  long total_degree() const;
  /// Degree in variable 0 or 1; -1 for zero.
  long degree(int var) const;
  /// Multiplicity at the origin: least total degree of a term; -1 for zero.
  long order_at_origin() const;
  /// Least exponent of `var` over all terms; -1 for zero.
  long min_exponent(int var) const;

  /// Coefficient of var^power as a polynomial in the other variable.
  BivariatePolynomial coefficient_of(int var, long power) const;
  /// gcd of all coefficients (nonnegative); 0 for the zero polynomial.
  BigInt content() const;

  void add_term(long i, long j, const BigInt& c);

  BivariatePolynomial operator-() const;
  BivariatePolynomial& operator+=(const BivariatePolynomial& rhs);
  BivariatePolynomial& operator-=(const BivariatePolynomial& rhs);
  friend BivariatePolynomial operator+(BivariatePolynomial a,
                                       const BivariatePolynomial& b) {
    a += b;
    return a;
  }
  friend BivariatePolynomial operator-(BivariatePolynomial a,
                                       const BivariatePolynomial& b) {
    a -= b;
    return a;
  }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a,
                                       const BivariatePolynomial& b);
  friend BivariatePolynomial operator*(const BigInt& c,
                                       BivariatePolynomial p);

  bool operator==(const BivariatePolynomial& rhs) const {
    return terms_ == rhs.terms_;
  }

  /// Human-readable form, terms in descending lex order, e.g. "v^2 - 4*u^3".
  std::string str() const;

  // {"vars": ["u","v"], "terms": [[i, j, "coeff"], ...]}
  std::string to_json_text() const;
  static BivariatePolynomial from_json_text(const std::string& text);

 private:
  TermMap terms_;
  std::array<std::string, 2> vars_{{"u", "v"}};
};

/// Exact quotient a/b in Z[x,y]; throws InexactDivision when b does not
/// divide a.
BivariatePolynomial divide_exact(const BivariatePolynomial& a,
                                 const BivariatePolynomial& b);

/// Long division by `divisor` viewed as a polynomial in `var` whose leading
/// coefficient must exactly divide at every step (always true for a monic
/// divisor).  Returns (quotient, remainder) with deg_var(rem) < deg_var(div).
std::pair<BivariatePolynomial, BivariatePolynomial> divrem_in_var(
    const BivariatePolynomial& a, const BivariatePolynomial& divisor, int var);

/// Resultant of two polynomials given by their coefficient lists in the
/// eliminated variable (index = power, constant term first), computed as the
/// Sylvester determinant by fraction-free Bareiss elimination.
BivariatePolynomial sylvester_resultant(
    const std::vector<BivariatePolynomial>& f,
    const std::vector<BivariatePolynomial>& g);

/// Divide by the content and fix the sign so that the leading coefficient of
/// the highest power of `var` is positive.
BivariatePolynomial normalized_primitive(const BivariatePolynomial& p,
                                         int var);

/// Substitute the monomial parametrization x -> cx t^px, y -> cy t^py and
/// collect the result as a univariate polynomial in t (exponent -> coeff).
std::map<long, BigInt> substitute_parametrization(const BivariatePolynomial& p,
                                                  const BigInt& cx, long px,
                                                  const BigInt& cy, long py);

}  // namespace agc

#endif
