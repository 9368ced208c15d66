#include "agc/bivariate.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace agc {

BivariatePolynomial BivariatePolynomial::constant(
    const BigInt& c, std::array<std::string, 2> vars) {
  return monomial(0, 0, c, std::move(vars));
}

BivariatePolynomial BivariatePolynomial::monomial(
    long i, long j, const BigInt& c, std::array<std::string, 2> vars) {
  BivariatePolynomial p(std::move(vars));
  p.add_term(i, j, c);
  return p;
}

long BivariatePolynomial::total_degree() const {
  long deg = -1;
  for (const auto& [e, c] : terms_) deg = std::max(deg, e.first + e.second);
  return deg;
}

long BivariatePolynomial::degree(int var) const {
  long deg = -1;
  for (const auto& [e, c] : terms_) {
    deg = std::max(deg, var == 0 ? e.first : e.second);
  }
  return deg;
}

long BivariatePolynomial::order_at_origin() const {
  long ord = -1;
  for (const auto& [e, c] : terms_) {
    const long total = e.first + e.second;
    if (ord < 0 || total < ord) ord = total;
  }
  return ord;
}

long BivariatePolynomial::min_exponent(int var) const {
  long ord = -1;
  for (const auto& [e, c] : terms_) {
    const long exp = var == 0 ? e.first : e.second;
    if (ord < 0 || exp < ord) ord = exp;
  }
  return ord;
}

BivariatePolynomial BivariatePolynomial::coefficient_of(int var,
                                                        long power) const {
  BivariatePolynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    if ((var == 0 ? e.first : e.second) == power) {
      if (var == 0) {
        out.add_term(0, e.second, c);
      } else {
        out.add_term(e.first, 0, c);
      }
    }
  }
  return out;
}

BigInt BivariatePolynomial::content() const {
  BigInt g = 0;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void BivariatePolynomial::add_term(long i, long j, const BigInt& c) {
  if (c == 0) return;
  const Exponents key{i, j};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BivariatePolynomial BivariatePolynomial::operator-() const {
  BivariatePolynomial out(vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

BivariatePolynomial& BivariatePolynomial::operator+=(
    const BivariatePolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e.first, e.second, c);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(
    const BivariatePolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e.first, e.second, -c);
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a,
                              const BivariatePolynomial& b) {
  BivariatePolynomial out(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    }
  }
  return out;
}

BivariatePolynomial operator*(const BigInt& c, BivariatePolynomial p) {
  if (c == 0) return BivariatePolynomial(p.vars_);
  for (auto& [e, coeff] : p.terms_) coeff *= c;
  return p;
}

std::string BivariatePolynomial::str() const {
  if (terms_.empty()) return "0";
  // Print with the second variable dominant, so discriminant-style curves
  // read as v^2 - 4*u^3.
  std::vector<std::pair<Exponents, BigInt>> ordered(terms_.begin(),
                                                    terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    return std::pair(a.first.second, a.first.first) >
           std::pair(b.first.second, b.first.first);
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    BigInt abs_c = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const bool has_var = e.first > 0 || e.second > 0;
    if (abs_c != 1 || !has_var) {
      os << abs_c.get_str();
      if (has_var) os << "*";
    }
    if (e.first > 0) {
      os << vars_[0];
      if (e.first > 1) os << "^" << e.first;
      if (e.second > 0) os << "*";
    }
    if (e.second > 0) {
      os << vars_[1];
      if (e.second > 1) os << "^" << e.second;
    }
  }
  return os.str();
}

std::string BivariatePolynomial::to_json_text() const {
  nlohmann::ordered_json j;
  j["vars"] = {vars_[0], vars_[1]};
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : terms_) {
    terms.push_back({e.first, e.second, c.get_str()});
  }
  j["terms"] = terms;
  return j.dump();
}

BivariatePolynomial BivariatePolynomial::from_json_text(
    const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  BivariatePolynomial p({j.at("vars").at(0).get<std::string>(),
                         j.at("vars").at(1).get<std::string>()});
  for (const auto& term : j.at("terms")) {
    p.add_term(term.at(0).get<long>(), term.at(1).get<long>(),
               BigInt(term.at(2).get<std::string>()));
  }
  return p;
}

BivariatePolynomial divide_exact(const BivariatePolynomial& a,
                                 const BivariatePolynomial& b) {
  if (b.is_zero()) throw InexactDivision("division by zero polynomial");
  BivariatePolynomial quotient(a.vars());
  BivariatePolynomial rem = a;
  const auto& b_lead = *b.terms().rbegin();
  while (!rem.is_zero()) {
    const auto& r_lead = *rem.terms().rbegin();
    const long di = r_lead.first.first - b_lead.first.first;
    const long dj = r_lead.first.second - b_lead.first.second;
    if (di < 0 || dj < 0) {
      throw InexactDivision("monomial " + rem.str() + " not divisible");
    }
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), r_lead.second.get_mpz_t(),
                b_lead.second.get_mpz_t());
    if (r != 0) {
      throw InexactDivision("leading coefficient not divisible");
    }
    const BivariatePolynomial t =
        BivariatePolynomial::monomial(di, dj, q, a.vars());
    quotient += t;
    rem -= t * b;
  }
  return quotient;
}

std::pair<BivariatePolynomial, BivariatePolynomial> divrem_in_var(
    const BivariatePolynomial& a, const BivariatePolynomial& divisor,
    int var) {
  const long ddeg = divisor.degree(var);
  if (ddeg < 0) throw InexactDivision("division by zero polynomial");
  const BivariatePolynomial lead = divisor.coefficient_of(var, ddeg);
  BivariatePolynomial quotient(a.vars());
  BivariatePolynomial rem = a;
  while (!rem.is_zero() && rem.degree(var) >= ddeg) {
    const long rdeg = rem.degree(var);
    const BivariatePolynomial rlead = rem.coefficient_of(var, rdeg);
    // rlead must be an exact multiple of lead in Z[other var].
    const BivariatePolynomial factor = divide_exact(rlead, lead);
    const BivariatePolynomial shift = BivariatePolynomial::monomial(
        var == 0 ? rdeg - ddeg : 0, var == 0 ? 0 : rdeg - ddeg, 1, a.vars());
    const BivariatePolynomial term = factor * shift;
    quotient += term;
    rem -= term * divisor;
    if (!rem.is_zero() && rem.degree(var) == rdeg) {
      throw InexactDivision("leading term did not cancel");
    }
  }
  return {quotient, rem};
}

BivariatePolynomial sylvester_resultant(
    const std::vector<BivariatePolynomial>& f,
    const std::vector<BivariatePolynomial>& g) {
  const long m = static_cast<long>(f.size()) - 1;
  const long l = static_cast<long>(g.size()) - 1;
  if (m < 1 || l < 1) {
    throw UnsupportedShape("resultant needs positive degrees in w");
  }
  const std::array<std::string, 2> vars = f.back().vars();
  const long n = m + l;
  const BivariatePolynomial zero(vars);
  std::vector<std::vector<BivariatePolynomial>> mat(
      n, std::vector<BivariatePolynomial>(n, zero));
  // l rows of f coefficients, then m rows of g, each shifted right.
  for (long r = 0; r < l; ++r) {
    for (long i = 0; i <= m; ++i) mat[r][r + i] = f[m - i];
  }
  for (long r = 0; r < m; ++r) {
    for (long i = 0; i <= l; ++i) mat[l + r][r + i] = g[l - i];
  }

  // Fraction-free Bareiss elimination; all divisions are exact in Z[u,v].
  int sign = 1;
  BivariatePolynomial prev = BivariatePolynomial::constant(1, vars);
  for (long k = 0; k + 1 < n; ++k) {
    if (mat[k][k].is_zero()) {
      long swap_row = -1;
      for (long r = k + 1; r < n; ++r) {
        if (!mat[r][k].is_zero()) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return zero;  // singular: resultant vanishes
      std::swap(mat[k], mat[swap_row]);
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i) {
      for (long j = k + 1; j < n; ++j) {
        mat[i][j] = divide_exact(mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j],
                                 prev);
      }
      mat[i][k] = zero;
    }
    prev = mat[k][k];
  }
  BivariatePolynomial det = mat[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

BivariatePolynomial normalized_primitive(const BivariatePolynomial& p,
                                         int var) {
  if (p.is_zero()) return p;
  const BigInt c = p.content();
  BivariatePolynomial out(p.vars());
  for (const auto& [e, coeff] : p.terms()) {
    out.add_term(e.first, e.second, coeff / c);
  }
  // Fix the overall sign by the leading coefficient in `var`.
  const BivariatePolynomial lead = out.coefficient_of(var, out.degree(var));
  if (lead.terms().rbegin()->second < 0) return -out;
  return out;
}

std::map<long, BigInt> substitute_parametrization(const BivariatePolynomial& p,
                                                  const BigInt& cx, long px,
                                                  const BigInt& cy, long py) {
  std::map<long, BigInt> out;
  for (const auto& [e, c] : p.terms()) {
    BigInt coeff = c;
    BigInt pw;
    mpz_pow_ui(pw.get_mpz_t(), cx.get_mpz_t(),
               static_cast<unsigned long>(e.first));
    coeff *= pw;
    mpz_pow_ui(pw.get_mpz_t(), cy.get_mpz_t(),
               static_cast<unsigned long>(e.second));
    coeff *= pw;
    const long t_exp = px * e.first + py * e.second;
    auto [it, inserted] = out.emplace(t_exp, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

}  // namespace agc
