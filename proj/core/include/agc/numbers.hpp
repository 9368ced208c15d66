#ifndef AGC_NUMBERS_HPP
#define AGC_NUMBERS_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace agc {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Exact rational num/den in lowest terms.
inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integral(const BigRational& q) { return q.get_den() == 1; }

/// N!, memoized. Thread-safe; the cache only grows.
const BigInt& factorial(unsigned long n);

inline long ceil_div_2(long m) { return (m + 1) / 2; }

// Named error conditions shared across modules.
struct IndexOutOfRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NonPositiveDenominator : std::domain_error {
  using std::domain_error::domain_error;
};
struct InexactDivision : std::logic_error {
  using std::logic_error::logic_error;
};
struct UnsupportedShape : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PathTooClose : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace agc

#endif
