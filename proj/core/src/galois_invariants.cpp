#include "agc/galois_invariants.hpp"

#include "agc/surface_invariants.hpp"

namespace agc {

long resolution_chain_length(const SingularityClass& c) {
  // The germ over a class point is an A_{j} surface singularity with
  // j = n-1 in the local index n (smooth when n = 1), resolved by a chain
  // of j (-2)-curves.
  switch (c.family()) {
    case Family::S2: return c.k() - 1;
    case Family::S3Odd: return 2 * c.k();
    case Family::S3Even: return 2 * c.k() - 1;
  }
  return 0;
}

BigRational galois_singular_count(const SingularProfile& p) {
  const BigInt nfact = factorial(static_cast<unsigned long>(p.N));
  BigInt s3_points = 0;
  for (const auto& [k, nk] : p.n) {
    if (k >= 1) s3_points += nk;
  }
  for (const auto& [k, mk] : p.m) {
    if (k >= 1) s3_points += mk;
  }
  BigInt s2_points = 0;
  for (const auto& [k, tk] : p.t) {
    if (k >= 2) s2_points += tk;
  }
  return make_rational(nfact * s3_points, 6) +
         make_rational(nfact * s2_points, 4);
}

PrintedAndChain exceptional_curve_count(const SingularProfile& p) {
  const BigInt nfact = factorial(static_cast<unsigned long>(p.N));
  BigInt s3_chains = 0;  // identical in both recipes
  for (const auto& [k, nk] : p.n) s3_chains += 2 * k * nk;
  for (const auto& [k, mk] : p.m) s3_chains += (2 * k - 1) * mk;
  BigInt t_printed = 0, t_chain = 0;
  for (const auto& [k, tk] : p.t) {
    if (k >= 2) {
      t_printed += (2 * k - 1) * tk;
      t_chain += (k - 1) * tk;
    }
  }
  PrintedAndChain out;
  out.printed = make_rational(nfact * s3_chains, 6) +
                make_rational(nfact * t_printed, 4);
  out.chain = make_rational(nfact * s3_chains, 6) +
              make_rational(nfact * t_chain, 4);
  return out;
}

PrintedAndChain euler_preimage_sing(const SingularProfile& p) {
  const BigInt nfact = factorial(static_cast<unsigned long>(p.N));
  // A chain of j rational curves has e = j+1; a point has e = 1.  The S3
  // coefficients (2k+1) and 2k agree with the chain recipe, the printed
  // t-coefficient 2k (k>=2) does not (chain gives k).
  BigInt s3_part = 0;
  for (const auto& [k, nk] : p.n) s3_part += (2 * k + 1) * nk;
  for (const auto& [k, mk] : p.m) s3_part += 2 * k * mk;
  BigInt t_printed = 0, t_chain = 0;
  for (const auto& [k, tk] : p.t) {
    if (k == 1) {
      t_printed += tk;
      t_chain += tk;
    } else {
      t_printed += 2 * k * tk;
      t_chain += k * tk;
    }
  }
  PrintedAndChain out;
  out.printed = make_rational(nfact * s3_part, 6) +
                make_rational(nfact * t_printed, 4);
  out.chain = make_rational(nfact * s3_part, 6) +
              make_rational(nfact * t_chain, 4);
  return out;
}

BigInt canonical_square_Z(const SingularProfile& p) {
  const BigInt d3 = BigInt(p.d) - 3;
  return d3 * d3 * factorial(static_cast<unsigned long>(p.N));
}

EulerZResult euler_Z(const SingularProfile& p) {
  const BigInt nfact = factorial(static_cast<unsigned long>(p.N));

  BigRational closed(3 + BigInt(p.d) * (2 * p.d - 3));
  for (const auto& [k, nk] : p.n) {
    closed -= make_rational((19 * k + 5) * nk, 6);
  }
  for (const auto& [k, mk] : p.m) {
    closed -= make_rational(16 * k * mk, 6);
  }
  for (const auto& [k, tk] : p.t) {
    if (k == 1) {
      closed -= make_rational(3 * tk, 4);
    } else {
      closed -= make_rational(k * tk, 2);
    }
  }
  closed *= nfact;

  BigRational assembled(nfact * (3 - euler_branch_curve(p)));
  assembled += make_rational(nfact * euler_branch_smooth_locus(p), 2);
  assembled += euler_preimage_sing(p).printed;

  return {closed, assembled};
}

namespace {

ChiZResult chi_from(const SingularProfile& p, const BigRational& euler) {
  BigRational chi = (BigRational(canonical_square_Z(p)) + euler) / 12;
  chi.canonicalize();
  return {chi, is_integral(chi)};
}

}  // namespace

ChiZResult chi_Z(const SingularProfile& p) {
  return chi_from(p, euler_Z(p).assembled);
}

ChiZResult chi_Z_from_closed(const SingularProfile& p) {
  return chi_from(p, euler_Z(p).closed);
}

GaloisReport make_galois_report(const SingularProfile& p) {
  GaloisReport r;
  r.S_sing = galois_singular_count(p);
  const PrintedAndChain m = exceptional_curve_count(p);
  r.M_printed = m.printed;
  r.M_chain = m.chain;
  const PrintedAndChain es = euler_preimage_sing(p);
  r.e_presing_printed = es.printed;
  r.e_presing_chain = es.chain;
  r.KZ_square = canonical_square_Z(p);
  const EulerZResult ez = euler_Z(p);
  r.eZ_closed = ez.closed;
  r.eZ_assembled = ez.assembled;
  const ChiZResult chi_a = chi_Z(p);
  r.chiZ_from_assembled = chi_a.value;
  r.chiZ_from_assembled_integral = chi_a.integral;
  const ChiZResult chi_c = chi_Z_from_closed(p);
  r.chiZ_from_closed = chi_c.value;
  r.chiZ_from_closed_integral = chi_c.integral;
  if (!m.agree()) r.discrepancy_flags.push_back("M_t_coefficient");
  if (!es.agree()) r.discrepancy_flags.push_back("eS_t_coefficient");
  if (!ez.agree()) r.discrepancy_flags.push_back("eZ_closed_vs_assembled");
  if (!chi_c.integral) {
    r.discrepancy_flags.push_back("chiZ_from_closed_nonintegral");
  }
  return r;
}

}  // namespace agc
