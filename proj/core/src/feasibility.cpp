#include "agc/feasibility.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <sstream>

#include "agc/surface_invariants.hpp"

namespace agc {

bool ConstraintReport::admissible() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ConstraintCheck& c) { return c.passed; });
}

const ConstraintCheck* ConstraintReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

ConstraintReport check_constraints(const SingularProfile& p) {
  ConstraintReport report;
  const Aggregates agg = aggregates(p);

  const BigInt g = genus_branch(p);
  report.checks.push_back(
      {"genus_nonneg", g >= 0, "g(B) = " + g.get_str()});

  const BigInt dd = dual_degree(p);
  report.checks.push_back(
      {"dual_degree_positive", dd > 0, "dual degree = " + dd.get_str()});

  const BigInt r2 = ram_self_intersection(p);
  report.checks.push_back(
      {"R2_positive", r2 > 0, "R^2 = " + r2.get_str()});

  report.checks.push_back({"cusp_divisibility", agg.pseudo_cusps % 3 == 0,
                           "c = " + agg.pseudo_cusps.get_str()});
  report.checks.push_back({"node_divisibility", agg.pseudo_nodes % 4 == 0,
                           "n = " + agg.pseudo_nodes.get_str()});

  const ChiResult chi = chi_structure(p);
  report.checks.push_back({"chi_integral", chi.integral,
                           "chi(O_X) = " + chi.value.get_str()});

  if (r2 > 0) {
    const HodgeResult h = hodge_bound(p);
    report.checks.push_back({"hodge_inequality", h.satisfied,
                             "N <= " + h.bound.get_str()});
  } else {
    report.checks.push_back(
        {"hodge_inequality", false, "undefined: R^2 <= 0"});
  }

  report.checks.push_back({"pseudo_node_rule", pseudo_node_rule(p),
                           "N = " + std::to_string(p.N) +
                               ", n = " + agg.pseudo_nodes.get_str()});

  const auto violations = validate_profile(p);
  std::ostringstream detail;
  for (size_t i = 0; i < violations.size(); ++i) {
    if (i) detail << ", ";
    detail << violations[i];
  }
  report.checks.push_back({"structural_validity", violations.empty(),
                           violations.empty() ? "ok" : detail.str()});
  return report;
}

namespace {

struct ClassSlot {
  Family family;
  long k;
  long delta;  // every class has delta >= 1, so the budget bounds the box
};

std::vector<ClassSlot> class_slots(long k_max) {
  std::vector<ClassSlot> slots;
  for (long k = 0; k <= k_max; ++k) slots.push_back({Family::S3Odd, k, 3 * k + 1});
  for (long k = 1; k <= k_max; ++k) slots.push_back({Family::S3Even, k, 3 * k});
  for (long k = 1; k <= k_max; ++k) slots.push_back({Family::S2, k, k});
  return slots;
}

SingularProfile build_profile(const EnumerationQuery& q,
                              const std::vector<ClassSlot>& slots,
                              const std::vector<long>& counts, long N) {
  SingularProfile p;
  p.d = q.d;
  p.N = N;
  for (size_t i = 0; i < slots.size(); ++i) {
    if (counts[i] == 0) continue;
    switch (slots[i].family) {
      case Family::S3Odd: p.n[slots[i].k] = counts[i]; break;
      case Family::S3Even: p.m[slots[i].k] = counts[i]; break;
      case Family::S2: p.t[slots[i].k] = counts[i]; break;
    }
  }
  return p;
}

struct SortKey {
  long total_delta;
  std::vector<long> counts;
  long N;
  bool operator<(const SortKey& o) const {
    if (total_delta != o.total_delta) return total_delta < o.total_delta;
    if (counts != o.counts) return counts < o.counts;
    return N < o.N;
  }
};

struct Collector {
  std::vector<std::pair<SortKey, EnumeratedProfile>> hits;
};

void emit_if_admissible(const EnumerationQuery& q,
                        const std::vector<ClassSlot>& slots,
                        const std::vector<long>& counts, long N,
                        Collector& out) {
  SingularProfile p = build_profile(q, slots, counts, N);
  ConstraintReport report = check_constraints(p);
  if (!report.admissible()) return;
  long total_delta = 0;
  for (size_t i = 0; i < slots.size(); ++i) {
    total_delta += slots[i].delta * counts[i];
  }
  out.hits.push_back(
      {{total_delta, counts, N}, {std::move(p), std::move(report)}});
}

/// N values worth checking for a fixed count vector.  When N is pinned by
/// the query this is that single value; otherwise the Hodge inequality
/// N(2d^2-c-n) <= 4d^2 with positive R^2 caps the range.
std::vector<long> candidate_N(const EnumerationQuery& q,
                              const SingularProfile& counts_only) {
  if (q.N) return {*q.N};
  const BigInt r2 = ram_self_intersection(counts_only);
  if (r2 <= 0) return {};
  const BigInt n_max = (4 * BigInt(q.d) * q.d) / r2;
  if (n_max < 2) return {};
  std::vector<long> out;
  for (long N = 2; BigInt(N) <= n_max; ++N) out.push_back(N);
  return out;
}

class NodeBudget {
 public:
  explicit NodeBudget(unsigned long limit) : limit_(limit) {}
  void spend(unsigned long n = 1) {
    if (used_.fetch_add(n, std::memory_order_relaxed) + n > limit_) {
      throw BudgetExceeded("enumeration box exceeds node limit of " +
                           std::to_string(limit_));
    }
  }

 private:
  std::atomic<unsigned long> used_{0};
  unsigned long limit_;
};

void dfs_counts(const EnumerationQuery& q, const std::vector<ClassSlot>& slots,
                std::vector<long>& counts, size_t slot, long budget,
                NodeBudget& nodes, Collector& out) {
  nodes.spend();
  if (slot == slots.size()) {
    SingularProfile counts_profile = build_profile(q, slots, counts, 2);
    for (long N : candidate_N(q, counts_profile)) {
      emit_if_admissible(q, slots, counts, N, out);
    }
    return;
  }
  long max_count = budget / slots[slot].delta;
  if (q.count_cap) max_count = std::min(max_count, *q.count_cap);
  for (long c = 0; c <= max_count; ++c) {
    counts[slot] = c;
    dfs_counts(q, slots, counts, slot + 1, budget - c * slots[slot].delta,
               nodes, out);
  }
  counts[slot] = 0;
}

void brute_force_counts(const EnumerationQuery& q,
                        const std::vector<ClassSlot>& slots,
                        std::vector<long>& counts, size_t slot,
                        NodeBudget& nodes, Collector& out) {
  nodes.spend();
  if (slot == slots.size()) {
    if (q.N) {
      emit_if_admissible(q, slots, counts, *q.N, out);
    } else {
      // Any admissible N satisfies Hodge with R^2 >= 1, so N <= 4d^2.
      for (long N = 2; N <= 4 * q.d * q.d; ++N) {
        emit_if_admissible(q, slots, counts, N, out);
      }
    }
    return;
  }
  for (long c = 0; c <= *q.count_cap; ++c) {
    counts[slot] = c;
    brute_force_counts(q, slots, counts, slot + 1, nodes, out);
  }
  counts[slot] = 0;
}

}  // namespace

std::vector<EnumeratedProfile> enumerate_profiles(const EnumerationQuery& q) {
  if (q.d < 1) throw std::invalid_argument("d must be positive");
  if (q.k_max < 0) throw std::invalid_argument("k_max must be >= 0");
  if (q.count_cap && *q.count_cap < 0) {
    throw std::invalid_argument("count_cap must be >= 0");
  }
  if (q.brute_force && !q.count_cap) {
    throw std::invalid_argument("brute force requires a finite count_cap");
  }

  const auto slots = class_slots(q.k_max);
  const long budget = (2 * q.d - 1) * (q.d - 1);  // genus >= 0 prunes here
  NodeBudget nodes(q.node_limit);

  // Split the first slot's count range across workers; merging in slot
  // order keeps the result independent of the worker count.
  long first_max;
  if (q.brute_force) {
    first_max = *q.count_cap;
  } else {
    first_max = budget / slots.front().delta;
    if (q.count_cap) first_max = std::min(first_max, *q.count_cap);
  }

  auto run_range = [&](long c_lo, long c_hi) {
    Collector out;
    std::vector<long> counts(slots.size(), 0);
    for (long c = c_lo; c <= c_hi; ++c) {
      counts[0] = c;
      if (q.brute_force) {
        brute_force_counts(q, slots, counts, 1, nodes, out);
      } else {
        dfs_counts(q, slots, counts, 1, budget - c * slots[0].delta, nodes,
                   out);
      }
    }
    return out;
  };

  Collector merged;
  const int jobs = std::max(1, q.jobs);
  if (jobs == 1 || first_max == 0) {
    merged = run_range(0, first_max);
  } else {
    const long span = first_max + 1;
    const long chunk = (span + jobs - 1) / jobs;
    std::vector<std::future<Collector>> futures;
    for (long lo = 0; lo <= first_max; lo += chunk) {
      const long hi = std::min(first_max, lo + chunk - 1);
      futures.push_back(
          std::async(std::launch::async, [&, lo, hi] { return run_range(lo, hi); }));
    }
    for (auto& f : futures) {
      Collector part = f.get();
      merged.hits.insert(merged.hits.end(),
                         std::make_move_iterator(part.hits.begin()),
                         std::make_move_iterator(part.hits.end()));
    }
  }

  std::sort(merged.hits.begin(), merged.hits.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<EnumeratedProfile> out;
  out.reserve(merged.hits.size());
  for (auto& [key, hit] : merged.hits) out.push_back(std::move(hit));
  return out;
}

}  // namespace agc
