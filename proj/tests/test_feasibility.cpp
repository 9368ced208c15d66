#include <doctest.h>

#include <algorithm>
#include <set>

#include "agc/feasibility.hpp"

using namespace agc;

namespace {

SingularProfile make(long d, long N) {
  SingularProfile p;
  p.d = d;
  p.N = N;
  return p;
}

bool check_passed(const ConstraintReport& r, const std::string& name) {
  const ConstraintCheck* c = r.find(name);
  REQUIRE(c != nullptr);
  return c->passed;
}

std::set<std::string> profile_set(const std::vector<EnumeratedProfile>& v) {
  std::set<std::string> out;
  for (const auto& e : v) out.insert(profile_to_json_text(e.profile));
  return out;
}

}  // namespace

TEST_CASE("check order and the classical pass case") {
  SingularProfile cubic = make(3, 3);
  cubic.n[0] = 6;
  const ConstraintReport r = check_constraints(cubic);
  const std::vector<std::string> expected_order{
      "genus_nonneg",     "dual_degree_positive", "R2_positive",
      "cusp_divisibility", "node_divisibility",   "chi_integral",
      "hodge_inequality", "pseudo_node_rule",     "structural_validity"};
  REQUIRE(r.checks.size() == expected_order.size());
  for (size_t i = 0; i < expected_order.size(); ++i) {
    CHECK(r.checks[i].name == expected_order[i]);
    CHECK(r.checks[i].passed);
  }
  CHECK(r.admissible());
}

TEST_CASE("named failures") {
  const ConstraintReport hodge_fail = check_constraints(make(3, 4));
  CHECK_FALSE(check_passed(hodge_fail, "hodge_inequality"));
  CHECK_FALSE(hodge_fail.admissible());

  SingularProfile nodes = make(2, 3);
  nodes.n[0] = 3;
  nodes.t[1] = 1;
  const ConstraintReport node_fail = check_constraints(nodes);
  CHECK_FALSE(check_passed(node_fail, "node_divisibility"));

  SingularProfile cusps = make(3, 3);
  cusps.n[0] = 1;
  CHECK_FALSE(check_passed(check_constraints(cusps), "cusp_divisibility"));

  const ConstraintReport n6 = check_constraints(make(10, 6));
  CHECK_FALSE(check_passed(n6, "pseudo_node_rule"));

  // R^2 <= 0 never throws here; the Hodge row reports undefined.
  SingularProfile degenerate = make(1, 3);
  degenerate.n[0] = 3;
  const ConstraintReport deg = check_constraints(degenerate);
  CHECK_FALSE(check_passed(deg, "R2_positive"));
  CHECK_FALSE(check_passed(deg, "hodge_inequality"));
}

TEST_CASE("enumeration of the pure-cusp sextic box") {
  EnumerationQuery q;
  q.d = 3;
  q.N = 3;
  q.k_max = 0;
  const auto out = enumerate_profiles(q);
  SingularProfile six = make(3, 3);
  six.n[0] = 6;
  SingularProfile nine = make(3, 3);
  nine.n[0] = 9;
  REQUIRE(out.size() == 2);
  CHECK(out[0].profile == six);
  CHECK(out[1].profile == nine);
  for (const auto& e : out) CHECK(e.report.admissible());
}

TEST_CASE("double plane over a conic is admissible") {
  EnumerationQuery q;
  q.d = 1;
  const auto out = enumerate_profiles(q);
  REQUIRE(out.size() == 1);
  CHECK(out[0].profile == make(1, 2));
}

TEST_CASE("no profile survives at d=3, N=7") {
  // Hodge needs c + n >= 13 there, the genus budget allows at most 10.
  EnumerationQuery q;
  q.d = 3;
  q.N = 7;
  q.k_max = 2;
  q.count_cap = 3;
  CHECK(enumerate_profiles(q).empty());
}

TEST_CASE("pruned enumeration matches brute force") {
  for (long N : {2, 3, 4}) {
    EnumerationQuery q;
    q.d = 3;
    q.N = N;
    q.k_max = 1;
    q.count_cap = 4;
    const auto pruned = enumerate_profiles(q);
    EnumerationQuery brute = q;
    brute.brute_force = true;
    const auto scanned = enumerate_profiles(brute);
    CHECK(profile_set(pruned) == profile_set(scanned));
    CHECK(pruned.size() == scanned.size());
  }
}

TEST_CASE("enumeration is independent of the worker count") {
  EnumerationQuery q;
  q.d = 3;
  q.k_max = 1;
  q.count_cap = 3;
  const auto serial = enumerate_profiles(q);
  for (int jobs : {2, 5}) {
    EnumerationQuery qj = q;
    qj.jobs = jobs;
    const auto parallel = enumerate_profiles(qj);
    REQUIRE(parallel.size() == serial.size());
    for (size_t i = 0; i < serial.size(); ++i) {
      CHECK(parallel[i].profile == serial[i].profile);
    }
  }
}

TEST_CASE("emitted profiles all pass their own report") {
  EnumerationQuery q;
  q.d = 2;
  q.k_max = 2;
  const auto out = enumerate_profiles(q);
  CHECK(!out.empty());
  for (const auto& e : out) {
    CHECK(e.report.admissible());
    CHECK(check_constraints(e.profile).admissible());
  }
  // Deterministic ordering: total delta is non-decreasing.
  for (size_t i = 1; i < out.size(); ++i) {
    CHECK(total_delta(out[i - 1].profile) <= total_delta(out[i].profile));
  }
}

TEST_CASE("node limit aborts oversized boxes") {
  EnumerationQuery q;
  q.d = 10;
  q.k_max = 4;
  q.node_limit = 50;
  CHECK_THROWS_AS(enumerate_profiles(q), BudgetExceeded);
}

TEST_CASE("brute force requires a cap") {
  EnumerationQuery q;
  q.d = 2;
  q.brute_force = true;
  CHECK_THROWS_AS(enumerate_profiles(q), std::invalid_argument);
}
