#include "agc/profile.hpp"

#include <mutex>
#include <vector>

#include <json.hpp>

namespace agc {

const BigInt& factorial(unsigned long n) {
  static std::mutex mu;
  static std::vector<BigInt> cache{1, 1};
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= n) {
    cache.push_back(cache.back() * BigInt(cache.size()));
  }
  return cache[n];
}

std::string family_name(Family f) {
  switch (f) {
    case Family::S2: return "s2";
    case Family::S3Odd: return "s3_odd";
    case Family::S3Even: return "s3_even";
  }
  return "?";
}

SingularityClass::SingularityClass(Family family, long k)
    : family_(family), k_(k) {
  const long min_k = (family == Family::S3Odd) ? 0 : 1;
  if (k < min_k) {
    throw IndexOutOfRange(family_name(family) + " requires k >= " +
                          std::to_string(min_k) + ", got " +
                          std::to_string(k));
  }
}

SingularityClass make_class(Family family, long k) {
  return SingularityClass(family, k);
}

long underlying_A_index(const SingularityClass& c) {
  switch (c.family()) {
    case Family::S2: return 2 * c.k() - 1;
    case Family::S3Odd: return 6 * c.k() + 2;
    case Family::S3Even: return 6 * c.k() - 1;
  }
  return -1;
}

BigInt delta_invariant(const SingularityClass& c) {
  switch (c.family()) {
    case Family::S2: return BigInt(c.k());
    case Family::S3Odd: return BigInt(3 * c.k() + 1);
    case Family::S3Even: return BigInt(3 * c.k());
  }
  return 0;
}

VirtualCounts virtual_counts(const SingularityClass& c) {
  switch (c.family()) {
    case Family::S2: return {0, BigInt(c.k())};
    case Family::S3Odd: return {1, BigInt(3 * c.k())};
    case Family::S3Even: return {0, BigInt(3 * c.k())};
  }
  return {0, 0};
}

Aggregates aggregates(const SingularProfile& p) {
  Aggregates a{0, 0, 0};
  for (const auto& [k, nk] : p.n) {
    a.pseudo_cusps += (2 * k + 1) * nk;
    a.superabundance += k * nk;
  }
  for (const auto& [k, mk] : p.m) {
    a.pseudo_cusps += 2 * k * mk;
    a.superabundance += k * mk;
  }
  for (const auto& [k, tk] : p.t) {
    a.pseudo_nodes += k * tk;
  }
  return a;
}

BigInt singular_point_count(const SingularProfile& p) {
  BigInt total = 0;
  for (const auto& [k, c] : p.n) total += c;
  for (const auto& [k, c] : p.m) total += c;
  for (const auto& [k, c] : p.t) total += c;
  return total;
}

BigInt total_delta(const SingularProfile& p) {
  BigInt total = 0;
  for (const auto& [k, c] : p.n) total += (3 * k + 1) * c;
  for (const auto& [k, c] : p.m) total += 3 * k * c;
  for (const auto& [k, c] : p.t) total += k * c;
  return total;
}

namespace {

bool any_positive(const CountMap& counts) {
  for (const auto& [k, c] : counts) {
    if (c > 0) return true;
  }
  return false;
}

void check_counts(const CountMap& counts, long min_k, const char* label,
                  std::vector<std::string>& out) {
  for (const auto& [k, c] : counts) {
    if (k < min_k) {
      out.push_back(std::string(label) + "-index-k>=" + std::to_string(min_k));
    }
    if (c < 0) {
      out.push_back(std::string(label) + "-count-nonnegative");
    }
  }
}

}  // namespace

std::vector<std::string> validate_profile(const SingularProfile& p) {
  std::vector<std::string> violations;
  if (p.d < 1) violations.push_back("d-positive");
  if (p.N < 2) violations.push_back("N>=2");
  check_counts(p.n, 0, "s3_odd", violations);
  check_counts(p.m, 1, "s3_even", violations);
  check_counts(p.t, 1, "s2", violations);
  // An S3 local group needs 3 letters; two disjoint transpositions need 4.
  if ((any_positive(p.n) || any_positive(p.m)) && p.N < 3) {
    violations.push_back("S3-requires-N>=3");
  }
  if (any_positive(p.t) && p.N < 4) {
    violations.push_back("S2-requires-N>=4");
  }
  return violations;
}

std::vector<std::pair<SingularityClass, BigInt>> support(
    const SingularProfile& p) {
  std::vector<std::pair<SingularityClass, BigInt>> out;
  for (const auto& [k, c] : p.n) {
    if (c > 0) out.emplace_back(SingularityClass(Family::S3Odd, k), c);
  }
  for (const auto& [k, c] : p.m) {
    if (c > 0) out.emplace_back(SingularityClass(Family::S3Even, k), c);
  }
  for (const auto& [k, c] : p.t) {
    if (c > 0) out.emplace_back(SingularityClass(Family::S2, k), c);
  }
  return out;
}

namespace {

using json = nlohmann::ordered_json;

BigInt count_from_json(const json& v) {
  if (v.is_number_unsigned()) {
    return BigInt(static_cast<unsigned long>(v.get<std::uint64_t>()));
  }
  if (v.is_number_integer()) {
    return BigInt(static_cast<long>(v.get<std::int64_t>()));
  }
  if (v.is_string()) return BigInt(v.get<std::string>());
  throw std::invalid_argument("count must be an integer or integer string");
}

CountMap counts_from_json(const json& j, const char* key) {
  CountMap out;
  if (!j.contains(key)) return out;
  const json& obj = j.at(key);
  if (!obj.is_object()) {
    throw std::invalid_argument(std::string(key) + " must be an object");
  }
  for (const auto& [k_str, v] : obj.items()) {
    long k = std::stol(k_str);
    BigInt c = count_from_json(v);
    if (c != 0) out[k] += c;
  }
  return out;
}

json counts_to_json(const CountMap& counts) {
  json obj = json::object();
  for (const auto& [k, c] : counts) {
    if (c == 0) continue;
    if (c.fits_slong_p()) {
      obj[std::to_string(k)] = c.get_si();
    } else {
      obj[std::to_string(k)] = c.get_str();
    }
  }
  return obj;
}

}  // namespace

SingularProfile profile_from_json_text(const std::string& text) {
  json j = json::parse(text);
  if (!j.is_object()) throw std::invalid_argument("profile must be an object");
  SingularProfile p;
  p.d = j.at("d").get<long>();
  p.N = j.at("N").get<long>();
  p.n = counts_from_json(j, "s3_odd");
  p.m = counts_from_json(j, "s3_even");
  p.t = counts_from_json(j, "s2");
  return p;
}

std::string profile_to_json_text(const SingularProfile& p) {
  json j;
  j["d"] = p.d;
  j["N"] = p.N;
  if (any_positive(p.n)) j["s3_odd"] = counts_to_json(p.n);
  if (any_positive(p.m)) j["s3_even"] = counts_to_json(p.m);
  if (any_positive(p.t)) j["s2"] = counts_to_json(p.t);
  return j.dump();
}

}  // namespace agc
