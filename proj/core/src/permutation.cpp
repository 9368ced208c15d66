#include "agc/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace agc {

PermutationWord::PermutationWord(int degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0);
}

PermutationWord PermutationWord::from_images(std::vector<int> images) {
  std::vector<char> seen(images.size(), 0);
  for (int v : images) {
    if (v < 0 || v >= static_cast<int>(images.size()) || seen[v]) {
      throw IndexOutOfRange("images do not form a bijection");
    }
    seen[v] = 1;
  }
  PermutationWord p;
  p.images_ = std::move(images);
  return p;
}

PermutationWord PermutationWord::transposition(int degree, int a, int b) {
  PermutationWord p(degree);
  if (a < 0 || b < 0 || a >= degree || b >= degree || a == b) {
    throw IndexOutOfRange("bad transposition");
  }
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

PermutationWord PermutationWord::then(const PermutationWord& next) const {
  PermutationWord out(degree());
  for (int i = 0; i < degree(); ++i) out.images_[i] = next.images_[images_[i]];
  return out;
}

PermutationWord PermutationWord::inverse() const {
  PermutationWord out(degree());
  for (int i = 0; i < degree(); ++i) out.images_[images_[i]] = i;
  return out;
}

PermutationWord PermutationWord::power(long e) const {
  PermutationWord base = e >= 0 ? *this : inverse();
  if (e < 0) e = -e;
  PermutationWord acc(degree());
  while (e > 0) {
    if (e & 1) acc = acc.then(base);
    base = base.then(base);
    e >>= 1;
  }
  return acc;
}

bool PermutationWord::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

bool PermutationWord::is_transposition() const {
  int moved = 0;
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i) ++moved;
  }
  return moved == 2;
}

long PermutationWord::order() const {
  long ord = 1;
  PermutationWord acc = *this;
  while (!acc.is_identity()) {
    acc = acc.then(*this);
    ++ord;
  }
  return ord;
}

std::vector<std::vector<int>> PermutationWord::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(degree(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<int> cycle;
    int j = i;
    while (!seen[j]) {
      seen[j] = 1;
      cycle.push_back(j + 1);
      j = images_[j];
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string PermutationWord::cycle_notation() const {
  const auto cs = cycles();
  if (cs.empty()) return "id";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << "(";
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) os << " ";
      os << c[i];
    }
    os << ")";
  }
  return os.str();
}

std::string PermutationWord::cycle_type() const {
  auto cs = cycles();
  if (cs.empty()) return "1";
  std::vector<size_t> lengths;
  for (const auto& c : cs) lengths.push_back(c.size());
  std::sort(lengths.rbegin(), lengths.rend());
  std::ostringstream os;
  for (size_t i = 0; i < lengths.size(); ++i) {
    if (i) os << "+";
    os << lengths[i];
  }
  return os.str();
}

bool PermutationWord::commutes_with(const PermutationWord& other) const {
  return then(other) == other.then(*this);
}

bool PermutationWord::disjoint_from(const PermutationWord& other) const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i && other.images()[i] != i) return false;
  }
  return true;
}

std::string to_string(GroupDescriptor::Iso iso) {
  switch (iso) {
    case GroupDescriptor::Iso::Z2: return "Z2";
    case GroupDescriptor::Iso::Z2xZ2: return "Z2xZ2";
    case GroupDescriptor::Iso::S3: return "S3";
    case GroupDescriptor::Iso::Other: return "Other";
  }
  return "?";
}

std::vector<PermutationWord> generate_closure(
    const std::vector<PermutationWord>& gens) {
  if (gens.empty()) return {};
  std::set<PermutationWord> elements{PermutationWord(gens.front().degree())};
  std::vector<PermutationWord> frontier(elements.begin(), elements.end());
  while (!frontier.empty()) {
    std::vector<PermutationWord> next;
    for (const auto& e : frontier) {
      for (const auto& g : gens) {
        PermutationWord candidate = e.then(g);
        if (elements.insert(candidate).second) {
          next.push_back(std::move(candidate));
        }
      }
    }
    frontier = std::move(next);
  }
  return {elements.begin(), elements.end()};
}

GroupDescriptor describe_group(const std::vector<PermutationWord>& gens) {
  GroupDescriptor desc;
  const auto elements = generate_closure(gens);
  desc.order = static_cast<long>(elements.size());
  for (const auto& g : gens) {
    desc.generator_cycle_types.push_back(g.cycle_type());
  }
  const bool abelian = [&] {
    for (const auto& a : elements) {
      for (const auto& b : elements) {
        if (!a.commutes_with(b)) return false;
      }
    }
    return true;
  }();
  const bool exponent_two = [&] {
    for (const auto& a : elements) {
      if (!a.then(a).is_identity()) return false;
    }
    return true;
  }();
  if (desc.order == 2) {
    desc.iso_class = GroupDescriptor::Iso::Z2;
  } else if (desc.order == 4 && exponent_two) {
    desc.iso_class = GroupDescriptor::Iso::Z2xZ2;
  } else if (desc.order == 6 && !abelian) {
    desc.iso_class = GroupDescriptor::Iso::S3;
  } else {
    desc.iso_class = GroupDescriptor::Iso::Other;
  }
  return desc;
}

}  // namespace agc
