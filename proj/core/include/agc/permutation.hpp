#ifndef AGC_PERMUTATION_HPP
#define AGC_PERMUTATION_HPP

#include <string>
#include <vector>

#include "agc/numbers.hpp"

namespace agc {

/// Permutation of a fiber {1..D}, stored as 0-based images.  Composition is
/// left-to-right throughout: (a.then(b))(x) = b(a(x)).
class PermutationWord {
 public:
  explicit PermutationWord(int degree = 0);
  static PermutationWord from_images(std::vector<int> images);
  static PermutationWord transposition(int degree, int a, int b);  // 0-based

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  PermutationWord then(const PermutationWord& next) const;
  PermutationWord inverse() const;
  PermutationWord power(long e) const;

  bool is_identity() const;
  bool is_transposition() const;
  long order() const;
  /// Nontrivial cycles, each starting at its smallest element, 1-based.
  std::vector<std::vector<int>> cycles() const;
  /// e.g. "(1 3)", "(1 2)(3 4)", "id".
  std::string cycle_notation() const;
  /// Lengths of nontrivial cycles, descending; "1" when identity.
  std::string cycle_type() const;

  bool commutes_with(const PermutationWord& other) const;
  /// True when the supports (moved points) are disjoint.
  bool disjoint_from(const PermutationWord& other) const;

  auto operator<=>(const PermutationWord&) const = default;

 private:
  std::vector<int> images_;
};

struct GroupDescriptor {
  enum class Iso { Z2, Z2xZ2, S3, Other };
  long order = 1;
  Iso iso_class = Iso::Other;
  std::vector<std::string> generator_cycle_types;
};

std::string to_string(GroupDescriptor::Iso iso);

/// All elements of the subgroup generated by `gens` (closure under
/// composition; fibers here are tiny, so a plain BFS suffices).
std::vector<PermutationWord> generate_closure(
    const std::vector<PermutationWord>& gens);

GroupDescriptor describe_group(const std::vector<PermutationWord>& gens);

}  // namespace agc

#endif
