#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "biord/words.hpp"

namespace biord {

/// Permutation of {1..n}. Products compose leftmost first:
/// i^(a.then(b)) = (i^a)^b, matching the right action of braids on F_n.
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int n);
  /// images[i-1] = i^sigma; throws SigmaNotBijective unless a bijection.
  static Permutation from_images(std::vector<int> images);
  /// Builds a permutation of {1..n} from disjoint cycles.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  static Permutation transposition(int n, int a, int b);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(i - 1); }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  bool is_identity() const;
  std::vector<int> fixed_points() const;

  /// Cycles (including fixed points), each starting at its minimal element,
  /// listed by increasing minimal element.
  std::vector<std::vector<int>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Cycle notation, fixed points omitted: `(2 3)`; identity prints as `()`.
std::string format_permutation(const Permutation& p);

/// Word in the Artin generators of B_n; letter +k is s_k, -k is s_k^-1.
class BraidWord {
 public:
  BraidWord() = default;
  BraidWord(int strands, std::vector<int> letters);

  static BraidWord identity(int strands) { return BraidWord(strands, {}); }
  static BraidWord generator(int strands, int k, int exp = 1);

  int strands() const noexcept { return strands_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  /// Largest |k| among the letters, 0 for the empty braid.
  int max_generator() const noexcept;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 2;
  std::vector<int> letters_;
};

BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord invert_braid(const BraidWord& a);
BraidWord power(const BraidWord& a, int exp);
/// Views a braid on fewer strands as a braid on `strands` (extra strands straight).
BraidWord embed(const BraidWord& a, int strands);

/// Artin generator action s_k^e on F_n (right action).
Endomorphism generator_action(int strands, int k, int sign);

/// Images x_j^beta, letters of beta applied leftmost first.
Endomorphism artin_action(const BraidWord& beta);

Permutation underlying_permutation(const BraidWord& beta);

/// A_{i,j} = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1.
BraidWord pure_braid_generator(int i, int j, int n);

/// Closed-form images of x_k under A_{i,j}.
Endomorphism aij_images(int i, int j, int n);

/// Positive braid whose underlying permutation is `p`, built from the adjacent
/// swaps of a bubble sort. Generators only touch strands that p moves.
BraidWord lift_permutation(const Permutation& p);

/// Grammar: `s1^2 s2^-1`, or a bare signed list `1 1 -2`; empty is the identity.
BraidWord parse_braid(int strands, std::string_view text);
/// Grouped form `s1^2 s2^-1`; the empty braid prints as an empty string.
std::string format_braid(const BraidWord& b);

}  // namespace biord
