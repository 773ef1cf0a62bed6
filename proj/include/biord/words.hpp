#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "biord/error.hpp"

namespace biord {

/// One maximal power `letter^exp` inside a run-length word.
template <class L>
struct Run {
  L letter;
  std::int64_t exp;

  friend bool operator==(const Run&, const Run&) = default;
  friend auto operator<=>(const Run&, const Run&) = default;
};

/// Freely reduced word over an arbitrary alphabet, stored run-length.
///
/// Adjacent runs always carry distinct letters and no run has exponent 0, so
/// two words are equal as group elements iff their run sequences are equal.
/// The free-group alphabet uses `int` generator indices; the kernel of the
/// exponent homomorphism reuses the same machinery over `KIndex` letters.
template <class L>
class RunWord {
 public:
  using letter_type = L;
  using run_type = Run<L>;

  RunWord() = default;

  static RunWord power(const L& letter, std::int64_t exp) {
    RunWord w;
    w.push_back(letter, exp);
    return w;
  }

  static RunWord from_runs(std::span<const run_type> runs) {
    RunWord w;
    for (const auto& r : runs) w.push_back(r.letter, r.exp);
    return w;
  }

  /// Right-multiplies by `letter^exp`, cancelling against the tail.
  void push_back(const L& letter, std::int64_t exp) {
    if (exp == 0) return;
    if (!runs_.empty() && runs_.back().letter == letter) {
      runs_.back().exp += exp;
      if (runs_.back().exp == 0) runs_.pop_back();
    } else {
      runs_.push_back({letter, exp});
    }
  }

  std::span<const run_type> runs() const noexcept { return runs_; }
  bool is_identity() const noexcept { return runs_.empty(); }

  /// Number of letters x^{±1} once runs are expanded.
  std::int64_t length() const noexcept {
    std::int64_t n = 0;
    for (const auto& r : runs_) n += std::llabs(r.exp);
    return n;
  }

  RunWord inverse() const {
    RunWord w;
    w.runs_.reserve(runs_.size());
    for (auto it = runs_.rbegin(); it != runs_.rend(); ++it)
      w.runs_.push_back({it->letter, -it->exp});
    return w;
  }

  RunWord& operator*=(const RunWord& rhs) {
    for (const auto& r : rhs.runs_) push_back(r.letter, r.exp);
    return *this;
  }

  friend RunWord operator*(RunWord lhs, const RunWord& rhs) {
    lhs *= rhs;
    return lhs;
  }

  friend bool operator==(const RunWord&, const RunWord&) = default;
  friend auto operator<=>(const RunWord& a, const RunWord& b) {
    return a.runs_ <=> b.runs_;
  }

 private:
  std::vector<run_type> runs_;
};

/// Words over x_1..x_n; letters are 1-based generator indices.
using Word = RunWord<int>;

template <class L>
RunWord<L> conjugate(const RunWord<L>& by, const RunWord<L>& w) {
  return by * w * by.inverse();
}

std::int64_t exponent_sum(const Word& w, int generator);

/// The homomorphism F -> Z sending x_{i0} to 1 and every other generator to 0.
struct ExponentHom {
  int distinguished;

  std::int64_t operator()(const Word& w) const {
    return exponent_sum(w, distinguished);
  }
};

/// An endomorphism of F_n given by the images of x_1..x_n (index 0 holds x_1).
struct Endomorphism {
  std::vector<Word> images;

  int rank() const noexcept { return static_cast<int>(images.size()); }
  const Word& image(int generator) const { return images.at(generator - 1); }

  static Endomorphism identity(int rank);
  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;
};

/// Rank context for free-group arithmetic. Words do not carry their rank; every
/// checked operation goes through this object and rejects out-of-range letters.
class FreeGroup {
 public:
  explicit FreeGroup(int rank);

  int rank() const noexcept { return rank_; }

  Word generator(int i, std::int64_t exp = 1) const;

  /// Free reduction of a raw signed-letter sequence (+k means x_k, -k x_k^-1).
  Word reduce(std::span<const int> signed_letters) const;

  Word multiply(const Word& a, const Word& b) const;
  Word invert(const Word& a) const;

  /// Throws RankMismatch if `w` mentions a generator outside 1..rank.
  void check(const Word& w) const;

  /// Applies the substitution x_i -> images[i] to `w`.
  Word apply(const Endomorphism& phi, const Word& w) const;

  /// Composition in the right-action convention: x^(first then second).
  Endomorphism then(const Endomorphism& first, const Endomorphism& second) const;

  Word parse(std::string_view text) const;

 private:
  int rank_;
};

/// Text form used everywhere: `x1 x3^-1 x2^2`, identity is `1`.
std::string format_word(const Word& w);

/// Parses words in the text grammar without a rank bound (max index is checked
/// by FreeGroup::parse). `line` is reported in parse errors.
Word parse_word(std::string_view text, int line = 1);

/// Reads `x<k> = <word>` lines; blank lines and `#` comments are skipped.
/// Every generator 1..rank must be given exactly once.
Endomorphism parse_endomorphism(std::string_view text, int rank);

std::string format_endomorphism(const Endomorphism& phi);

}  // namespace biord
