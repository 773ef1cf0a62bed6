#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "biord/simd/kernels.hpp"
#include "biord/words.hpp"

namespace biord {

inline constexpr int kDefaultDegreeCap = 8;

/// Element of the integral group ring ZF: finitely many words with nonzero
/// integer coefficients.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  static GroupRingElement of(const Word& w, std::int64_t coef = 1);

  void add(const Word& w, std::int64_t coef);
  std::int64_t coefficient(const Word& w) const;
  const std::map<Word, std::int64_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient sum (the augmentation map).
  std::int64_t augmentation() const;

  /// u * this.
  GroupRingElement left_multiplied(const Word& u) const;

  GroupRingElement& operator+=(const GroupRingElement& rhs);
  GroupRingElement& operator-=(const GroupRingElement& rhs);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) {
    return a += b;
  }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) {
    return a -= b;
  }
  friend GroupRingElement operator*(const GroupRingElement& a,
                                    const GroupRingElement& b);
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  std::map<Word, std::int64_t> terms_;
};

/// Fox derivative d/dx_j: D(x_i) = [i=j], D(uv) = D(u) + u D(v).
GroupRingElement fox_derivative(const Word& w, int j);

/// Augmentation of the Fox derivative; equals the exponent sum of x_j.
std::int64_t fox_eval0(const Word& w, int j);

/// A monomial X_{a_1} ... X_{a_k} in noncommuting variables.
using Monomial = std::vector<int>;

/// Integer polynomial in noncommuting variables, truncated above a degree cap.
/// Terms are kept in lexicographic monomial order.
class NcPolynomial {
 public:
  explicit NcPolynomial(int degree_cap);

  static NcPolynomial one(int degree_cap);

  /// Magnus series of letter^exp: (1+X)^exp, where negative exponents use the
  /// alternating series 1 - X + X^2 - ...
  static NcPolynomial letter_power(int letter, std::int64_t exp, int degree_cap);

  int degree_cap() const noexcept { return cap_; }
  const std::map<Monomial, std::int64_t>& terms() const noexcept { return terms_; }

  void add(const Monomial& m, std::int64_t coef);
  std::int64_t coefficient(const Monomial& m) const;
  NcPolynomial homogeneous(int degree) const;

  /// Product truncated at the smaller of the two caps. Coefficient overflow
  /// throws.
  friend NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b);
  friend bool operator==(const NcPolynomial&, const NcPolynomial&) = default;

 private:
  int cap_;
  std::map<Monomial, std::int64_t> terms_;
};

/// Magnus expansion x_i -> 1 + X_i, truncated at `cap`. Letters are used as
/// variable indices unchanged.
NcPolynomial magnus_expansion(std::span<const Run<int>> runs, int cap);
inline NcPolynomial magnus_expansion(const Word& w, int cap) {
  return magnus_expansion(w.runs(), cap);
}

/// Homogeneous component of lowest positive degree in the Magnus expansion.
struct LeadingTensor {
  int degree = 0;
  std::map<Monomial, std::int64_t> coords;

  friend bool operator==(const LeadingTensor&, const LeadingTensor&) = default;
};

enum class MagnusEngine {
  Auto,    // dense when the coefficient block is small and overflow-safe
  Sparse,  // map-based with checked arithmetic
  Dense,   // dense blocks; throws Precondition if infeasible
};

struct MagnusOptions {
  int cap = kDefaultDegreeCap;
  MagnusEngine engine = MagnusEngine::Auto;
  const simd::Kernels* kernels = nullptr;  // nullptr: simd::active_kernels()
};

/// Largest k with w in the k-th lower central series term. Throws
/// DepthExceedsCap when every nonconstant term up to the cap vanishes.
int lcs_depth(std::span<const Run<int>> runs, const MagnusOptions& opts = {});
inline int lcs_depth(const Word& w, const MagnusOptions& opts = {}) {
  return lcs_depth(w.runs(), opts);
}

LeadingTensor leading_tensor(std::span<const Run<int>> runs,
                             const MagnusOptions& opts = {});
inline LeadingTensor leading_tensor(const Word& w, const MagnusOptions& opts = {}) {
  return leading_tensor(w.runs(), opts);
}

/// Dense truncated expansion over letters 0..alphabet-1. Degree d occupies
/// alphabet^d consecutive coefficients in lexicographic (base-alphabet) order.
struct DenseExpansion {
  int alphabet = 0;
  int degree = 0;
  std::vector<std::int64_t> coeffs;
  std::vector<std::size_t> offsets;  // offsets[d] = start of degree-d block

  std::span<const std::int64_t> block(int d) const {
    return std::span<const std::int64_t>(coeffs).subspan(
        offsets[d], offsets[d + 1] - offsets[d]);
  }
};

/// Whether the dense engine handles `letters` total letters over `alphabet`
/// variables at `degree` without exceeding the size budget or risking
/// coefficient overflow.
bool dense_feasible(int alphabet, int degree, std::int64_t letters);

DenseExpansion dense_expansion(std::span<const Run<int>> runs, int alphabet,
                               int degree, const simd::Kernels& kernels);

/// Exponent-sum vector of a word: letter -> total exponent, zeros dropped.
std::map<int, std::int64_t> abelianize(std::span<const Run<int>> runs);

/// Multilinear substitution of each tensor slot by a linear combination of
/// letters (the action of an abelianized homomorphism on H^{⊗k}).
LeadingTensor substitute_linear(
    const LeadingTensor& t,
    const std::map<int, std::map<int, std::int64_t>>& images);

namespace detail {
// Coefficients s_0..s_cap of the Magnus series of x^exp.
std::vector<std::int64_t> magnus_series_coefficients(std::int64_t exp, int cap);
}  // namespace detail

/// One `coef * X1.X2` line per term; the constant term prints as `coef * 1`.
std::string format_expansion(const NcPolynomial& p);

}  // namespace biord
