#include <cstdlib>

#include "biord/magnus.hpp"

namespace biord {

namespace {

// Largest dense coefficient vector we are willing to allocate (8 MiB).
constexpr std::size_t kDenseBudget = std::size_t{1} << 20;

}  // namespace

bool dense_feasible(int alphabet, int degree, std::int64_t letters) {
  if (alphabet < 1 || degree < 0 || letters < 0) return false;
  std::size_t total = 0;
  std::size_t block = 1;
  for (int d = 0; d <= degree; ++d) {
    total += block;
    if (total > kDenseBudget) return false;
    if (d < degree) {
      if (block > kDenseBudget / static_cast<std::size_t>(alphabet)) return false;
      block *= static_cast<std::size_t>(alphabet);
    }
  }
  // Every coefficient, including partial sums inside the update loop, is bounded
  // in absolute value by C(letters + degree, degree), the same bound as for
  // the commutative series prod (1 - t)^-|e|.
  if (letters > (std::int64_t{1} << 40)) return false;
  __int128 bound = 1;
  for (int i = 1; i <= degree; ++i) {
    bound = bound * (letters + i) / i;
    if (bound >= (static_cast<__int128>(1) << 62)) return false;
  }
  return true;
}

DenseExpansion dense_expansion(std::span<const Run<int>> runs, int alphabet,
                               int degree, const simd::Kernels& kernels) {
  DenseExpansion e;
  e.alphabet = alphabet;
  e.degree = degree;
  std::vector<std::size_t> pow(degree + 1, 1);
  for (int d = 1; d <= degree; ++d) pow[d] = pow[d - 1] * alphabet;
  e.offsets.resize(degree + 2, 0);
  for (int d = 0; d <= degree; ++d) e.offsets[d + 1] = e.offsets[d] + pow[d];
  e.coeffs.assign(e.offsets[degree + 1], 0);
  e.coeffs[0] = 1;

  // Left-multiplying by the series of x_g^exp, rightmost run first. X_g^p u
  // lands at index idx(g^p) * m^deg(u) + idx(u), a contiguous block, so each
  // (target degree, power) pair is a single axpy. Descending target degree
  // keeps the source blocks unmodified while they are read.
  std::int64_t* c = e.coeffs.data();
  for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
    const int g = it->letter;
    if (g < 0 || g >= alphabet)
      throw Error(ErrorCode::IndexOutOfRange, "letter outside dense alphabet");
    const auto s = detail::magnus_series_coefficients(it->exp, degree);
    for (int d = degree; d >= 1; --d) {
      std::size_t gp = 0;  // idx(g^p) = g (1 + m + ... + m^{p-1})
      for (int p = 1; p <= d; ++p) {
        gp = gp * alphabet + static_cast<std::size_t>(g);
        if (s[p] == 0) continue;
        const int src_deg = d - p;
        kernels.axpy_i64(c + e.offsets[d] + gp * pow[src_deg], c + e.offsets[src_deg],
                         pow[src_deg], s[p]);
      }
    }
  }
  return e;
}

}  // namespace biord
