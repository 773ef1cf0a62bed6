#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "biord/braid.hpp"
#include "biord/words.hpp"

namespace biord {

/// phi(x_i) = w_i x_{sigma(i)} w_i^-1 with canonical (shortest) conjugators.
struct ConjugacyForm {
  int rank = 0;
  Permutation sigma;
  std::vector<Word> conjugators;  // index 0 holds w_1

  const Word& conjugator(int i) const { return conjugators.at(i - 1); }
  Endomorphism rebuild() const;
};

/// Splits each reduced image at its middle letter, which must be x_j^{+1},
/// and checks that the suffix inverts the prefix.
ConjugacyForm extract_conjugacy_form(const Endomorphism& phi);

enum class Verdict { BiOrderPreserving, LeftOrderPreserving, Inconclusive };

std::string_view to_string(Verdict v);

struct OrbitReport {
  std::vector<int> orbit;  // (k_1, ..., k_r), starts at its minimal element
  std::vector<std::int64_t> h_values;
  std::int64_t h_sum = 0;
  std::int64_t gcd = 0;  // gcd(r, |h_sum|), with gcd(r, 0) = r
  bool passes_gcd = false;
  bool passes_nonvanishing = false;
};

struct Certificate {
  int i0 = 0;
  std::vector<OrbitReport> reports;  // every orbit except {i0}
  Verdict verdict = Verdict::Inconclusive;
};

/// Evaluates the coprimality test (bi-order) and the non-vanishing test
/// (left-order) for the fixed point `i0`. The verdict is BI when every orbit is
/// coprime, LEFT when only non-vanishing holds, INCONCLUSIVE otherwise.
Certificate certify(const ConjugacyForm& form, int i0);

/// Strongest certificate over all fixed points of sigma; ties go to the
/// smallest i0. Throws NoFixedPoint when sigma has none.
Certificate certify_all(const ConjugacyForm& form);

/// Artin action + extraction + certify_all.
Certificate certify_braid(const BraidWord& beta);

}  // namespace biord
