#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "biord/braid.hpp"
#include "biord/certify.hpp"
#include "biord/magnus.hpp"
#include "biord/words.hpp"

namespace biord {

/// Free basis letter y_{i,j} = x_{i0}^j x_i x_{i0}^-j of K = ker h (i != i0).
struct KIndex {
  int generator = 0;
  std::int64_t shift = 0;

  friend bool operator==(const KIndex&, const KIndex&) = default;
  friend auto operator<=>(const KIndex&, const KIndex&) = default;
};

using KWord = RunWord<KIndex>;

std::string format_kindex(const KIndex& k);
std::string format_kword(const KWord& w);

/// One sigma-orbit other than {i0}, with its conjugator h-values.
struct OrbitData {
  std::vector<int> tuple;              // (k_1..k_r), sigma(k_m) = k_{m+1}
  std::vector<std::int64_t> h_values;  // h(w_{k_m})
  std::vector<std::int64_t> offsets;   // y_m = -(h_1 + ... + h_{m-1}); y_1 = 0
  std::int64_t h_sum = 0;

  static OrbitData make(std::vector<int> tuple, std::vector<std::int64_t> h_values);

  int size() const noexcept { return static_cast<int>(tuple.size()); }
  bool coprime() const noexcept;
  /// 0-based position of `generator` in the tuple, or -1.
  int position(int generator) const noexcept;
};

/// Solves t = r (y_i + j) + i h_O for i in 1..r and returns (k_i, j).
/// Requires gcd(r, h_O) = 1.
KIndex vindex_decode(const OrbitData& orbit, std::int64_t t);

/// Inverse of vindex_decode.
std::int64_t vindex_encode(const OrbitData& orbit, const KIndex& index);

/// Everything the invariant ordering needs: the automorphism in conjugacy
/// form, the fixed point i0, the orbits in canonical order (by minimal
/// element) and the Magnus degree cap. Immutable once built.
class OrderContext {
 public:
  OrderContext(ConjugacyForm form, int i0, int cap = kDefaultDegreeCap);

  /// Uses the i0 chosen by certify_all. Throws NoFixedPoint.
  static OrderContext for_braid(const BraidWord& beta, int cap = kDefaultDegreeCap);
  static OrderContext for_endomorphism(const Endomorphism& phi,
                                       int cap = kDefaultDegreeCap);

  int rank() const noexcept { return form_.rank; }
  int i0() const noexcept { return i0_; }
  int cap() const noexcept { return cap_; }
  const ConjugacyForm& form() const noexcept { return form_; }
  const Endomorphism& automorphism() const noexcept { return phi_; }
  const Certificate& certificate() const noexcept { return certificate_; }
  const std::vector<OrbitData>& orbits() const noexcept { return orbits_; }

  /// True when every orbit is coprime, i.e. the order is phi-invariant.
  bool invariance_certified() const noexcept {
    return certificate_.verdict == Verdict::BiOrderPreserving;
  }

  OrderContext with_cap(int cap) const;

  /// Position of a K letter in the index order: (orbit rank, t). Coprime
  /// orbits use t = vindex_encode; other orbits fall back to t = r j + m, which
  /// still orders K compatibly with conjugation by x_{i0} but carries no
  /// phi-invariance.
  std::pair<int, std::int64_t> index_key(const KIndex& k) const;

 private:
  ConjugacyForm form_;
  Endomorphism phi_;
  int i0_;
  int cap_;
  Certificate certificate_;
  std::vector<OrbitData> orbits_;
  std::vector<int> orbit_of_;  // generator -> orbit slot, -1 for i0
};

/// Rewrites w (with h(w) = 0) in the basis y_{i,j}; x_{i0} letters only move
/// the transversal exponent. Throws HNonzero.
KWord schreier_rewrite(const Word& w, int i0);

/// Substitutes y_{i,j} -> x_{i0}^j x_i x_{i0}^-j.
Word evaluate_kword(const KWord& w, int i0);

std::strong_ordering kindex_compare(const KIndex& a, const KIndex& b,
                                    const OrderContext& ctx);

enum class Relation { Less, Equal, Greater, Undecided };

std::string_view to_string(Relation r);

/// Outcome of a comparison plus the data that decided it.
struct Decision {
  Relation relation = Relation::Equal;
  std::int64_t h_difference = 0;      // h(a^-1 b); nonzero means h decided
  int depth = 0;                      // lower central depth of the K element
  std::vector<KIndex> minimal_index;  // least index tuple with nonzero coefficient
  std::int64_t coefficient = 0;       // its coefficient, sign decides
  int cap_used = 0;
};

/// u < v iff u^-1 v is positive: its leading Magnus tensor, read in the index
/// order, has a positive first nonzero coefficient. Undecided when the depth
/// of u^-1 v exceeds the context's cap.
Decision compare_in_K(const KWord& u, const KWord& v, const OrderContext& ctx);

/// a < b iff h(a^-1 b) > 0, or h(a^-1 b) = 0 and a^-1 b is positive in K.
Decision compare_in_F(const Word& a, const Word& b, const OrderContext& ctx);

struct TranslationReport {
  std::int64_t checked = 0;
  std::int64_t mismatches = 0;
  std::vector<std::string> details;  // first few mismatches
};

/// Recomputes phi and conjugation by x_{i0} on the abelianized basis of K for
/// t in [t_min, t_max] of every orbit, and compares with
///   phi_ab(A_{i,j}) = A_{sigma(i), j + h(w_i)},
///   phi_ab(V_t) = V_{t + h_O},  psi_ab(V_t) = V_{t + |O|}.
/// Requires a BI certificate.
TranslationReport translation_maps_check(const OrderContext& ctx, std::int64_t t_min,
                                         std::int64_t t_max);

/// Rows are images: m[i][j] is the coefficient of basis vector j in f(v_i).
/// `order` lists basis indices from least to greatest. True iff the matrix,
/// read in that order, is upper triangular with positive diagonal.
bool matrix_is_positively_triangular(const std::vector<std::vector<std::int64_t>>& m,
                                     std::span<const int> order);

}  // namespace biord
