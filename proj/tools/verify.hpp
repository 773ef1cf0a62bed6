#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "biord/order.hpp"

namespace biord::cli {

struct VerifyConfig {
  int samples = 500;
  int maxlen = 12;
  std::uint64_t seed = 42;
  int retry_cap = 12;
  bool force_phi = false;  // check phi even without a BI certificate
};

struct VerifyReport {
  std::int64_t comparisons = 0;
  std::int64_t abstentions = 0;  // undecided at the context cap
  std::int64_t resolved = 0;     // of those, decided at retry_cap
  std::int64_t unresolved = 0;

  std::int64_t totality = 0;
  std::int64_t antisymmetry = 0;
  std::int64_t transitivity = 0;
  std::int64_t left_invariance = 0;
  std::int64_t right_invariance = 0;
  std::int64_t phi_invariance = 0;
  bool phi_checked = false;  // only for BI-certified contexts

  std::vector<std::string> examples;  // first few violations

  std::int64_t violations() const {
    return totality + antisymmetry + transitivity + left_invariance + right_invariance +
           phi_invariance;
  }
  bool passed() const { return violations() == 0 && unresolved == 0; }
};

/// Samples random words of length <= maxlen and checks that compare_in_F is a
/// strict total order, invariant on both sides and under phi. Half the pairs
/// share their h-value so that the K comparison is exercised. Deterministic in
/// the seed.
VerifyReport run_verify(const OrderContext& ctx, const VerifyConfig& cfg);

}  // namespace biord::cli
