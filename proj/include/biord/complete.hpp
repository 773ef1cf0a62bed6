#pragma once

#include <string>
#include <vector>

#include "biord/braid.hpp"
#include "biord/certify.hpp"

namespace biord {

/// A braid alpha such that beta * alpha is certified bi-order-preserving.
struct CompletionResult {
  BraidWord alpha;
  BraidWord product;  // compose(beta, alpha)
  Certificate certificate;
  std::vector<std::string> steps;
};

/// beta must fix strand n (only s_1..s_{n-2} occur). For every cycle c of its
/// permutation failing gcd(|c|, h_c) = 1, appends the fewest copies of
/// A_{min(c), n} that make it coprime. Certified with i0 = n.
CompletionResult complete_with_axis_conjugates(const BraidWord& beta);

struct B3Stabilization {
  int k = 0;  // alpha = s_1^k
  CompletionResult result;
};

/// Smallest k in 0..3 with beta s_1^k certified BI (beta in B_3).
B3Stabilization b3_stabilize(const BraidWord& beta);

struct PermutationCompletion {
  Permutation tau;              // fixes n
  int fixed_point = 0;          // the 1-cycle of sigma.then(tau), <= n-2
  std::vector<int> long_cycle;  // the (n-1)-cycle (j n i_1 ... i_{n-3})
};

/// For sigma in S_n with n^sigma != n (n >= 4), finds tau fixing n such that
/// sigma.then(tau) has cycle type (1, n-1).
PermutationCompletion permutation_completion(const Permutation& sigma);

/// Finds alpha in B_{n-1} (n >= 3) with beta * alpha certified BI.
CompletionResult stabilize_in_lower_braid(const BraidWord& beta);

/// Embeds beta in B_{k+1} and completes it with axis conjugates A_{i,k+1}.
CompletionResult two_more_components(const BraidWord& beta);

}  // namespace biord
