#include "biord/complete.hpp"

#include <numeric>
#include <stdexcept>

namespace biord {

namespace {

Certificate certify_at(const BraidWord& b, int i0) {
  return certify(extract_conjugacy_form(artin_action(b)), i0);
}

std::int64_t smallest_coprime_shift(std::int64_t modulus, std::int64_t h) {
  std::int64_t k = 0;
  while (std::gcd(modulus, h + k) != 1) ++k;
  return k;
}

std::string cycle_text(const std::vector<int>& c) {
  std::string s = "(";
  for (std::size_t m = 0; m < c.size(); ++m) {
    if (m) s += ' ';
    s += std::to_string(c[m]);
  }
  return s + ")";
}

CompletionResult finish(const BraidWord& beta, BraidWord alpha, Certificate cert,
                        std::vector<std::string> steps) {
  if (cert.verdict != Verdict::BiOrderPreserving)
    throw std::logic_error("completion produced an uncertified braid " +
                           format_braid(compose(beta, alpha)));
  CompletionResult out{alpha, compose(beta, alpha), std::move(cert),
                       std::move(steps)};
  return out;
}

}  // namespace

CompletionResult complete_with_axis_conjugates(const BraidWord& beta) {
  const int n = beta.strands();
  if (n < 2)
    throw Error(ErrorCode::Precondition, "axis completion needs n >= 2");
  if (beta.max_generator() > n - 2)
    throw Error(ErrorCode::Precondition,
                "beta must avoid s" + std::to_string(n - 1) +
                    " so that strand n is the axis");
  const Certificate before = certify_at(beta, n);
  BraidWord alpha = BraidWord::identity(n);
  std::vector<std::string> steps;
  for (const auto& rep : before.reports) {
    const auto r = static_cast<std::int64_t>(rep.orbit.size());
    if (rep.passes_gcd) continue;
    // Each A_{i,n} with i in the cycle raises its h-sum by exactly one.
    const std::int64_t k = smallest_coprime_shift(r, rep.h_sum);
    const int i = rep.orbit.front();
    for (std::int64_t m = 0; m < k; ++m)
      alpha = compose(alpha, pure_braid_generator(i, n, n));
    steps.push_back("cycle " + cycle_text(rep.orbit) + ": h=" +
                    std::to_string(rep.h_sum) + ", append A_{" +
                    std::to_string(i) + "," + std::to_string(n) + "}^" +
                    std::to_string(k) + " -> h=" + std::to_string(rep.h_sum + k));
  }
  if (steps.empty()) steps.push_back("all cycles already coprime");
  Certificate cert = certify_at(compose(beta, alpha), n);
  return finish(beta, std::move(alpha), std::move(cert), std::move(steps));
}

B3Stabilization b3_stabilize(const BraidWord& beta) {
  if (beta.strands() != 3)
    throw Error(ErrorCode::Precondition, "b3 strategy needs a braid in B_3");
  for (int k = 0; k <= 3; ++k) {
    const BraidWord alpha = BraidWord::generator(3, 1, k);
    const BraidWord product = compose(beta, alpha);
    const ConjugacyForm form = extract_conjugacy_form(artin_action(product));
    if (form.sigma.fixed_points().empty()) continue;
    Certificate cert = certify_all(form);
    if (cert.verdict == Verdict::BiOrderPreserving) {
      std::vector<std::string> steps{
          "permutation of beta: " + format_permutation(underlying_permutation(beta)),
          "smallest k with beta s1^k certified: k=" + std::to_string(k) +
              " (i0=" + std::to_string(cert.i0) + ")"};
      return {k, finish(beta, alpha, std::move(cert), std::move(steps))};
    }
  }
  throw std::logic_error("no k in 0..3 certifies " + format_braid(beta));
}

PermutationCompletion permutation_completion(const Permutation& sigma) {
  const int n = sigma.size();
  if (n < 4)
    throw Error(ErrorCode::Precondition, "permutation completion needs n >= 4");
  if (sigma(n) == n)
    throw Error(ErrorCode::Precondition, "sigma must move n");
  const int j = sigma.inverse()(n);
  std::vector<int> rest;
  for (int i = 1; i <= n; ++i)
    if (i != j && i != n) rest.push_back(i);
  if (rest.back() == n - 1) std::swap(rest[rest.size() - 1], rest[rest.size() - 2]);
  PermutationCompletion out;
  out.fixed_point = rest.back();
  out.long_cycle = {j, n};
  out.long_cycle.insert(out.long_cycle.end(), rest.begin(), rest.end() - 1);
  const Permutation target = Permutation::from_cycles(n, {out.long_cycle});
  out.tau = sigma.inverse().then(target);
  return out;
}

CompletionResult stabilize_in_lower_braid(const BraidWord& beta) {
  const int n = beta.strands();
  if (n < 3)
    throw Error(ErrorCode::Precondition, "lower-braid completion needs n >= 3");
  if (n == 3) {
    B3Stabilization s = b3_stabilize(beta);
    s.result.steps.insert(s.result.steps.begin(), "n=3: delegating to b3");
    return s.result;
  }
  const Permutation sigma = underlying_permutation(beta);
  if (sigma(n) == n) {
    BraidWord alpha = lift_permutation(sigma.inverse());
    Certificate cert = certify_braid(compose(beta, alpha));
    std::vector<std::string> steps{
        "sigma fixes n: alpha lifts sigma^-1, product is pure"};
    return finish(beta, std::move(alpha), std::move(cert), std::move(steps));
  }
  const PermutationCompletion pc = permutation_completion(sigma);
  BraidWord alpha = lift_permutation(pc.tau);
  const int i0 = pc.fixed_point;
  const Certificate first = certify_at(compose(beta, alpha), i0);
  const std::int64_t h = first.reports.front().h_sum;
  // Each s_{i0}^2 raises the (n-1)-cycle's h-sum by one.
  const std::int64_t ell = smallest_coprime_shift(n - 1, h);
  alpha = compose(alpha, BraidWord::generator(n, i0, static_cast<int>(2 * ell)));
  std::vector<std::string> steps{
      "tau = " + format_permutation(pc.tau) + ", sigma*tau = (" +
          std::to_string(i0) + ")" + cycle_text(pc.long_cycle),
      "h of the long cycle = " + std::to_string(h) + ", append s" +
          std::to_string(i0) + "^" + std::to_string(2 * ell)};
  Certificate cert = certify_at(compose(beta, alpha), i0);
  return finish(beta, std::move(alpha), std::move(cert), std::move(steps));
}

CompletionResult two_more_components(const BraidWord& beta) {
  return complete_with_axis_conjugates(embed(beta, beta.strands() + 1));
}

}  // namespace biord
