// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include "biord/complete.hpp"
#include "biord/magnus.hpp"
#include "biord/order.hpp"
#include "cli.hpp"
#include "serialize.hpp"
#include "support/gen.hpp"
#include "support/oracle.hpp"
#include "verify.hpp"

namespace {

using namespace biord;
using testing::Gen;
using testing::commutator;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

Word x(int i) { return Word::power(i, 1); }

Certificate certify_at(const BraidWord& b, int i0) {
  return certify(extract_conjugacy_form(artin_action(b)), i0);
}

const BraidWord kMagic = parse_braid(3, "s1^2 s2^-1");

std::vector<OrderContext> random_bi_contexts(std::uint64_t seed, int count) {
  Gen g(seed);
  std::vector<OrderContext> out;
  while (static_cast<int>(out.size()) < count) {
    const BraidWord b = g.braid(static_cast<int>(g.uniform(3, 5)), 10);
    try {
      OrderContext ctx = OrderContext::for_braid(b);
      if (ctx.invariance_certified()) out.push_back(std::move(ctx));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoFixedPoint) throw;
    }
  }
  return out;
}

Outcome ac1() {
  Outcome o;
  const auto t0 = Clock::now();
  std::ostringstream out, err;
  const int code = cli::run({"--json", "certify", "3", "s1^2 s2^-1"}, out, err);
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  o.require(code == cli::kExitOk, "exit code " + std::to_string(code));
  const cli::Json j = cli::Json::parse(out.str());
  o.require(j.at("verdict") == "BI_ORDER_PRESERVING", "verdict");
  o.require(j.at("i0") == 1, "i0");
  o.require(j.at("orbits").size() == 1, "orbit count");
  const auto& orb = j.at("orbits").at(0);
  o.require(orb.at("orbit") == cli::Json::array({2, 3}), "orbit");
  o.require(orb.at("h_O") == 1, "h_O");
  o.require(orb.at("gcd") == 1, "gcd");
  o.require(secs < 1.0, "runtime");
  o.note += (o.note.empty() ? "" : "; ") + std::to_string(secs * 1000).substr(0, 5) + " ms";
  return o;
}

Outcome ac2() {
  Outcome o;
  const auto t0 = Clock::now();
  for (int n = -6; n <= 6; ++n) {
    BraidWord b = parse_braid(3, "s1^2");
    if (n != 0) b = compose(b, BraidWord::generator(3, 2, n));
    o.require(certify_braid(b).verdict == Verdict::BiOrderPreserving,
              "n = " + std::to_string(n));
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  o.require(secs < 5.0, "runtime");
  return o;
}

Outcome ac3() {
  Outcome o;
  int checked = 0;
  for (int n = 2; n <= 7; ++n)
    for (int j = 2; j <= n; ++j)
      for (int i = 1; i < j; ++i) {
        o.require(aij_images(i, j, n) == artin_action(pure_braid_generator(i, j, n)),
                  "A_{" + std::to_string(i) + "," + std::to_string(j) + "} in B_" +
                      std::to_string(n));
        ++checked;
      }
  o.note = std::to_string(checked) + " generators" + (o.ok ? "" : ", " + o.note);
  return o;
}

Outcome ac4() {
  Outcome o;
  Gen g(4004);
  for (int n = 4; n <= 6; ++n)
    for (int s = 0; s < 100; ++s) {
      const BraidWord beta = embed(g.braid(n - 1, 12), n);
      const Certificate before = certify_at(beta, n);
      for (int i = 1; i < n; ++i) {
        const Certificate after = certify_at(compose(beta, pure_braid_generator(i, n, n)), n);
        o.require(after.reports.size() == before.reports.size(), "orbit count");
        if (!o.ok) return o;
        for (std::size_t k = 0; k < after.reports.size(); ++k) {
          const auto& c = after.reports[k].orbit;
          const bool in = std::find(c.begin(), c.end(), i) != c.end();
          o.require(c == before.reports[k].orbit &&
                        after.reports[k].h_sum == before.reports[k].h_sum + (in ? 1 : 0),
                    format_braid(beta) + " with A_{" + std::to_string(i) + "," +
                        std::to_string(n) + "}");
        }
      }
    }
  return o;
}

Outcome ac5() {
  Outcome o;
  Gen g(4005);
  for (int s = 0; s < 200; ++s) {
    const int n = static_cast<int>(g.uniform(3, 7));
    const BraidWord beta = g.braid(n, 12, n - 2);
    const CompletionResult r = complete_with_axis_conjugates(beta);
    o.require(r.certificate.verdict == Verdict::BiOrderPreserving &&
                  certify_at(r.product, n).verdict == Verdict::BiOrderPreserving,
              format_braid(beta));
  }
  const BraidWord beta = parse_braid(5, "s1 s3");
  const BraidWord alpha = compose(pure_braid_generator(4, 5, 5), pure_braid_generator(2, 5, 5));
  o.require(certify_at(compose(beta, alpha), 5).verdict == Verdict::BiOrderPreserving,
            "worked example");
  return o;
}

Outcome ac6() {
  Outcome o;
  Gen g(4006);
  for (int s = 0; s < 200; ++s) {
    const BraidWord beta = g.braid(3, 10);
    const B3Stabilization r = b3_stabilize(beta);
    o.require(r.k >= 0 && r.k <= 3 && r.result.certificate.verdict == Verdict::BiOrderPreserving &&
                  certify_braid(r.result.product).verdict == Verdict::BiOrderPreserving,
              format_braid(beta));
  }
  return o;
}

Outcome ac7() {
  Outcome o;
  int count = 0;
  for (int n = 4; n <= 5; ++n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    do {
      if (img[n - 1] == n) continue;
      const Permutation sigma = Permutation::from_images(img);
      const PermutationCompletion c = permutation_completion(sigma);
      const Permutation st = sigma.then(c.tau);
      const auto cyc = st.cycles();
      const auto fixed = st.fixed_points();
      o.require(c.tau(n) == n, format_permutation(sigma) + ": tau moves n");
      o.require(fixed.size() == 1 && fixed[0] <= n - 2 && fixed[0] == c.fixed_point,
                format_permutation(sigma) + ": fixed point");
      bool long_cycle = false;
      for (const auto& cy : cyc) long_cycle |= static_cast<int>(cy.size()) == n - 1;
      o.require(long_cycle, format_permutation(sigma) + ": cycle type");
      ++count;
    } while (std::next_permutation(img.begin(), img.end()));
  }
  o.note = std::to_string(count) + " permutations" + (o.ok ? "" : ", " + o.note);
  return o;
}

Outcome ac8() {
  Outcome o;
  Gen g(4008);
  for (int s = 0; s < 500; ++s) {
    const Word u = g.word(3, 12), v = g.word(3, 12);
    const int j = static_cast<int>(g.uniform(1, 3));
    o.require(fox_derivative(u * v, j) ==
                  fox_derivative(u, j) + fox_derivative(v, j).left_multiplied(u),
              "product rule");
    for (int k = 1; k <= 3; ++k)
      o.require(fox_eval0(u, k) == exponent_sum(u, k), "fox_eval0");
    const int cap = static_cast<int>(g.uniform(1, 6));
    const Word a = g.word(3, 6), b = g.word(3, 6);
    o.require(magnus_expansion(a * b, cap) == magnus_expansion(a, cap) * magnus_expansion(b, cap),
              "multiplicativity");
    o.require(testing::same_expansion(magnus_expansion(a * b, cap), testing::oracle_magnus(a * b, cap)),
              "oracle expansion");
  }
  o.require(lcs_depth(commutator(x(1), x(2))) == 2, "[x1,x2]");
  for (int weight = 1; weight <= 5; ++weight) {
    Word c = x(1);
    for (int i = 2; i <= weight; ++i) c = commutator(c, x(i));
    std::vector<int> mono(weight);
    std::iota(mono.begin(), mono.end(), 1);
    const auto full = testing::oracle_magnus(c, weight);
    auto it = full.find(Monomial(mono.begin(), mono.end()));
    const bool unit = it != full.end() && (it->second == 1 || it->second == -1);
    o.require(unit, "oracle coefficient at weight " + std::to_string(weight));
    o.require(lcs_depth(c) == weight, "depth at weight " + std::to_string(weight));
  }
  return o;
}

Outcome ac9() {
  Outcome o;
  const FreeGroup F(3);
  const Endomorphism phi = artin_action(kMagic);
  std::map<int, std::map<int, std::int64_t>> ab;
  for (int i = 1; i <= 3; ++i) {
    for (const auto& [l, e] : abelianize(F.apply(phi, x(i)).runs())) ab[i][l] = e;
  }
  Gen g(4009);
  int tested = 0;
  while (tested < 200) {
    Word u = g.word(3, 8);
    const int shape = static_cast<int>(g.uniform(0, 2));
    if (shape >= 1) u = commutator(u, g.word(3, 6));
    if (shape >= 2) u = commutator(u, g.word(3, 4));
    if (u.is_identity()) continue;
    LeadingTensor t;
    try {
      t = leading_tensor(u, {.cap = 3});
    } catch (const Error&) {
      continue;
    }
    o.require(leading_tensor(F.apply(phi, u), {.cap = 3}) == substitute_linear(t, ab),
              format_word(u));
    ++tested;
  }
  return o;
}

Outcome ac10(std::vector<OrderContext>& contexts) {
  Outcome o;
  const auto t0 = Clock::now();
  cli::VerifyConfig cfg;
  cfg.samples = 500;
  cfg.seed = 42;
  cfg.maxlen = 12;
  std::int64_t comparisons = 0, abstentions = 0;
  for (const OrderContext& ctx : contexts) {
    const cli::VerifyReport rep = cli::run_verify(ctx, cfg);
    comparisons += rep.comparisons;
    abstentions += rep.abstentions;
    o.require(rep.phi_checked, "phi not checked");
    o.require(rep.violations() == 0, rep.examples.empty() ? "violation" : rep.examples[0]);
    o.require(rep.unresolved == 0, "unresolved abstention");
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  const double rate = comparisons ? static_cast<double>(abstentions) / comparisons : 0;
  o.require(rate < 0.01, "abstention rate");
  o.require(secs < 60.0, "runtime");
  std::ostringstream s;
  s << contexts.size() << " contexts, " << comparisons << " comparisons, " << abstentions
    << " abstentions, " << secs << " s";
  o.note = s.str() + (o.ok ? "" : ", " + o.note);
  return o;
}

Outcome ac11() {
  Outcome o;
  std::ostringstream out, err;
  const int code = cli::run({"certify", "3", "s1"}, out, err);
  o.require(code == cli::kExitInconclusive, "exit code " + std::to_string(code));
  o.require(out.str().find("BI_ORDER_PRESERVING") == std::string::npos, "claims BI");
  o.require(certify_braid(parse_braid(3, "s1")).verdict == Verdict::Inconclusive, "verdict");
  return o;
}

Outcome ac12(const std::vector<OrderContext>& contexts) {
  Outcome o;
  std::int64_t checked = 0;
  for (const OrderContext& ctx : contexts) {
    const TranslationReport rep = translation_maps_check(ctx, -20, 20);
    checked += rep.checked;
    o.require(rep.mismatches == 0, rep.details.empty() ? "mismatch" : rep.details[0]);
  }
  o.note = std::to_string(contexts.size()) + " contexts, " + std::to_string(checked) +
           " checks" + (o.ok ? "" : ", " + o.note);
  return o;
}

}  // namespace

int main() {
  std::vector<OrderContext> contexts{OrderContext::for_braid(kMagic)};
  for (auto& c : random_bi_contexts(42, 10)) contexts.push_back(std::move(c));

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 magic manifold certificate", ac1},
      {"AC2 s1^2 s2^n family", ac2},
      {"AC3 pure braid images", ac3},
      {"AC4 axis conjugate shifts one cycle", ac4},
      {"AC5 axis completion", ac5},
      {"AC6 B3 stabilization", ac6},
      {"AC7 permutation completion", ac7},
      {"AC8 Fox and Magnus", ac8},
      {"AC9 leading tensor equivariance", ac9},
      {"AC10 invariant order end to end", [&] { return ac10(contexts); }},
      {"AC11 negative control", ac11},
      {"AC12 translation maps", [&] { return ac12(contexts); }},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    std::printf("%s %s%s%s\n", o.ok ? "PASS" : "FAIL", name.c_str(),
                o.note.empty() ? "" : " - ", o.note.c_str());
    failed += o.ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
