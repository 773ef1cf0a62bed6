#include "verify.hpp"

#include <random>

namespace biord::cli {

namespace {

class Sampler {
 public:
  Sampler(std::uint64_t seed, int rank, int maxlen)
      : rng_(seed), rank_(rank), maxlen_(maxlen) {}

  Word word() {
    const auto len = static_cast<int>(rng_() % static_cast<std::uint64_t>(maxlen_ + 1));
    Word w;
    for (int i = 0; i < len; ++i) {
      const int g = 1 + static_cast<int>(rng_() % static_cast<std::uint64_t>(rank_));
      w.push_back(g, (rng_() & 1) ? 1 : -1);
    }
    return w;
  }

  bool coin() { return rng_() & 1; }

 private:
  std::mt19937_64 rng_;
  int rank_;
  int maxlen_;
};

Relation reverse(Relation r) {
  switch (r) {
    case Relation::Less: return Relation::Greater;
    case Relation::Greater: return Relation::Less;
    default: return r;
  }
}

}  // namespace

VerifyReport run_verify(const OrderContext& ctx, const VerifyConfig& cfg) {
  VerifyReport rep;
  rep.phi_checked = ctx.invariance_certified() || cfg.force_phi;
  const OrderContext retry = ctx.with_cap(std::max(cfg.retry_cap, ctx.cap()));
  const FreeGroup F(ctx.rank());
  const int i0 = ctx.i0();
  Sampler s(cfg.seed, ctx.rank(), cfg.maxlen);

  auto cmp = [&](const Word& a, const Word& b) {
    ++rep.comparisons;
    Relation r = compare_in_F(a, b, ctx).relation;
    if (r == Relation::Undecided) {
      ++rep.abstentions;
      r = compare_in_F(a, b, retry).relation;
      if (r == Relation::Undecided)
        ++rep.unresolved;
      else
        ++rep.resolved;
    }
    return r;
  };
  auto violation = [&](std::int64_t& counter, const std::string& what, const Word& a,
                       const Word& b) {
    ++counter;
    if (rep.examples.size() < 10)
      rep.examples.push_back(what + ": a = " + format_word(a) + ", b = " + format_word(b));
  };
  // b = a u x_{i0}^{-h(u)} keeps h(a) = h(b).
  auto partner = [&](const Word& a) {
    if (!s.coin()) return s.word();
    const Word u = s.word();
    return a * u * F.generator(i0, -exponent_sum(u, i0));
  };

  for (int n = 0; n < cfg.samples; ++n) {
    const Word a = s.word();
    const Word b = partner(a);
    const Word c = partner(a);
    const Word g = s.word();

    const Relation ab = cmp(a, b);
    const Relation ba = cmp(b, a);
    if (ab == Relation::Undecided || ba == Relation::Undecided) continue;
    if ((ab == Relation::Equal) != (a == b)) violation(rep.totality, "totality", a, b);
    if (ba != reverse(ab)) violation(rep.antisymmetry, "antisymmetry", a, b);

    const Relation bc = cmp(b, c);
    const Relation ac = cmp(a, c);
    if (bc != Relation::Undecided && ac != Relation::Undecided) {
      for (const Relation dir : {Relation::Less, Relation::Greater}) {
        if ((ab == dir || ab == Relation::Equal) && (bc == dir || bc == Relation::Equal)) {
          const Relation want =
              (ab == Relation::Equal && bc == Relation::Equal) ? Relation::Equal : dir;
          if (ac != want) violation(rep.transitivity, "transitivity (via " +
                                        format_word(b) + ")", a, c);
          break;
        }
      }
    }

    const Relation left = cmp(g * a, g * b);
    if (left != Relation::Undecided && left != ab)
      violation(rep.left_invariance, "left invariance (c = " + format_word(g) + ")", a, b);
    const Relation right = cmp(a * g, b * g);
    if (right != Relation::Undecided && right != ab)
      violation(rep.right_invariance, "right invariance (c = " + format_word(g) + ")", a,
                b);
    if (rep.phi_checked) {
      const Relation img =
          cmp(F.apply(ctx.automorphism(), a), F.apply(ctx.automorphism(), b));
      if (img != Relation::Undecided && img != ab)
        violation(rep.phi_invariance, "phi invariance", a, b);
    }
  }
  return rep;
}

}  // namespace biord::cli
