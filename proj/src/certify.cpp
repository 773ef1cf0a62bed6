#include "biord/certify.hpp"

#include <numeric>

namespace biord {

Endomorphism ConjugacyForm::rebuild() const {
  Endomorphism phi;
  phi.images.reserve(rank);
  for (int i = 1; i <= rank; ++i)
    phi.images.push_back(conjugate(conjugator(i), Word::power(sigma(i), 1)));
  return phi;
}

namespace {

// Locates the letter at expanded position `target` (0-based) and splits the
// word there. Returns the prefix, the letter's generator and sign, and the
// suffix.
struct Split {
  Word prefix;
  int generator = 0;
  int sign = 0;
  Word suffix;
};

Split split_at(const Word& w, std::int64_t target) {
  Split s;
  std::int64_t seen = 0;
  bool found = false;
  for (const auto& r : w.runs()) {
    const std::int64_t len = std::llabs(r.exp);
    const int sign = r.exp > 0 ? 1 : -1;
    if (found) {
      s.suffix.push_back(r.letter, r.exp);
    } else if (target < seen + len) {
      const std::int64_t before = target - seen;
      s.prefix.push_back(r.letter, sign * before);
      s.generator = r.letter;
      s.sign = sign;
      s.suffix.push_back(r.letter, sign * (len - before - 1));
      found = true;
    } else {
      s.prefix.push_back(r.letter, r.exp);
    }
    seen += len;
  }
  return s;
}

}  // namespace

ConjugacyForm extract_conjugacy_form(const Endomorphism& phi) {
  ConjugacyForm form;
  form.rank = phi.rank();
  std::vector<int> images(form.rank);
  for (int i = 1; i <= form.rank; ++i) {
    const Word& img = phi.image(i);
    const std::int64_t len = img.length();
    if (len % 2 == 0)
      throw Error(ErrorCode::NotConjugacyForm,
                  "image of x" + std::to_string(i) + " has even length");
    Split s = split_at(img, len / 2);
    if (s.sign != 1 || s.suffix != s.prefix.inverse())
      throw Error(ErrorCode::NotConjugacyForm,
                  "image of x" + std::to_string(i) +
                      " is not a conjugate of a positive generator");
    if (s.generator > form.rank)
      throw Error(ErrorCode::RankMismatch,
                  "image of x" + std::to_string(i) + " mentions x" +
                      std::to_string(s.generator));
    images[i - 1] = s.generator;
    form.conjugators.push_back(std::move(s.prefix));
  }
  form.sigma = Permutation::from_images(std::move(images));
  return form;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::BiOrderPreserving: return "BI_ORDER_PRESERVING";
    case Verdict::LeftOrderPreserving: return "LEFT_ORDER_PRESERVING";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

Certificate certify(const ConjugacyForm& form, int i0) {
  if (i0 < 1 || i0 > form.rank)
    throw Error(ErrorCode::IndexOutOfRange, "i0 outside 1..rank");
  if (form.sigma(i0) != i0)
    throw Error(ErrorCode::I0NotFixed,
                "sigma moves x" + std::to_string(i0));
  const ExponentHom h{i0};
  Certificate cert;
  cert.i0 = i0;
  bool all_gcd = true;
  bool all_nonvanishing = true;
  for (auto& orbit : form.sigma.cycles()) {
    if (orbit.size() == 1 && orbit.front() == i0) continue;
    OrbitReport rep;
    const auto r = static_cast<std::int64_t>(orbit.size());
    for (int k : orbit) {
      rep.h_values.push_back(h(form.conjugator(k)));
      rep.h_sum += rep.h_values.back();
    }
    rep.orbit = std::move(orbit);
    rep.gcd = std::gcd(r, rep.h_sum);
    rep.passes_gcd = rep.gcd == 1;
    rep.passes_nonvanishing = r == 1 || rep.h_sum != 0;
    all_gcd = all_gcd && rep.passes_gcd;
    all_nonvanishing = all_nonvanishing && rep.passes_nonvanishing;
    cert.reports.push_back(std::move(rep));
  }
  cert.verdict = all_gcd            ? Verdict::BiOrderPreserving
                 : all_nonvanishing ? Verdict::LeftOrderPreserving
                                    : Verdict::Inconclusive;
  return cert;
}

Certificate certify_all(const ConjugacyForm& form) {
  const auto fixed = form.sigma.fixed_points();
  if (fixed.empty())
    throw Error(ErrorCode::NoFixedPoint,
                "sigma " + format_permutation(form.sigma) + " has no fixed point");
  Certificate best = certify(form, fixed.front());
  for (std::size_t m = 1; m < fixed.size(); ++m) {
    if (best.verdict == Verdict::BiOrderPreserving) break;
    Certificate c = certify(form, fixed[m]);
    // Verdict enumerators are ordered strongest first.
    if (static_cast<int>(c.verdict) < static_cast<int>(best.verdict))
      best = std::move(c);
  }
  return best;
}

Certificate certify_braid(const BraidWord& beta) {
  return certify_all(extract_conjugacy_form(artin_action(beta)));
}

}  // namespace biord
