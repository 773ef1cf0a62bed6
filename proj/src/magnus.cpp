#include "biord/magnus.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace biord {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow, "integer coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow, "integer coefficient overflow");
  return r;
}

template <class Key>
void accumulate(std::map<Key, std::int64_t>& terms, const Key& key,
                std::int64_t coef) {
  if (coef == 0) return;
  auto [it, inserted] = terms.try_emplace(key, coef);
  if (!inserted) {
    it->second = checked_add(it->second, coef);
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

std::vector<std::int64_t> detail::magnus_series_coefficients(std::int64_t exp, int cap) {
  std::vector<std::int64_t> s(cap + 1, 0);
  s[0] = 1;
  const std::int64_t a = std::llabs(exp);
  // exp > 0: C(exp, p).  exp < 0: (-1)^p C(|exp| + p - 1, p).
  __int128 c = 1;
  for (int p = 1; p <= cap; ++p) {
    if (exp > 0) {
      if (p > a) break;
      c = c * (a - p + 1) / p;
    } else {
      c = c * (a + p - 1) / p;
    }
    if (c > INT64_MAX) throw Error(ErrorCode::Overflow, "series coefficient overflow");
    const auto v = static_cast<std::int64_t>(c);
    s[p] = (exp < 0 && p % 2 == 1) ? -v : v;
  }
  return s;
}

GroupRingElement GroupRingElement::of(const Word& w, std::int64_t coef) {
  GroupRingElement e;
  e.add(w, coef);
  return e;
}

void GroupRingElement::add(const Word& w, std::int64_t coef) {
  accumulate(terms_, w, coef);
}

std::int64_t GroupRingElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t GroupRingElement::augmentation() const {
  std::int64_t s = 0;
  for (const auto& [w, c] : terms_) s = checked_add(s, c);
  return s;
}

GroupRingElement GroupRingElement::left_multiplied(const Word& u) const {
  GroupRingElement out;
  for (const auto& [w, c] : terms_) out.add(u * w, c);
  return out;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) add(w, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) add(w, -c);
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement out;
  for (const auto& [u, c] : a.terms_)
    for (const auto& [v, d] : b.terms_) out.add(u * v, checked_mul(c, d));
  return out;
}

GroupRingElement fox_derivative(const Word& w, int j) {
  GroupRingElement out;
  Word prefix;
  for (const auto& r : w.runs()) {
    const int sign = r.exp > 0 ? 1 : -1;
    for (std::int64_t m = 0; m < std::llabs(r.exp); ++m) {
      if (sign > 0) {
        if (r.letter == j) out.add(prefix, 1);
        prefix.push_back(r.letter, 1);
      } else {
        prefix.push_back(r.letter, -1);
        if (r.letter == j) out.add(prefix, -1);
      }
    }
  }
  return out;
}

std::int64_t fox_eval0(const Word& w, int j) {
  return fox_derivative(w, j).augmentation();
}

NcPolynomial::NcPolynomial(int degree_cap) : cap_(degree_cap) {
  if (degree_cap < 0)
    throw Error(ErrorCode::RangeViolation, "degree cap must be >= 0");
}

NcPolynomial NcPolynomial::one(int degree_cap) {
  NcPolynomial p(degree_cap);
  p.add({}, 1);
  return p;
}

NcPolynomial NcPolynomial::letter_power(int letter, std::int64_t exp, int degree_cap) {
  NcPolynomial p(degree_cap);
  const auto s = detail::magnus_series_coefficients(exp, degree_cap);
  Monomial m;
  for (int d = 0; d <= degree_cap; ++d) {
    p.add(m, s[d]);
    m.push_back(letter);
  }
  return p;
}

void NcPolynomial::add(const Monomial& m, std::int64_t coef) {
  if (static_cast<int>(m.size()) > cap_) return;
  accumulate(terms_, m, coef);
}

std::int64_t NcPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

NcPolynomial NcPolynomial::homogeneous(int degree) const {
  NcPolynomial out(cap_);
  for (const auto& [m, c] : terms_)
    if (static_cast<int>(m.size()) == degree) out.terms_.emplace(m, c);
  return out;
}

NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b) {
  NcPolynomial out(std::min(a.cap_, b.cap_));
  Monomial m;
  for (const auto& [ma, ca] : a.terms_) {
    if (static_cast<int>(ma.size()) > out.cap_) continue;
    for (const auto& [mb, cb] : b.terms_) {
      if (ma.size() + mb.size() > static_cast<std::size_t>(out.cap_)) continue;
      m.assign(ma.begin(), ma.end());
      m.insert(m.end(), mb.begin(), mb.end());
      accumulate(out.terms_, m, checked_mul(ca, cb));
    }
  }
  return out;
}

NcPolynomial magnus_expansion(std::span<const Run<int>> runs, int cap) {
  if (cap < 1) throw Error(ErrorCode::RangeViolation, "degree cap must be >= 1");
  NcPolynomial p = NcPolynomial::one(cap);
  for (const auto& r : runs) p = p * NcPolynomial::letter_power(r.letter, r.exp, cap);
  return p;
}

namespace {

LeadingTensor from_dense_block(std::span<const std::int64_t> block, int degree,
                               const std::vector<int>& letters,
                               const simd::Kernels& kernels) {
  LeadingTensor t;
  t.degree = degree;
  const auto m = static_cast<std::size_t>(letters.size());
  std::size_t i = kernels.first_nonzero_i64(block.data(), block.size());
  while (i < block.size()) {
    Monomial mono(degree);
    std::size_t rest = i;
    for (int pos = degree - 1; pos >= 0; --pos) {
      mono[pos] = letters[rest % m];
      rest /= m;
    }
    t.coords.emplace(std::move(mono), block[i]);
    const std::size_t next = i + 1;
    i = next + kernels.first_nonzero_i64(block.data() + next, block.size() - next);
  }
  return t;
}

}  // namespace

LeadingTensor leading_tensor(std::span<const Run<int>> runs, const MagnusOptions& opts) {
  if (runs.empty())
    throw Error(ErrorCode::Precondition, "the identity has no leading tensor");
  if (opts.cap < 1) throw Error(ErrorCode::RangeViolation, "degree cap must be >= 1");
  const simd::Kernels& kernels =
      opts.kernels != nullptr ? *opts.kernels : simd::active_kernels();

  // Compress the alphabet to 0..m-1 preserving letter order, so lexicographic
  // order on local monomials matches that on the original letters.
  std::vector<int> letters;
  std::int64_t total = 0;
  for (const auto& r : runs) {
    letters.push_back(r.letter);
    total += std::llabs(r.exp);
  }
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  std::vector<Run<int>> local(runs.begin(), runs.end());
  for (auto& r : local)
    r.letter = static_cast<int>(
        std::lower_bound(letters.begin(), letters.end(), r.letter) - letters.begin());
  const int m = static_cast<int>(letters.size());

  for (int k = 1; k <= opts.cap; ++k) {
    bool dense = false;
    switch (opts.engine) {
      case MagnusEngine::Auto: dense = dense_feasible(m, k, total); break;
      case MagnusEngine::Dense:
        if (!dense_feasible(m, k, total))
          throw Error(ErrorCode::Precondition, "dense Magnus engine infeasible");
        dense = true;
        break;
      case MagnusEngine::Sparse: dense = false; break;
    }
    if (dense) {
      const DenseExpansion e = dense_expansion(local, m, k, kernels);
      LeadingTensor t = from_dense_block(e.block(k), k, letters, kernels);
      if (!t.coords.empty()) return t;
    } else {
      const NcPolynomial top = magnus_expansion(local, k).homogeneous(k);
      if (!top.terms().empty()) {
        LeadingTensor t;
        t.degree = k;
        for (const auto& [mono, c] : top.terms()) {
          Monomial mapped(mono.size());
          for (std::size_t p = 0; p < mono.size(); ++p) mapped[p] = letters[mono[p]];
          t.coords.emplace(std::move(mapped), c);
        }
        return t;
      }
    }
  }
  throw Error(ErrorCode::DepthExceedsCap,
              "all Magnus terms up to degree " + std::to_string(opts.cap) + " vanish");
}

int lcs_depth(std::span<const Run<int>> runs, const MagnusOptions& opts) {
  return leading_tensor(runs, opts).degree;
}

std::map<int, std::int64_t> abelianize(std::span<const Run<int>> runs) {
  std::map<int, std::int64_t> out;
  for (const auto& r : runs) accumulate(out, r.letter, r.exp);
  return out;
}

LeadingTensor substitute_linear(
    const LeadingTensor& t, const std::map<int, std::map<int, std::int64_t>>& images) {
  std::map<Monomial, std::int64_t> acc;
  for (const auto& [mono, coef] : t.coords) {
    // Expand the product of the slot images one slot at a time.
    std::map<Monomial, std::int64_t> partial{{Monomial{}, coef}};
    for (int letter : mono) {
      auto it = images.find(letter);
      if (it == images.end())
        throw Error(ErrorCode::MissingImage,
                    "no linear image for letter " + std::to_string(letter));
      std::map<Monomial, std::int64_t> next;
      for (const auto& [pm, pc] : partial)
        for (const auto& [l, c] : it->second) {
          Monomial ext = pm;
          ext.push_back(l);
          accumulate(next, ext, checked_mul(pc, c));
        }
      partial = std::move(next);
    }
    for (const auto& [pm, pc] : partial) accumulate(acc, pm, pc);
  }
  return LeadingTensor{t.degree, std::move(acc)};
}

std::string format_expansion(const NcPolynomial& p) {
  std::ostringstream out;
  for (const auto& [mono, c] : p.terms()) {
    out << c << " * ";
    if (mono.empty()) out << '1';
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (i) out << '.';
      out << 'X' << mono[i];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace biord
