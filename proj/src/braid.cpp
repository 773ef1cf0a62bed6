#include "biord/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

namespace biord {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images_.resize(n);
  for (int i = 0; i < n; ++i) p.images_[i] = i + 1;
  return p;
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> hit(n + 1, false);
  for (int v : images) {
    if (v < 1 || v > n || hit[v])
      throw Error(ErrorCode::SigmaNotBijective,
                  "images do not form a permutation of 1.." + std::to_string(n));
    hit[v] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(int n,
                                     const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i + 1;
  std::vector<bool> used(n + 1, false);
  for (const auto& c : cycles) {
    for (std::size_t m = 0; m < c.size(); ++m) {
      const int a = c[m];
      if (a < 1 || a > n || used[a])
        throw Error(ErrorCode::SigmaNotBijective, "cycles are not disjoint in 1..n");
      used[a] = true;
      img[a - 1] = c[(m + 1) % c.size()];
    }
  }
  return from_images(std::move(img));
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p = identity(n);
  std::swap(p.images_.at(a - 1), p.images_.at(b - 1));
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size())
    throw Error(ErrorCode::StrandMismatch, "permutation sizes differ");
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    p.images_[i] = next(images_[i]);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    p.images_[images_[i] - 1] = static_cast<int>(i) + 1;
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::vector<int> Permutation::fixed_points() const {
  std::vector<int> out;
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) == i) out.push_back(i);
  return out;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size() + 1, false);
  for (int start = 1; start <= size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> c;
    for (int k = start; !seen[k]; k = (*this)(k)) {
      seen[k] = true;
      c.push_back(k);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string format_permutation(const Permutation& p) {
  std::string out;
  for (const auto& c : p.cycles()) {
    if (c.size() < 2) continue;
    out += '(';
    for (std::size_t m = 0; m < c.size(); ++m) {
      if (m) out += ' ';
      out += std::to_string(c[m]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1)
    throw Error(ErrorCode::RangeViolation, "braid needs at least one strand");
  for (int s : letters_)
    if (s == 0 || std::abs(s) > strands_ - 1)
      throw Error(ErrorCode::IndexOutOfRange,
                  "braid letter " + std::to_string(s) + " invalid in B_" +
                      std::to_string(strands_));
}

BraidWord BraidWord::generator(int strands, int k, int exp) {
  std::vector<int> letters(std::abs(exp), exp > 0 ? k : -k);
  return BraidWord(strands, std::move(letters));
}

int BraidWord::max_generator() const noexcept {
  int m = 0;
  for (int s : letters_) m = std::max(m, std::abs(s));
  return m;
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw Error(ErrorCode::StrandMismatch,
                "cannot compose B_" + std::to_string(a.strands()) + " with B_" +
                    std::to_string(b.strands()));
  std::vector<int> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord invert_braid(const BraidWord& a) {
  std::vector<int> letters(a.letters().rbegin(), a.letters().rend());
  for (int& s : letters) s = -s;
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord power(const BraidWord& a, int exp) {
  const BraidWord base = exp >= 0 ? a : invert_braid(a);
  BraidWord out = BraidWord::identity(a.strands());
  for (int k = 0; k < std::abs(exp); ++k) out = compose(out, base);
  return out;
}

BraidWord embed(const BraidWord& a, int strands) {
  if (strands < a.strands())
    throw Error(ErrorCode::StrandMismatch, "cannot embed into fewer strands");
  return BraidWord(strands, a.letters());
}

Endomorphism generator_action(int strands, int k, int sign) {
  if (k < 1 || k > strands - 1)
    throw Error(ErrorCode::IndexOutOfRange, "no generator s" + std::to_string(k));
  Endomorphism e = Endomorphism::identity(strands);
  const Word xk = Word::power(k, 1);
  const Word xk1 = Word::power(k + 1, 1);
  if (sign > 0) {
    e.images[k - 1] = conjugate(xk, xk1);
    e.images[k] = xk;
  } else {
    e.images[k - 1] = xk1;
    e.images[k] = conjugate(xk1.inverse(), xk);
  }
  return e;
}

Endomorphism artin_action(const BraidWord& beta) {
  const int n = beta.strands();
  FreeGroup group(n);
  Endomorphism images = Endomorphism::identity(n);
  for (int s : beta.letters()) {
    const int k = std::abs(s);
    const Endomorphism step = generator_action(n, k, s > 0 ? 1 : -1);
    for (auto& img : images.images) img = group.apply(step, img);
  }
  return images;
}

Permutation underlying_permutation(const BraidWord& beta) {
  Permutation p = Permutation::identity(beta.strands());
  for (int s : beta.letters()) {
    const int k = std::abs(s);
    p = p.then(Permutation::transposition(beta.strands(), k, k + 1));
  }
  return p;
}

BraidWord pure_braid_generator(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n))
    throw Error(ErrorCode::RangeViolation,
                "A_{" + std::to_string(i) + "," + std::to_string(j) +
                    "} needs 1 <= i < j <= n=" + std::to_string(n));
  std::vector<int> letters;
  for (int k = j - 1; k > i; --k) letters.push_back(k);
  letters.push_back(i);
  letters.push_back(i);
  for (int k = i + 1; k <= j - 1; ++k) letters.push_back(-k);
  return BraidWord(n, std::move(letters));
}

Endomorphism aij_images(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n))
    throw Error(ErrorCode::RangeViolation,
                "A_{" + std::to_string(i) + "," + std::to_string(j) +
                    "} needs 1 <= i < j <= n=" + std::to_string(n));
  const Word xi = Word::power(i, 1);
  const Word xj = Word::power(j, 1);
  const Word xixj = xi * xj;
  const Word comm = xi * xj * xi.inverse() * xj.inverse();
  Endomorphism e = Endomorphism::identity(n);
  e.images[i - 1] = conjugate(xixj, xi);
  for (int k = i + 1; k < j; ++k)
    e.images[k - 1] = conjugate(comm, Word::power(k, 1));
  e.images[j - 1] = conjugate(xi, xj);
  return e;
}

BraidWord lift_permutation(const Permutation& p) {
  // Bubble-sorting the image array by adjacent position swaps at b_1, ..., b_m
  // gives s_{b_m} ... s_{b_1} p = id, i.e. p = s_{b_1} ... s_{b_m}.
  std::vector<int> img = p.images();
  std::vector<int> letters;
  const int n = p.size();
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (int k = 1; k < n; ++k) {
      if (img[k - 1] > img[k]) {
        std::swap(img[k - 1], img[k]);
        letters.push_back(k);
        swapped = true;
      }
    }
  }
  return BraidWord(n, std::move(letters));
}

BraidWord parse_braid(int strands, std::string_view text) {
  std::vector<int> letters;
  std::size_t pos = 0;
  auto fail = [&](std::size_t at, const std::string& msg) {
    throw ParseError(1, static_cast<int>(at) + 1, msg);
  };
  auto read_int = [&](bool allow_sign) {
    const std::size_t start = pos;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
      ++pos;
    const std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == digits) fail(digits, "expected digits");
    long long v = 0;
    const char* first = text.data() + start + (text[start] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, text.data() + pos, v);
    if (ec != std::errc() || v > 1'000'000 || v < -1'000'000)
      fail(start, "integer out of range");
    return static_cast<int>(v);
  };
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == ',') {
      ++pos;
      continue;
    }
    const std::size_t token = pos;
    int k = 0;
    int exp = 1;
    if (c == 's') {
      ++pos;
      k = read_int(false);
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        const std::size_t at = pos;
        exp = read_int(true);
        if (exp == 0) fail(at, "exponent must be nonzero");
      }
    } else if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      const int v = read_int(true);
      if (v == 0) fail(token, "braid letter 0 is invalid");
      k = std::abs(v);
      exp = v > 0 ? 1 : -1;
    } else {
      fail(pos, std::string("unexpected character '") + c + "'");
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
        text[pos] != '*' && text[pos] != ',')
      fail(pos, "unexpected character after braid letter");
    if (k < 1 || k > strands - 1)
      fail(token, "generator s" + std::to_string(k) + " not in B_" +
                      std::to_string(strands));
    for (int m = 0; m < std::abs(exp); ++m) letters.push_back(exp > 0 ? k : -k);
  }
  return BraidWord(strands, std::move(letters));
}

std::string format_braid(const BraidWord& b) {
  std::string out;
  const auto& l = b.letters();
  for (std::size_t p = 0; p < l.size();) {
    const int k = std::abs(l[p]);
    int exp = 0;
    std::size_t q = p;
    // Group consecutive letters with the same generator; s1 s1^-1 never
    // collapses because braid words are kept unreduced.
    while (q < l.size() && l[q] == l[p]) {
      exp += l[q] > 0 ? 1 : -1;
      ++q;
    }
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(k);
    if (exp != 1) out += '^' + std::to_string(exp);
    p = q;
  }
  return out;
}

}  // namespace biord
