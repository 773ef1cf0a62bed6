#include "biord/words.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

namespace biord {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "INDEX_OUT_OF_RANGE";
    case ErrorCode::RankMismatch: return "RANK_MISMATCH";
    case ErrorCode::MissingImage: return "MISSING_IMAGE";
    case ErrorCode::Parse: return "PARSE_ERROR";
    case ErrorCode::RangeViolation: return "RANGE_VIOLATION";
    case ErrorCode::StrandMismatch: return "STRAND_MISMATCH";
    case ErrorCode::NotConjugacyForm: return "NOT_CONJUGACY_FORM";
    case ErrorCode::SigmaNotBijective: return "SIGMA_NOT_BIJECTIVE";
    case ErrorCode::I0NotFixed: return "I0_NOT_FIXED";
    case ErrorCode::NoFixedPoint: return "NO_FIXED_POINT";
    case ErrorCode::DepthExceedsCap: return "DEPTH_EXCEEDS_CAP";
    case ErrorCode::HNonzero: return "H_NONZERO";
    case ErrorCode::GcdViolation: return "GCD_VIOLATION";
    case ErrorCode::GeneratorNotInOrbit: return "GENERATOR_NOT_IN_ORBIT";
    case ErrorCode::Precondition: return "PRECONDITION_VIOLATION";
    case ErrorCode::Overflow: return "OVERFLOW";
  }
  return "UNKNOWN";
}

std::int64_t exponent_sum(const Word& w, int generator) {
  std::int64_t s = 0;
  for (const auto& r : w.runs())
    if (r.letter == generator) s += r.exp;
  return s;
}

Endomorphism Endomorphism::identity(int rank) {
  Endomorphism e;
  e.images.reserve(rank);
  for (int i = 1; i <= rank; ++i) e.images.push_back(Word::power(i, 1));
  return e;
}

FreeGroup::FreeGroup(int rank) : rank_(rank) {
  if (rank < 1)
    throw Error(ErrorCode::RangeViolation, "free group rank must be >= 1");
}

Word FreeGroup::generator(int i, std::int64_t exp) const {
  if (i < 1 || i > rank_)
    throw Error(ErrorCode::IndexOutOfRange,
                "generator x" + std::to_string(i) + " outside 1.." +
                    std::to_string(rank_));
  return Word::power(i, exp);
}

Word FreeGroup::reduce(std::span<const int> signed_letters) const {
  Word w;
  for (int s : signed_letters) {
    const int g = s < 0 ? -s : s;
    if (s == 0 || g > rank_)
      throw Error(ErrorCode::IndexOutOfRange,
                  "letter " + std::to_string(s) + " outside rank " +
                      std::to_string(rank_));
    w.push_back(g, s < 0 ? -1 : 1);
  }
  return w;
}

void FreeGroup::check(const Word& w) const {
  for (const auto& r : w.runs())
    if (r.letter < 1 || r.letter > rank_)
      throw Error(ErrorCode::RankMismatch,
                  "word mentions x" + std::to_string(r.letter) +
                      " in a rank-" + std::to_string(rank_) + " context");
}

Word FreeGroup::multiply(const Word& a, const Word& b) const {
  check(a);
  check(b);
  return a * b;
}

Word FreeGroup::invert(const Word& a) const {
  check(a);
  return a.inverse();
}

Word FreeGroup::apply(const Endomorphism& phi, const Word& w) const {
  if (phi.rank() < rank_)
    throw Error(ErrorCode::MissingImage,
                "endomorphism defines " + std::to_string(phi.rank()) +
                    " images, rank is " + std::to_string(rank_));
  check(w);
  Word out;
  for (const auto& r : w.runs()) {
    const Word& img = phi.image(r.letter);
    const Word piece = r.exp > 0 ? img : img.inverse();
    for (std::int64_t k = 0; k < std::llabs(r.exp); ++k) out *= piece;
  }
  return out;
}

Endomorphism FreeGroup::then(const Endomorphism& first,
                             const Endomorphism& second) const {
  Endomorphism out;
  out.images.reserve(rank_);
  for (int i = 1; i <= rank_; ++i)
    out.images.push_back(apply(second, first.image(i)));
  return out;
}

Word FreeGroup::parse(std::string_view text) const {
  Word w = parse_word(text);
  check(w);
  return w;
}

std::string format_word(const Word& w) {
  if (w.is_identity()) return "1";
  std::string out;
  for (const auto& r : w.runs()) {
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(r.letter);
    if (r.exp != 1) {
      out += '^';
      out += std::to_string(r.exp);
    }
  }
  return out;
}

namespace {

bool is_separator(char c) {
  return c == '*' || std::isspace(static_cast<unsigned char>(c));
}

// Parses a signed decimal starting at text[pos]; advances pos.
std::int64_t read_integer(std::string_view text, std::size_t& pos, int line,
                          bool allow_sign) {
  const std::size_t start = pos;
  if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
    ++pos;
  const std::size_t digits = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    ++pos;
  if (pos == digits)
    throw ParseError(line, static_cast<int>(digits) + 1, "expected digits");
  std::int64_t value = 0;
  const char* first = text.data() + start + (text[start] == '+' ? 1 : 0);
  auto [ptr, ec] = std::from_chars(first, text.data() + pos, value);
  if (ec != std::errc() || ptr != text.data() + pos)
    throw ParseError(line, static_cast<int>(start) + 1, "integer out of range");
  return value;
}

}  // namespace

Word parse_word(std::string_view text, int line) {
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (is_separator(text[pos])) {
      ++pos;
      continue;
    }
    const std::size_t token_start = pos;
    if (text[pos] == '1' &&
        (pos + 1 == text.size() || is_separator(text[pos + 1]))) {
      ++pos;
      continue;
    }
    if (text[pos] != 'x')
      throw ParseError(line, static_cast<int>(pos) + 1,
                       std::string("unexpected character '") + text[pos] +
                           "', expected x<k> or 1");
    ++pos;
    const std::int64_t index = read_integer(text, pos, line, false);
    if (index < 1 || index > std::numeric_limits<int>::max())
      throw ParseError(line, static_cast<int>(token_start) + 2,
                       "generator index must be >= 1");
    std::int64_t exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      const std::size_t exp_start = pos;
      exp = read_integer(text, pos, line, true);
      if (exp == 0)
        throw ParseError(line, static_cast<int>(exp_start) + 1,
                         "exponent must be nonzero");
    }
    if (pos < text.size() && !is_separator(text[pos]))
      throw ParseError(line, static_cast<int>(pos) + 1,
                       "unexpected character after generator");
    w.push_back(static_cast<int>(index), exp);
  }
  return w;
}

Endomorphism parse_endomorphism(std::string_view text, int rank) {
  FreeGroup group(rank);
  std::vector<bool> seen(rank + 1, false);
  Endomorphism phi;
  phi.images.resize(rank);
  int line_no = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(begin, end - begin);
    ++line_no;
    begin = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::size_t p = 0;
    while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
    if (p == line.size()) {
      if (end == text.size()) break;
      continue;
    }
    if (line[p] != 'x')
      throw ParseError(line_no, static_cast<int>(p) + 1, "expected x<k> = <word>");
    const std::size_t gen_col = p + 1;
    ++p;
    const std::int64_t k = read_integer(line, p, line_no, false);
    if (k < 1 || k > rank)
      throw ParseError(line_no, static_cast<int>(gen_col),
                       "generator x" + std::to_string(k) + " outside rank " +
                           std::to_string(rank));
    while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
    if (p == line.size() || line[p] != '=')
      throw ParseError(line_no, static_cast<int>(p) + 1, "expected '='");
    ++p;
    if (seen[k])
      throw ParseError(line_no, static_cast<int>(gen_col),
                       "duplicate image for x" + std::to_string(k));
    seen[k] = true;
    // Column offsets inside the image are shifted back to line coordinates.
    try {
      phi.images[k - 1] = parse_word(line.substr(p), line_no);
    } catch (const ParseError& e) {
      throw ParseError(line_no, e.column() + static_cast<int>(p),
                       "bad image for x" + std::to_string(k));
    }
    group.check(phi.images[k - 1]);
    if (end == text.size()) break;
  }
  for (int k = 1; k <= rank; ++k)
    if (!seen[k])
      throw Error(ErrorCode::MissingImage,
                  "no image given for x" + std::to_string(k));
  return phi;
}

std::string format_endomorphism(const Endomorphism& phi) {
  std::ostringstream out;
  for (int k = 1; k <= phi.rank(); ++k)
    out << 'x' << k << " = " << format_word(phi.image(k)) << '\n';
  return out.str();
}

}  // namespace biord
