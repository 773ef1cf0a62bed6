#include <gtest/gtest.h>

#include "biord/braid.hpp"
#include "biord/words.hpp"
#include "support/gen.hpp"

namespace biord {
namespace {

using testing::Gen;
using testing::expand;
using testing::from_letters;
using testing::naive_reduce;

const FreeGroup F3(3);

Word w(std::string_view s) { return parse_word(s); }

TEST(Reduce, Examples) {
  EXPECT_EQ(F3.reduce(std::vector<int>{1, 2, -2, 1}), F3.generator(1, 2));
  EXPECT_TRUE(F3.reduce(std::vector<int>{}).is_identity());
  EXPECT_TRUE(F3.reduce(std::vector<int>{1, -1}).is_identity());
}

TEST(Reduce, RejectsOutOfRange) {
  try {
    F3.reduce(std::vector<int>{1, 4});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IndexOutOfRange);
  }
  EXPECT_THROW(F3.reduce(std::vector<int>{0}), Error);
}

TEST(Multiply, Examples) {
  EXPECT_EQ(F3.multiply(w("x1 x2"), w("x2^-1 x3")), w("x1 x3"));
  EXPECT_EQ(F3.multiply(w("x1"), w("x1")), w("x1^2"));
  const Word u = w("x1 x3^-2 x2");
  EXPECT_TRUE(F3.multiply(u, F3.invert(u)).is_identity());
}

TEST(Multiply, RankMismatch) {
  try {
    F3.multiply(w("x1"), w("x4"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RankMismatch);
  }
}

TEST(Invert, Examples) {
  EXPECT_EQ(F3.invert(w("x1 x2^-1")), w("x2 x1^-1"));
  EXPECT_TRUE(F3.invert(Word{}).is_identity());
  EXPECT_EQ(F3.invert(w("x1^3")), w("x1^-3"));
}

TEST(ExponentSum, Examples) {
  EXPECT_EQ(exponent_sum(w("x1 x2 x1^-1"), 2), 1);
  EXPECT_EQ(exponent_sum(w("x1 x2 x1^-1"), 1), 0);
  // h of the magic braid's first image, i0 = 1.
  EXPECT_EQ(exponent_sum(w("x1 x3 x1 x3^-1 x1^-1"), 1), 1);
  EXPECT_EQ(ExponentHom{1}(w("x1 x3 x1 x3^-1 x1^-1")), 1);
  EXPECT_EQ(ExponentHom{3}(w("x3^-4 x2")), -4);
}

TEST(Apply, Examples) {
  const Endomorphism s1 = generator_action(3, 1, +1);
  EXPECT_EQ(F3.apply(s1, w("x2")), w("x1"));
  EXPECT_EQ(F3.apply(s1, w("x1")), w("x1 x2 x1^-1"));
  EXPECT_EQ(F3.apply(Endomorphism::identity(3), w("x3 x1^-5 x2")), w("x3 x1^-5 x2"));
  EXPECT_TRUE(F3.apply(s1, Word{}).is_identity());
}

TEST(Apply, MissingImage) {
  Endomorphism short_phi{{w("x1"), w("x2")}};
  try {
    F3.apply(short_phi, w("x1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingImage);
  }
}

TEST(Format, Grammar) {
  EXPECT_EQ(format_word(Word{}), "1");
  EXPECT_EQ(format_word(w("x1 x3^-1 x2^2")), "x1 x3^-1 x2^2");
  EXPECT_EQ(format_word(w("x1*x1*x2")), "x1^2 x2");
  EXPECT_EQ(w("1"), Word{});
  EXPECT_EQ(w("  x2 1 x2^-1 "), Word{});
}

TEST(Parse, ErrorPositions) {
  try {
    parse_word("x1 y2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 4);
  }
  try {
    parse_word("x1 x2^0");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 7);
  }
  EXPECT_THROW(parse_word("x"), ParseError);
  EXPECT_THROW(parse_word("x0"), ParseError);
  EXPECT_THROW(parse_word("x1x2"), ParseError);
  EXPECT_THROW(F3.parse("x4"), Error);
}

TEST(ParseEndomorphism, RoundTripAndErrors) {
  const std::string text = "# magic\nx1 = x1 x3 x1 x3^-1 x1^-1\nx2 = x1 x3 x1^-1\n\nx3 = x3^-1 x2 x3\n";
  const Endomorphism phi = parse_endomorphism(text, 3);
  EXPECT_EQ(phi, artin_action(parse_braid(3, "s1^2 s2^-1")));
  EXPECT_EQ(parse_endomorphism(format_endomorphism(phi), 3), phi);

  try {
    parse_endomorphism("x1 = x1\nx1 = x2\n", 2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  try {
    parse_endomorphism("x1 = x1\n", 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingImage);
  }
  try {
    parse_endomorphism("x1 = x1\nx2 = x2 q\n", 2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 9);
  }
  EXPECT_THROW(parse_endomorphism("x1 = x3\nx2 = x2\n", 2), Error);
  EXPECT_THROW(parse_endomorphism("x1 x1\nx2 = x2\n", 2), ParseError);
}

TEST(WordProperty, MatchesNaiveReduction) {
  Gen g(101);
  for (int n = 0; n < 500; ++n) {
    const auto raw = g.signed_letters(4, 40);
    const Word r = FreeGroup(4).reduce(raw);
    EXPECT_EQ(expand(r), naive_reduce(raw)) << "sample " << n;
    // Runs are maximal and nonzero.
    const auto runs = r.runs();
    for (std::size_t i = 0; i < runs.size(); ++i) {
      EXPECT_NE(runs[i].exp, 0);
      if (i) EXPECT_NE(runs[i].letter, runs[i - 1].letter);
    }
    EXPECT_EQ(FreeGroup(4).reduce(expand(r)), r);
  }
}

TEST(WordProperty, ReductionIsConfluent) {
  Gen g(102);
  const FreeGroup F(3);
  for (int n = 0; n < 300; ++n) {
    const auto raw = g.signed_letters(3, 30);
    // Reduce pieces split at random cut points, in random association order.
    const auto cut1 = static_cast<std::size_t>(g.uniform(0, raw.size()));
    const auto cut2 = static_cast<std::size_t>(g.uniform(cut1, raw.size()));
    const std::span<const int> all(raw);
    const Word a = F.reduce(all.subspan(0, cut1));
    const Word b = F.reduce(all.subspan(cut1, cut2 - cut1));
    const Word c = F.reduce(all.subspan(cut2));
    EXPECT_EQ(F.multiply(F.multiply(a, b), c), F.multiply(a, F.multiply(b, c)));
    EXPECT_EQ(F.multiply(F.multiply(a, b), c), F.reduce(raw));
  }
}

TEST(WordProperty, GroupLaws) {
  Gen g(103);
  const FreeGroup F(3);
  for (int n = 0; n < 300; ++n) {
    const Word u = g.word(3, 20), v = g.word(3, 20);
    EXPECT_EQ(F.multiply(u, Word{}), u);
    EXPECT_EQ(F.multiply(Word{}, u), u);
    EXPECT_TRUE(F.multiply(u, F.invert(u)).is_identity());
    EXPECT_EQ(F.invert(F.multiply(u, v)), F.multiply(F.invert(v), F.invert(u)));
  }
}

TEST(WordProperty, ExponentSumHomomorphismAndConjugationInvariant) {
  Gen g(104);
  for (int n = 0; n < 300; ++n) {
    const Word u = g.word(4, 20), v = g.word(4, 20);
    for (int i = 1; i <= 4; ++i) {
      EXPECT_EQ(exponent_sum(u * v, i), exponent_sum(u, i) + exponent_sum(v, i));
      EXPECT_EQ(exponent_sum(conjugate(u, v), i), exponent_sum(v, i));
    }
  }
}

TEST(WordProperty, ParseFormatRoundTrip) {
  Gen g(105);
  for (int n = 0; n < 500; ++n) {
    const Word u = g.word(9, 64);
    EXPECT_EQ(parse_word(format_word(u)), u) << format_word(u);
  }
  // Large exponents survive too.
  const Word big = w("x2^1000000000000 x1^-7");
  EXPECT_EQ(parse_word(format_word(big)), big);
}

TEST(WordProperty, ApplyIsHomomorphism) {
  Gen g(106);
  const FreeGroup F(3);
  const Endomorphism phi = artin_action(parse_braid(3, "s1^2 s2^-1"));
  for (int n = 0; n < 200; ++n) {
    const Word u = g.word(3, 16), v = g.word(3, 16);
    EXPECT_EQ(F.apply(phi, u * v), F.apply(phi, u) * F.apply(phi, v));
  }
}

TEST(RunWord, GenericAlphabet) {
  using S = RunWord<char>;
  S a = S::power('a', 2) * S::power('b', -1);
  EXPECT_EQ(a.length(), 3);
  EXPECT_TRUE((a * a.inverse()).is_identity());
  EXPECT_EQ(from_letters(std::vector<int>{1, 1, -2}), w("x1^2 x2^-1"));
}

}  // namespace
}  // namespace biord
