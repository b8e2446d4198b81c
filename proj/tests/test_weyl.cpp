#include <gtest/gtest.h>

#include <random>

#include "affcat/weyl.hpp"

using namespace affcat;

namespace {

AffinePermutation S(int r, int i) { return AffinePermutation::sigma(r, i); }
AffinePermutation Rho(int r, long k = 1) { return AffinePermutation::rho(r, k); }

bool distant(int r, int i, int j) {
  int d = ((i - j) % r + r) % r;
  return d != 0 && d != 1 && d != r - 1;
}

}  // namespace

TEST(Weyl, GeneratorWindows) {
  EXPECT_EQ(S(3, 3).window(), (std::vector<long>{0, 2, 4}));
  EXPECT_EQ(Rho(3).window(), (std::vector<long>{2, 3, 4}));
  EXPECT_EQ(AffinePermutation::translation(3, 2).window(), (std::vector<long>{1, 5, 3}));
  EXPECT_THROW(AffinePermutation::from_window({1, 4, 3}), std::invalid_argument);
}

TEST(Weyl, PresentationW1toW4) {
  for (int r : {3, 4, 5}) {
    AffinePermutation e(r);
    EXPECT_EQ(Rho(r) * Rho(r, -1), e);
    for (int i = 1; i <= r; ++i) {
      int ip = i % r + 1;
      EXPECT_EQ(S(r, i) * S(r, i), e) << "W1 r=" << r << " i=" << i;
      EXPECT_EQ(S(r, i) * S(r, ip) * S(r, i), S(r, ip) * S(r, i) * S(r, ip)) << "W3";
      EXPECT_EQ(Rho(r) * S(r, i) * Rho(r, -1), S(r, ip)) << "W4";
      for (int j = 1; j <= r; ++j)
        if (distant(r, i, j)) EXPECT_EQ(S(r, i) * S(r, j), S(r, j) * S(r, i)) << "W2";
    }
  }
}

TEST(Weyl, TranslationsAndRho) {
  for (int r : {3, 4}) {
    AffinePermutation t1 = AffinePermutation::translation(r, 1);
    AffinePermutation prod = t1;
    for (int i = 1; i < r; ++i) prod = prod * S(r, i);
    EXPECT_EQ(prod, Rho(r));  // rho = t_1 s_1 ... s_{r-1}
    for (int j = 1; j < r; ++j)
      EXPECT_EQ(S(r, j) * AffinePermutation::translation(r, j) * S(r, j),
                AffinePermutation::translation(r, j + 1));
  }
}

TEST(Weyl, NormalFormExamples) {
  const int r = 4;
  NormalForm id = normal_form(AffinePermutation(r));
  EXPECT_EQ(id.k, 0);
  EXPECT_TRUE(id.word.empty());
  NormalForm rho = normal_form(Rho(r));
  EXPECT_EQ(rho.k, 1);
  EXPECT_TRUE(rho.word.empty());
  NormalForm t = normal_form(AffinePermutation::translation(r, 1));
  EXPECT_EQ(t.k, 1);
  EXPECT_EQ(t.word, (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(S(3, 1).length(), 1);
  EXPECT_EQ((S(3, 1) * S(3, 2) * S(3, 1)).length(), 3);
  EXPECT_EQ(Rho(3, 5).length(), 0);
}

TEST(Weyl, NormalFormRecomposesAndIsReduced) {
  std::mt19937 rng(1);
  for (int r : {3, 4, 5}) {
    std::uniform_int_distribution<int> letter(0, r + 1), len(0, 9);
    for (int n = 0; n < 200; ++n) {
      AffinePermutation w(r);
      int word_len = 0;
      for (int k = len(rng); k > 0; --k) {
        int l = letter(rng);
        if (l < r) {
          w = w * S(r, l + 1);
          ++word_len;
        } else {
          w = w * Rho(r, l == r ? 1 : -1);
        }
      }
      NormalForm nf = normal_form(w);
      EXPECT_EQ(from_normal_form(r, nf), w);
      EXPECT_EQ(static_cast<int>(nf.word.size()), w.length());
      EXPECT_LE(w.length(), word_len);
      EXPECT_EQ(nf.k, w.rho_power());
      // Inversion count by brute force over a window of pairs (i, j), i < j,
      // i in 1..r, f(i) > f(j).
      int brute = 0;
      for (long i = 1; i <= r; ++i)
        for (long j = i + 1; j <= i + 40 * r; ++j)
          if (w(i) > w(j)) ++brute;
      EXPECT_EQ(brute, w.length());
    }
  }
}

TEST(Weyl, WeightAction) {
  const int r = 4;
  GlWeight eps1{{1, 0, 0, 0}, 5};
  EXPECT_EQ(act_weight(S(r, r), eps1), (GlWeight{{0, 0, 0, 1}, 6}));
  GlWeight k{{3, -1, 2, 7}, 4};
  EXPECT_EQ(act_weight(Rho(r), k), (GlWeight{{7, 3, -1, 2}, 4 - 7}));
  for (int j = 1; j <= r; ++j)
    EXPECT_EQ(act_weight(AffinePermutation::translation(r, j), k),
              (GlWeight{k.kappa, 4 - k.kappa[static_cast<size_t>(j - 1)]}));
  EXPECT_EQ(act_weight(AffinePermutation(r), k), k);
}

TEST(Weyl, PolyActionMatchesGenerators) {
  const int r = 3;
  EXPECT_EQ(act_poly(Rho(r), GradedPoly::x(r)), GradedPoly::parse("x1 - y"));
  EXPECT_EQ(act_poly(S(r, r), GradedPoly::x(1)), GradedPoly::parse("x3 + y"));
  GradedPoly p = GradedPoly::parse("x1^2*x3 - y*x2 + 4");
  EXPECT_EQ(act_poly(AffinePermutation(r), p), p);
}

TEST(Weyl, ActionsComposeOnRandomPairs) {
  std::mt19937 rng(2);
  const int r = 4;
  std::uniform_int_distribution<int> letter(0, r + 1), len(0, 6);
  auto random_w = [&]() {
    AffinePermutation w(r);
    for (int k = len(rng); k > 0; --k) {
      int l = letter(rng);
      w = w * (l < r ? S(r, l + 1) : Rho(r, l == r ? 1 : -1));
    }
    return w;
  };
  GradedPoly p = GradedPoly::parse("x1*x2^2 - 3*y*x4 + x3");
  GlWeight k{{2, -1, 0, 5}, 1};
  for (int n = 0; n < 100; ++n) {
    AffinePermutation u = random_w(), v = random_w();
    EXPECT_EQ(act_poly(u * v, p), act_poly(u, act_poly(v, p)));
    EXPECT_EQ(act_weight(u * v, k), act_weight(u, act_weight(v, k)));
  }
}

// Faithfulness spot-check: compute the polynomial action letter by letter
// through the generator formulas and compare with the group element.
TEST(Weyl, FaithfulOnShortWords) {
  const int r = 3;
  // letters: s1 s2 s3 rho rho^-1
  const int nletters = r + 2;
  int words = 0;
  std::vector<int> idx;
  for (int len = 0; len <= 5; ++len) {
    idx.assign(static_cast<size_t>(len), 0);
    for (;;) {
      AffinePermutation w(r);
      for (int l : idx) w = w * (l < r ? S(r, l + 1) : Rho(r, l == r ? 1 : -1));
      // act(g1 ... gn) = act(g1) o ... o act(gn): the last letter acts first.
      bool trivial = true;
      for (int j = 1; j <= r; ++j) {
        GradedPoly p = GradedPoly::x(j);
        for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
          int l = *it;
          p = l < r ? sigma_act(l + 1, r, p) : rho_act(l == r ? 1 : -1, r, p);
        }
        EXPECT_EQ(p, act_poly(w, GradedPoly::x(j)));
        if (p != GradedPoly::x(j)) trivial = false;
      }
      EXPECT_EQ(trivial, w.is_identity());
      ++words;
      size_t pos = 0;
      while (pos < idx.size() && ++idx[pos] == nletters) idx[pos++] = 0;
      if (pos == idx.size()) break;
    }
  }
  EXPECT_GT(words, 3000);
}

TEST(Weyl, WordParsing) {
  const int r = 3;
  GenWord w = parse_word(r, "rho s1 rho^-1 t2 s3^-1");
  EXPECT_EQ(w.size(), 5u);
  EXPECT_EQ(word_str(w), "rho s1 rho^-1 t2 s3^-1");
  EXPECT_EQ(evaluate_word(r, parse_word(r, "rho s1 rho^-1")), S(r, 2));
  EXPECT_TRUE(parse_word(r, "e").empty());
  EXPECT_THROW(parse_word(r, "s4"), std::runtime_error);
  EXPECT_THROW(parse_word(r, "x1"), std::runtime_error);
}
