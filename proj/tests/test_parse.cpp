#include <gtest/gtest.h>

#include <random>

#include "affcat/hecke.hpp"
#include "affcat/parse.hpp"
#include "affcat/schur.hpp"
#include "affcat/soergel.hpp"
#include "affcat/weyl.hpp"

using namespace affcat;

// Randomized parse/print round trips for every textual element kind.

namespace {

RatQ random_coefficient(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-3, 3), e(-2, 2);
  RatQ v = RatQ(c(rng)) * RatQ::q(e(rng)) + RatQ(c(rng));
  if (c(rng) > 1) v = v / (RatQ::q() + RatQ(1));
  return v;
}

GenWord random_word(std::mt19937_64& rng, int r) {
  std::uniform_int_distribution<int> len(0, 6), kind(0, 2), idx(1, r), sign(0, 1), rexp(-2, 2);
  GenWord w;
  for (int k = len(rng); k > 0; --k) {
    switch (kind(rng)) {
      case 0: w.push_back({'s', idx(rng), sign(rng) ? 1 : -1}); break;
      case 1: {
        long e = rexp(rng);
        w.push_back({'r', 0, e == 0 ? 1 : e});
        break;
      }
      default: w.push_back({'t', idx(rng), sign(rng) ? 1 : -1}); break;
    }
  }
  return w;
}

}  // namespace

TEST(RoundTrip, WeylWords) {
  std::mt19937_64 rng(11);
  for (int r : {3, 4}) {
    for (int k = 0; k < 100; ++k) {
      GenWord w = random_word(rng, r);
      EXPECT_EQ(parse_word(r, word_str(w)), w) << word_str(w);
    }
  }
}

TEST(RoundTrip, HeckeElements) {
  std::mt19937_64 rng(12);
  const int r = 3;
  for (int k = 0; k < 60; ++k) {
    HeckeElement h = HeckeElement::scalar(r, RatQ(0));
    for (int t = 0; t < 3; ++t) h = h + random_coefficient(rng) * T(evaluate_word(r, random_word(rng, r)));
    EXPECT_EQ(parse_hecke(r, h.str()), h) << h.str();
  }
}

TEST(RoundTrip, SchurElementsAndTensors) {
  std::mt19937_64 rng(13);
  const int n = 4, r = 3;
  auto lambdas = compositions(n, r);
  std::uniform_int_distribution<int> len(0, 4), kind(0, 3), idx(1, n), sign(0, 1), tv(-2, 5);
  std::uniform_int_distribution<size_t> pick(0, lambdas.size() - 1);
  for (int k = 0; k < 60; ++k) {
    SchurElement x;
    for (int t = 0; t < 3; ++t) {
      SchurWord w;
      for (int l = len(rng); l > 0; --l) {
        switch (kind(rng)) {
          case 0: w.push_back(SchurLetter::e(sign(rng) ? idx(rng) : -idx(rng))); break;
          case 1: w.push_back(SchurLetter::k(idx(rng), sign(rng) ? 1 : -1)); break;
          case 2: w.push_back(SchurLetter::shift(sign(rng) ? 1 : -1)); break;
          default: w.push_back(SchurLetter::idem(lambdas[pick(rng)])); break;
        }
      }
      x += SchurElement(w, random_coefficient(rng));
    }
    SCOPED_TRACE(x.str());
    EXPECT_NO_THROW(EXPECT_EQ(parse_schur_element(n, x.str()), x));

    TensorVector v;
    for (int t = 0; t < 3; ++t) v.add({tv(rng), tv(rng), tv(rng)}, random_coefficient(rng));
    SCOPED_TRACE(v.str());
    EXPECT_NO_THROW(EXPECT_EQ(parse_tensor(v.str()), v));
  }
}

TEST(RoundTrip, SoergelObjects) {
  std::mt19937_64 rng(14);
  const int r = 3;
  std::uniform_int_distribution<int> len(0, 5), letter(0, r + 1);
  for (int k = 0; k < 60; ++k) {
    std::vector<int> word;
    for (int l = len(rng); l > 0; --l) {
      int c = letter(rng);
      word.push_back(c == 0 ? kPlus : c == r + 1 ? kMinus : c);
    }
    SoergelObject obj(r, word);
    EXPECT_EQ(parse_object(r, obj.str()), obj) << obj.str();
  }
}
