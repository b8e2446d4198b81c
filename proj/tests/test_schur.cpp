#include <gtest/gtest.h>

#include <random>

#include "affcat/parse.hpp"
#include "affcat/schur.hpp"

using namespace affcat;

namespace {

RatQ Q(const std::string& s) { return RatQ::parse(s); }
SchurElement W(int n, const std::string& s) { return parse_schur_element(n, s); }
TensorVector e(const Tensor& t) { return TensorVector::pure(t); }

SchurWord random_word(std::mt19937& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), kind(0, 5), col(1, n), sign(0, 1);
  SchurWord w;
  for (int k = len(rng); k > 0; --k) {
    int c = col(rng), s = sign(rng) ? 1 : -1;
    switch (kind(rng)) {
      case 0:
      case 1:
      case 2:
        w.push_back(SchurLetter::e(s * c));
        break;
      case 3:
      case 4:
        w.push_back(SchurLetter::k(c, s));
        break;
      default:
        w.push_back(SchurLetter::shift(s));
    }
  }
  return w;
}

TensorVector random_tensor(std::mt19937& rng, int r, int lo, int hi, int terms) {
  std::uniform_int_distribution<int> entry(lo, hi), coef(-3, 3), qe(-2, 2);
  TensorVector v;
  for (int k = 0; k < terms; ++k) {
    Tensor t;
    for (int j = 0; j < r; ++j) t.push_back(entry(rng));
    v.add(t, RatQ(coef(rng)) * RatQ::q(qe(rng)));
  }
  return v;
}

}  // namespace

TEST(Schur, Compositions) {
  EXPECT_EQ(compositions(4, 3).size(), 20u);
  EXPECT_EQ(compositions(5, 4).size(), 70u);
  EXPECT_EQ(compositions(2, 2), (std::vector<Composition>{{2, 0}, {1, 1}, {0, 2}}));
  EXPECT_EQ(one_r(4, 3), (Composition{1, 1, 1, 0}));
}

TEST(Schur, ActionOnV) {
  const int n = 4;
  for (int t = -5; t <= 5; ++t) {
    int i = ((t - 1) % n + n) % n + 1;  // i = t mod n
    EXPECT_EQ(act(n, SchurLetter::e(i), e({t + 1})), e({t}));
    EXPECT_EQ(act(n, SchurLetter::e(i % n + 1), e({t + 1})), TensorVector());
    EXPECT_EQ(act(n, SchurLetter::e(-i), e({t})), e({t + 1}));
    EXPECT_EQ(act(n, SchurLetter::k(i), e({t})), RatQ::q() * e({t}));
    EXPECT_EQ(act(n, SchurLetter::k(i, -1), e({t})), RatQ::q(-1) * e({t}));
    EXPECT_EQ(act(n, SchurLetter::k(i % n + 1), e({t})), e({t}));
    EXPECT_EQ(act(n, SchurLetter::shift(-1), e({t})), e({t - 1}));
  }
}

TEST(Schur, CoproductOnTwoFactors) {
  const int n = 4, t = 2, i = 2;
  TensorVector expected = RatQ::q(-1) * e({t, t + 1});
  expected += e({t + 1, t});
  EXPECT_EQ(act(n, SchurLetter::e(i), e({t + 1, t + 1})), expected);
  // E_{-i} on e_t (x) e_t: K_i^{-1} K_{i+1} acts on the left factor.
  TensorVector expected2 = e({t + 1, t});
  expected2 += RatQ::q(-1) * e({t, t + 1});
  EXPECT_EQ(act(n, SchurLetter::e(-i), e({t, t})), expected2);
}

TEST(Schur, WeightProjection) {
  const int n = 4;
  EXPECT_EQ(weight_project(n, {1, 1, 1, 0}, e({1, 2, 3})), e({1, 2, 3}));
  EXPECT_EQ(weight_project(n, {1, 1, 1, 0}, e({1, 1, 3})), TensorVector());
  EXPECT_EQ(weight_project(n, {0, 3, 0, 0}, e({2, 6, -2})), e({2, 6, -2}));
  std::mt19937 rng(3);
  for (int k = 0; k < 20; ++k) {
    TensorVector v = random_tensor(rng, 3, -4, 8, 5);
    TensorVector sum;
    for (const auto& l : compositions(n, 3)) {
      TensorVector p = weight_project(n, l, v);
      EXPECT_EQ(weight_project(n, l, p), p);
      sum += p;
    }
    EXPECT_EQ(sum, v);
  }
}

TEST(Schur, ShiftEquivariance) {
  std::mt19937 rng(4);
  const int n = 4, r = 3;
  for (int k = 0; k < 100; ++k) {
    SchurWord w = random_word(rng, n, 5);
    TensorVector v = random_tensor(rng, r, -3, 9, 3);
    TensorVector shifted;
    for (const auto& [t, c] : v.terms()) {
      Tensor u = t;
      for (int& x : u) x += n;
      shifted.add(u, c);
    }
    TensorVector lhs = act(n, w, shifted), rhs_raw = act(n, w, v), rhs;
    for (const auto& [t, c] : rhs_raw.terms()) {
      Tensor u = t;
      for (int& x : u) x += n;
      rhs.add(u, c);
    }
    EXPECT_EQ(lhs, rhs) << word_str(w);
  }
}

TEST(Schur, EqualityOracleExamples) {
  const int n = 5, r = 3;
  SchurElement x = W(n, "E1 E-2 K3");
  EXPECT_TRUE(equal(n, r, x, x, default_window(n, x, x)));
  EXPECT_TRUE(equal(n, r, W(n, "E1 E3"), W(n, "E3 E1"), 10));
  EXPECT_TRUE(equal(n, r, W(n, "E-1 E4"), W(n, "E4 E-1"), 10));
  std::string witness;
  EXPECT_FALSE(equal(n, r, W(n, "E1 E2"), W(n, "E2 E1"), 10, &witness));
  EXPECT_NE(witness.find("on e("), std::string::npos);
  // E_i E_{-i} - E_{-i} E_i = sum_lambda [lambda_i - lambda_{i+1}] 1_lambda.
  for (int i = 1; i <= n; ++i) {
    SchurElement rhs;
    for (const auto& l : compositions(n, r))
      rhs.add(SchurWord{SchurLetter::idem(l)},
              qint(l[static_cast<size_t>(i - 1)] - l[static_cast<size_t>(i % n)]));
    SchurElement lhs = SchurElement(e_word({i, -i})) - SchurElement(e_word({-i, i}));
    EXPECT_TRUE(equal(n, r, lhs, rhs, default_window(n, lhs, rhs))) << i;
  }
}

TEST(Schur, PresentationSweepSmall) {
  const int n = 4, r = 3;
  auto rels = presentation_relations(n, r);
  EXPECT_EQ(rels.size(), 769u);
  for (const auto& rel : rels) {
    std::string witness;
    int w = default_window(n, rel.lhs, rel.rhs);
    EXPECT_TRUE(equal(n, r, rel.lhs, rel.rhs, w, &witness)) << rel.id << " " << witness;
  }
}

// Negative control: a wrong q-integer in one commutator instance is caught.
TEST(Schur, OracleRejectsPerturbedRelation) {
  const int n = 4, r = 3;
  for (const auto& rel : presentation_relations(n, r)) {
    if (rel.id != "comm[1,1](2,1,0,0)") continue;
    SchurElement bad = rel.rhs + rel.rhs;
    EXPECT_FALSE(equal(n, r, rel.lhs, bad, default_window(n, rel.lhs, bad)));
    return;
  }
  FAIL() << "instance not generated";
}

TEST(Schur, SigmaEmbedding) {
  const int n = 4, r = 3;
  auto eq = [&](const SchurElement& a, const SchurElement& b) {
    std::string w;
    bool ok = equal(n, r, a, b, default_window(n, a, b), &w);
    if (!ok) ADD_FAILURE() << w;
    return ok;
  };
  SchurElement one(SchurWord{SchurLetter::idem(one_r(n, r))});
  for (int i = 1; i < r; ++i) eq(sigma_b(n, r, i, 0), sigma_b(n, r, i, 1));
  eq(sigma_trho(n, r, 0), sigma_trho(n, r, 1));
  eq(sigma_trho_inv(n, r, 0), sigma_trho_inv(n, r, 1));
  eq(sigma_trho(n, r) * sigma_trho_inv(n, r), one);
  eq(sigma_trho_inv(n, r) * sigma_trho(n, r), one);
  for (int i = 1; i <= r; ++i) {
    SchurElement bi = sigma_b(n, r, i), bn = sigma_b(n, r, i % r + 1);
    eq(bi * bi, Q("q + q^-1") * bi);
    eq(bi * bn * bi + bn, bn * bi * bn + bi);
    eq(sigma_trho(n, r) * bi * sigma_trho_inv(n, r), bn);
  }
}

TEST(Schur, SigmaEmbeddingDistantColours) {
  const int n = 6, r = 5;
  SchurElement b1 = sigma_b(n, r, 1), b3 = sigma_b(n, r, 3);
  EXPECT_TRUE(equal(n, r, b1 * b3, b3 * b1, default_window(n, b1, b3)));
}

TEST(Schur, RhoAntiInvolution) {
  const int n = 4;
  EXPECT_EQ(rho_antiinv(n, W(n, "K2")), W(n, "K2"));
  EXPECT_EQ(rho_antiinv(n, W(n, "R")), W(n, "R^-1"));
  EXPECT_EQ(rho_antiinv(n, W(n, "E1")), W(n, "q*K1 K2^-1 E-1"));
  EXPECT_EQ(rho_antiinv(n, W(n, "E-4")), W(n, "q*K4^-1 K1 E4"));
  // <E_1 e_2, e_1> = 1 = <e_2, rho(E_1) e_1>.
  SchurElement e1 = W(n, "E1");
  EXPECT_EQ(bilinear_form(act(n, e1, e({2})), e({1})), RatQ(1));
  EXPECT_EQ(bilinear_form(e({2}), act(n, rho_antiinv(n, e1), e({1}))), RatQ(1));
  // rho is an involution on the algebra: acting by rho(rho(x)) equals x.
  SchurElement x = W(n, "E1 E-3 K2 R + (q - 1)*E4 E4");
  EXPECT_TRUE(equal(n, 3, rho_antiinv(n, rho_antiinv(n, x)), x, default_window(n, x, x)));
}

TEST(Schur, RhoAdjointnessRandom) {
  std::mt19937 rng(8);
  const int n = 4, r = 3;
  for (int k = 0; k < 50; ++k) {
    SchurElement x(random_word(rng, n, 3));
    TensorVector v = random_tensor(rng, r, 0, 8, 3), w = random_tensor(rng, r, 0, 8, 3);
    // Bias w towards the image so the pairing is often non-trivial.
    w += act(n, x, v);
    EXPECT_EQ(bilinear_form(act(n, x, v), w), bilinear_form(v, act(n, rho_antiinv(n, x), w)))
        << x;
  }
}

TEST(Schur, BilinearForm) {
  EXPECT_EQ(bilinear_form(e({1}), e({2})), RatQ());
  EXPECT_EQ(bilinear_form(e({3}), e({3})), RatQ(1));
  TensorVector v = e({1});
  v += RatQ::q() * e({2});
  EXPECT_EQ(bilinear_form(v, v), Q("1 + q^2"));
  std::mt19937 rng(9);
  for (int k = 0; k < 30; ++k) {
    TensorVector a = random_tensor(rng, 3, 0, 3, 4), b = random_tensor(rng, 3, 0, 3, 4);
    EXPECT_EQ(bilinear_form(a, b), bilinear_form(b, a));
    if (!a.is_zero()) EXPECT_FALSE(bilinear_form(a, a).is_zero());
  }
}

TEST(Schur, Iota) {
  const int n = 4, r = 3;
  EXPECT_EQ(iota(n, r, W(n, "1[(1,1,1,0)]")), W(n + 1, "1[(1,1,1,0,0)]"));
  EXPECT_EQ(iota(n, r, W(n, "E2 1[(1,0,2,0)]")), W(n + 1, "E2 1[(1,0,2,0,0)]"));
  EXPECT_EQ(iota(n, r, W(n, "E4 1[(1,0,2,0)]")), W(n + 1, "E4 E5 1[(1,0,2,0,0)]"));
  EXPECT_EQ(iota(n, r, W(n, "E-4 1[(0,0,2,1)]")), W(n + 1, "E-5 E-4 1[(0,0,2,1,0)]"));
  EXPECT_THROW(iota(n, r, W(n, "R 1[(1,1,1,0)]")), std::invalid_argument);
  for (const auto& l : compositions(n, r)) {
    SchurElement lhs = W(n, "E4 E-4 - E-4 E4") * SchurElement(SchurWord{SchurLetter::idem(l)});
    SchurElement rhs(SchurWord{SchurLetter::idem(l)}, qint(l[3] - l[0]));
    SchurElement il = iota(n, r, lhs), ir = iota(n, r, rhs);
    EXPECT_TRUE(equal(n + 1, r, il, ir, default_window(n + 1, il, ir))) << composition_str(l);
  }
}

TEST(Schur, ParseAndPrint) {
  const int n = 4;
  SchurElement x = W(n, "E1 E-4 1[(1,1,1,0)]");
  ASSERT_EQ(x.terms().size(), 1u);
  EXPECT_EQ(x.terms().begin()->first.size(), 3u);
  SchurElement y = W(n, "-(q^2 - 1)*E1 E-4 K3^-1 - q^-1*R^-1 + 2*1 + E2 1[(0,3,0,0)]");
  EXPECT_EQ(y.terms().size(), 4u);
  EXPECT_EQ(W(n, y.str()), y);
  EXPECT_EQ(W(n, x.str()), x);
  EXPECT_THROW(W(n, "E5"), ParseError);
  EXPECT_THROW(W(n, "E1 + "), ParseError);
  EXPECT_THROW(W(n, "1[(1,1,1)]"), ParseError);
  EXPECT_EQ(parse_tensor("(1,2,-3)"), e({1, 2, -3}));
  TensorVector v = parse_tensor("e(1,2) - q*e(0,2)");
  EXPECT_EQ(parse_tensor(v.str()), v);
}
