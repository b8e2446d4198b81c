#include <gtest/gtest.h>

#include "affcat/singular.hpp"
#include "affcat/verify.hpp"

using namespace affcat;

namespace {

GradedPoly P(const std::string& s) { return GradedPoly::parse(s); }

}  // namespace

// --- symmetric functions: hand-computed values ---------------------------

TEST(SymFn, ElementaryTwoVariables) {
  auto v = var_block(1, 2);
  EXPECT_EQ(elementary(0, v), GradedPoly(1));
  EXPECT_EQ(elementary(1, v), P("x1 + x2"));
  EXPECT_EQ(elementary(2, v), P("x1*x2"));
  EXPECT_TRUE(elementary(3, v).is_zero());
  EXPECT_TRUE(elementary(-1, v).is_zero());
}

TEST(SymFn, CompleteTwoVariables) {
  auto v = var_block(1, 2);
  EXPECT_EQ(complete(2, v), P("x1^2 + x1*x2 + x2^2"));
  EXPECT_EQ(complete(0, {}), GradedPoly(1));
  EXPECT_TRUE(complete(1, {}).is_zero());
  EXPECT_TRUE(complete(-2, v).is_zero());
}

TEST(SymFn, ShiftedBlock) {
  auto v = var_block(2, 3, GradedPoly::y());
  EXPECT_EQ(sym_eval({SymFn::Elementary, 2, v}), P("(x2 + y)*(x3 + y)"));
  EXPECT_TRUE(var_block(3, 2).empty());
}

TEST(SymFn, GeneratingFunctionIdentity) {
  // sum_i (-1)^i e_i h_{d-i} = 0 for d >= 1.
  auto v = var_block(1, 4);
  for (int d = 1; d <= 6; ++d) {
    GradedPoly s;
    for (int i = 0; i <= d; ++i) s += GradedPoly(i % 2 ? -1 : 1) * elementary(i, v) * complete(d - i, v);
    EXPECT_TRUE(s.is_zero()) << d;
  }
}

TEST(ShiftedElementary, SmallCaseByHand) {
  // n = 1, k = 0: x1 = (x1 + y) - y.
  EXPECT_TRUE(shifted_elementary_identity(1, 0, 1));
  EXPECT_TRUE(shifted_elementary_identity(1, 1, -1));
}

TEST(ShiftedElementary, AllUpToSix) {
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k)
      for (int s : {1, -1}) EXPECT_TRUE(shifted_elementary_identity(n, k, s)) << n << " " << k << " " << s;
  EXPECT_THROW(shifted_elementary_identity(3, 4), std::invalid_argument);
}

// --- partially symmetric rings -------------------------------------------

TEST(PartialInvariant, Membership) {
  PartialInvariantRing R({2, 1});
  EXPECT_EQ(R.rank(), 3);
  EXPECT_EQ(R.str(), "R_(2,1)");
  EXPECT_TRUE(R.contains(P("x1*x2 + x3^5")));
  EXPECT_FALSE(R.contains(P("x1")));
  EXPECT_TRUE(R.contains(P("x3")));
  EXPECT_TRUE(R.generated_by_blocks(P("x1^2 + x2^2 + y*x3")));
  EXPECT_FALSE(R.generated_by_blocks(P("x1 + x3")));
  EXPECT_EQ(R.generators().size(), 3u);
}

TEST(PartialInvariant, RotateBlocks) {
  EXPECT_EQ(rotate_blocks({1, 2, 3}, 1), (std::vector<int>{3, 1, 2}));
  EXPECT_EQ(rotate_blocks({1, 2, 3}, -1), (std::vector<int>{2, 3, 1}));
}

TEST(PartialInvariant, RhoPowerOfLastBlock) {
  // R_(1,2): rho^2 sends e1(x2, x3) to e1(x4, x5) = x1 + x2 - 2y.
  EXPECT_EQ(rho_power_image({1, 2}, 1, 1), P("x1 + x2 - 2*y"));
  EXPECT_EQ(rho_power_image({1, 2}, 0, 1), P("x3"));
  EXPECT_EQ(rho_power_image({1, 2}, 1, 2), rho_act(2, 3, P("x2*x3")));
}

TEST(PartialInvariant, TwistAllShapes) {
  for (auto b : std::vector<std::vector<int>>{{1, 1, 1, 1}, {2, 2}, {1, 3}, {3, 1}, {2, 1, 1}, {4}})
    for (int s : {1, -1}) {
      auto c = twist_ring_check(b, s);
      EXPECT_TRUE(c.pass) << composition_str(b) << " " << s << ": " << c.witness;
    }
}

// --- colour words ----------------------------------------------------------

TEST(ColourWords, LettersAndDefinedness) {
  Composition l{1, 1, 1, 0};
  EXPECT_EQ(apply_letter(4, l), (Composition{0, 1, 1, 1}));
  EXPECT_EQ(apply_letter(-1, l), (Composition{0, 2, 1, 0}));
  EXPECT_TRUE(word_defined({4}, l));
  EXPECT_FALSE(word_defined({-4}, l));
  EXPECT_EQ(lambda_bar(l, 4), -1);
  EXPECT_EQ(lambda_bar(l, 1), 0);
}

TEST(ColourWords, ShiftOfRightCupWordMatchesLeft) {
  // Both E_{-n} E_n 1_lambda and E_n E_{-n} 1_lambda have shift 1 - l1 - ln.
  for (const auto& l : compositions(4, 3)) {
    if (word_defined({-4, 4}, l)) EXPECT_EQ(word_shift({-4, 4}, l), 1 - l.front() - l.back());
    if (word_defined({4, -4}, l)) EXPECT_EQ(word_shift({4, -4}, l), 1 - l.front() - l.back());
  }
}

// --- colour-n generators ---------------------------------------------------

TEST(ColourN, KindNamesRoundTrip) {
  for (ColourNKind k : all_colour_n_kinds()) EXPECT_EQ(parse_colour_n_kind(colour_n_kind_str(k)), k);
  EXPECT_THROW(parse_colour_n_kind("cup"), std::invalid_argument);
}

TEST(ColourN, DotsAtOneR) {
  auto up = fprime_colour_n(ColourNKind::DotUp, {1, 1, 1, 0});
  ASSERT_EQ(up.forms.size(), 2u);
  EXPECT_EQ(up.forms[0], P("x3"));
  EXPECT_TRUE(up.forms_agree());
  EXPECT_EQ(up.measured_degree(), 2);
}

TEST(ColourN, RightCapOnGenerator) {
  // At (1,1,1,1) the cap sends 1 (x) 1 to (-1)^{l1+1} eta_0 = 1.
  auto c = fprime_colour_n(ColourNKind::CapRight, {1, 1, 1, 1}, 0, 0);
  EXPECT_EQ(c.forms[0], GradedPoly(1));
  auto c2 = fprime_colour_n(ColourNKind::CapRight, {2, 1, 0, 1}, 1, 1);
  // (-1)^3 eta_1(x1, x2).
  EXPECT_EQ(c2.forms[0], P("-x1 - x2"));
  EXPECT_TRUE(c2.forms_agree());
}

TEST(ColourN, UndefinedWordThrows) {
  EXPECT_THROW(fprime_colour_n(ColourNKind::CapLeft, {1, 1, 1, 0}), std::invalid_argument);
  EXPECT_THROW(fprime_colour_n(ColourNKind::CrossUpNJ, {1, 1, 1, 1, 0}, 0, 0, 1), std::invalid_argument);
  EXPECT_THROW(fprime_colour_n(ColourNKind::DotUp, {1, 0, 0}), std::invalid_argument);
}

TEST(ColourN, LeftCapWithUnshiftedIndexIsInhomogeneous) {
  // Negative control for the left cap: keeping eta_{a1+a2+1-ln} inside the
  // binomial sum (instead of eta_{p+q+1-ln}) does not give a homogeneous map.
  Composition l{1, 0, 0, 2};
  int a1 = 1, a2 = 1;
  GradedPoly wrong;
  auto blk = var_block(2, 3, GradedPoly::y());
  for (int p = 0; p <= a1; ++p)
    for (int q = 0; q <= a2; ++q)
      wrong += GradedPoly(mpq_class(binomial(a1, p) * binomial(a2, q))) *
               (-GradedPoly::y()).pow(static_cast<unsigned>(a1 + a2 - p - q)) *
               complete(a1 + a2 + 1 - 2, blk);
  EXPECT_FALSE(wrong.is_homogeneous());
  EXPECT_TRUE(fprime_colour_n(ColourNKind::CapLeft, l, a1, a2).forms_agree());
}

TEST(ColourN, FreeModelString) {
  GradedPoly p = P("x1*x4 + x2");
  EXPECT_EQ(free_model_str(p, 3), "(x2) (x) (1) + (x1) (x) (x1)");
  EXPECT_EQ(free_model_str(GradedPoly(), 3), "0");
}

class ColourNSweep : public ::testing::TestWithParam<ColourNKind> {};

TEST_P(ColourNSweep, FormsAgreeAndDegreeMatches) {
  ColourNKind k = GetParam();
  for (int n : {4, 5}) {
    int r = n - 1;
    for (const auto& l : compositions(n, r)) {
      if (l.front() > 3 || l.back() > 3) continue;
      for (int j = (n >= 4 ? 2 : 0); j <= std::max(2, n - 2); ++j) {
        if (!word_defined(kind_source(k, n, j), l) || !word_defined(kind_target(k, n, j), l)) continue;
        for (int a1 = 0; a1 <= 2; ++a1)
          for (int a2 = 0; a2 <= 2; ++a2) {
            ColourNImage im = fprime_colour_n(k, l, a1, a2, j);
            EXPECT_TRUE(im.forms_agree()) << im.str();
            bool zero = im.forms[0].is_zero();
            if (!zero) EXPECT_EQ(im.measured_degree(), expected_degree(k, l)) << im.str();
          }
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(AllKinds, ColourNSweep, ::testing::ValuesIn(all_colour_n_kinds()),
                         [](const auto& info) {
                           std::string s = colour_n_kind_str(info.param);
                           for (char& c : s)
                             if (c == '-') c = '_';
                           return s;
                         });

// --- bubbles and zig-zags -------------------------------------------------

TEST(Bubbles, NBubbleAtOneR) {
  EXPECT_EQ(bubble_value_n(one_r(4, 3), Orientation::CounterClockwise, 1), P("x1 - y"));
  EXPECT_EQ(bubble_degree(one_r(4, 3), Orientation::CounterClockwise, 1), 2);
}

TEST(Bubbles, DegreeZeroValues) {
  // lambda-bar_4 = 2 for (0,1,0,2): clockwise with one dot has degree 0.
  Composition l{0, 1, 0, 2};
  EXPECT_EQ(bubble_degree(l, Orientation::Clockwise, 1), 0);
  EXPECT_EQ(bubble_value_n(l, Orientation::Clockwise, 1), GradedPoly(1));
  Composition k{2, 1, 0, 0};
  EXPECT_EQ(bubble_degree(k, Orientation::CounterClockwise, 1), 0);
  EXPECT_EQ(bubble_value_n(k, Orientation::CounterClockwise, 1), GradedPoly(-1));
}

TEST(Bubbles, NegativeDegreeVanishes) {
  for (const auto& l : compositions(5, 4))
    for (Orientation o : {Orientation::Clockwise, Orientation::CounterClockwise})
      for (int m = 0; m <= 5; ++m)
        if (bubble_degree(l, o, m) < 0) EXPECT_TRUE(bubble_value_n(l, o, m).is_zero()) << composition_str(l);
}

TEST(ZigZags, AllEqualOne) {
  for (int n : {4, 5})
    for (const auto& l : compositions(n, n - 1))
      for (ZigZag z : {ZigZag::UpLeft, ZigZag::UpRight, ZigZag::DownLeft, ZigZag::DownRight}) {
        bool up = z == ZigZag::UpLeft || z == ZigZag::UpRight;
        if (!word_defined({up ? n : -n}, l)) {
          EXPECT_THROW(zigzag_value(z, l), std::invalid_argument);
          continue;
        }
        EXPECT_EQ(zigzag_value(z, l), GradedPoly(1)) << zigzag_str(z) << " " << composition_str(l);
      }
}

// --- END(1_r) ---------------------------------------------------------------

TEST(EndRing, Images) {
  EXPECT_EQ(end_ring_image("box_y", 3, 5), P("y"));
  EXPECT_EQ(end_ring_image("bubble1", 3, 5), P("x2 - x1"));
  EXPECT_EQ(end_ring_image("bubble3", 3, 5), P("x3"));
  EXPECT_TRUE(end_ring_image("bubble4", 3, 5).is_zero());
  EXPECT_EQ(end_ring_image("bubble5", 3, 5), P("x1 - y"));
  EXPECT_THROW(end_ring_image("bubble6", 3, 5), std::invalid_argument);
  EXPECT_THROW(end_ring_image("bubblex", 3, 5), std::invalid_argument);
  EXPECT_THROW(end_ring_image("box", 3, 5), std::invalid_argument);
}

TEST(EndRing, ExpyRelationVanishes) {
  for (auto [r, n] : std::vector<std::pair<int, int>>{{3, 4}, {4, 5}, {3, 6}}) {
    EXPECT_TRUE(expy_relation_image(r, n, false).is_zero());
    EXPECT_TRUE(expy_relation_image(r, n, true).is_zero());
  }
}

TEST(EndRing, SigmaBoxIsX) {
  for (int i = 1; i <= 4; ++i) EXPECT_EQ(sigma_box_image(i, 4, 5), GradedPoly::x(i));
}

TEST(EndRing, Triangle) {
  for (int i = 0; i <= 3; ++i) {
    auto c = triangle_check(i, 3, 4);
    EXPECT_TRUE(c.pass) << c.witness;
  }
}

// --- the suite --------------------------------------------------------------

TEST(SingularSuite, PassesAtDefaultRange) {
  SuiteParams p;
  p.samples = 50;
  Report rep = verify_singular(p);
  for (const auto& c : rep.cases()) EXPECT_TRUE(c.pass) << c.id << ": " << c.witness;
  EXPECT_GT(rep.cases().size(), 40u);
}

TEST(SingularSuite, RejectsOutOfRange) {
  SuiteParams p;
  p.r = 4;
  p.n = 4;
  EXPECT_THROW(verify_singular(p), std::invalid_argument);
}
