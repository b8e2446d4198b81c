#pragma once

// Extended singular Soergel bimodules at desk scale.
//
// Rings of partially symmetric polynomials R_{i1...ik}, the rotations
// rho^{i_k} and rho^{-i_1} between them, the bimodule maps attached to the
// generating 2-morphisms that carry the colour n, bubbles of colour n, and
// the images of the degree-two endomorphisms of the weight (1^r).
//
// Colour-n formulas are written on the explicit elements a (x) 1 (x) b that
// the induction/restriction bimodules are spanned by.  Two comparison models
// are used:
//
//  * free model: a (x) b is the polynomial a(x_1..x_r) b(x_{r+1}..x_{2r}),
//    i.e. the right tensor factor gets its own copy of the variables while y
//    is shared.  Equality there implies equality in the bimodule.
//  * twist model: a single factor E_n 1_lambda (resp. E_{-n} 1_lambda) is a
//    ring with a twisted right action, a (x) b -> a rho^{-1}(b)
//    (resp. a rho(b)).

#include <optional>
#include <string>
#include <vector>

#include "affcat/arith.hpp"
#include "affcat/schur.hpp"

namespace affcat {

// ---------------------------------------------------------------------------
// Symmetric functions

struct SymFn {
  enum Kind { Elementary, Complete };
  Kind kind = Elementary;
  int degree = 0;
  std::vector<GradedPoly> vars;
};

// epsilon_p or eta_p of the variable list.  Both vanish for p < 0, both are
// 1 for p = 0, and epsilon_p vanishes for p > #vars.
GradedPoly sym_eval(const SymFn& f);
GradedPoly elementary(int p, const std::vector<GradedPoly>& vars);
GradedPoly complete(int p, const std::vector<GradedPoly>& vars);

// x_first + shift, ..., x_last + shift.  Empty when last < first.
std::vector<GradedPoly> var_block(int first, int last, const GradedPoly& shift = GradedPoly());

// epsilon_{n-k}(a) == sum_i (-1)^i C(k+i, i) (s y)^i epsilon_{n-k-i}(a + s y)
// for a = (x_1..x_n) and s = +1 or -1.  Requires 0 <= k <= n.
bool shifted_elementary_identity(int n, int k, int sign = 1);

// ---------------------------------------------------------------------------
// Partially symmetric polynomials

class PartialInvariantRing {
 public:
  // blocks: a composition of r into positive parts.
  explicit PartialInvariantRing(std::vector<int> blocks);

  int rank() const { return r_; }
  const std::vector<int>& blocks() const { return blocks_; }
  // First variable index of block j (0-based j).
  int block_start(size_t j) const;
  std::vector<GradedPoly> block_vars(size_t j) const;

  // Invariance under the simple transpositions inside each block.
  bool contains(const GradedPoly& p) const;
  // epsilon_p(block j) for every block and 1 <= p <= block size.
  std::vector<GradedPoly> generators() const;
  // True when p reduces to zero by subtracting monomials in the block
  // elementary symmetric polynomials (with coefficients in Q[y]).  This is
  // the constructive form of "the generators generate".
  bool generated_by_blocks(const GradedPoly& p) const;
  std::string str() const;  // "R_(2,1)"

 private:
  std::vector<int> blocks_;
  int r_ = 0;
};

// The block sizes after rho^{i_k} (last block moves to the front) or
// rho^{-i_1} (first block moves to the back).
std::vector<int> rotate_blocks(const std::vector<int>& blocks, int sign);

// rho^{i_k} applied to epsilon_p of block j (0-based) of R_{i1..ik}, written
// out with the block formula: blocks other than the last are shifted by
// i_k, the last block becomes epsilon_p(x_1 - y, ..., x_{i_k} - y) expanded
// as sum_j (-y)^j C(i_k - p + j, j) epsilon_{p-j}(x_1..x_{i_k}).
GradedPoly rho_power_image(const std::vector<int>& blocks, size_t j, int p);

struct SingularCheck {
  bool pass = true;
  std::string witness;
};

// Ring-level check of the twisting isomorphisms.  sign = +1: rho^{i_k} sends
// every generator of R_{i1..ik} into R_{ik i1..i_{k-1}}, rho^{-i_k} sends it
// back, and every generator of the target has its preimage in the source;
// the block formula of rho_power_image agrees with the direct action.
// sign = -1: the same for rho^{-i_1} and R_{i2..ik i1}.
SingularCheck twist_ring_check(const std::vector<int>& blocks, int sign);

// ---------------------------------------------------------------------------
// 1-morphisms: signed colour words acting on a weight on their right.

// Letters are +i (E_i) and -i (E_{-i}), 1 <= i <= n, leftmost first.
using ColourWord = std::vector<int>;

// The weight lambda + alpha_i (or - alpha_i) reached by one letter, with
// alpha_n = e_n - e_1.
Composition apply_letter(int letter, const Composition& lambda);
// False when some intermediate weight has a negative entry.
bool word_defined(const ColourWord& w, const Composition& lambda);
// Total grading shift of the image of w 1_lambda: the shifts
// 1 + k_{i-1} + k_i - k_{i+1} and 1 - k_i for i < n, and
// A_n = n - (r + k_1) - (k_1 + ... + k_{n-2}), B_n = k_1 + ... + k_{n-1}.
int word_shift(const ColourWord& w, const Composition& lambda);
// lambda-bar_i = lambda_i - lambda_{i+1}, cyclically.
int lambda_bar(const Composition& lambda, int i);

// ---------------------------------------------------------------------------
// Colour-n generating 2-morphisms

enum class ColourNKind {
  CupRight,        // 1_lambda -> E_{-n} E_n 1_lambda
  CupLeft,         // 1_lambda -> E_n E_{-n} 1_lambda
  CapRight,        // E_{-n} E_n 1_lambda -> 1_lambda
  CapLeft,         // E_n E_{-n} 1_lambda -> 1_lambda
  DotUp,           // E_n 1_lambda
  DotDown,         // E_{-n} 1_lambda
  CrossUpNN,       // E_n E_n
  CrossDownNN,     // E_{-n} E_{-n}
  CrossUpNJ,       // E_n E_j -> E_j E_n, j distant from n
  CrossUpJN,       // E_j E_n -> E_n E_j
  CrossDownNJ,     // E_{-n} E_{-j} -> E_{-j} E_{-n}
  CrossDownJN,     // E_{-j} E_{-n} -> E_{-n} E_{-j}
  CrossUp1N,       // E_1 E_n -> E_n E_1
  CrossUpN1,       // E_n E_1 -> E_1 E_n
  CrossDown1N,     // E_{-1} E_{-n} -> E_{-n} E_{-1}
  CrossDownN1,     // E_{-n} E_{-1} -> E_{-1} E_{-n}
  CrossUpNPrev,    // E_n E_{n-1} -> E_{n-1} E_n
  CrossUpPrevN,    // E_{n-1} E_n -> E_n E_{n-1}
  CrossDownNPrev,  // E_{-n} E_{-(n-1)} -> E_{-(n-1)} E_{-n}
  CrossDownPrevN,  // E_{-(n-1)} E_{-n} -> E_{-n} E_{-(n-1)}
};

std::vector<ColourNKind> all_colour_n_kinds();
std::string colour_n_kind_str(ColourNKind k);
// Inverse of colour_n_kind_str; throws std::invalid_argument.
ColourNKind parse_colour_n_kind(const std::string& s);

struct ColourNImage {
  ColourNKind kind{};
  Composition lambda;
  int a1 = 0, a2 = 0, j = 0;
  ColourWord source, target;
  bool twist_model = false;  // dots: single factor, twist model
  GradedPoly input;          // the element the map is evaluated on
  // Every displayed expression for the image; a map with two displayed
  // expressions is correct only if they agree.
  std::vector<GradedPoly> forms;
  // The {s} written next to some crossing images.  It is a degree offset
  // of the map: it contributes -s to the measured degree.
  int annotation = 0;

  bool forms_agree() const;
  // deg(output) - deg(input), with deg = 2 * (polynomial degree) + shift of
  // the 1-morphism; nullopt if some form is inhomogeneous.
  std::optional<int> measured_degree() const;
  std::string str() const;
};

// Precondition: lambda has n >= 3 entries summing to r >= 2, the source and
// target words are defined on lambda, exponents are nonnegative, and j is a
// colour with 2 <= j <= n-2 for the distant crossings (ignored otherwise).
// Throws std::invalid_argument otherwise.
ColourNImage fprime_colour_n(ColourNKind kind, const Composition& lambda, int a1 = 0, int a2 = 0,
                             int j = 0);
// The generator degree from the table of the categorified quantum group at
// colour n: 1 + lambda-bar_n for the right cup/cap, 1 - lambda-bar_n for the
// left ones, 2 for dots, -2 for the (n,n) crossings, 1 for crossings with an
// adjacent colour and 0 for a distant colour.
int expected_degree(ColourNKind kind, const Composition& lambda);
// Source and target words of the kind.
ColourWord kind_source(ColourNKind kind, int n, int j = 0);
ColourWord kind_target(ColourNKind kind, int n, int j = 0);
bool kind_has_two_forms(ColourNKind kind);

// Renders a free-model polynomial as a sum of "left (x) right" terms.
std::string free_model_str(const GradedPoly& p, int r);

// ---------------------------------------------------------------------------
// Bubbles and zig-zags of colour n

enum class Orientation { Clockwise, CounterClockwise };

// Degree of the bubble with m dots: 2(m + 1 - lambda-bar_n) clockwise,
// 2(m + 1 + lambda-bar_n) counter-clockwise.
int bubble_degree(const Composition& lambda, Orientation o, int m);
// cap o (m dots) o cup on the unit, with the dots on the strand given by
// `dots_on_right`.  The cups leave a scalar of R_lambda on the right which
// the caps treat bimodule-linearly.
GradedPoly bubble_value_n(const Composition& lambda, Orientation o, int m, bool dots_on_right = true);

enum class ZigZag {
  UpLeft,     // (id E_n (x) cap-right) o (cup-left (x) id E_n)
  UpRight,    // (cap-left (x) id E_n) o (id E_n (x) cup-right)
  DownLeft,   // (id E_{-n} (x) cap-left) o (cup-right (x) id E_{-n})
  DownRight,  // (cap-right (x) id E_{-n}) o (id E_{-n} (x) cup-left)
};
std::string zigzag_str(ZigZag z);
// The zig-zag composite evaluated on the bimodule generator 1 (x) 1, in the
// twist model; biadjointness says the result is 1.  Throws
// std::invalid_argument if the strand is not defined on lambda.
GradedPoly zigzag_value(ZigZag z, const Composition& lambda);

// ---------------------------------------------------------------------------
// END(1_r): box and bubble images

// symbol: "box_y" or "bubble<j>" for a colour 1 <= j <= n (the j-bubble of
// degree two at the weight (1^r)).  Throws std::invalid_argument otherwise.
GradedPoly end_ring_image(const std::string& symbol, int r, int n);
// Image of sum_{j<r} j-bubble - r-bubble + n-bubble + box_y.  With
// composite_n_bubble the n-bubble is evaluated as a colour-n composite
// instead of being read off the table.
GradedPoly expy_relation_image(int r, int n, bool composite_n_bubble);
// The image of box_i under the functor to the Schur side, pushed to the
// polynomial ring: -sum_{j=i}^{r-1} j-bubble + r-bubble.
GradedPoly sigma_box_image(int i, int r, int n);
// Both paths of the commuting triangle on box_i (i in 1..r) or box_y
// (i = 0): the Soergel functor applied to the box, evaluated on 1, versus
// sigma_box_image (or y).
SingularCheck triangle_check(int i, int r, int n);

}  // namespace affcat
