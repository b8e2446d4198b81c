#pragma once

// Extended Soergel bimodules of affine type A_{r-1}.
//
// An object is a word in the letters 1..r (the bimodules B_i{-1}) and the
// oriented letters + and - (the twisted bimodules B_rho and B_rho^{-1}),
// together with a grading shift.  The tensor product of such a word is a
// free left R-module of rank 2^m, m the number of unoriented letters, and
// BimElement stores elements in that left basis.
//
// Slot model.  A pure tensor is written as a list of polynomials
//
//     v_0 | letter | ... | letter | v_1 | ... | v_m
//
// where slot 0 is the far left and slot j sits immediately to the right of
// the j-th unoriented letter.  A polynomial standing directly to the right
// of an oriented letter is moved to the left across it: across + it becomes
// rho(p), across - it becomes rho^{-1}(p).  Canonical form pushes every
// coefficient into slot 0 by splitting slot j as A + b_c B with A, B
// sigma_c-invariant (c the colour of letter j), so each remaining slot holds
// either 1 or b_c (b_c = x_{c+1}, b_r = x_1).  A basis tag is the bitmask of
// slots holding b_c; bit j-1 belongs to slot j.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "affcat/arith.hpp"

namespace affcat {

constexpr int kPlus = -1;
constexpr int kMinus = -2;

struct SoergelObject {
  int r = 3;
  std::vector<int> letters;  // 1..r, kPlus or kMinus
  int shift = 0;

  SoergelObject() = default;
  SoergelObject(int rank, std::vector<int> word, int grading_shift = 0);

  int unoriented() const;
  // Net twist (#+) - (#-).
  int twist() const;
  size_t size() const { return letters.size(); }
  std::string str() const;  // "1,+,3" (plus "{s}" when shifted); "()" if empty
  friend bool operator==(const SoergelObject& a, const SoergelObject& b) {
    return a.r == b.r && a.letters == b.letters && a.shift == b.shift;
  }
};

// Accepts "1,+,3", "1 + 3", "()" or the empty string.
SoergelObject parse_object(int r, const std::string& text);
std::string letter_str(int letter);
// Colour arithmetic modulo r, with values in 1..r.
int wrap_colour(int c, int r);
bool adjacent_colours(int i, int j, int r);
bool distant_colours(int i, int j, int r);

class BimElement {
 public:
  using Tag = std::uint32_t;
  using Coords = std::map<Tag, GradedPoly>;
  // A pure tensor in slot form: m + 1 polynomials.
  using RawTerm = std::vector<GradedPoly>;

  BimElement() = default;
  explicit BimElement(SoergelObject obj) : obj_(std::move(obj)) {}

  static BimElement basis(const SoergelObject& obj, Tag tag, const GradedPoly& coef = GradedPoly(1));
  // Canonical form of a sum of pure tensors.  Linear and idempotent.
  static BimElement normalize(const SoergelObject& obj, const std::vector<RawTerm>& raw);

  const SoergelObject& object() const { return obj_; }
  const Coords& coords() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  GradedPoly coeff(Tag t) const;

  // Adds coef * (basis tag); zero coefficients are dropped.
  void add(Tag t, const GradedPoly& coef);
  BimElement& operator+=(const BimElement& o);
  BimElement& operator-=(const BimElement& o);
  friend BimElement operator+(BimElement a, const BimElement& b) { return a += b; }
  friend BimElement operator-(BimElement a, const BimElement& b) { return a -= b; }
  BimElement operator-() const;
  friend BimElement operator*(const mpq_class& s, const BimElement& e);
  friend bool operator==(const BimElement& a, const BimElement& b) {
    return a.obj_.letters == b.obj_.letters && a.c_ == b.c_;
  }
  friend bool operator!=(const BimElement& a, const BimElement& b) { return !(a == b); }

  BimElement left_mul(const GradedPoly& p) const;
  BimElement right_mul(const GradedPoly& p) const;

  // Degree of the term coef * tag: deg(coef) + 2 #bits - #unoriented + shift,
  // with every variable of degree 2.  nullopt unless all terms are
  // homogeneous of one common degree (or the element is zero).
  std::optional<int> degree() const;
  static int tag_degree(const SoergelObject& obj, Tag t);

  std::string str() const;

 private:
  SoergelObject obj_;
  Coords c_;
};

std::ostream& operator<<(std::ostream& os, const BimElement& e);

// Parses a sum of pure tensors for an object: pure tensors are separated by
// ';' and slots by '|', e.g. "x1 | x2; -y | 1" for an object with one
// unoriented letter.  Throws ParseError on malformed input.
BimElement parse_element(const SoergelObject& obj, const std::string& text);

// ---------------------------------------------------------------------------
// Generators and morphisms

enum class GenKind {
  EndDot, StartDot, Merge, Split, V4, V6,
  CapPlus, CapMinus, CupPlus, CupMinus,
  M4UR, M4UL, M4DR, M4DL,
  BoxX, BoxY,
};

struct Generator {
  GenKind kind = GenKind::BoxY;
  int i = 0;
  int j = 0;
  friend bool operator<(const Generator& a, const Generator& b) {
    return std::tie(a.kind, a.i, a.j) < std::tie(b.kind, b.i, b.j);
  }
};

// Source and target words; throws std::invalid_argument for bad colours
// (4-valent vertices need distant colours, 6-valent ones adjacent colours).
std::vector<int> gen_source(int r, const Generator& g);
std::vector<int> gen_target(int r, const Generator& g);
int gen_degree(const Generator& g);
std::string gen_str(const Generator& g);

// Applies id ⊗ g ⊗ id with g acting on the letters starting at `pos`.
// Throws std::invalid_argument if those letters do not match g's source.
BimElement apply_gen(const Generator& g, size_t pos, const BimElement& e);

// Images of the local basis tags of g's source, as elements of g's target.
// Cached; safe to call from several threads.
const std::vector<BimElement>& local_images(int r, const Generator& g);

// A bimodule map given by the images of bimodule generators: `gens` are
// elements of `source` that generate it as a bimodule, `images` their
// images.  Returns the image of every left basis tag.  Throws
// std::runtime_error if the generators do not generate.
std::vector<BimElement> extend_bimodule_map(const SoergelObject& source, const SoergelObject& target,
                                            const std::vector<BimElement>& gens,
                                            const std::vector<BimElement>& images);

class Morphism {
 public:
  Morphism() = default;

  static Morphism gen(int r, const Generator& g);
  static Morphism id(int r, std::vector<int> letters);
  static Morphism zero(int r, std::vector<int> source, std::vector<int> target);
  // a ∘ b: b first.  Throws std::invalid_argument on mismatch.
  static Morphism vcomp(const Morphism& a, const Morphism& b);
  // a ⊗ b, a on the left.
  static Morphism hcomp(const Morphism& a, const Morphism& b);
  static Morphism sum(const Morphism& a, const Morphism& b);
  static Morphism scale(const mpq_class& c, const Morphism& a);

  int rank() const;
  const std::vector<int>& source() const;
  const std::vector<int>& target() const;
  // Sum of generator degrees along any composition path (well defined for
  // homogeneous expressions; sums report the degree of their first summand).
  int degree() const;
  std::string str() const;

  BimElement apply(const BimElement& e, size_t pos = 0) const;

  friend Morphism operator*(const Morphism& a, const Morphism& b) { return vcomp(a, b); }
  friend Morphism operator+(const Morphism& a, const Morphism& b) { return sum(a, b); }
  friend Morphism operator-(const Morphism& a, const Morphism& b) {
    return sum(a, scale(-1, b));
  }
  friend Morphism operator*(const mpq_class& c, const Morphism& a) { return scale(c, a); }

  struct Node;

 private:
  explicit Morphism(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

BimElement apply_morphism(const Morphism& m, const BimElement& e);

// Grammar: vcomp(a,b) | hcomp(a,b) | enddot(i) | startdot(i) | merge(i) |
// split(i) | v4(i,j) | v6(i,j) | cap+ | cap- | cup+ | cup- | m4ur(i) |
// m4ul(i) | m4dr(i) | m4dl(i) | box(i) | box(y) | id(l) | id(l,l,...) | id().
Morphism parse_morphism(int r, const std::string& text);

// Compares two morphisms with equal source and target on every left basis
// tag of the source.  On failure, describes the first differing tag.
bool morphisms_equal(const Morphism& a, const Morphism& b, std::string* witness = nullptr);

// (sum x_i) e - e (sum x_i) == k y e for k the net twist of e's object.
bool twist_weight_check(const BimElement& e);

}  // namespace affcat
