#pragma once

// The extended affine Weyl group of type A_{r-1}, realised as bijections
// f : Z -> Z with f(i + r) = f(i) + r.  An element is stored by its window
// [f(1), ..., f(r)].
//
// Generators: sigma_i swaps i and i+1 (sigma_r swaps r and r+1, so its
// window has f(1) = 0 and f(r) = r+1), rho is the shift f(i) = i+1, and the
// translation t_j adds r at position j.  Composition is (u v)(i) = u(v(i)),
// and words are read left to right as products.

#include <string>
#include <vector>

#include "affcat/arith.hpp"

namespace affcat {

class AffinePermutation {
 public:
  AffinePermutation() = default;
  explicit AffinePermutation(int r);  // identity of rank r

  static AffinePermutation from_window(std::vector<long> window);
  static AffinePermutation sigma(int r, int i);
  static AffinePermutation rho(int r, long k = 1);
  static AffinePermutation translation(int r, int j);

  int rank() const { return static_cast<int>(w_.size()); }
  const std::vector<long>& window() const { return w_; }
  long operator()(long i) const;

  AffinePermutation inverse() const;
  friend AffinePermutation operator*(const AffinePermutation& u, const AffinePermutation& v);
  friend bool operator==(const AffinePermutation& a, const AffinePermutation& b) {
    return a.w_ == b.w_;
  }
  friend bool operator!=(const AffinePermutation& a, const AffinePermutation& b) {
    return !(a == b);
  }
  friend bool operator<(const AffinePermutation& a, const AffinePermutation& b) {
    return a.w_ < b.w_;
  }

  bool is_identity() const;
  // k with w = rho^k w', w' in the non-extended group.
  long rho_power() const;
  // Number of affine inversions (Shi's formula); rho has length 0.
  int length() const;
  // l(w sigma_i) < l(w).
  bool right_descent(int i) const;

  std::string str() const;  // window notation "[f(1), ..., f(r)]"

 private:
  std::vector<long> w_;
};

struct NormalForm {
  long k = 0;
  std::vector<int> word;  // reduced word sigma_{i1} ... sigma_{il}
};

// w = rho^k sigma_{i1} ... sigma_{il} with a reduced word (greedy peeling of
// right descents).
NormalForm normal_form(const AffinePermutation& w);
AffinePermutation from_normal_form(int r, const NormalForm& nf);

// All elements of the non-extended affine Weyl group of length <= max_length,
// ordered by length.
std::vector<AffinePermutation> elements_up_to_length(int r, int max_length);

// One letter of a word in the generators.  kind: 's' (sigma_i), 'r' (rho),
// 't' (translation t_i); exponent is +-1 for s, any integer for rho, and +-1
// for t.
struct WordLetter {
  char kind = 's';
  int index = 0;
  long exponent = 1;
  friend bool operator==(const WordLetter& a, const WordLetter& b) {
    return a.kind == b.kind && a.index == b.index && a.exponent == b.exponent;
  }
};
using GenWord = std::vector<WordLetter>;

// Parses "rho s1 rho^-1 t2 e" (whitespace separated; "e" is the empty word).
GenWord parse_word(int r, const std::string& text);
std::string word_str(const GenWord& w);
AffinePermutation evaluate_word(int r, const GenWord& w);

// Level-zero gl_r weight: sum kappa_j eps_j + m delta.
struct GlWeight {
  std::vector<long> kappa;
  long m = 0;
  friend bool operator==(const GlWeight& a, const GlWeight& b) {
    return a.kappa == b.kappa && a.m == b.m;
  }
};

// eps_j -> eps_{f(j)}, with eps_{j + m r} = eps_j - m delta.
GlWeight act_weight(const AffinePermutation& w, const GlWeight& v);
// x_j -> x_{f(j)}, with x_{j + m r} = x_j - m y.
GradedPoly act_poly(const AffinePermutation& w, const GradedPoly& p);

}  // namespace affcat
