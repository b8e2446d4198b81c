#pragma once

// The extended affine Hecke algebra over Q(q) in the basis T_w.
//
// Conventions: T_s^2 = (q^2 - 1) T_s + q^2, T_w = T_rho^k T_{w'} for
// w = rho^k w', and b_i = C'_{s_i} = q^{-1}(1 + T_{s_i}).

#include <map>
#include <string>

#include "affcat/arith.hpp"
#include "affcat/weyl.hpp"

namespace affcat {

class HeckeElement {
 public:
  using Support = std::map<AffinePermutation, RatQ>;

  explicit HeckeElement(int r = 1) : r_(r) {}
  static HeckeElement basis(const AffinePermutation& w, const RatQ& c = RatQ(1));
  static HeckeElement scalar(int r, const RatQ& c);
  static HeckeElement identity(int r) { return scalar(r, RatQ(1)); }

  int rank() const { return r_; }
  const Support& support() const { return s_; }
  bool is_zero() const { return s_.empty(); }
  RatQ coeff(const AffinePermutation& w) const;
  // The element is c * T_e for a scalar c (used by the parser).
  bool is_scalar() const;

  void add(const AffinePermutation& w, const RatQ& c);
  HeckeElement operator-() const;
  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);
  friend HeckeElement operator*(const RatQ& c, const HeckeElement& a);
  friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
    return a.r_ == b.r_ && a.s_ == b.s_;
  }
  friend bool operator!=(const HeckeElement& a, const HeckeElement& b) { return !(a == b); }

  std::string str() const;

 private:
  int r_;
  Support s_;
};

inline std::ostream& operator<<(std::ostream& os, const HeckeElement& h) { return os << h.str(); }

// T_w times T_{sigma_i} (from the right), by the rank-one quadratic rule.
HeckeElement mul_simple_right(const HeckeElement& h, int i);
HeckeElement mul(const HeckeElement& a, const HeckeElement& b);

HeckeElement T(const AffinePermutation& w);
HeckeElement T_inverse_simple(int r, int i);  // q^{-2}(T_s - (q^2 - 1))
HeckeElement kl_gen(int r, int i);            // b_i
HeckeElement bar(const HeckeElement& h);

// Memo table for Kazhdan-Lusztig elements C'_w of the non-extended group.
class KLTable {
 public:
  explicit KLTable(int r) : r_(r) {}
  int rank() const { return r_; }
  const HeckeElement* find(const AffinePermutation& w) const;
  void store(const AffinePermutation& w, HeckeElement h);
  size_t size() const { return memo_.size(); }

 private:
  int r_;
  std::map<AffinePermutation, HeckeElement> memo_;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// C'_w = T_rho^k C'_{w'} for w = rho^k w'.  Throws BudgetExceeded when
// length(w) > budget.
HeckeElement kl_basis(const AffinePermutation& w, int budget, KLTable& table);

// mu(z, w): coefficient of q^{-1} in the coefficient of q^{-l(z)} T_z in C'_w.
mpz_class kl_mu(const HeckeElement& cw, const AffinePermutation& z);

// Image of a braid word (letters s_i^{+-1}, rho^k) under sigma_i -> T_{sigma_i},
// rho -> T_rho.
HeckeElement braid_image(int r, const GenWord& word);

// Parses e.g. "T[s1 rho] + q^2*T[e] - (q - 1)*b[2]*C[s1 s2]".  C[...] needs a
// KL table; pass nullptr to reject it.
HeckeElement parse_hecke(int r, const std::string& text, KLTable* table = nullptr,
                         int budget = 6);

// "T[rho^k s_i1 ... s_il]" or "T[e]".
std::string basis_str(const AffinePermutation& w);

}  // namespace affcat
