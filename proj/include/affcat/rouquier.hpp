#pragma once

// Rouquier complexes of extended affine braids.
//
//   F(s_i)      = R{2}  -> B_i          in degrees -1, 0   (startdot)
//   F(s_i^-1)   = B_i{-2} -> R{-2}      in degrees 0, 1    (enddot)
//   F(rho^{+-1}) = B_rho^{+-1}          in degree 0
//
// Words are sent to tensor products.  Objects of SoergelObject already carry
// the {-1} of each unoriented letter, so B_i is the letter i with shift 1
// and B_i{-2} is the letter i with shift -1.

#include <optional>
#include <string>
#include <vector>

#include "affcat/hecke.hpp"
#include "affcat/soergel.hpp"
#include "affcat/weyl.hpp"

namespace affcat {

class BimComplex {
 public:
  // The zero complex.
  explicit BimComplex(int r = 3) : r_(r) {}
  // The complex R in degree 0.
  static BimComplex unit(int r);

  int rank() const { return r_; }
  int lowest() const { return lo_; }
  int highest() const { return lo_ + static_cast<int>(terms_.size()) - 1; }
  // Summands in cohomological degree k (empty outside [lowest, highest]).
  const std::vector<SoergelObject>& terms(int k) const;
  // Entry of d^k from summand s of degree k to summand t of degree k + 1.
  const std::optional<Morphism>& entry(int k, size_t t, size_t s) const;

  // Building blocks.  add_term appends a summand to degree k and returns
  // its index; set_entry fills a differential entry.
  size_t add_term(int k, const SoergelObject& obj);
  void set_entry(int k, size_t t, size_t s, const Morphism& m);

  std::string str() const;

 private:
  void ensure(int k);
  int r_ = 3;
  int lo_ = 0;
  std::vector<std::vector<SoergelObject>> terms_;
  // d_[k - lo_][t][s]
  std::vector<std::vector<std::vector<std::optional<Morphism>>>> d_;
};

BimComplex braid_complex(int r, const GenWord& word);
BimComplex braid_complex(int r, const std::string& word);
// Total complex with d = dC (x) 1 + (-1)^p 1 (x) dD on C^p (x) D^q.
BimComplex tensor(const BimComplex& a, const BimComplex& b);

struct D2Result {
  bool pass = true;
  std::string witness;  // offending degree, entry and basis tag
};
D2Result verify_d2(const BimComplex& c);
// Every differential entry has degree 0 once the summand shifts are taken
// into account: deg(m) = shift(source) - shift(target).
D2Result verify_degrees(const BimComplex& c);

// Alternating sum of classes: [R{t}] = q^t, [B_i{t}] = q^{t+1} b_i,
// [B_rho^{+-1}{t}] = q^t T_rho^{+-1}, letterwise.
HeckeElement euler_class(const BimComplex& c);

// The image of a braid word under s_i -> q^2 T_{s_i}^-1, s_i^-1 -> q^-2 T_{s_i},
// rho^k -> T_rho^k, computed in the Hecke algebra without any complex.
HeckeElement expected_euler_class(int r, const GenWord& word);

}  // namespace affcat
