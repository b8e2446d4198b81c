#pragma once

// The affine q-Schur algebra S(n, r), realised through Green's tensor space
// V^{(x) r}, V = span{e_t : t in Z}.  Elements are formal Q(q)-combinations
// of generator words; two elements are compared by their action on pure
// tensors (the equality oracle), never by a normal form.
//
// Tensor action (indices of E, K taken mod n):
//   E_i e_{t+1} = e_t and E_{-i} e_t = e_{t+1} when i = t mod n (else 0),
//   K_i e_t = q e_t when i = t mod n, R e_t = e_{t+1},
// extended to V^{(x) r} by Delta(E_i) = E_i (x) K_i K_{i+1}^{-1} + 1 (x) E_i and
// Delta(E_{-i}) = K_i^{-1} K_{i+1} (x) E_{-i} + E_{-i} (x) 1.  So the K factors
// of E_i act on the tensor positions to the right of the changed one, those of
// E_{-i} on the positions to its left.
//
// Note on the oracle window: a word acts on e_t by a sum of terms
// c(t mod n) e_{t + d(t mod n)}, where both the coefficient and the offset
// depend only on the residues of t.  Any window of width >= n therefore
// already decides equality; the wider default window is kept as a margin.

#include <map>
#include <string>
#include <vector>

#include "affcat/arith.hpp"

namespace affcat {

using Composition = std::vector<int>;

// All lambda in N^n with sum r, in lexicographically decreasing order.
std::vector<Composition> compositions(int n, int r);
std::string composition_str(const Composition& c);  // "(1,1,1,0)"
// (1^r) padded with zeros to length n.
Composition one_r(int n, int r);

struct SchurLetter {
  enum Kind { E, K, R, Idem };
  Kind kind = E;
  int index = 0;       // E: +-i; K: i
  int exponent = 1;    // K, R: +-1
  Composition weight;  // Idem only

  friend bool operator==(const SchurLetter& a, const SchurLetter& b) {
    return a.kind == b.kind && a.index == b.index && a.exponent == b.exponent &&
           a.weight == b.weight;
  }
  friend bool operator<(const SchurLetter& a, const SchurLetter& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.index != b.index) return a.index < b.index;
    if (a.exponent != b.exponent) return a.exponent < b.exponent;
    return a.weight < b.weight;
  }

  static SchurLetter e(int signed_index) { return {E, signed_index, 1, {}}; }
  static SchurLetter k(int i, int exp = 1) { return {K, i, exp, {}}; }
  static SchurLetter shift(int exp = 1) { return {R, 0, exp, {}}; }
  static SchurLetter idem(Composition w) { return {Idem, 0, 1, std::move(w)}; }
};

// A product of letters, read left to right; it acts on tensors starting
// from the rightmost letter.
using SchurWord = std::vector<SchurLetter>;

// E_{s_1} E_{s_2} ... for signed indices s_k.
SchurWord e_word(const std::vector<int>& signed_indices);
std::string word_str(const SchurWord& w);
// Number of E, K and R letters (idempotents are free).
int word_length(const SchurWord& w);

class SchurElement {
 public:
  using Terms = std::map<SchurWord, RatQ>;

  SchurElement() = default;
  explicit SchurElement(const SchurWord& w, const RatQ& c = RatQ(1)) { add(w, c); }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add(const SchurWord& w, const RatQ& c);
  int max_length() const;

  SchurElement operator-() const;
  SchurElement& operator+=(const SchurElement& o);
  SchurElement& operator-=(const SchurElement& o);
  friend SchurElement operator+(SchurElement a, const SchurElement& b) { return a += b; }
  friend SchurElement operator-(SchurElement a, const SchurElement& b) { return a -= b; }
  // Formal product: concatenation of words.
  friend SchurElement operator*(const SchurElement& a, const SchurElement& b);
  friend SchurElement operator*(const RatQ& c, const SchurElement& a);
  friend bool operator==(const SchurElement& a, const SchurElement& b) { return a.t_ == b.t_; }

  std::string str() const;

 private:
  Terms t_;
};

inline std::ostream& operator<<(std::ostream& os, const SchurElement& x) { return os << x.str(); }

// Parses words like "E1 E-4 K3^-1 R^-1 1[(1,1,1,0)]" ("1" alone is the empty
// word) and elements like "E1 E-1 - (q + q^-1)*1[(2,0,1,0)] + q*E2".
SchurWord parse_schur_word(int n, const std::string& text);
SchurElement parse_schur_element(int n, const std::string& text);

using Tensor = std::vector<int>;

class TensorVector {
 public:
  using Terms = std::map<Tensor, RatQ>;

  TensorVector() = default;
  static TensorVector pure(const Tensor& t, const RatQ& c = RatQ(1));

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add(const Tensor& t, const RatQ& c);
  TensorVector& operator+=(const TensorVector& o);
  TensorVector& operator-=(const TensorVector& o);
  friend TensorVector operator*(const RatQ& c, const TensorVector& v);
  friend bool operator==(const TensorVector& a, const TensorVector& b) { return a.t_ == b.t_; }

  std::string str() const;  // "e(1,2,3) + q*e(0,2,3)"

 private:
  Terms t_;
};

inline std::ostream& operator<<(std::ostream& os, const TensorVector& v) { return os << v.str(); }

// Parses "(1,2,3)" as a pure tensor, or a sum "e(1,2,3) - q*e(0,2,3)".
TensorVector parse_tensor(const std::string& text);

Composition weight_of(int n, const Tensor& t);
TensorVector act(int n, const SchurLetter& l, const TensorVector& v);
TensorVector act(int n, const SchurWord& w, const TensorVector& v);
TensorVector act(int n, const SchurElement& x, const TensorVector& v);
TensorVector weight_project(int n, const Composition& lambda, const TensorVector& v);

// Factorwise form <e_s, e_t> = delta_{s,t}.
RatQ bilinear_form(const TensorVector& v, const TensorVector& w);

// n + 2 * (longest word) + 2.
int default_window(int n, const SchurElement& x, const SchurElement& y);

// x and y act identically on every pure tensor with entries in [0, window).
// When every word of x and y ends in an idempotent only tensors of those
// weights are visited (both sides vanish elsewhere).  On failure the
// offending tensor is written to *witness.
bool equal(int n, int r, const SchurElement& x, const SchurElement& y, int window,
           std::string* witness = nullptr);

// The anti-involution rho: E_i -> q K_i K_{i+1}^{-1} E_{-i},
// E_{-i} -> q K_i^{-1} K_{i+1} E_i, K_i -> K_i, R -> R^{-1}, 1_l -> 1_l.
SchurElement rho_antiinv(int n, const SchurElement& x);

// The embedding of the extended affine Hecke algebra into 1_r S(n,r) 1_r.
// form selects between the two displayed expressions where two exist.
SchurElement sigma_b(int n, int r, int i, int form = 0);
SchurElement sigma_trho(int n, int r, int form = 0);
SchurElement sigma_trho_inv(int n, int r, int form = 0);

// iota_n : S(n,r) -> S(n+1,r).  Words without a rightmost idempotent are
// expanded over Lambda(n,r) first.  Throws std::invalid_argument on R.
SchurElement iota(int n, int r, const SchurElement& x);

struct SchurRelation {
  std::string id;
  SchurElement lhs, rhs;
};

// Every relation of the presentation of S(n, r) (n > r), instantiated over
// all colours and all lambda in Lambda(n, r) for which some word of the
// relation stays inside Lambda(n, r).
std::vector<SchurRelation> presentation_relations(int n, int r);

}  // namespace affcat
