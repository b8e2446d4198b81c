#pragma once

// Exact coefficient arithmetic.
//
//  * Laurent  - integer Laurent polynomials in q.
//  * RatQ     - elements of Q(q) as reduced fractions of Laurent polynomials.
//  * GradedPoly - polynomials over Q in y, x1, ..., xr, all of degree 2.
//
// Polynomial variables are numbered: 0 is y, k >= 1 is x_k.  Exponent vectors
// are stored with trailing zeros removed, so that std::vector's lexicographic
// comparison coincides with the lexicographic order on (y, x1, x2, ...).

#include <gmpxx.h>

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace affcat {

class Laurent {
 public:
  Laurent() = default;
  Laurent(long c);  // NOLINT(google-explicit-constructor): constants embed
  explicit Laurent(const mpz_class& c);

  static Laurent monomial(const mpz_class& c, int e);
  static Laurent q(int e = 1) { return monomial(1, e); }
  // Coefficients listed from exponent lo upward.
  static Laurent from_coeffs(int lo, std::vector<mpz_class> coeffs);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  // Lowest/highest exponent; undefined (0) for the zero polynomial.
  int low() const { return lo_; }
  int high() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  mpz_class coeff(int e) const;
  const std::vector<mpz_class>& coeffs() const { return c_; }

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.lo_ == b.lo_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  Laurent shifted(int e) const;  // multiply by q^e
  Laurent bar() const;           // q -> q^-1
  Laurent scaled(const mpz_class& s) const;
  // Exact division by an integer (all coefficients divisible).
  Laurent divided(const mpz_class& s) const;
  mpz_class content() const;  // gcd of coefficients, nonnegative
  mpz_class leading() const { return c_.empty() ? mpz_class(0) : c_.back(); }

  std::string str() const;

 private:
  int lo_ = 0;
  std::vector<mpz_class> c_;
  void trim();
};

// An element of Q(q).  Canonical form: num / den where den is an ordinary
// polynomial with nonzero constant term and positive leading coefficient,
// num and den are coprime, and the integer content of (num, den) is 1.
class RatQ {
 public:
  RatQ() = default;
  RatQ(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  RatQ(const Laurent& n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  RatQ(const Laurent& n, const Laurent& d);
  static RatQ q(int e = 1) { return RatQ(Laurent::q(e)); }
  static RatQ rational(const mpq_class& v);

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_one(); }
  bool is_one() const { return is_laurent() && num_.is_one(); }

  RatQ operator-() const;
  friend RatQ operator+(const RatQ& a, const RatQ& b);
  friend RatQ operator-(const RatQ& a, const RatQ& b);
  friend RatQ operator*(const RatQ& a, const RatQ& b);
  friend RatQ operator/(const RatQ& a, const RatQ& b);
  RatQ& operator+=(const RatQ& o) { return *this = *this + o; }
  RatQ& operator-=(const RatQ& o) { return *this = *this - o; }
  RatQ& operator*=(const RatQ& o) { return *this = *this * o; }
  friend bool operator==(const RatQ& a, const RatQ& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatQ& a, const RatQ& b) { return !(a == b); }

  RatQ inverse() const;
  RatQ pow(long e) const;
  RatQ bar() const;

  std::string str() const;
  static RatQ parse(const std::string& text);

 private:
  Laurent num_;
  Laurent den_ = Laurent(1);
  void canonicalize();
};

inline std::ostream& operator<<(std::ostream& os, const Laurent& l) { return os << l.str(); }
inline std::ostream& operator<<(std::ostream& os, const RatQ& v) { return os << v.str(); }

// The q-integer [a] = (q^a - q^-a)/(q - q^-1).
RatQ qint(long a);

using Exponent = std::vector<int>;

class GradedPoly {
 public:
  using TermMap = std::map<Exponent, mpq_class>;

  GradedPoly() = default;
  GradedPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit GradedPoly(const mpq_class& c);

  static GradedPoly var(int k);
  static GradedPoly y() { return var(0); }
  static GradedPoly x(int i) { return var(i); }
  static GradedPoly monomial(Exponent e, const mpq_class& c);

  const TermMap& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  mpq_class constant_term() const;
  mpq_class coeff(const Exponent& e) const;
  // Largest variable index that occurs (0 when only y or constants).
  int max_var() const;

  GradedPoly operator-() const;
  GradedPoly& operator+=(const GradedPoly& o);
  GradedPoly& operator-=(const GradedPoly& o);
  GradedPoly& operator*=(const mpq_class& s);
  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  friend GradedPoly operator*(GradedPoly a, const mpq_class& s) { return a *= s; }
  friend GradedPoly operator*(const mpq_class& s, GradedPoly a) { return a *= s; }
  friend bool operator==(const GradedPoly& a, const GradedPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const GradedPoly& a, const GradedPoly& b) { return !(a == b); }
  friend bool operator<(const GradedPoly& a, const GradedPoly& b) { return a.t_ < b.t_; }

  GradedPoly pow(unsigned e) const;

  // Grading with deg y = deg x_k = 2.  degree() is the maximum over terms
  // (-1 for the zero polynomial).
  int degree() const;
  bool is_homogeneous() const;
  GradedPoly homogeneous_component(int d) const;

  // Ring homomorphism sending variable k to images[k]; variables with
  // k >= images.size() are fixed.
  GradedPoly substitute(const std::vector<GradedPoly>& images) const;
  GradedPoly swap_vars(int a, int b) const;

  std::string str() const;
  static GradedPoly parse(const std::string& text);

 private:
  TermMap t_;
  void add_term(const Exponent& e, const mpq_class& c);
};

inline std::ostream& operator<<(std::ostream& os, const GradedPoly& p) { return os << p.str(); }

// Exact multivariate division; throws std::domain_error if d does not divide p.
GradedPoly exact_divide(const GradedPoly& p, const GradedPoly& d);

// The affine Weyl group action on R = Q[y][x1..xr] for the simple reflections
// and powers of rho.  (Arbitrary elements act through weyl::act_poly.)
GradedPoly sigma_act(int i, int r, const GradedPoly& p);
GradedPoly rho_act(int k, int r, const GradedPoly& p);
// Image of x_j for any integer j: x_{j + m r} = x_j - m y.
GradedPoly affine_x(long j, int r);

// X_i = x_{i+1} - x_i for i < r, X_r = x_1 - x_r - y.
GradedPoly simple_root(int i, int r);
// b_i = x_{i+1} for i < r, b_r = x_1: the second basis vector of R over R^{sigma_i}.
GradedPoly basis_b(int i, int r);
// Demazure operator (p - sigma_i p) / X_i.
GradedPoly demazure(int i, int r, const GradedPoly& p);
// p = A + b_i B with A, B sigma_i-invariant (B = demazure(i, p)).
std::pair<GradedPoly, GradedPoly> split_invariant(int i, int r, const GradedPoly& p);
bool is_sigma_invariant(int i, int r, const GradedPoly& p);

// Binomial coefficient as a GMP integer (0 when k < 0 or k > n).
mpz_class binomial(long n, long k);

}  // namespace affcat
