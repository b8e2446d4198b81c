#include <stdexcept>
#include <sstream>

#include "affcat/arith.hpp"
#include "affcat/parse.hpp"

namespace affcat {

// ---------------------------------------------------------------- Laurent

Laurent::Laurent(long c) {
  if (c != 0) c_.push_back(mpz_class(c));
}

Laurent::Laurent(const mpz_class& c) {
  if (c != 0) c_.push_back(c);
}

Laurent Laurent::monomial(const mpz_class& c, int e) {
  Laurent l;
  if (c != 0) {
    l.lo_ = e;
    l.c_.push_back(c);
  }
  return l;
}

Laurent Laurent::from_coeffs(int lo, std::vector<mpz_class> coeffs) {
  Laurent l;
  l.lo_ = lo;
  l.c_ = std::move(coeffs);
  l.trim();
  return l;
}

bool Laurent::is_one() const { return lo_ == 0 && c_.size() == 1 && c_[0] == 1; }

mpz_class Laurent::coeff(int e) const {
  if (e < lo_ || e > high()) return 0;
  return c_[static_cast<size_t>(e - lo_)];
}

void Laurent::trim() {
  size_t first = 0;
  while (first < c_.size() && c_[first] == 0) ++first;
  if (first == c_.size()) {
    c_.clear();
    lo_ = 0;
    return;
  }
  size_t last = c_.size();
  while (c_[last - 1] == 0) --last;
  if (first > 0 || last < c_.size()) {
    c_ = std::vector<mpz_class>(c_.begin() + static_cast<long>(first),
                                c_.begin() + static_cast<long>(last));
    lo_ += static_cast<int>(first);
  }
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(lo_, o.lo_);
  int hi = std::max(high(), o.high());
  std::vector<mpz_class> c(static_cast<size_t>(hi - lo + 1));
  for (size_t k = 0; k < c_.size(); ++k) c[static_cast<size_t>(lo_ - lo) + k] += c_[k];
  for (size_t k = 0; k < o.c_.size(); ++k) c[static_cast<size_t>(o.lo_ - lo) + k] += o.c_[k];
  lo_ = lo;
  c_ = std::move(c);
  trim();
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return Laurent();
  std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Laurent::from_coeffs(a.lo_ + b.lo_, std::move(c));
}

Laurent Laurent::shifted(int e) const {
  Laurent r = *this;
  if (!r.is_zero()) r.lo_ += e;
  return r;
}

Laurent Laurent::bar() const {
  if (is_zero()) return *this;
  std::vector<mpz_class> c(c_.rbegin(), c_.rend());
  return from_coeffs(-high(), std::move(c));
}

Laurent Laurent::scaled(const mpz_class& s) const {
  if (s == 0) return Laurent();
  Laurent r = *this;
  for (auto& v : r.c_) v *= s;
  return r;
}

Laurent Laurent::divided(const mpz_class& s) const {
  Laurent r = *this;
  for (auto& v : r.c_) {
    if (!mpz_divisible_p(v.get_mpz_t(), s.get_mpz_t()))
      throw std::domain_error("Laurent::divided: not divisible");
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), s.get_mpz_t());
  }
  return r;
}

mpz_class Laurent::content() const {
  mpz_class g = 0;
  for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

std::string Laurent::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = high(); e >= lo_; --e) {
    mpz_class v = coeff(e);
    if (v == 0) continue;
    mpz_class a = abs(v);
    if (first) {
      if (v < 0) os << "-";
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

// ---------------------------------------------------------------- RatQ

namespace {

using QPoly = std::vector<mpq_class>;  // dense, index = exponent

void qtrim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_qpoly(const Laurent& l) {  // assumes l.low() == 0
  QPoly p;
  for (const auto& v : l.coeffs()) p.emplace_back(v);
  return p;
}

// Remainder of a modulo b over Q.
QPoly qmod(QPoly a, const QPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class f = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t k = 0; k < b.size(); ++k) a[off + k] -= f * b[k];
    a.pop_back();
    qtrim(a);
  }
  return a;
}

// Quotient of a by b over Q (exact division assumed).
QPoly qdiv(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) return {};
  QPoly quot(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class f = a.back() / b.back();
    size_t off = a.size() - b.size();
    quot[off] = f;
    for (size_t k = 0; k < b.size(); ++k) a[off + k] -= f * b[k];
    a.pop_back();
    qtrim(a);
  }
  return quot;
}

// Clears denominators and content; returns an integer primitive polynomial.
Laurent primitive_integer(const QPoly& p) {
  mpz_class l = 1;
  for (const auto& v : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  std::vector<mpz_class> c;
  for (const auto& v : p) {
    mpq_class s = v * l;
    c.push_back(s.get_num());
  }
  Laurent r = Laurent::from_coeffs(0, std::move(c));
  mpz_class g = r.content();
  if (g > 1) r = r.divided(g);
  return r;
}

Laurent integer_quotient(const Laurent& a, const Laurent& g) {
  QPoly q = qdiv(to_qpoly(a), to_qpoly(g));
  std::vector<mpz_class> c;
  for (const auto& v : q) {
    if (v.get_den() != 1) throw std::logic_error("integer_quotient: non-integral quotient");
    c.push_back(v.get_num());
  }
  return Laurent::from_coeffs(0, std::move(c));
}

}  // namespace

RatQ::RatQ(const Laurent& n, const Laurent& d) : num_(n), den_(d) { canonicalize(); }

RatQ RatQ::rational(const mpq_class& v) {
  return RatQ(Laurent(mpz_class(v.get_num())), Laurent(mpz_class(v.get_den())));
}

void RatQ::canonicalize() {
  if (den_.is_zero()) throw std::domain_error("RatQ: zero denominator");
  if (num_.is_zero()) {
    den_ = Laurent(1);
    return;
  }
  if (den_.is_one()) return;
  int shift = num_.low() - den_.low();
  Laurent n = num_.shifted(-num_.low());
  Laurent d = den_.shifted(-den_.low());
  if (d.high() > 0 && n.high() > 0) {
    QPoly a = to_qpoly(n), b = to_qpoly(d);
    while (!b.empty()) {
      QPoly r = qmod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    if (a.size() > 1) {
      Laurent g = primitive_integer(a);
      n = integer_quotient(n, g);
      d = integer_quotient(d, g);
    }
  }
  mpz_class c = n.content();
  mpz_class dc = d.content();
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), dc.get_mpz_t());
  if (d.leading() < 0) c = -c;
  if (c != 1) {
    n = n.divided(c);
    d = d.divided(c);
  }
  num_ = n.shifted(shift);
  den_ = d;
}

RatQ RatQ::operator-() const {
  RatQ r = *this;
  r.num_ = -r.num_;
  return r;
}

RatQ operator+(const RatQ& a, const RatQ& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.is_laurent()) return RatQ(a.num_ + b.num_);
    return RatQ(a.num_ + b.num_, a.den_);
  }
  return RatQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatQ operator-(const RatQ& a, const RatQ& b) { return a + (-b); }

RatQ operator*(const RatQ& a, const RatQ& b) {
  if (a.is_zero() || b.is_zero()) return RatQ();
  if (a.is_laurent() && b.is_laurent()) return RatQ(a.num_ * b.num_);
  return RatQ(a.num_ * b.num_, a.den_ * b.den_);
}

RatQ RatQ::inverse() const {
  if (is_zero()) throw std::domain_error("RatQ: division by zero");
  return RatQ(den_, num_);
}

RatQ operator/(const RatQ& a, const RatQ& b) { return a * b.inverse(); }

RatQ RatQ::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RatQ result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

RatQ RatQ::bar() const { return RatQ(num_.bar(), den_.bar()); }

std::string RatQ::str() const {
  if (is_laurent()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

namespace {

struct RatQOps {
  RatQ from_int(const mpz_class& v) { return RatQ(Laurent(v)); }
  RatQ ident(const std::string& name, Cursor&, size_t pos) {
    if (name == "q") return RatQ::q();
    throw ParseError("unknown symbol '" + name + "'", pos);
  }
  RatQ pow(const RatQ& b, long e, size_t pos) {
    if (e < 0 && b.is_zero()) throw ParseError("negative power of zero", pos);
    return b.pow(e);
  }
  RatQ div(const RatQ& a, const RatQ& b, size_t pos) {
    if (b.is_zero()) throw ParseError("division by zero", pos);
    return a / b;
  }
};

}  // namespace

RatQ RatQ::parse(const std::string& text) { return parse_arith_full<RatQ>(text, RatQOps{}); }

RatQ qint(long a) {
  // [a] = q^{a-1} + q^{a-3} + ... + q^{1-a} for a >= 0, and [-a] = -[a].
  if (a == 0) return RatQ();
  long n = a < 0 ? -a : a;
  std::vector<mpz_class> c(static_cast<size_t>(2 * n - 1));
  for (size_t k = 0; k < c.size(); k += 2) c[k] = 1;
  Laurent l = Laurent::from_coeffs(static_cast<int>(1 - n), std::move(c));
  return RatQ(a < 0 ? -l : l);
}

}  // namespace affcat
