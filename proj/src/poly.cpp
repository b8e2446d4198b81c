#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "affcat/arith.hpp"
#include "affcat/parse.hpp"

namespace affcat {

namespace {

void trim_exp(Exponent& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

Exponent add_exp(const Exponent& a, const Exponent& b) {
  Exponent r(std::max(a.size(), b.size()), 0);
  for (size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (size_t k = 0; k < b.size(); ++k) r[k] += b[k];
  return r;  // no trimming needed: the last entry of a or b is nonzero
}

int total_degree(const Exponent& e) {
  int d = 0;
  for (int v : e) d += v;
  return d;
}

}  // namespace

GradedPoly::GradedPoly(long c) {
  if (c != 0) t_.emplace(Exponent{}, mpq_class(c));
}

GradedPoly::GradedPoly(const mpq_class& c) {
  if (c != 0) t_.emplace(Exponent{}, c);
}

GradedPoly GradedPoly::var(int k) {
  if (k < 0) throw std::invalid_argument("GradedPoly::var: negative index");
  Exponent e(static_cast<size_t>(k) + 1, 0);
  e.back() = 1;
  return monomial(std::move(e), 1);
}

GradedPoly GradedPoly::monomial(Exponent e, const mpq_class& c) {
  GradedPoly p;
  trim_exp(e);
  if (c != 0) p.t_.emplace(std::move(e), c);
  return p;
}

bool GradedPoly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty());
}

mpq_class GradedPoly::constant_term() const { return coeff(Exponent{}); }

mpq_class GradedPoly::coeff(const Exponent& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? mpq_class(0) : it->second;
}

int GradedPoly::max_var() const {
  int m = 0;
  for (const auto& [e, c] : t_) m = std::max(m, static_cast<int>(e.size()) - 1);
  return m;
}

void GradedPoly::add_term(const Exponent& e, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = t_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly r = *this;
  for (auto& [e, c] : r.t_) c = -c;
  return r;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

GradedPoly& GradedPoly::operator*=(const mpq_class& s) {
  if (s == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [e, c] : t_) c *= s;
  return *this;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  GradedPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  if (b.is_constant()) return a * b.constant_term();
  if (a.is_constant()) return b * a.constant_term();
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) r.add_term(add_exp(ea, eb), ca * cb);
  return r;
}

GradedPoly GradedPoly::pow(unsigned e) const {
  GradedPoly result(1), base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

int GradedPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : t_) d = std::max(d, 2 * total_degree(e));
  return d;
}

bool GradedPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : t_) {
    int de = 2 * total_degree(e);
    if (d >= 0 && de != d) return false;
    d = de;
  }
  return true;
}

GradedPoly GradedPoly::homogeneous_component(int d) const {
  GradedPoly r;
  for (const auto& [e, c] : t_)
    if (2 * total_degree(e) == d) r.t_.emplace(e, c);
  return r;
}

GradedPoly GradedPoly::substitute(const std::vector<GradedPoly>& images) const {
  // Powers of the images are cached per variable; inputs are small.
  std::vector<std::vector<GradedPoly>> powers(images.size());
  auto image_pow = [&](size_t k, int e) -> const GradedPoly& {
    auto& cache = powers[k];
    if (cache.empty()) cache.emplace_back(1);
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[k]);
    return cache[static_cast<size_t>(e)];
  };
  GradedPoly r;
  for (const auto& [e, c] : t_) {
    Exponent fixed;
    GradedPoly term(c);
    for (size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (k < images.size()) {
        term = term * image_pow(k, e[k]);
      } else {
        fixed.resize(k + 1, 0);
        fixed[k] = e[k];
      }
    }
    if (!fixed.empty()) term = term * monomial(fixed, 1);
    r += term;
  }
  return r;
}

GradedPoly GradedPoly::swap_vars(int a, int b) const {
  GradedPoly r;
  size_t need = static_cast<size_t>(std::max(a, b)) + 1;
  for (const auto& [e, c] : t_) {
    Exponent f = e;
    if (f.size() < need) f.resize(need, 0);
    std::swap(f[static_cast<size_t>(a)], f[static_cast<size_t>(b)]);
    trim_exp(f);
    r.t_.emplace(std::move(f), c);
  }
  return r;
}

std::string GradedPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpq_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (e.empty() || a != 1) {
      os << a;
      need_star = true;
    }
    for (size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (need_star) os << "*";
      need_star = true;
      if (k == 0)
        os << "y";
      else
        os << "x" << k;
      if (e[k] != 1) os << "^" << e[k];
    }
  }
  return os.str();
}

namespace {

struct PolyOps {
  GradedPoly from_int(const mpz_class& v) { return GradedPoly(mpq_class(v)); }
  GradedPoly ident(const std::string& name, Cursor&, size_t pos) {
    if (name == "y") return GradedPoly::y();
    if (name.size() >= 2 && name[0] == 'x' &&
        std::all_of(name.begin() + 1, name.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
      int k = std::stoi(name.substr(1));
      if (k >= 1) return GradedPoly::x(k);
    }
    throw ParseError("unknown variable '" + name + "'", pos);
  }
  GradedPoly pow(const GradedPoly& b, long e, size_t pos) {
    if (e < 0) throw ParseError("negative exponent in polynomial", pos);
    return b.pow(static_cast<unsigned>(e));
  }
  GradedPoly div(const GradedPoly& a, const GradedPoly& b, size_t pos) {
    if (!b.is_constant() || b.is_zero())
      throw ParseError("polynomials may only be divided by nonzero constants", pos);
    return a * mpq_class(1 / b.constant_term());
  }
};

}  // namespace

GradedPoly GradedPoly::parse(const std::string& text) {
  return parse_arith_full<GradedPoly>(text, PolyOps{});
}

GradedPoly exact_divide(const GradedPoly& p, const GradedPoly& d) {
  if (d.is_zero()) throw std::domain_error("exact_divide: division by zero");
  const auto& [de, dc] = *d.terms().rbegin();
  GradedPoly rem = p, quot;
  while (!rem.is_zero()) {
    const auto [re, rc] = *rem.terms().rbegin();
    Exponent qe(std::max(re.size(), de.size()), 0);
    for (size_t k = 0; k < qe.size(); ++k) {
      int a = k < re.size() ? re[k] : 0;
      int b = k < de.size() ? de[k] : 0;
      if (a < b) throw std::domain_error("exact_divide: not divisible");
      qe[k] = a - b;
    }
    GradedPoly t = GradedPoly::monomial(qe, rc / dc);
    quot += t;
    rem -= t * d;
  }
  return quot;
}

GradedPoly affine_x(long j, int r) {
  // j = base + m r with base in 1..r.
  long m = (j - 1) >= 0 ? (j - 1) / r : -((-(j - 1) + r - 1) / r);
  long base = j - m * r;
  GradedPoly p = GradedPoly::x(static_cast<int>(base));
  if (m != 0) p -= GradedPoly::y() * mpq_class(m);
  return p;
}

GradedPoly sigma_act(int i, int r, const GradedPoly& p) {
  if (i < 1 || i > r) throw std::out_of_range("sigma_act: color out of range");
  if (i < r) return p.swap_vars(i, i + 1);
  std::vector<GradedPoly> img;
  img.reserve(static_cast<size_t>(r) + 1);
  for (int k = 0; k <= r; ++k) img.push_back(GradedPoly::var(k));
  img[1] = GradedPoly::x(r) + GradedPoly::y();
  img[static_cast<size_t>(r)] = GradedPoly::x(1) - GradedPoly::y();
  return p.substitute(img);
}

GradedPoly rho_act(int k, int r, const GradedPoly& p) {
  if (k == 0) return p;
  std::vector<GradedPoly> img;
  img.reserve(static_cast<size_t>(r) + 1);
  img.push_back(GradedPoly::y());
  for (int j = 1; j <= r; ++j) img.push_back(affine_x(j + k, r));
  return p.substitute(img);
}

GradedPoly simple_root(int i, int r) {
  if (i < 1 || i > r) throw std::out_of_range("simple_root: color out of range");
  if (i < r) return GradedPoly::x(i + 1) - GradedPoly::x(i);
  return GradedPoly::x(1) - GradedPoly::x(r) - GradedPoly::y();
}

GradedPoly basis_b(int i, int r) {
  if (i < 1 || i > r) throw std::out_of_range("basis_b: color out of range");
  return GradedPoly::x(i < r ? i + 1 : 1);
}

namespace {

// (p - s_{ab} p) / (x_b - x_a), where s_{ab} swaps the variables a and b.
// Computed monomial by monomial with the geometric-series formula.
GradedPoly divided_difference(const GradedPoly& p, int a, int b) {
  GradedPoly r;
  size_t need = static_cast<size_t>(std::max(a, b)) + 1;
  for (const auto& [e0, c] : p.terms()) {
    Exponent e = e0;
    if (e.size() < need) e.resize(need, 0);
    int alpha = e[static_cast<size_t>(a)], beta = e[static_cast<size_t>(b)];
    if (alpha == beta) continue;
    int m = std::min(alpha, beta);
    int d = std::abs(alpha - beta);
    mpq_class coef = alpha > beta ? mpq_class(-c) : c;
    for (int k = 0; k < d; ++k) {
      Exponent f = e;
      f[static_cast<size_t>(a)] = m + k;
      f[static_cast<size_t>(b)] = m + d - 1 - k;
      r += GradedPoly::monomial(std::move(f), coef);
    }
  }
  return r;
}

}  // namespace

GradedPoly demazure(int i, int r, const GradedPoly& p) {
  if (i < 1 || i > r) throw std::out_of_range("demazure: color out of range");
  if (i < r) return divided_difference(p, i, i + 1);
  // sigma_r swaps x_1 and v = x_r + y, and X_r = x_1 - v.  Rewrite p in the
  // variables (x_1, v), take the ordinary divided difference, and rewrite back.
  std::vector<GradedPoly> to_v, from_v;
  for (int k = 0; k <= r; ++k) {
    to_v.push_back(GradedPoly::var(k));
    from_v.push_back(GradedPoly::var(k));
  }
  to_v[static_cast<size_t>(r)] = GradedPoly::x(r) - GradedPoly::y();
  from_v[static_cast<size_t>(r)] = GradedPoly::x(r) + GradedPoly::y();
  GradedPoly dd = divided_difference(p.substitute(to_v), 1, r);
  return -dd.substitute(from_v);
}

std::pair<GradedPoly, GradedPoly> split_invariant(int i, int r, const GradedPoly& p) {
  GradedPoly b = demazure(i, r, p);
  GradedPoly a = p - basis_b(i, r) * b;
  return {std::move(a), std::move(b)};
}

bool is_sigma_invariant(int i, int r, const GradedPoly& p) { return sigma_act(i, r, p) == p; }

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class v;
  mpz_bin_uiui(v.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return v;
}

}  // namespace affcat
