#include "affcat/hecke.hpp"

#include <sstream>
#include <stdexcept>

#include "affcat/parse.hpp"

namespace affcat {

namespace {

const RatQ& q2_minus_1() {
  static const RatQ v = RatQ::q(2) - RatQ(1);
  return v;
}

const RatQ& q2() {
  static const RatQ v = RatQ::q(2);
  return v;
}

}  // namespace

HeckeElement HeckeElement::basis(const AffinePermutation& w, const RatQ& c) {
  HeckeElement h(w.rank());
  h.add(w, c);
  return h;
}

HeckeElement HeckeElement::scalar(int r, const RatQ& c) {
  return basis(AffinePermutation(r), c);
}

RatQ HeckeElement::coeff(const AffinePermutation& w) const {
  auto it = s_.find(w);
  return it == s_.end() ? RatQ() : it->second;
}

bool HeckeElement::is_scalar() const {
  return s_.empty() || (s_.size() == 1 && s_.begin()->first.is_identity());
}

void HeckeElement::add(const AffinePermutation& w, const RatQ& c) {
  if (c.is_zero()) return;
  if (w.rank() != r_) throw std::invalid_argument("HeckeElement: rank mismatch");
  auto [it, inserted] = s_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) s_.erase(it);
  }
}

HeckeElement HeckeElement::operator-() const {
  HeckeElement h = *this;
  for (auto& [w, c] : h.s_) c = -c;
  return h;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  if (o.r_ != r_) throw std::invalid_argument("HeckeElement: rank mismatch");
  for (const auto& [w, c] : o.s_) add(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) { return *this += -o; }

HeckeElement operator*(const RatQ& c, const HeckeElement& a) {
  HeckeElement h(a.r_);
  if (c.is_zero()) return h;
  for (const auto& [w, v] : a.s_) h.s_.emplace(w, c * v);
  return h;
}

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) { return mul(a, b); }

HeckeElement mul_simple_right(const HeckeElement& h, int i) {
  int r = h.rank();
  AffinePermutation s = AffinePermutation::sigma(r, i);
  HeckeElement out(r);
  for (const auto& [w, c] : h.support()) {
    AffinePermutation ws = w * s;
    if (!w.right_descent(i)) {
      out.add(ws, c);
    } else {
      out.add(w, c * q2_minus_1());
      out.add(ws, c * q2());
    }
  }
  return out;
}

HeckeElement mul(const HeckeElement& a, const HeckeElement& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("mul: rank mismatch");
  int r = a.rank();
  HeckeElement out(r);
  for (const auto& [v, cv] : b.support()) {
    NormalForm nf = normal_form(v);
    // a * T_rho^k is a relabelling since rho has length zero.
    AffinePermutation rk = AffinePermutation::rho(r, nf.k);
    HeckeElement x(r);
    for (const auto& [w, cw] : a.support()) x.add(w * rk, cw);
    for (int i : nf.word) x = mul_simple_right(x, i);
    out += cv * x;
  }
  return out;
}

HeckeElement T(const AffinePermutation& w) { return HeckeElement::basis(w); }

HeckeElement T_inverse_simple(int r, int i) {
  HeckeElement h = T(AffinePermutation::sigma(r, i)) - HeckeElement::scalar(r, q2_minus_1());
  return RatQ::q(-2) * h;
}

HeckeElement kl_gen(int r, int i) {
  return RatQ::q(-1) * (HeckeElement::identity(r) + T(AffinePermutation::sigma(r, i)));
}

HeckeElement bar(const HeckeElement& h) {
  int r = h.rank();
  HeckeElement out(r);
  for (const auto& [w, c] : h.support()) {
    NormalForm nf = normal_form(w);
    // bar(T_w) = T_rho^k T_{s_i1}^{-1} ... T_{s_il}^{-1}.
    HeckeElement x = T(AffinePermutation::rho(r, nf.k));
    for (int i : nf.word)
      x = RatQ::q(-2) * (mul_simple_right(x, i) - q2_minus_1() * x);
    out += c.bar() * x;
  }
  return out;
}

const HeckeElement* KLTable::find(const AffinePermutation& w) const {
  auto it = memo_.find(w);
  return it == memo_.end() ? nullptr : &it->second;
}

void KLTable::store(const AffinePermutation& w, HeckeElement h) { memo_.emplace(w, std::move(h)); }

mpz_class kl_mu(const HeckeElement& cw, const AffinePermutation& z) {
  RatQ c = cw.coeff(z);
  if (c.is_zero()) return 0;
  if (!c.is_laurent()) throw std::logic_error("kl_mu: non-Laurent coefficient");
  return c.num().coeff(-1 - z.length());
}

namespace {

const HeckeElement& kl_nonextended(const AffinePermutation& w, KLTable& table) {
  if (const HeckeElement* h = table.find(w)) return *h;
  int r = w.rank();
  if (w.is_identity()) {
    table.store(w, HeckeElement::identity(r));
    return *table.find(w);
  }
  NormalForm nf = normal_form(w);
  int s = nf.word.back();
  AffinePermutation v = w * AffinePermutation::sigma(r, s);
  const HeckeElement& cv = kl_nonextended(v, table);  // std::map keeps references valid
  HeckeElement c = mul(cv, kl_gen(r, s));
  for (const auto& [z, coef] : cv.support()) {
    if (z == v || !z.right_descent(s)) continue;
    mpz_class mu = kl_mu(cv, z);
    if (mu != 0) c -= RatQ(Laurent(mu)) * kl_nonextended(z, table);
  }
  table.store(w, std::move(c));
  return *table.find(w);
}

}  // namespace

HeckeElement kl_basis(const AffinePermutation& w, int budget, KLTable& table) {
  if (w.rank() != table.rank()) throw std::invalid_argument("kl_basis: rank mismatch");
  if (w.length() > budget)
    throw BudgetExceeded("kl_basis: length " + std::to_string(w.length()) + " exceeds budget " +
                         std::to_string(budget));
  int r = w.rank();
  long k = w.rho_power();
  AffinePermutation rk = AffinePermutation::rho(r, k);
  const HeckeElement& c = kl_nonextended(rk.inverse() * w, table);
  HeckeElement out(r);
  for (const auto& [z, coef] : c.support()) out.add(rk * z, coef);
  return out;
}

HeckeElement braid_image(int r, const GenWord& word) {
  HeckeElement h = HeckeElement::identity(r);
  for (const auto& l : word) {
    switch (l.kind) {
      case 'r': {
        AffinePermutation rk = AffinePermutation::rho(r, l.exponent);
        HeckeElement x(r);
        for (const auto& [w, c] : h.support()) x.add(w * rk, c);
        h = std::move(x);
        break;
      }
      case 's':
        if (l.exponent == 1) {
          h = mul_simple_right(h, l.index);
        } else {
          h = RatQ::q(-2) * (mul_simple_right(h, l.index) - q2_minus_1() * h);
        }
        break;
      default:
        throw std::invalid_argument("braid_image: only s_i^{+-1} and rho^k are braid letters");
    }
  }
  return h;
}

std::string basis_str(const AffinePermutation& w) {
  NormalForm nf = normal_form(w);
  std::ostringstream os;
  os << "T[";
  bool first = true;
  if (nf.k != 0) {
    os << "rho";
    if (nf.k != 1) os << "^" << nf.k;
    first = false;
  }
  for (int i : nf.word) {
    os << (first ? "" : " ") << "s" << i;
    first = false;
  }
  if (first) os << "e";
  os << "]";
  return os.str();
}

std::string HeckeElement::str() const {
  if (s_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : s_) {
    std::string term;
    std::string b = basis_str(w);
    if (c.is_one()) {
      term = b;
    } else if ((-c).is_one()) {
      term = "-" + b;
    } else if (c.is_laurent() && c.num().coeffs().size() == 1) {
      term = c.str() + "*" + b;
    } else {
      term = "(" + c.str() + ")*" + b;
    }
    if (first) {
      os << term;
    } else if (term[0] == '-') {
      os << " - " << term.substr(1);
    } else {
      os << " + " << term;
    }
    first = false;
  }
  return os.str();
}

namespace {

struct HeckeOps {
  int r;
  KLTable* table;
  int budget;

  HeckeElement from_int(const mpz_class& v) { return HeckeElement::scalar(r, RatQ(Laurent(v))); }

  static std::string bracket(Cursor& c) {
    c.expect('[');
    size_t start = c.pos();
    size_t end = c.text().find(']', start);
    if (end == std::string::npos) c.fail("missing ']'");
    c.set_pos(end + 1);
    return c.text().substr(start, end - start);
  }

  HeckeElement ident(const std::string& name, Cursor& c, size_t pos) {
    if (name == "q") return HeckeElement::scalar(r, RatQ::q());
    if (name == "T") return T(evaluate_word(r, parse_word(r, bracket(c))));
    if (name == "C") {
      if (!table) throw ParseError("C[...] needs a Kazhdan-Lusztig table", pos);
      return kl_basis(evaluate_word(r, parse_word(r, bracket(c))), budget, *table);
    }
    if (name == "b") {
      std::string inner = bracket(c);
      Cursor ic(inner);
      mpz_class i = ic.number();
      if (!ic.at_end() || i < 1 || i > r) throw ParseError("bad color in b[...]", pos);
      return kl_gen(r, static_cast<int>(i.get_si()));
    }
    throw ParseError("unknown symbol '" + name + "'", pos);
  }

  HeckeElement pow(const HeckeElement& b, long e, size_t pos) {
    if (e < 0) {
      if (!b.is_scalar() || b.is_zero()) throw ParseError("negative power of non-scalar", pos);
      return HeckeElement::scalar(r, b.coeff(AffinePermutation(r)).pow(e));
    }
    HeckeElement out = HeckeElement::identity(r);
    for (long k = 0; k < e; ++k) out = mul(out, b);
    return out;
  }

  HeckeElement div(const HeckeElement& a, const HeckeElement& b, size_t pos) {
    if (!b.is_scalar() || b.is_zero()) throw ParseError("division by non-scalar", pos);
    return b.coeff(AffinePermutation(r)).inverse() * a;
  }
};

}  // namespace

HeckeElement parse_hecke(int r, const std::string& text, KLTable* table, int budget) {
  return parse_arith_full<HeckeElement>(text, HeckeOps{r, table, budget});
}

}  // namespace affcat
