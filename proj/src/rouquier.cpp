#include "affcat/rouquier.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace affcat {

BimComplex BimComplex::unit(int r) {
  BimComplex c(r);
  c.add_term(0, SoergelObject(r, {}));
  return c;
}

void BimComplex::ensure(int k) {
  if (terms_.empty()) {
    lo_ = k;
    terms_.resize(1);
    d_.resize(1);
    return;
  }
  while (k < lo_) {
    terms_.insert(terms_.begin(), {});
    d_.insert(d_.begin(), {});
    --lo_;
  }
  while (k > highest()) {
    terms_.emplace_back();
    d_.emplace_back();
  }
}

const std::vector<SoergelObject>& BimComplex::terms(int k) const {
  static const std::vector<SoergelObject> none;
  if (terms_.empty() || k < lo_ || k > highest()) return none;
  return terms_[static_cast<size_t>(k - lo_)];
}

const std::optional<Morphism>& BimComplex::entry(int k, size_t t, size_t s) const {
  static const std::optional<Morphism> zero;
  if (terms_.empty() || k < lo_ || k > highest()) return zero;
  const auto& dk = d_[static_cast<size_t>(k - lo_)];
  if (t >= dk.size() || s >= dk[t].size()) return zero;
  return dk[t][s];
}

size_t BimComplex::add_term(int k, const SoergelObject& obj) {
  ensure(k);
  auto& v = terms_[static_cast<size_t>(k - lo_)];
  v.push_back(obj);
  return v.size() - 1;
}

void BimComplex::set_entry(int k, size_t t, size_t s, const Morphism& m) {
  if (s >= terms(k).size() || t >= terms(k + 1).size())
    throw std::out_of_range("set_entry: no such summand");
  if (m.source() != terms(k)[s].letters || m.target() != terms(k + 1)[t].letters)
    throw std::invalid_argument("set_entry: " + m.str() + " does not fit the summands");
  auto& dk = d_[static_cast<size_t>(k - lo_)];
  if (dk.size() <= t) dk.resize(t + 1);
  if (dk[t].size() <= s) dk[t].resize(s + 1);
  dk[t][s] = m;
}

std::string BimComplex::str() const {
  std::ostringstream os;
  for (int k = lowest(); k <= highest(); ++k) {
    os << "degree " << k << ":";
    const auto& ts = terms(k);
    for (size_t s = 0; s < ts.size(); ++s) {
      const SoergelObject& o = ts[s];
      os << (s ? " +" : "") << " (" << o.str() << ")";
    }
    os << "\n";
    for (size_t s = 0; s < ts.size(); ++s)
      for (size_t t = 0; t < terms(k + 1).size(); ++t)
        if (const auto& e = entry(k, t, s)) os << "  d[" << k << "](" << t << "," << s << ") = " << e->str() << "\n";
  }
  return os.str();
}

namespace {

BimComplex letter_complex(int r, const WordLetter& l) {
  BimComplex c(r);
  switch (l.kind) {
    case 'r': {
      std::vector<int> w(static_cast<size_t>(l.exponent > 0 ? l.exponent : -l.exponent),
                         l.exponent > 0 ? kPlus : kMinus);
      c.add_term(0, SoergelObject(r, w));
      return c;
    }
    case 's':
      if (l.exponent == 1) {
        c.add_term(-1, SoergelObject(r, {}, 2));
        c.add_term(0, SoergelObject(r, {l.index}, 1));
        c.set_entry(-1, 0, 0, Morphism::gen(r, {GenKind::StartDot, l.index, 0}));
      } else {
        c.add_term(0, SoergelObject(r, {l.index}, -1));
        c.add_term(1, SoergelObject(r, {}, -2));
        c.set_entry(0, 0, 0, Morphism::gen(r, {GenKind::EndDot, l.index, 0}));
      }
      return c;
    default:
      throw std::invalid_argument("braid words use s_i^{+-1} and rho^k only");
  }
}

SoergelObject concat(const SoergelObject& a, const SoergelObject& b) {
  std::vector<int> w = a.letters;
  w.insert(w.end(), b.letters.begin(), b.letters.end());
  return SoergelObject(a.r, w, a.shift + b.shift);
}

}  // namespace

BimComplex tensor(const BimComplex& a, const BimComplex& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("tensor: ranks differ");
  int r = a.rank();
  BimComplex out(r);
  // index[(p, sa, q, sb)] -> summand index in degree p + q
  std::map<std::tuple<int, size_t, int, size_t>, size_t> index;
  for (int k = a.lowest() + b.lowest(); k <= a.highest() + b.highest(); ++k)
    for (int p = a.lowest(); p <= a.highest(); ++p) {
      int q = k - p;
      for (size_t sa = 0; sa < a.terms(p).size(); ++sa)
        for (size_t sb = 0; sb < b.terms(q).size(); ++sb)
          index[{p, sa, q, sb}] = out.add_term(k, concat(a.terms(p)[sa], b.terms(q)[sb]));
    }
  for (const auto& [key, src] : index) {
    auto [p, sa, q, sb] = key;
    const SoergelObject& oa = a.terms(p)[sa];
    const SoergelObject& ob = b.terms(q)[sb];
    for (size_t ta = 0; ta < a.terms(p + 1).size(); ++ta)
      if (const auto& e = a.entry(p, ta, sa))
        out.set_entry(p + q, index.at({p + 1, ta, q, sb}), src, Morphism::hcomp(*e, Morphism::id(r, ob.letters)));
    for (size_t tb = 0; tb < b.terms(q + 1).size(); ++tb)
      if (const auto& e = b.entry(q, tb, sb)) {
        Morphism m = Morphism::hcomp(Morphism::id(r, oa.letters), *e);
        if (p % 2) m = Morphism::scale(-1, m);
        out.set_entry(p + q, index.at({p, sa, q + 1, tb}), src, m);
      }
  }
  return out;
}

BimComplex braid_complex(int r, const GenWord& word) {
  BimComplex c = BimComplex::unit(r);
  for (const auto& l : word) c = tensor(c, letter_complex(r, l));
  return c;
}

BimComplex braid_complex(int r, const std::string& word) { return braid_complex(r, parse_word(r, word)); }

D2Result verify_d2(const BimComplex& c) {
  for (int k = c.lowest(); k + 2 <= c.highest(); ++k) {
    const auto& src = c.terms(k);
    const auto& mid = c.terms(k + 1);
    const auto& dst = c.terms(k + 2);
    for (size_t s = 0; s < src.size(); ++s) {
      BimElement::Tag ntags = BimElement::Tag(1) << src[s].unoriented();
      for (BimElement::Tag tag = 0; tag < ntags; ++tag) {
        BimElement e = BimElement::basis(src[s], tag);
        std::vector<std::optional<BimElement>> first(mid.size());
        for (size_t m = 0; m < mid.size(); ++m)
          if (const auto& d1 = c.entry(k, m, s)) first[m] = d1->apply(e);
        for (size_t t = 0; t < dst.size(); ++t) {
          BimElement sum(dst[t]);
          for (size_t m = 0; m < mid.size(); ++m)
            if (first[m])
              if (const auto& d2 = c.entry(k + 1, t, m)) sum += d2->apply(*first[m]);
          if (!sum.is_zero()) {
            std::ostringstream os;
            os << "d^" << k + 1 << " d^" << k << " from summand " << s << " (" << src[s].str() << ") to summand " << t
               << " (" << dst[t].str() << ") on " << e.str() << " gives " << sum.str();
            return {false, os.str()};
          }
        }
      }
    }
  }
  return {};
}

D2Result verify_degrees(const BimComplex& c) {
  for (int k = c.lowest(); k < c.highest(); ++k)
    for (size_t s = 0; s < c.terms(k).size(); ++s)
      for (size_t t = 0; t < c.terms(k + 1).size(); ++t)
        if (const auto& e = c.entry(k, t, s)) {
          int want = c.terms(k)[s].shift - c.terms(k + 1)[t].shift;
          if (e->degree() != want)
            return {false, "d^" + std::to_string(k) + "(" + std::to_string(t) + "," + std::to_string(s) +
                               ") = " + e->str() + " has degree " + std::to_string(e->degree()) + ", expected " +
                               std::to_string(want)};
        }
  return {};
}

HeckeElement euler_class(const BimComplex& c) {
  int r = c.rank();
  HeckeElement total(r);
  const HeckeElement trho = T(AffinePermutation::rho(r, 1)), trho_inv = T(AffinePermutation::rho(r, -1));
  for (int k = c.lowest(); k <= c.highest(); ++k)
    for (const SoergelObject& o : c.terms(k)) {
      // The object is the tensor of letters with one {-1} per unoriented
      // letter already included, so q^shift times the letter classes.
      HeckeElement h = HeckeElement::scalar(r, RatQ::q(o.shift));
      for (int l : o.letters) h = h * (l == kPlus ? trho : l == kMinus ? trho_inv : kl_gen(r, l));
      total += (k % 2 ? RatQ(-1) : RatQ(1)) * h;
    }
  return total;
}

}  // namespace affcat
