#include "affcat/weyl.hpp"

#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "affcat/parse.hpp"

namespace affcat {

namespace {

// floor(a / b) for b > 0.
long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace

AffinePermutation::AffinePermutation(int r) : w_(static_cast<size_t>(r)) {
  if (r < 1) throw std::invalid_argument("AffinePermutation: rank must be positive");
  std::iota(w_.begin(), w_.end(), 1L);
}

AffinePermutation AffinePermutation::from_window(std::vector<long> window) {
  long r = static_cast<long>(window.size());
  if (r < 1) throw std::invalid_argument("from_window: empty window");
  std::vector<bool> seen(static_cast<size_t>(r), false);
  for (long v : window) {
    long res = v - r * floor_div(v - 1, r);  // in 1..r
    if (seen[static_cast<size_t>(res - 1)])
      throw std::invalid_argument("from_window: residues are not a permutation");
    seen[static_cast<size_t>(res - 1)] = true;
  }
  AffinePermutation p;
  p.w_ = std::move(window);
  return p;
}

AffinePermutation AffinePermutation::sigma(int r, int i) {
  if (i < 1 || i > r) throw std::out_of_range("sigma: color out of range");
  AffinePermutation p(r);
  if (i < r) {
    std::swap(p.w_[static_cast<size_t>(i - 1)], p.w_[static_cast<size_t>(i)]);
  } else {
    p.w_[0] = 0;
    p.w_[static_cast<size_t>(r - 1)] = r + 1;
  }
  return p;
}

AffinePermutation AffinePermutation::rho(int r, long k) {
  AffinePermutation p(r);
  for (auto& v : p.w_) v += k;
  return p;
}

AffinePermutation AffinePermutation::translation(int r, int j) {
  if (j < 1 || j > r) throw std::out_of_range("translation: index out of range");
  AffinePermutation p(r);
  p.w_[static_cast<size_t>(j - 1)] += r;
  return p;
}

long AffinePermutation::operator()(long i) const {
  long r = rank();
  long m = floor_div(i - 1, r);
  return w_[static_cast<size_t>(i - m * r - 1)] + m * r;
}

AffinePermutation AffinePermutation::inverse() const {
  long r = rank();
  AffinePermutation p;
  p.w_.assign(w_.size(), 0);
  for (long i = 1; i <= r; ++i) {
    long v = w_[static_cast<size_t>(i - 1)];
    long m = floor_div(v - 1, r);
    // f(i) = v = base + m r  =>  f^{-1}(base) = i - m r.
    p.w_[static_cast<size_t>(v - m * r - 1)] = i - m * r;
  }
  return p;
}

AffinePermutation operator*(const AffinePermutation& u, const AffinePermutation& v) {
  if (u.rank() != v.rank()) throw std::invalid_argument("compose: rank mismatch");
  AffinePermutation p;
  p.w_.reserve(v.w_.size());
  for (long x : v.w_) p.w_.push_back(u(x));
  return p;
}

bool AffinePermutation::is_identity() const {
  for (size_t k = 0; k < w_.size(); ++k)
    if (w_[k] != static_cast<long>(k) + 1) return false;
  return true;
}

long AffinePermutation::rho_power() const {
  long r = rank();
  long s = std::accumulate(w_.begin(), w_.end(), 0L) - r * (r + 1) / 2;
  return s / r;  // exact: sum of residues is r(r+1)/2
}

int AffinePermutation::length() const {
  long r = rank();
  long len = 0;
  for (long i = 0; i < r; ++i)
    for (long j = i + 1; j < r; ++j)
      len += std::labs(floor_div(w_[static_cast<size_t>(j)] - w_[static_cast<size_t>(i)], r));
  return static_cast<int>(len);
}

bool AffinePermutation::right_descent(int i) const {
  int r = rank();
  if (i < 1 || i > r) throw std::out_of_range("right_descent: color out of range");
  return (*this)(i) > (*this)(i + 1);
}

std::string AffinePermutation::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t k = 0; k < w_.size(); ++k) os << (k ? ", " : "") << w_[k];
  os << "]";
  return os.str();
}

NormalForm normal_form(const AffinePermutation& w) {
  int r = w.rank();
  NormalForm nf;
  AffinePermutation cur = w;
  std::vector<int> rev;
  for (int len = cur.length(); len > 0; --len) {
    int i = 1;
    while (!cur.right_descent(i)) ++i;  // a descent exists while length > 0
    cur = cur * AffinePermutation::sigma(r, i);
    rev.push_back(i);
  }
  nf.k = cur.rho_power();
  nf.word.assign(rev.rbegin(), rev.rend());
  return nf;
}

AffinePermutation from_normal_form(int r, const NormalForm& nf) {
  AffinePermutation p = AffinePermutation::rho(r, nf.k);
  for (int i : nf.word) p = p * AffinePermutation::sigma(r, i);
  return p;
}

std::vector<AffinePermutation> elements_up_to_length(int r, int max_length) {
  std::vector<AffinePermutation> out{AffinePermutation(r)};
  size_t layer_begin = 0;
  for (int len = 1; len <= max_length; ++len) {
    size_t layer_end = out.size();
    std::set<AffinePermutation> next;
    for (size_t k = layer_begin; k < layer_end; ++k)
      for (int i = 1; i <= r; ++i)
        if (!out[k].right_descent(i)) next.insert(out[k] * AffinePermutation::sigma(r, i));
    out.insert(out.end(), next.begin(), next.end());
    layer_begin = layer_end;
  }
  return out;
}

GenWord parse_word(int r, const std::string& text) {
  GenWord w;
  std::istringstream is(text);
  std::string tok;
  size_t offset = 0;
  while (is >> tok) {
    offset = text.find(tok, offset);
    WordLetter l;
    std::string head = tok;
    long exponent = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      head = tok.substr(0, caret);
      std::string e = tok.substr(caret + 1);
      char* end = nullptr;
      exponent = std::strtol(e.c_str(), &end, 10);
      if (e.empty() || *end != '\0') throw ParseError("bad exponent in '" + tok + "'", offset);
    }
    if (head == "e") {
      continue;
    } else if (head == "rho") {
      l.kind = 'r';
    } else if (head.size() >= 2 && (head[0] == 's' || head[0] == 't')) {
      l.kind = head[0];
      char* end = nullptr;
      long idx = std::strtol(head.c_str() + 1, &end, 10);
      if (*end != '\0' || idx < 1 || idx > r)
        throw ParseError("bad generator index in '" + tok + "'", offset);
      l.index = static_cast<int>(idx);
      if (exponent != 1 && exponent != -1)
        throw ParseError("only exponents +-1 are allowed on '" + head + "'", offset);
    } else {
      throw ParseError("unknown generator '" + tok + "'", offset);
    }
    l.exponent = exponent;
    if (l.exponent != 0) w.push_back(l);
  }
  return w;
}

std::string word_str(const GenWord& w) {
  if (w.empty()) return "e";
  std::ostringstream os;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) os << " ";
    const auto& l = w[k];
    if (l.kind == 'r')
      os << "rho";
    else
      os << l.kind << l.index;
    if (l.exponent != 1) os << "^" << l.exponent;
  }
  return os.str();
}

AffinePermutation evaluate_word(int r, const GenWord& w) {
  AffinePermutation p(r);
  for (const auto& l : w) {
    AffinePermutation g(r);
    switch (l.kind) {
      case 'r':
        g = AffinePermutation::rho(r, l.exponent);
        break;
      case 's':
        g = AffinePermutation::sigma(r, l.index);  // involution: exponent irrelevant
        break;
      case 't':
        g = AffinePermutation::translation(r, l.index);
        if (l.exponent < 0) g = g.inverse();
        break;
      default:
        throw std::invalid_argument("evaluate_word: unknown letter");
    }
    p = p * g;
  }
  return p;
}

GlWeight act_weight(const AffinePermutation& w, const GlWeight& v) {
  long r = w.rank();
  if (static_cast<long>(v.kappa.size()) != r) throw std::invalid_argument("act_weight: rank");
  GlWeight out;
  out.kappa.assign(v.kappa.size(), 0);
  out.m = v.m;
  for (long j = 1; j <= r; ++j) {
    long fj = w(j);
    long m = floor_div(fj - 1, r);
    out.kappa[static_cast<size_t>(fj - m * r - 1)] += v.kappa[static_cast<size_t>(j - 1)];
    out.m -= m * v.kappa[static_cast<size_t>(j - 1)];
  }
  return out;
}

GradedPoly act_poly(const AffinePermutation& w, const GradedPoly& p) {
  int r = w.rank();
  std::vector<GradedPoly> img;
  img.reserve(static_cast<size_t>(r) + 1);
  img.push_back(GradedPoly::y());
  for (int j = 1; j <= r; ++j) img.push_back(affine_x(w(j), r));
  return p.substitute(img);
}

}  // namespace affcat
