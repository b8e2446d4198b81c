#include "affcat/schur.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "affcat/parse.hpp"

namespace affcat {

namespace {

// Residue of t in 1..n.
int res(long t, int n) { return static_cast<int>(((t - 1) % n + n) % n) + 1; }
int next_color(int i, int n) { return i % n + 1; }

void compositions_rec(int n, int r, Composition& cur, std::vector<Composition>& out) {
  if (static_cast<int>(cur.size()) == n - 1) {
    cur.push_back(r);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = r; v >= 0; --v) {
    cur.push_back(v);
    compositions_rec(n, r - v, cur, out);
    cur.pop_back();
  }
}

// alpha_i = eps_i - eps_{i+1}, with alpha_n = eps_n - eps_1; sign selects +-.
Composition shift_weight(const Composition& l, int i, int sign, int n) {
  Composition m = l;
  m[static_cast<size_t>(i - 1)] += sign;
  m[static_cast<size_t>(next_color(i, n) - 1)] -= sign;
  return m;
}

bool in_range(const Composition& l) {
  return std::all_of(l.begin(), l.end(), [](int v) { return v >= 0; });
}

}  // namespace

std::vector<Composition> compositions(int n, int r) {
  std::vector<Composition> out;
  Composition cur;
  if (n < 1 || r < 0) return out;
  compositions_rec(n, r, cur, out);
  return out;
}

std::string composition_str(const Composition& c) {
  std::ostringstream os;
  os << "(";
  for (size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << c[k];
  os << ")";
  return os.str();
}

Composition one_r(int n, int r) {
  Composition c(static_cast<size_t>(n), 0);
  for (int k = 0; k < r && k < n; ++k) c[static_cast<size_t>(k)] = 1;
  return c;
}

SchurWord e_word(const std::vector<int>& signed_indices) {
  SchurWord w;
  for (int s : signed_indices) w.push_back(SchurLetter::e(s));
  return w;
}

std::string word_str(const SchurWord& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) os << " ";
    const SchurLetter& l = w[k];
    switch (l.kind) {
      case SchurLetter::E:
        os << "E" << l.index;
        break;
      case SchurLetter::K:
        os << "K" << l.index;
        if (l.exponent != 1) os << "^" << l.exponent;
        break;
      case SchurLetter::R:
        os << "R";
        if (l.exponent != 1) os << "^" << l.exponent;
        break;
      case SchurLetter::Idem:
        os << "1[" << composition_str(l.weight) << "]";
        break;
    }
  }
  return os.str();
}

int word_length(const SchurWord& w) {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [](const SchurLetter& l) {
    return l.kind != SchurLetter::Idem;
  }));
}

void SchurElement::add(const SchurWord& w, const RatQ& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

int SchurElement::max_length() const {
  int m = 0;
  for (const auto& [w, c] : t_) m = std::max(m, word_length(w));
  return m;
}

SchurElement SchurElement::operator-() const {
  SchurElement x = *this;
  for (auto& [w, c] : x.t_) c = -c;
  return x;
}

SchurElement& SchurElement::operator+=(const SchurElement& o) {
  for (const auto& [w, c] : o.t_) add(w, c);
  return *this;
}

SchurElement& SchurElement::operator-=(const SchurElement& o) { return *this += -o; }

SchurElement operator*(const SchurElement& a, const SchurElement& b) {
  SchurElement out;
  for (const auto& [u, cu] : a.t_)
    for (const auto& [v, cv] : b.t_) {
      SchurWord w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add(w, cu * cv);
    }
  return out;
}

SchurElement operator*(const RatQ& c, const SchurElement& a) {
  SchurElement out;
  if (c.is_zero()) return out;
  for (const auto& [w, v] : a.t_) out.t_.emplace(w, c * v);
  return out;
}

namespace {

// Shared "coefficient * basis" printing for SchurElement and TensorVector.
template <class Map, class KeyStr>
std::string linear_str(const Map& terms, KeyStr key_str) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms) {
    std::string b = key_str(k);
    std::string term;
    if (c.is_one()) {
      term = b;
    } else if ((-c).is_one()) {
      term = "-" + b;
    } else if (c.is_laurent() && c.num().coeffs().size() == 1) {
      term = c.str() + "*" + b;
    } else {
      term = "(" + c.str() + ")*" + b;
    }
    if (first)
      os << term;
    else if (term[0] == '-')
      os << " - " << term.substr(1);
    else
      os << " + " << term;
    first = false;
  }
  return os.str();
}

// Splits "a - b + c" into signed terms at top-level '+'/'-'.  A sign
// directly after 'E', '^' or '*' belongs to the token.
struct SignedTerm {
  bool negative;
  std::string text;
  size_t offset;
};

std::vector<SignedTerm> split_terms(const std::string& text) {
  std::vector<SignedTerm> out;
  int depth = 0;
  bool negative = false;
  size_t start = 0;
  char prev = '\0';  // previous non-space character
  auto flush = [&](size_t end) {
    std::string t = text.substr(start, end - start);
    size_t a = t.find_first_not_of(" \t");
    if (a == std::string::npos) {
      if (!out.empty() || negative) throw ParseError("empty term", start);
      return;
    }
    size_t b = t.find_last_not_of(" \t");
    out.push_back({negative, t.substr(a, b - a + 1), start + a});
  };
  for (size_t k = 0; k < text.size(); ++k) {
    char c = text[k];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth < 0) throw ParseError("unbalanced bracket", k);
    if ((c == '+' || c == '-') && depth == 0 && prev != 'E' && prev != '^' && prev != '*') {
      if (prev != '\0') flush(k);
      negative = (c == '-');
      start = k + 1;
      prev = c;
      continue;
    }
    if (!std::isspace(static_cast<unsigned char>(c))) prev = c;
  }
  if (depth != 0) throw ParseError("unbalanced bracket", text.size());
  flush(text.size());
  return out;
}

// Splits "coef*body" at the last top-level '*'; coefficient defaults to 1.
std::pair<RatQ, std::string> split_coefficient(const std::string& term, size_t offset) {
  int depth = 0;
  size_t star = std::string::npos;
  for (size_t k = 0; k < term.size(); ++k) {
    char c = term[k];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == '*' && depth == 0) star = k;
  }
  if (star == std::string::npos) return {RatQ(1), term};
  RatQ c;
  try {
    c = RatQ::parse(term.substr(0, star));
  } catch (const ParseError& e) {
    throw ParseError(std::string("bad coefficient: ") + e.what(), offset);
  }
  std::string body = term.substr(star + 1);
  size_t a = body.find_first_not_of(" \t");
  return {c, a == std::string::npos ? std::string() : body.substr(a)};
}

// "(a,b,...)" with optionally negative integer entries.
std::vector<int> parse_tuple(Cursor& c) {
  std::vector<int> out;
  c.expect('(');
  do {
    bool neg = c.accept('-');
    long x = c.number().get_si();
    out.push_back(static_cast<int>(neg ? -x : x));
  } while (c.accept(','));
  c.expect(')');
  return out;
}

}  // namespace

std::string SchurElement::str() const {
  return linear_str(t_, [](const SchurWord& w) { return word_str(w); });
}

SchurWord parse_schur_word(int n, const std::string& text) {
  SchurWord w;
  std::istringstream is(text);
  std::string tok;
  size_t offset = 0;
  while (is >> tok) {
    offset = text.find(tok, offset);
    auto bad = [&](const std::string& why) { throw ParseError(why + " in '" + tok + "'", offset); };
    auto exponent_of = [&](const std::string& rest) -> int {
      if (rest.empty()) return 1;
      if (rest == "^-1") return -1;
      if (rest == "^1") return 1;
      bad("exponent must be +-1");
      return 0;
    };
    if (tok == "1") {
      // empty word
    } else if (tok[0] == 'E') {
      char* end = nullptr;
      long i = std::strtol(tok.c_str() + 1, &end, 10);
      if (*end != '\0' || i == 0 || std::labs(i) > n) bad("bad E index");
      w.push_back(SchurLetter::e(static_cast<int>(i)));
    } else if (tok[0] == 'K') {
      char* end = nullptr;
      long i = std::strtol(tok.c_str() + 1, &end, 10);
      if (end == tok.c_str() + 1 || i < 1 || i > n) bad("bad K index");
      w.push_back(SchurLetter::k(static_cast<int>(i), exponent_of(end)));
    } else if (tok[0] == 'R') {
      w.push_back(SchurLetter::shift(exponent_of(tok.substr(1))));
    } else if (tok.rfind("1[", 0) == 0) {
      Cursor c(tok, 2);
      Composition l;
      try {
        l = parse_tuple(c);
        c.expect(']');
      } catch (const ParseError&) {
        bad("bad idempotent");
      }
      if (!c.at_end() || static_cast<int>(l.size()) != n) bad("idempotent needs n entries");
      if (!in_range(l)) bad("idempotent weight must be nonnegative");
      w.push_back(SchurLetter::idem(l));
    } else {
      bad("unknown letter");
    }
    offset += tok.size();
  }
  return w;
}

SchurElement parse_schur_element(int n, const std::string& text) {
  SchurElement x;
  for (const auto& t : split_terms(text)) {
    auto [c, body] = split_coefficient(t.text, t.offset);
    SchurWord w;
    try {
      w = parse_schur_word(n, body);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), t.offset);
    }
    x.add(w, t.negative ? -c : c);
  }
  return x;
}

TensorVector TensorVector::pure(const Tensor& t, const RatQ& c) {
  TensorVector v;
  v.add(t, c);
  return v;
}

void TensorVector::add(const Tensor& t, const RatQ& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
  for (const auto& [t, c] : o.t_) add(t, c);
  return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& o) {
  for (const auto& [t, c] : o.t_) add(t, -c);
  return *this;
}

TensorVector operator*(const RatQ& c, const TensorVector& v) {
  TensorVector out;
  if (c.is_zero()) return out;
  for (const auto& [t, x] : v.t_) out.t_.emplace(t, c * x);
  return out;
}

std::string TensorVector::str() const {
  return linear_str(t_, [](const Tensor& t) {
    std::ostringstream os;
    os << "e(";
    for (size_t k = 0; k < t.size(); ++k) os << (k ? "," : "") << t[k];
    os << ")";
    return os.str();
  });
}

TensorVector parse_tensor(const std::string& text) {
  // A bare tuple "(1,2,3)" is the pure tensor; anything else starting with
  // '(' is a parenthesised coefficient such as "(1 + q)*e(1,2,3)".
  Cursor probe(text);
  if (probe.peek() == '(') {
    try {
      Cursor c(text);
      Tensor t = parse_tuple(c);
      if (c.at_end()) return TensorVector::pure(t);
    } catch (const ParseError&) {
    }
  }
  TensorVector v;
  for (const auto& term : split_terms(text)) {
    auto [c, body] = split_coefficient(term.text, term.offset);
    Cursor cur(body);
    if (!cur.accept('e')) throw ParseError("expected e(...)", term.offset);
    Tensor t = parse_tuple(cur);
    if (!cur.at_end()) throw ParseError("trailing input in tensor term", term.offset);
    v.add(t, term.negative ? -c : c);
  }
  return v;
}

Composition weight_of(int n, const Tensor& t) {
  Composition w(static_cast<size_t>(n), 0);
  for (int x : t) ++w[static_cast<size_t>(res(x, n) - 1)];
  return w;
}

namespace {

// E_{+-i} on one pure tensor, accumulated into out with factor c.
void act_e(int n, int signed_i, const Tensor& t, const RatQ& c, TensorVector& out) {
  int i = std::abs(signed_i);
  int ip = next_color(i, n);
  const int m = static_cast<int>(t.size());
  if (signed_i > 0) {
    // Position j changes t_j -> t_j - 1; K_i K_{i+1}^{-1} acts on positions > j.
    int exp = 0;
    for (int j = m - 1; j >= 0; --j) {
      int rj = res(t[static_cast<size_t>(j)], n);
      if (res(t[static_cast<size_t>(j)] - 1, n) == i) {
        Tensor u = t;
        --u[static_cast<size_t>(j)];
        out.add(u, c * RatQ::q(exp));
      }
      if (rj == i) ++exp;
      if (rj == ip) --exp;
    }
  } else {
    // Position j changes t_j -> t_j + 1; K_i^{-1} K_{i+1} acts on positions < j.
    int exp = 0;
    for (int j = 0; j < m; ++j) {
      int rj = res(t[static_cast<size_t>(j)], n);
      if (rj == i) {
        Tensor u = t;
        ++u[static_cast<size_t>(j)];
        out.add(u, c * RatQ::q(exp));
      }
      if (rj == i) --exp;
      if (rj == ip) ++exp;
    }
  }
}

}  // namespace

TensorVector act(int n, const SchurLetter& l, const TensorVector& v) {
  TensorVector out;
  for (const auto& [t, c] : v.terms()) {
    switch (l.kind) {
      case SchurLetter::E:
        act_e(n, l.index, t, c, out);
        break;
      case SchurLetter::K: {
        long cnt = std::count_if(t.begin(), t.end(), [&](int x) { return res(x, n) == l.index; });
        out.add(t, c * RatQ::q(static_cast<int>(cnt) * l.exponent));
        break;
      }
      case SchurLetter::R: {
        Tensor u = t;
        for (int& x : u) x += l.exponent;
        out.add(u, c);
        break;
      }
      case SchurLetter::Idem:
        if (weight_of(n, t) == l.weight) out.add(t, c);
        break;
    }
  }
  return out;
}

TensorVector act(int n, const SchurWord& w, const TensorVector& v) {
  TensorVector cur = v;
  for (auto it = w.rbegin(); it != w.rend() && !cur.is_zero(); ++it) cur = act(n, *it, cur);
  return cur;
}

TensorVector act(int n, const SchurElement& x, const TensorVector& v) {
  TensorVector out;
  for (const auto& [w, c] : x.terms()) out += c * act(n, w, v);
  return out;
}

TensorVector weight_project(int n, const Composition& lambda, const TensorVector& v) {
  return act(n, SchurLetter::idem(lambda), v);
}

RatQ bilinear_form(const TensorVector& v, const TensorVector& w) {
  RatQ s;
  for (const auto& [t, c] : v.terms()) {
    auto it = w.terms().find(t);
    if (it != w.terms().end()) s += c * it->second;
  }
  return s;
}

int default_window(int n, const SchurElement& x, const SchurElement& y) {
  return n + 2 * std::max(x.max_length(), y.max_length()) + 2;
}

bool equal(int n, int r, const SchurElement& x, const SchurElement& y, int window,
           std::string* witness) {
  if (window < n) throw std::invalid_argument("equal: window must be at least n");
  // Right weights: if every word ends in an idempotent, only those weights
  // can give a non-zero result.
  std::vector<Composition> weights;
  bool restricted = true;
  for (const SchurElement* e : {&x, &y})
    for (const auto& [w, c] : e->terms()) {
      if (w.empty() || w.back().kind != SchurLetter::Idem) {
        restricted = false;
      } else if (std::find(weights.begin(), weights.end(), w.back().weight) == weights.end()) {
        weights.push_back(w.back().weight);
      }
    }
  SchurElement d = x - y;
  if (d.is_zero()) return true;
  Tensor t(static_cast<size_t>(r), 0);
  for (;;) {
    bool visit = !restricted ||
                 std::find(weights.begin(), weights.end(), weight_of(n, t)) != weights.end();
    if (visit) {
      TensorVector v = TensorVector::pure(t);
      TensorVector diff = act(n, d, v);
      if (!diff.is_zero()) {
        if (witness) {
          *witness = "on " + v.str() + ": lhs = " + act(n, x, v).str() +
                     ", rhs = " + act(n, y, v).str();
        }
        return false;
      }
    }
    size_t k = 0;
    while (k < t.size() && ++t[k] == window) t[k++] = 0;
    if (k == t.size()) break;
  }
  return true;
}

SchurElement rho_antiinv(int n, const SchurElement& x) {
  SchurElement out;
  for (const auto& [w, c] : x.terms()) {
    SchurWord img;
    RatQ coef = c;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      const SchurLetter& l = *it;
      switch (l.kind) {
        case SchurLetter::E: {
          int i = std::abs(l.index);
          int ip = next_color(i, n);
          coef *= RatQ::q();
          int s = l.index > 0 ? 1 : -1;
          img.push_back(SchurLetter::k(i, s));
          img.push_back(SchurLetter::k(ip, -s));
          img.push_back(SchurLetter::e(-l.index));
          break;
        }
        case SchurLetter::K:
        case SchurLetter::Idem:
          img.push_back(l);
          break;
        case SchurLetter::R:
          img.push_back(SchurLetter::shift(-l.exponent));
          break;
      }
    }
    out.add(img, coef);
  }
  return out;
}

namespace {

SchurElement sandwich(int n, int r, const std::vector<int>& signed_indices) {
  Composition one = one_r(n, r);
  SchurWord w{SchurLetter::idem(one)};
  for (int s : signed_indices) w.push_back(SchurLetter::e(s));
  w.push_back(SchurLetter::idem(one));
  return SchurElement(w);
}

void check_nr(int n, int r) {
  if (!(3 <= r && r < n)) throw std::invalid_argument("the embedding needs 3 <= r < n");
}

}  // namespace

SchurElement sigma_b(int n, int r, int i, int form) {
  check_nr(n, r);
  if (i < 1 || i > r) throw std::out_of_range("sigma_b: colour out of range");
  if (i < r) return form == 0 ? sandwich(n, r, {-i, i}) : sandwich(n, r, {i, -i});
  std::vector<int> s;
  for (int k = n; k >= r; --k) s.push_back(-k);
  for (int k = r; k <= n; ++k) s.push_back(k);
  return sandwich(n, r, s);
}

SchurElement sigma_trho(int n, int r, int form) {
  check_nr(n, r);
  std::vector<int> s;
  if (form == 0) {
    for (int k = n; k >= r + 1; --k) s.push_back(-k);
    for (int k = 1; k <= r; ++k) s.push_back(-k);
  } else {
    s.push_back(-n);
    for (int k = 1; k <= r - 1; ++k) s.push_back(-k);
    for (int k = n - 1; k >= r; --k) s.push_back(-k);
  }
  return sandwich(n, r, s);
}

SchurElement sigma_trho_inv(int n, int r, int form) {
  check_nr(n, r);
  std::vector<int> s;
  if (form == 0) {
    for (int k = r; k >= 1; --k) s.push_back(k);
    for (int k = r + 1; k <= n; ++k) s.push_back(k);
  } else {
    for (int k = r; k <= n - 1; ++k) s.push_back(k);
    for (int k = r - 1; k >= 1; --k) s.push_back(k);
    s.push_back(n);
  }
  return sandwich(n, r, s);
}

SchurElement iota(int n, int r, const SchurElement& x) {
  SchurElement out;
  for (const auto& [w, c] : x.terms()) {
    std::vector<SchurWord> sources;
    if (!w.empty() && w.back().kind == SchurLetter::Idem) {
      sources.push_back(w);
    } else {
      for (const auto& l : compositions(n, r)) {
        SchurWord v = w;
        v.push_back(SchurLetter::idem(l));
        sources.push_back(v);
      }
    }
    for (const auto& src : sources) {
      SchurWord img;
      for (const SchurLetter& l : src) {
        switch (l.kind) {
          case SchurLetter::E:
            if (l.index == n) {
              img.push_back(SchurLetter::e(n));
              img.push_back(SchurLetter::e(n + 1));
            } else if (l.index == -n) {
              img.push_back(SchurLetter::e(-(n + 1)));
              img.push_back(SchurLetter::e(-n));
            } else {
              img.push_back(l);
            }
            break;
          case SchurLetter::K:
            img.push_back(l);
            break;
          case SchurLetter::Idem: {
            Composition m = l.weight;
            m.push_back(0);
            img.push_back(SchurLetter::idem(m));
            break;
          }
          case SchurLetter::R:
            throw std::invalid_argument("iota: R is not in the image of S(n,r)");
        }
      }
      out.add(img, c);
    }
  }
  return out;
}

namespace {

// Weight after applying the E letters of w (rightmost first) to lambda;
// false if some intermediate weight leaves Lambda(n, r).
bool stays_in_range(int n, const std::vector<int>& signed_indices, Composition lambda) {
  for (auto it = signed_indices.rbegin(); it != signed_indices.rend(); ++it) {
    lambda = shift_weight(lambda, std::abs(*it), *it > 0 ? 1 : -1, n);
    if (!in_range(lambda)) return false;
  }
  return true;
}

SchurElement word_at(const std::vector<int>& s, const Composition& l) {
  SchurWord w = e_word(s);
  w.push_back(SchurLetter::idem(l));
  return SchurElement(w);
}

std::string sgn(int s) { return s > 0 ? "+" : "-"; }

bool distant(int i, int j, int n) {
  int d = ((i - j) % n + n) % n;
  return d != 0 && d != 1 && d != n - 1;
}

}  // namespace

std::vector<SchurRelation> presentation_relations(int n, int r) {
  std::vector<SchurRelation> rels;
  const auto lambdas = compositions(n, r);

  for (const auto& l : lambdas)
    for (const auto& m : lambdas) {
      SchurElement lhs(SchurWord{SchurLetter::idem(l), SchurLetter::idem(m)});
      SchurElement rhs = l == m ? SchurElement(SchurWord{SchurLetter::idem(l)}) : SchurElement();
      rels.push_back({"idem" + composition_str(l) + composition_str(m), lhs, rhs});
    }

  SchurElement unit;
  for (const auto& l : lambdas) unit.add(SchurWord{SchurLetter::idem(l)}, RatQ(1));
  rels.push_back({"unit", unit, SchurElement(SchurWord{})});

  for (int s : {1, -1})
    for (int i = 1; i <= n; ++i)
      for (const auto& l : lambdas) {
        Composition m = shift_weight(l, i, s, n);
        SchurElement rhs;
        if (in_range(m)) rhs = SchurElement(SchurWord{SchurLetter::idem(m), SchurLetter::e(s * i)});
        rels.push_back({"weight[" + sgn(s) + std::to_string(i) + "]" + composition_str(l),
                        word_at({s * i}, l), rhs});
      }

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (const auto& l : lambdas) {
        if (!stays_in_range(n, {i, -j}, l) && !stays_in_range(n, {-j, i}, l)) continue;
        SchurElement lhs = word_at({i, -j}, l) - word_at({-j, i}, l);
        SchurElement rhs;
        if (i == j) {
          int a = l[static_cast<size_t>(i - 1)] - l[static_cast<size_t>(next_color(i, n) - 1)];
          rhs = SchurElement(SchurWord{SchurLetter::idem(l)}, qint(a));
        }
        rels.push_back({"comm[" + std::to_string(i) + "," + std::to_string(j) + "]" +
                            composition_str(l),
                        lhs, rhs});
      }

  const RatQ two = qint(2);
  for (int s : {1, -1})
    for (int i = 1; i <= n; ++i)
      for (int d : {1, -1}) {
        int j = ((i - 1 + d) % n + n) % n + 1;
        int a = s * i, b = s * j;
        for (const auto& l : lambdas) {
          std::vector<std::vector<int>> words{{a, a, b}, {a, b, a}, {b, a, a}};
          if (std::none_of(words.begin(), words.end(),
                           [&](const auto& w) { return stays_in_range(n, w, l); }))
            continue;
          SchurElement lhs = word_at(words[0], l) - two * word_at(words[1], l) + word_at(words[2], l);
          rels.push_back({"serre[" + sgn(s) + std::to_string(i) + "," + sgn(s) + std::to_string(j) +
                              "]" + composition_str(l),
                          lhs, SchurElement()});
        }
      }

  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (!distant(i, j, n)) continue;
      for (int s : {1, -1})
        for (int t : {1, -1})
          for (const auto& l : lambdas) {
            if (!stays_in_range(n, {s * i, t * j}, l) && !stays_in_range(n, {t * j, s * i}, l))
              continue;
            SchurElement lhs = word_at({s * i, t * j}, l) - word_at({t * j, s * i}, l);
            rels.push_back({"distant[" + sgn(s) + std::to_string(i) + "," + sgn(t) +
                                std::to_string(j) + "]" + composition_str(l),
                            lhs, SchurElement()});
          }
    }
  return rels;
}

}  // namespace affcat
