#include "affcat/soergel.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "affcat/parse.hpp"

namespace affcat {

// ---------------------------------------------------------------------------
// Objects

SoergelObject::SoergelObject(int rank, std::vector<int> word, int grading_shift)
    : r(rank), letters(std::move(word)), shift(grading_shift) {
  if (r < 3) throw std::invalid_argument("Soergel objects need r >= 3");
  for (int l : letters)
    if (l != kPlus && l != kMinus && (l < 1 || l > r))
      throw std::invalid_argument("letter " + std::to_string(l) + " out of range for r = " +
                                  std::to_string(r));
}

int SoergelObject::unoriented() const {
  return static_cast<int>(std::count_if(letters.begin(), letters.end(), [](int l) { return l > 0; }));
}

int SoergelObject::twist() const {
  int k = 0;
  for (int l : letters) k += l == kPlus ? 1 : l == kMinus ? -1 : 0;
  return k;
}

std::string letter_str(int letter) {
  if (letter == kPlus) return "+";
  if (letter == kMinus) return "-";
  return std::to_string(letter);
}

std::string SoergelObject::str() const {
  std::string s;
  for (size_t k = 0; k < letters.size(); ++k) s += (k ? "," : "") + letter_str(letters[k]);
  if (s.empty()) s = "()";
  if (shift != 0) s += "{" + std::to_string(shift) + "}";
  return s;
}

SoergelObject parse_object(int r, const std::string& text) {
  std::vector<int> letters;
  Cursor c(text);
  c.accept('(');
  while (!c.at_end() && c.peek() != ')') {
    if (c.accept('+')) {
      letters.push_back(kPlus);
    } else if (c.accept('-')) {
      letters.push_back(kMinus);
    } else if (c.peek_digit()) {
      size_t at = c.pos();
      long v = c.small_int();
      if (v < 1 || v > r) throw ParseError("colour out of range", at);
      letters.push_back(static_cast<int>(v));
    } else {
      c.fail("expected a colour, '+' or '-'");
    }
    c.accept(',');
  }
  c.accept(')');
  if (!c.at_end()) c.fail("trailing characters");
  return SoergelObject(r, std::move(letters));
}

int wrap_colour(int c, int r) { return ((c - 1) % r + r) % r + 1; }

bool adjacent_colours(int i, int j, int r) {
  return wrap_colour(i + 1, r) == wrap_colour(j, r) || wrap_colour(j + 1, r) == wrap_colour(i, r);
}

bool distant_colours(int i, int j, int r) {
  return wrap_colour(i, r) != wrap_colour(j, r) && !adjacent_colours(i, j, r);
}

// ---------------------------------------------------------------------------
// Slot layout and normalization

namespace {

// Per-object data for the slot model: colour of the j-th unoriented letter
// (1-based), the net twist of the oriented letters between unoriented letter
// j-1 and j, and the twist after the last unoriented letter.
struct Layout {
  std::vector<int> colour;  // colour[0] unused
  std::vector<int> tau;     // tau[0] unused
  int trailing = 0;

  explicit Layout(const SoergelObject& obj) : colour{0}, tau{0} {
    int run = 0;
    for (int l : obj.letters) {
      if (l > 0) {
        colour.push_back(l);
        tau.push_back(run);
        run = 0;
      } else {
        run += l == kPlus ? 1 : -1;
      }
    }
    trailing = run;
  }
  int m() const { return static_cast<int>(colour.size()) - 1; }
};

GradedPoly transport(int k, int r, const GradedPoly& p) { return k == 0 ? p : rho_act(k, r, p); }

GradedPoly slot_value(const Layout& lay, int r, BimElement::Tag tag, int j) {
  return (tag >> (j - 1)) & 1u ? basis_b(lay.colour[static_cast<size_t>(j)], r) : GradedPoly(1);
}

// Pushes the raw slots v[0..start] to the left.  Slots above `start` are
// already canonical and recorded in `high`.
void push_left(const Layout& lay, int r, const std::vector<GradedPoly>& v, int j, const GradedPoly& cur,
               BimElement::Tag tag, BimElement& out) {
  if (cur.is_zero()) return;
  if (j == 0) {
    out.add(tag, cur);
    return;
  }
  auto [a, b] = split_invariant(lay.colour[static_cast<size_t>(j)], r, cur);
  const GradedPoly& below = v[static_cast<size_t>(j - 1)];
  int tw = lay.tau[static_cast<size_t>(j)];
  if (!a.is_zero()) {
    GradedPoly t = transport(tw, r, a);
    push_left(lay, r, v, j - 1, below.is_constant() ? t * below.constant_term() : below * t, tag, out);
  }
  if (!b.is_zero()) {
    GradedPoly t = transport(tw, r, b);
    push_left(lay, r, v, j - 1, below.is_constant() ? t * below.constant_term() : below * t,
              tag | (BimElement::Tag(1) << (j - 1)), out);
  }
}

void push_raw(const Layout& lay, int r, const std::vector<GradedPoly>& v, int start, BimElement::Tag high,
              BimElement& out) {
  push_left(lay, r, v, start, v[static_cast<size_t>(start)], high, out);
}

}  // namespace

BimElement BimElement::basis(const SoergelObject& obj, Tag tag, const GradedPoly& coef) {
  BimElement e(obj);
  e.add(tag, coef);
  return e;
}

BimElement BimElement::normalize(const SoergelObject& obj, const std::vector<RawTerm>& raw) {
  Layout lay(obj);
  BimElement out(obj);
  for (const RawTerm& v : raw) {
    if (static_cast<int>(v.size()) != lay.m() + 1)
      throw std::invalid_argument("raw tensor has " + std::to_string(v.size()) + " slots, object " +
                                  obj.str() + " needs " + std::to_string(lay.m() + 1));
    push_raw(lay, obj.r, v, lay.m(), 0, out);
  }
  return out;
}

GradedPoly BimElement::coeff(Tag t) const {
  auto it = c_.find(t);
  return it == c_.end() ? GradedPoly() : it->second;
}

void BimElement::add(Tag t, const GradedPoly& coef) {
  if (coef.is_zero()) return;
  auto [it, fresh] = c_.emplace(t, coef);
  if (!fresh) {
    it->second += coef;
    if (it->second.is_zero()) c_.erase(it);
  }
}

BimElement& BimElement::operator+=(const BimElement& o) {
  if (o.obj_.letters != obj_.letters) throw std::invalid_argument("adding elements of different objects");
  for (const auto& [t, c] : o.c_) add(t, c);
  return *this;
}

BimElement& BimElement::operator-=(const BimElement& o) {
  if (o.obj_.letters != obj_.letters) throw std::invalid_argument("subtracting elements of different objects");
  for (const auto& [t, c] : o.c_) add(t, -c);
  return *this;
}

BimElement BimElement::operator-() const {
  BimElement e(obj_);
  for (const auto& [t, c] : c_) e.c_.emplace(t, -c);
  return e;
}

BimElement operator*(const mpq_class& s, const BimElement& e) {
  BimElement out(e.obj_);
  if (s == 0) return out;
  for (const auto& [t, c] : e.c_) out.c_.emplace(t, c * s);
  return out;
}

BimElement BimElement::left_mul(const GradedPoly& p) const {
  BimElement out(obj_);
  for (const auto& [t, c] : c_) out.add(t, p * c);
  return out;
}

BimElement BimElement::right_mul(const GradedPoly& p) const {
  Layout lay(obj_);
  int m = lay.m();
  GradedPoly moved = transport(lay.trailing, obj_.r, p);
  BimElement out(obj_);
  for (const auto& [t, c] : c_) {
    if (m == 0) {
      out.add(t, c * moved);
      continue;
    }
    std::vector<GradedPoly> v(static_cast<size_t>(m) + 1);
    v[0] = c;
    for (int j = 1; j <= m; ++j) v[static_cast<size_t>(j)] = slot_value(lay, obj_.r, t, j);
    v[static_cast<size_t>(m)] = v[static_cast<size_t>(m)] * moved;
    push_raw(lay, obj_.r, v, m, 0, out);
  }
  return out;
}

int BimElement::tag_degree(const SoergelObject& obj, Tag t) {
  return 2 * __builtin_popcount(t) - obj.unoriented() + obj.shift;
}

std::optional<int> BimElement::degree() const {
  std::optional<int> d;
  for (const auto& [t, c] : c_) {
    if (!c.is_homogeneous()) return std::nullopt;
    int here = c.degree() + tag_degree(obj_, t);
    if (d && *d != here) return std::nullopt;
    d = here;
  }
  if (!d) return 0;
  return d;
}

std::string BimElement::str() const {
  if (c_.empty()) return "0";
  int m = obj_.unoriented();
  std::string s;
  bool first = true;
  for (const auto& [t, c] : c_) {
    std::string tag = "[";
    for (int j = 1; j <= m; ++j) tag += std::string(j > 1 ? "|" : "") + ((t >> (j - 1)) & 1u ? "b" : "1");
    tag += "]";
    std::string cs = c.str();
    bool neg = false;
    if (c.terms().size() == 1 && cs[0] == '-') {
      neg = true;
      cs = (-c).str();
    }
    if (!first) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    first = false;
    if (cs == "1") s += tag;
    else if (c.terms().size() == 1) s += cs + "*" + tag;
    else s += "(" + cs + ")*" + tag;
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const BimElement& e) { return os << e.str(); }

BimElement parse_element(const SoergelObject& obj, const std::string& text) {
  size_t need = static_cast<size_t>(obj.unoriented()) + 1;
  std::vector<BimElement::RawTerm> raw;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    std::string term = text.substr(start, end - start);
    BimElement::RawTerm slots;
    size_t s0 = 0;
    while (s0 <= term.size()) {
      size_t s1 = term.find('|', s0);
      if (s1 == std::string::npos) s1 = term.size();
      std::string piece = term.substr(s0, s1 - s0);
      try {
        slots.push_back(GradedPoly::parse(piece));
      } catch (const ParseError& e) {
        throw ParseError(std::string("in slot ") + std::to_string(slots.size()) + ": " + e.what(),
                         start + s0 + e.position());
      }
      s0 = s1 + 1;
    }
    if (slots.size() != need)
      throw ParseError("pure tensor has " + std::to_string(slots.size()) + " slots, object " + obj.str() +
                           " needs " + std::to_string(need),
                       start);
    raw.push_back(std::move(slots));
    start = end + 1;
  }
  return BimElement::normalize(obj, raw);
}

// ---------------------------------------------------------------------------
// Generators

namespace {

void check_colour(int r, int c) {
  if (c < 1 || c > r) throw std::invalid_argument("colour " + std::to_string(c) + " out of range");
}

}  // namespace

std::vector<int> gen_source(int r, const Generator& g) {
  int i = g.i, j = g.j;
  switch (g.kind) {
    case GenKind::EndDot: check_colour(r, i); return {i};
    case GenKind::StartDot: check_colour(r, i); return {};
    case GenKind::Merge: check_colour(r, i); return {i, i};
    case GenKind::Split: check_colour(r, i); return {i};
    case GenKind::V4:
      check_colour(r, i);
      check_colour(r, j);
      if (!distant_colours(i, j, r)) throw std::invalid_argument("v4 needs distant colours");
      return {i, j};
    case GenKind::V6:
      check_colour(r, i);
      check_colour(r, j);
      if (!adjacent_colours(i, j, r)) throw std::invalid_argument("v6 needs adjacent colours");
      return {i, j, i};
    case GenKind::CapPlus: return {kPlus, kMinus};
    case GenKind::CapMinus: return {kMinus, kPlus};
    case GenKind::CupPlus:
    case GenKind::CupMinus: return {};
    case GenKind::M4UR: check_colour(r, i); return {kPlus, i};
    case GenKind::M4UL: check_colour(r, i); return {wrap_colour(i + 1, r), kPlus};
    case GenKind::M4DR: check_colour(r, i); return {i, kMinus};
    case GenKind::M4DL: check_colour(r, i); return {kMinus, wrap_colour(i + 1, r)};
    case GenKind::BoxX: check_colour(r, i); return {};
    case GenKind::BoxY: return {};
  }
  throw std::logic_error("unknown generator");
}

std::vector<int> gen_target(int r, const Generator& g) {
  int i = g.i, j = g.j;
  gen_source(r, g);  // validates
  switch (g.kind) {
    case GenKind::EndDot: return {};
    case GenKind::StartDot: return {i};
    case GenKind::Merge: return {i};
    case GenKind::Split: return {i, i};
    case GenKind::V4: return {j, i};
    case GenKind::V6: return {j, i, j};
    case GenKind::CapPlus:
    case GenKind::CapMinus: return {};
    case GenKind::CupPlus: return {kPlus, kMinus};
    case GenKind::CupMinus: return {kMinus, kPlus};
    case GenKind::M4UR: return {wrap_colour(i + 1, r), kPlus};
    case GenKind::M4UL: return {kPlus, i};
    case GenKind::M4DR: return {kMinus, wrap_colour(i + 1, r)};
    case GenKind::M4DL: return {i, kMinus};
    case GenKind::BoxX:
    case GenKind::BoxY: return {};
  }
  throw std::logic_error("unknown generator");
}

int gen_degree(const Generator& g) {
  switch (g.kind) {
    case GenKind::EndDot:
    case GenKind::StartDot: return 1;
    case GenKind::Merge:
    case GenKind::Split: return -1;
    case GenKind::BoxX:
    case GenKind::BoxY: return 2;
    default: return 0;
  }
}

std::string gen_str(const Generator& g) {
  auto one = [&](const char* name) { return std::string(name) + "(" + std::to_string(g.i) + ")"; };
  auto two = [&](const char* name) {
    return std::string(name) + "(" + std::to_string(g.i) + "," + std::to_string(g.j) + ")";
  };
  switch (g.kind) {
    case GenKind::EndDot: return one("enddot");
    case GenKind::StartDot: return one("startdot");
    case GenKind::Merge: return one("merge");
    case GenKind::Split: return one("split");
    case GenKind::V4: return two("v4");
    case GenKind::V6: return two("v6");
    case GenKind::CapPlus: return "cap+";
    case GenKind::CapMinus: return "cap-";
    case GenKind::CupPlus: return "cup+";
    case GenKind::CupMinus: return "cup-";
    case GenKind::M4UR: return one("m4ur");
    case GenKind::M4UL: return one("m4ul");
    case GenKind::M4DR: return one("m4dr");
    case GenKind::M4DL: return one("m4dl");
    case GenKind::BoxX: return one("box");
    case GenKind::BoxY: return "box(y)";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Bimodule maps from generator images

namespace {

// Row reduction over Q.  Returns the rank of `rows` (each of length n).
size_t rank_of(std::vector<std::vector<mpq_class>> rows, size_t n) {
  size_t rank = 0;
  for (size_t col = 0; col < n && rank < rows.size(); ++col) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (size_t k = 0; k < rows.size(); ++k) {
      if (k == rank || rows[k][col] == 0) continue;
      mpq_class f = rows[k][col] / rows[rank][col];
      for (size_t c = col; c < n; ++c) rows[k][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<mpq_class>> invert(std::vector<std::vector<mpq_class>> a) {
  size_t n = a.size();
  std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(n, 0));
  for (size_t k = 0; k < n; ++k) inv[k][k] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::runtime_error("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    mpq_class d = a[col][col];
    for (size_t c = 0; c < n; ++c) {
      a[col][c] /= d;
      inv[col][c] /= d;
    }
    for (size_t k = 0; k < n; ++k) {
      if (k == col || a[k][col] == 0) continue;
      mpq_class f = a[k][col];
      for (size_t c = 0; c < n; ++c) {
        a[k][c] -= f * a[col][c];
        inv[k][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

// Monomials in y, x1..xr with total (variable) degree exactly d.
void monomials(int nvars, int d, std::vector<Exponent>& out) {
  Exponent e(static_cast<size_t>(nvars), 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == nvars - 1) {
      e[static_cast<size_t>(var)] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[static_cast<size_t>(var)] = k;
      rec(var + 1, left - k);
    }
  };
  rec(0, d);
}

int raw_degree(const BimElement& e) {
  auto d = e.degree();
  if (!d) throw std::runtime_error("generator image is not homogeneous: " + e.str());
  return *d + e.object().unoriented() - e.object().shift;
}

}  // namespace

std::vector<BimElement> extend_bimodule_map(const SoergelObject& source, const SoergelObject& target,
                                            const std::vector<BimElement>& gens,
                                            const std::vector<BimElement>& images) {
  if (gens.size() != images.size()) throw std::invalid_argument("generator/image count mismatch");
  int m = source.unoriented();
  size_t ntags = size_t(1) << m;
  std::vector<int> gdeg;
  for (const auto& g : gens) gdeg.push_back(raw_degree(g));

  // Chosen candidates g_k * mono: the element itself and its image.
  std::vector<BimElement> cand, cand_img;
  // A[t]: tag t as a left combination of the chosen candidates.
  std::vector<std::map<size_t, GradedPoly>> A(ntags);

  for (int level = 0; level <= m; ++level) {
    std::vector<BimElement::Tag> tags;
    for (BimElement::Tag t = 0; t < ntags; ++t)
      if (__builtin_popcount(t) == level) tags.push_back(t);
    auto row_of = [&](const BimElement& c) {
      std::vector<mpq_class> row;
      for (auto t : tags) row.push_back(c.coeff(t).constant_term());
      return row;
    };
    std::vector<std::vector<mpq_class>> rows;
    std::vector<size_t> chosen;
    for (size_t k = 0; k < gens.size() && rows.size() < tags.size(); ++k) {
      int md = 2 * level - gdeg[k];
      if (md < 0 || md % 2) continue;
      std::vector<Exponent> monos;
      monomials(source.r + 1, md / 2, monos);
      for (const Exponent& mono : monos) {
        if (rows.size() == tags.size()) break;
        GradedPoly mp = GradedPoly::monomial(mono, 1);
        BimElement c = gens[k].right_mul(mp);
        auto row = row_of(c);
        auto trial = rows;
        trial.push_back(row);
        if (rank_of(trial, tags.size()) == trial.size()) {
          rows.push_back(row);
          chosen.push_back(cand.size());
          cand.push_back(std::move(c));
          cand_img.push_back(images[k].right_mul(mp));
        }
      }
    }
    if (rows.size() < tags.size())
      throw std::runtime_error("bimodule generators do not span degree " + std::to_string(2 * level));
    // cand_k = D e_level + lower terms, so e_level = D^{-1}(cand_k - lower).
    std::vector<std::map<size_t, GradedPoly>> rest;
    for (size_t k : chosen) {
      std::map<size_t, GradedPoly> comb;
      comb[k] = GradedPoly(1);
      for (const auto& [t, c] : cand[k].coords()) {
        if (__builtin_popcount(t) >= level) continue;
        for (const auto& [kk, a] : A[t]) {
          comb[kk] -= c * a;
          if (comb[kk].is_zero()) comb.erase(kk);
        }
      }
      rest.push_back(std::move(comb));
    }
    auto dinv = invert(rows);  // rows index candidates, columns tags
    // rows = D with cand = D e; e = D^{-1} cand, so e_t = sum_k Dinv[t][k] rest_k.
    for (size_t ti = 0; ti < tags.size(); ++ti) {
      std::map<size_t, GradedPoly> comb;
      for (size_t k = 0; k < chosen.size(); ++k) {
        if (dinv[ti][k] == 0) continue;
        for (const auto& [kk, a] : rest[k]) {
          comb[kk] += a * dinv[ti][k];
          if (comb[kk].is_zero()) comb.erase(kk);
        }
      }
      A[tags[ti]] = std::move(comb);
    }
  }

  std::vector<BimElement> out;
  for (BimElement::Tag t = 0; t < ntags; ++t) {
    BimElement img(target);
    for (const auto& [k, a] : A[t]) img += cand_img[k].left_mul(a);
    out.push_back(std::move(img));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Local images

namespace {

using Raw = BimElement::RawTerm;

std::vector<BimElement> compute_local(int r, const Generator& g) {
  SoergelObject src(r, gen_source(r, g)), tgt(r, gen_target(r, g));
  int m = src.unoriented();
  std::vector<BimElement> out;
  if (g.kind == GenKind::V6) {
    // f(1⊗1⊗1⊗1) = 1⊗1⊗1⊗1 and f(1⊗(X_j⊗1 + 1⊗X_j)⊗1) = 0.
    GradedPoly X = simple_root(g.j, r);
    BimElement g1 = BimElement::basis(src, 0);
    BimElement g2 = BimElement::normalize(src, {Raw{1, X, 1, 1}, Raw{1, 1, X, 1}});
    return extend_bimodule_map(src, tgt, {g1, g2}, {BimElement::basis(tgt, 0), BimElement(tgt)});
  }
  Layout lay(src);
  for (BimElement::Tag t = 0; t < (BimElement::Tag(1) << m); ++t) {
    auto s = [&](int k) { return slot_value(lay, r, t, k); };
    std::vector<Raw> raw;
    switch (g.kind) {
      case GenKind::EndDot: raw.push_back({s(1)}); break;
      case GenKind::StartDot: {
        GradedPoly half = GradedPoly(mpq_class(1, 2)), X = simple_root(g.i, r);
        raw.push_back({X * mpq_class(1, 2), 1});
        raw.push_back({half, X});
        break;
      }
      case GenKind::Merge: raw.push_back({demazure(g.i, r, s(1)), s(2)}); break;
      case GenKind::Split: raw.push_back({1, 1, s(1)}); break;
      case GenKind::V4: raw.push_back({1, 1, s(1) * s(2)}); break;
      case GenKind::CapPlus:
      case GenKind::CapMinus:
      case GenKind::CupPlus:
      case GenKind::CupMinus: raw.push_back({1}); break;
      case GenKind::M4UR:
      case GenKind::M4DR: raw.push_back({1, rho_act(1, r, s(1))}); break;
      case GenKind::M4UL:
      case GenKind::M4DL: raw.push_back({1, rho_act(-1, r, s(1))}); break;
      case GenKind::BoxX: raw.push_back({GradedPoly::x(g.i)}); break;
      case GenKind::BoxY: raw.push_back({GradedPoly::y()}); break;
      case GenKind::V6: break;
    }
    out.push_back(BimElement::normalize(tgt, raw));
  }
  return out;
}

}  // namespace

const std::vector<BimElement>& local_images(int r, const Generator& g) {
  static std::mutex mu;
  static std::map<std::pair<int, Generator>, std::vector<BimElement>> cache;
  auto key = std::make_pair(r, g);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto images = compute_local(r, g);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(images)).first->second;
}

BimElement apply_gen(const Generator& g, size_t pos, const BimElement& e) {
  const SoergelObject& obj = e.object();
  int r = obj.r;
  std::vector<int> src = gen_source(r, g), tgt = gen_target(r, g);
  if (pos + src.size() > obj.size() ||
      !std::equal(src.begin(), src.end(), obj.letters.begin() + static_cast<long>(pos)))
    throw std::invalid_argument(gen_str(g) + " does not match object " + obj.str() + " at position " +
                                std::to_string(pos));
  std::vector<int> letters(obj.letters.begin(), obj.letters.begin() + static_cast<long>(pos));
  letters.insert(letters.end(), tgt.begin(), tgt.end());
  letters.insert(letters.end(), obj.letters.begin() + static_cast<long>(pos + src.size()), obj.letters.end());
  SoergelObject out_obj(r, std::move(letters), obj.shift);

  // L unoriented letters before the region; tw = twist between the last of
  // them and the region.
  int L = 0, tw = 0;
  for (size_t k = 0; k < pos; ++k) {
    if (obj.letters[k] > 0) {
      ++L;
      tw = 0;
    } else {
      tw += obj.letters[k] == kPlus ? 1 : -1;
    }
  }
  int usrc = static_cast<int>(std::count_if(src.begin(), src.end(), [](int l) { return l > 0; }));
  int utgt = static_cast<int>(std::count_if(tgt.begin(), tgt.end(), [](int l) { return l > 0; }));
  const auto& imgs = local_images(r, g);
  Layout lay_in(obj), lay_out(out_obj);
  BimElement out(out_obj);
  BimElement::Tag low_mask = (BimElement::Tag(1) << L) - 1;
  for (const auto& [t, c] : e.coords()) {
    BimElement::Tag local = (t >> L) & ((BimElement::Tag(1) << usrc) - 1);
    BimElement::Tag above = t >> (L + usrc);
    for (const auto& [lt, lc] : imgs[local].coords()) {
      BimElement::Tag high = (lt << L) | (above << (L + utgt));
      if (L == 0) {
        out.add(high, c * transport(tw, r, lc));
        continue;
      }
      std::vector<GradedPoly> v(static_cast<size_t>(L) + 1);
      v[0] = c;
      for (int j = 1; j <= L; ++j) v[static_cast<size_t>(j)] = slot_value(lay_in, r, t & low_mask, j);
      v[static_cast<size_t>(L)] = v[static_cast<size_t>(L)] * transport(tw, r, lc);
      push_raw(lay_out, r, v, L, high, out);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Morphism expressions

struct Morphism::Node {
  enum class Type { Gen, Id, Zero, VComp, HComp, Sum, Scale } type = Type::Id;
  int r = 3;
  Generator g;
  std::vector<int> src, tgt;
  std::shared_ptr<const Node> a, b;
  mpq_class c;
};

Morphism Morphism::gen(int r, const Generator& g) {
  auto n = std::make_shared<Node>();
  n->type = Node::Type::Gen;
  n->r = r;
  n->g = g;
  n->src = gen_source(r, g);
  n->tgt = gen_target(r, g);
  return Morphism(n);
}

Morphism Morphism::id(int r, std::vector<int> letters) {
  SoergelObject check(r, letters);
  auto n = std::make_shared<Node>();
  n->type = Node::Type::Id;
  n->r = r;
  n->src = letters;
  n->tgt = std::move(letters);
  return Morphism(n);
}

Morphism Morphism::zero(int r, std::vector<int> source, std::vector<int> target) {
  auto n = std::make_shared<Node>();
  n->type = Node::Type::Zero;
  n->r = r;
  n->src = std::move(source);
  n->tgt = std::move(target);
  return Morphism(n);
}

Morphism Morphism::vcomp(const Morphism& a, const Morphism& b) {
  if (a.n_->src != b.n_->tgt || a.n_->r != b.n_->r)
    throw std::invalid_argument("composition mismatch: " + a.str() + " after " + b.str());
  auto n = std::make_shared<Node>();
  n->type = Node::Type::VComp;
  n->r = a.n_->r;
  n->src = b.n_->src;
  n->tgt = a.n_->tgt;
  n->a = a.n_;
  n->b = b.n_;
  return Morphism(n);
}

Morphism Morphism::hcomp(const Morphism& a, const Morphism& b) {
  if (a.n_->r != b.n_->r) throw std::invalid_argument("hcomp of different ranks");
  // The empty identity is the unit for hcomp.
  if (a.n_->type == Node::Type::Id && a.n_->src.empty()) return b;
  if (b.n_->type == Node::Type::Id && b.n_->src.empty()) return a;
  auto n = std::make_shared<Node>();
  n->type = Node::Type::HComp;
  n->r = a.n_->r;
  n->src = a.n_->src;
  n->src.insert(n->src.end(), b.n_->src.begin(), b.n_->src.end());
  n->tgt = a.n_->tgt;
  n->tgt.insert(n->tgt.end(), b.n_->tgt.begin(), b.n_->tgt.end());
  n->a = a.n_;
  n->b = b.n_;
  return Morphism(n);
}

Morphism Morphism::sum(const Morphism& a, const Morphism& b) {
  if (a.n_->src != b.n_->src || a.n_->tgt != b.n_->tgt)
    throw std::invalid_argument("sum of morphisms with different source or target");
  auto n = std::make_shared<Node>();
  n->type = Node::Type::Sum;
  n->r = a.n_->r;
  n->src = a.n_->src;
  n->tgt = a.n_->tgt;
  n->a = a.n_;
  n->b = b.n_;
  return Morphism(n);
}

Morphism Morphism::scale(const mpq_class& c, const Morphism& a) {
  auto n = std::make_shared<Node>();
  n->type = Node::Type::Scale;
  n->r = a.n_->r;
  n->src = a.n_->src;
  n->tgt = a.n_->tgt;
  n->a = a.n_;
  n->c = c;
  return Morphism(n);
}

int Morphism::rank() const { return n_->r; }
const std::vector<int>& Morphism::source() const { return n_->src; }
const std::vector<int>& Morphism::target() const { return n_->tgt; }

namespace {

using NodeP = std::shared_ptr<const Morphism::Node>;

int node_degree(const NodeP& n) {
  using T = Morphism::Node::Type;
  switch (n->type) {
    case T::Gen: return gen_degree(n->g);
    case T::Id:
    case T::Zero: return 0;
    case T::VComp:
    case T::HComp: return node_degree(n->a) + node_degree(n->b);
    case T::Sum:
    case T::Scale: return node_degree(n->a);
  }
  return 0;
}

std::string letters_str(const std::vector<int>& w) {
  std::string s;
  for (size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + letter_str(w[k]);
  return s;
}

std::string node_str(const NodeP& n) {
  using T = Morphism::Node::Type;
  switch (n->type) {
    case T::Gen: return gen_str(n->g);
    case T::Id: return "id(" + letters_str(n->src) + ")";
    case T::Zero: return "0";
    case T::VComp: return "vcomp(" + node_str(n->a) + "," + node_str(n->b) + ")";
    case T::HComp: return "hcomp(" + node_str(n->a) + "," + node_str(n->b) + ")";
    case T::Sum: return "(" + node_str(n->a) + " + " + node_str(n->b) + ")";
    case T::Scale: return n->c.get_str() + "*" + node_str(n->a);
  }
  return "?";
}

BimElement node_apply(const NodeP& n, const BimElement& e, size_t pos) {
  using T = Morphism::Node::Type;
  switch (n->type) {
    case T::Gen: return apply_gen(n->g, pos, e);
    case T::Id: {
      const auto& l = e.object().letters;
      if (pos + n->src.size() > l.size() ||
          !std::equal(n->src.begin(), n->src.end(), l.begin() + static_cast<long>(pos)))
        throw std::invalid_argument("identity does not match object " + e.object().str());
      return e;
    }
    case T::Zero: {
      const SoergelObject& obj = e.object();
      std::vector<int> letters(obj.letters.begin(), obj.letters.begin() + static_cast<long>(pos));
      letters.insert(letters.end(), n->tgt.begin(), n->tgt.end());
      letters.insert(letters.end(), obj.letters.begin() + static_cast<long>(pos + n->src.size()),
                     obj.letters.end());
      return BimElement(SoergelObject(obj.r, std::move(letters), obj.shift));
    }
    case T::VComp: return node_apply(n->a, node_apply(n->b, e, pos), pos);
    case T::HComp: return node_apply(n->a, node_apply(n->b, e, pos + n->a->src.size()), pos);
    case T::Sum: return node_apply(n->a, e, pos) + node_apply(n->b, e, pos);
    case T::Scale: return n->c * node_apply(n->a, e, pos);
  }
  throw std::logic_error("bad node");
}

}  // namespace

int Morphism::degree() const { return node_degree(n_); }
std::string Morphism::str() const { return node_str(n_); }
BimElement Morphism::apply(const BimElement& e, size_t pos) const { return node_apply(n_, e, pos); }

BimElement apply_morphism(const Morphism& m, const BimElement& e) {
  if (e.object().letters != m.source())
    throw std::invalid_argument("composition mismatch: morphism source " + letters_str(m.source()) +
                                " but element lives in " + e.object().str());
  return m.apply(e, 0);
}

namespace {

Morphism parse_morph(int r, Cursor& c) {
  c.skip_ws();
  size_t at = c.pos();
  std::string name = c.identifier();
  auto colour = [&]() {
    size_t p = c.pos();
    long v = c.small_int();
    if (v < 1 || v > r) throw ParseError("colour out of range", p);
    return static_cast<int>(v);
  };
  auto one = [&](GenKind k) {
    c.expect('(');
    int i = colour();
    c.expect(')');
    return Morphism::gen(r, Generator{k, i, 0});
  };
  try {
    if (name == "vcomp" || name == "hcomp") {
      c.expect('(');
      Morphism a = parse_morph(r, c);
      c.expect(',');
      Morphism b = parse_morph(r, c);
      c.expect(')');
      return name == "vcomp" ? Morphism::vcomp(a, b) : Morphism::hcomp(a, b);
    }
    if (name == "enddot") return one(GenKind::EndDot);
    if (name == "startdot") return one(GenKind::StartDot);
    if (name == "merge") return one(GenKind::Merge);
    if (name == "split") return one(GenKind::Split);
    if (name == "m4ur") return one(GenKind::M4UR);
    if (name == "m4ul") return one(GenKind::M4UL);
    if (name == "m4dr") return one(GenKind::M4DR);
    if (name == "m4dl") return one(GenKind::M4DL);
    if (name == "v4" || name == "v6") {
      c.expect('(');
      int i = colour();
      c.expect(',');
      int j = colour();
      c.expect(')');
      return Morphism::gen(r, Generator{name == "v4" ? GenKind::V4 : GenKind::V6, i, j});
    }
    if (name == "cap" || name == "cup") {
      bool plus = c.accept('+');
      if (!plus && !c.accept('-')) c.fail("expected '+' or '-'");
      GenKind k = name == "cap" ? (plus ? GenKind::CapPlus : GenKind::CapMinus)
                                : (plus ? GenKind::CupPlus : GenKind::CupMinus);
      return Morphism::gen(r, Generator{k, 0, 0});
    }
    if (name == "box") {
      c.expect('(');
      if (c.accept('y')) {
        c.expect(')');
        return Morphism::gen(r, Generator{GenKind::BoxY, 0, 0});
      }
      int i = colour();
      c.expect(')');
      return Morphism::gen(r, Generator{GenKind::BoxX, i, 0});
    }
    if (name == "id") {
      c.expect('(');
      std::vector<int> letters;
      while (c.peek() != ')') {
        if (c.accept('+')) letters.push_back(kPlus);
        else if (c.accept('-')) letters.push_back(kMinus);
        else letters.push_back(colour());
        if (!c.accept(',')) break;
      }
      c.expect(')');
      return Morphism::id(r, letters);
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), at);
  }
  throw ParseError("unknown morphism '" + name + "'", at);
}

}  // namespace

Morphism parse_morphism(int r, const std::string& text) {
  Cursor c(text);
  Morphism m = parse_morph(r, c);
  if (!c.at_end()) c.fail("trailing characters");
  return m;
}

bool morphisms_equal(const Morphism& a, const Morphism& b, std::string* witness) {
  if (a.source() != b.source() || a.target() != b.target()) {
    if (witness) *witness = "source/target mismatch: " + a.str() + " vs " + b.str();
    return false;
  }
  SoergelObject src(a.rank(), a.source());
  BimElement::Tag ntags = BimElement::Tag(1) << src.unoriented();
  for (BimElement::Tag t = 0; t < ntags; ++t) {
    BimElement e = BimElement::basis(src, t);
    BimElement x = a.apply(e), y = b.apply(e);
    if (x != y) {
      if (witness) *witness = "on " + e.str() + ": " + x.str() + " != " + y.str();
      return false;
    }
  }
  if (witness) witness->clear();
  return true;
}

bool twist_weight_check(const BimElement& e) {
  int r = e.object().r;
  GradedPoly s;
  for (int i = 1; i <= r; ++i) s += GradedPoly::x(i);
  BimElement lhs = e.left_mul(s) - e.right_mul(s);
  BimElement rhs = e.left_mul(GradedPoly::y() * mpq_class(e.object().twist()));
  return lhs == rhs;
}

}  // namespace affcat
