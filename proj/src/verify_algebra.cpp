// Sweeps for the weyl, hecke and schur modules.

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "affcat/hecke.hpp"
#include "affcat/schur.hpp"
#include "affcat/verify.hpp"
#include "affcat/weyl.hpp"

namespace affcat {

namespace {

std::string s_(int i) { return "s" + std::to_string(i); }
std::string b_(int i) { return "b" + std::to_string(i); }

bool distant(int i, int j, int r) {
  int d = ((i - j) % r + r) % r;
  return d != 0 && d != 1 && d != r - 1;
}

AffinePermutation random_element(std::mt19937_64& rng, int r, int max_letters) {
  std::uniform_int_distribution<int> letter(0, r + 1), len(0, max_letters);
  AffinePermutation w(r);
  for (int k = len(rng); k > 0; --k) {
    int l = letter(rng);
    w = w * (l < r ? AffinePermutation::sigma(r, l + 1)
                   : AffinePermutation::rho(r, l == r ? 1 : -1));
  }
  return w;
}

std::ostream& operator<<(std::ostream& os, const AffinePermutation& w) { return os << w.str(); }

template <class T>
std::string mismatch(const T& a, const T& b) {
  std::ostringstream os;
  os << "lhs = " << a << ", rhs = " << b;
  return os.str();
}

template <class T>
void check_eq(Report& rep, const std::string& id, const T& a, const T& b) {
  rep.add(id, a == b, a == b ? "" : mismatch(a, b));
}

}  // namespace

void require_schur_range(const SuiteParams& p) {
  if (!(3 <= p.r && p.r < p.n)) {
    throw std::invalid_argument("need 3 <= r < n (the Schur algebra side is only set up "
                                "\"for 3 <= r < n\"); got r = " +
                                std::to_string(p.r) + ", n = " + std::to_string(p.n));
  }
}

Report verify_weyl(const SuiteParams& p) {
  const int r = p.r;
  if (r < 2) throw std::invalid_argument("verify weyl: r must be at least 2");
  Report rep("weyl");
  auto S = [r](int i) { return AffinePermutation::sigma(r, i); };
  const AffinePermutation e(r), rho = AffinePermutation::rho(r), rho_inv = rho.inverse();
  for (int i = 1; i <= r; ++i) {
    int ip = i % r + 1;
    check_eq(rep, "W1[" + s_(i) + "]", S(i) * S(i), e);
    if (r >= 3) check_eq(rep, "W3[" + s_(i) + "]", S(i) * S(ip) * S(i), S(ip) * S(i) * S(ip));
    check_eq(rep, "W4[" + s_(i) + "]", rho * S(i) * rho_inv, S(ip));
    for (int j = i + 1; j <= r; ++j)
      if (distant(i, j, r)) check_eq(rep, "W2[" + s_(i) + "," + s_(j) + "]", S(i) * S(j), S(j) * S(i));
  }
  check_eq(rep, "rho-inverse", rho * rho_inv, e);
  {
    AffinePermutation prod = AffinePermutation::translation(r, 1);
    for (int i = 1; i < r; ++i) prod = prod * S(i);
    check_eq(rep, "rho-from-translation", prod, rho);
  }
  for (int j = 1; j < r; ++j)
    check_eq(rep, "translation-conj[t" + std::to_string(j) + "]",
             S(j) * AffinePermutation::translation(r, j) * S(j),
             AffinePermutation::translation(r, j + 1));

  std::mt19937_64 rng(p.seed);
  const std::string tag = "[" + std::to_string(p.samples) + "]";
  std::string nf_bad, len_bad, act_bad;
  GradedPoly poly = GradedPoly::x(1) * GradedPoly::x(r) - GradedPoly::y() * GradedPoly::x(2) +
                    GradedPoly::x(r - 1).pow(2);
  GlWeight wt;
  for (int j = 1; j <= r; ++j) wt.kappa.push_back((j * 7) % 5 - 2);
  wt.m = 3;
  for (int k = 0; k < p.samples; ++k) {
    AffinePermutation w = random_element(rng, r, 10), v = random_element(rng, r, 6);
    NormalForm nf = normal_form(w);
    if (nf_bad.empty() &&
        (from_normal_form(r, nf) != w || static_cast<int>(nf.word.size()) != w.length() ||
         nf.k != w.rho_power()))
      nf_bad = "at " + w.str();
    int brute = 0;
    for (long i = 1; i <= r; ++i)
      for (long jj = i + 1; jj <= i + 60L * r; ++jj)
        if (w(i) > w(jj)) ++brute;
    if (len_bad.empty() && brute != w.length())
      len_bad = "at " + w.str() + ": " + std::to_string(brute) + " vs " + std::to_string(w.length());
    if (act_bad.empty() && (act_poly(w * v, poly) != act_poly(w, act_poly(v, poly)) ||
                            !(act_weight(w * v, wt) == act_weight(w, act_weight(v, wt)))))
      act_bad = "at " + w.str() + ", " + v.str();
  }
  rep.add("normal-form" + tag, nf_bad.empty(), nf_bad);
  rep.add("length-shi" + tag, len_bad.empty(), len_bad);
  rep.add("act-compose" + tag, act_bad.empty(), act_bad);

  // Faithfulness on short words: the letter-by-letter polynomial action
  // agrees with act_poly, and fixes x_1..x_r only for the identity.
  const int max_len = r <= 3 ? 5 : 4;
  std::string faith_bad;
  std::vector<int> idx;
  for (int len = 0; len <= max_len && faith_bad.empty(); ++len) {
    idx.assign(static_cast<size_t>(len), 0);
    for (;;) {
      AffinePermutation w(r);
      for (int l : idx) w = w * (l < r ? S(l + 1) : AffinePermutation::rho(r, l == r ? 1 : -1));
      bool fixes = true;
      for (int j = 1; j <= r; ++j) {
        GradedPoly x = GradedPoly::x(j);
        for (auto it = idx.rbegin(); it != idx.rend(); ++it)
          x = *it < r ? sigma_act(*it + 1, r, x) : rho_act(*it == r ? 1 : -1, r, x);
        if (x != act_poly(w, GradedPoly::x(j))) faith_bad = "act_poly differs at " + w.str();
        if (x != GradedPoly::x(j)) fixes = false;
      }
      if (fixes != w.is_identity()) faith_bad = "not faithful at " + w.str();
      size_t pos = 0;
      while (pos < idx.size() && ++idx[pos] == r + 2) idx[pos++] = 0;
      if (pos == idx.size() || !faith_bad.empty()) break;
    }
  }
  rep.add("faithful[len<=" + std::to_string(max_len) + "]", faith_bad.empty(), faith_bad);
  return rep;
}

Report verify_hecke(const SuiteParams& p) {
  const int r = p.r;
  if (r < 3) throw std::invalid_argument("verify hecke: r must be at least 3");
  Report rep("hecke");
  auto Ts = [r](int i) { return T(AffinePermutation::sigma(r, i)); };
  const HeckeElement one = HeckeElement::identity(r);
  const HeckeElement trho = T(AffinePermutation::rho(r)), trho_inv = T(AffinePermutation::rho(r, -1));
  const RatQ qq = RatQ::q(1) + RatQ::q(-1);
  for (int i = 1; i <= r; ++i) {
    int ip = i % r + 1;
    HeckeElement bi = kl_gen(r, i), bn = kl_gen(r, ip);
    check_eq(rep, "quadratic[" + s_(i) + "]", Ts(i) * Ts(i),
             (RatQ::q(2) - RatQ(1)) * Ts(i) + RatQ::q(2) * one);
    check_eq(rep, "H1[" + b_(i) + "]", bi * bi, qq * bi);
    check_eq(rep, "H3[" + b_(i) + "]", bi * bn * bi + bn, bn * bi * bn + bi);
    check_eq(rep, "H4[" + b_(i) + "]", trho * bi * trho_inv, bn);
    check_eq(rep, "rho-conj[T" + s_(i) + "]", trho * Ts(i) * trho_inv, Ts(ip));
    for (int j = i + 1; j <= r; ++j)
      if (distant(i, j, r))
        check_eq(rep, "H2[" + b_(i) + "," + b_(j) + "]", bi * kl_gen(r, j), kl_gen(r, j) * bi);
    check_eq(rep, "bar[T" + s_(i) + "]", bar(Ts(i)),
             RatQ::q(-2) * Ts(i) + (RatQ::q(-2) - RatQ(1)) * one);
    check_eq(rep, "bar[" + b_(i) + "]", bar(bi), bi);
    check_eq(rep, "braid-inverse[" + s_(i) + "]",
             braid_image(r, parse_word(r, s_(i) + " " + s_(i) + "^-1")), one);
    check_eq(rep, "braid-relation[" + s_(i) + "," + s_(ip) + "]",
             braid_image(r, parse_word(r, s_(i) + " " + s_(ip) + " " + s_(i))),
             braid_image(r, parse_word(r, s_(ip) + " " + s_(i) + " " + s_(ip))));
  }
  check_eq(rep, "bar[Trho]", bar(trho), trho);
  check_eq(rep, "trho-inverse", trho * trho_inv, one);

  std::mt19937_64 rng(p.seed);
  std::string assoc_bad, bar_bad;
  for (int k = 0; k < p.samples; ++k) {
    AffinePermutation a = random_element(rng, r, 6), b = random_element(rng, r, 6),
                      c = random_element(rng, r, 6);
    if (assoc_bad.empty() && (T(a) * T(b)) * T(c) != T(a) * (T(b) * T(c)))
      assoc_bad = "at " + a.str() + ", " + b.str() + ", " + c.str();
    if (k < p.samples / 4 && bar_bad.empty()) {
      HeckeElement x = (RatQ::q() + RatQ(1)) * T(a) + T(b);
      if (bar(bar(x)) != x || bar(x * T(c)) != bar(x) * bar(T(c))) bar_bad = "at " + x.str();
    }
  }
  rep.add("assoc[" + std::to_string(p.samples) + "]", assoc_bad.empty(), assoc_bad);
  rep.add("bar-ring-involution[" + std::to_string(p.samples / 4) + "]", bar_bad.empty(), bar_bad);

  KLTable table(r);
  for (int i = 1; i <= r; ++i)
    check_eq(rep, "kl-gen[" + s_(i) + "]", kl_basis(AffinePermutation::sigma(r, i), p.max_length, table),
             RatQ::q(-1) * (one + Ts(i)));
  auto elements = elements_up_to_length(r, p.max_length);
  std::vector<std::string> bar_fail(static_cast<size_t>(p.max_length) + 1),
      tri_fail(static_cast<size_t>(p.max_length) + 1);
  std::string positivity;
  for (const auto& w0 : elements) {
    for (long k : {0L, 1L}) {
      AffinePermutation w = AffinePermutation::rho(r, k) * w0;
      size_t L = static_cast<size_t>(w0.length());
      HeckeElement c = kl_basis(w, p.max_length, table);
      if (bar_fail[L].empty() && bar(c) != c) bar_fail[L] = "at " + w.str();
      for (const auto& [z, coef] : c.support()) {
        if (!coef.is_laurent()) {
          tri_fail[L] = "non-Laurent coefficient at " + w.str();
          continue;
        }
        Laurent normal = coef.num().shifted(z.length());  // coefficient of q^{-l(z)} T_z
        bool good = z == w ? normal == Laurent(1)
                           : (z.length() < w.length() && !normal.is_zero() && normal.high() < 0);
        if (!good && tri_fail[L].empty()) tri_fail[L] = "at " + w.str() + ", term " + basis_str(z);
        for (int e = coef.num().low(); e <= coef.num().high(); ++e)
          if (coef.num().coeff(e) < 0 && positivity.empty())
            positivity = "negative coefficient at " + w.str();
      }
    }
  }
  for (int L = 0; L <= p.max_length; ++L) {
    std::string tag = "[len=" + std::to_string(L) + "]";
    rep.add("kl-bar-invariant" + tag, bar_fail[static_cast<size_t>(L)].empty(), bar_fail[static_cast<size_t>(L)]);
    rep.add("kl-unitriangular" + tag, tri_fail[static_cast<size_t>(L)].empty(), tri_fail[static_cast<size_t>(L)]);
  }
  rep.add_observation("kl-positivity[len<=" + std::to_string(p.max_length) + "]", positivity.empty(),
                      positivity);
  return rep;
}

Report verify_schur_presentation(const SuiteParams& p) {
  require_schur_range(p);
  const int n = p.n, r = p.r;
  Report rep("schur");
  auto rels = presentation_relations(n, r);
  std::vector<std::function<CaseResult()>> tasks;
  for (const auto& rel : rels)
    tasks.push_back([&rel, n, r, &p]() {
      int w = p.window > 0 ? p.window : default_window(n, rel.lhs, rel.rhs);
      std::string witness;
      bool a = equal(n, r, rel.lhs, rel.rhs, w, &witness);
      bool b = equal(n, r, rel.lhs, rel.rhs, w + 2, a ? &witness : nullptr);
      CaseResult c{"schur", "presentation:" + rel.id, a && b, "", false};
      if (!a || !b)
        c.witness = "window " + std::to_string(a ? w + 2 : w) + " " + witness +
                    (a != b ? " (window-unstable)" : "");
      return c;
    });
  run_cases(rep, tasks, p.jobs);
  return rep;
}

Report verify_schur_sigma(const SuiteParams& p) {
  require_schur_range(p);
  const int n = p.n, r = p.r;
  Report rep("schur");
  auto eq = [&](const std::string& id, const SchurElement& a, const SchurElement& b) {
    int w = p.window > 0 ? p.window : default_window(n, a, b);
    std::string witness;
    bool ok = equal(n, r, a, b, w, &witness);
    rep.add("sigma:" + id, ok, witness);
  };
  SchurElement one(SchurWord{SchurLetter::idem(one_r(n, r))});
  const RatQ qq = RatQ::q(1) + RatQ::q(-1);
  for (int i = 1; i < r; ++i) eq("b-two-forms[" + b_(i) + "]", sigma_b(n, r, i, 0), sigma_b(n, r, i, 1));
  eq("trho-two-forms", sigma_trho(n, r, 0), sigma_trho(n, r, 1));
  eq("trho-inv-two-forms", sigma_trho_inv(n, r, 0), sigma_trho_inv(n, r, 1));
  eq("trho-times-inverse", sigma_trho(n, r) * sigma_trho_inv(n, r), one);
  eq("inverse-times-trho", sigma_trho_inv(n, r) * sigma_trho(n, r), one);
  for (int i = 1; i <= r; ++i) {
    SchurElement bi = sigma_b(n, r, i), bn = sigma_b(n, r, i % r + 1);
    eq("H1[" + b_(i) + "]", bi * bi, qq * bi);
    eq("H3[" + b_(i) + "]", bi * bn * bi + bn, bn * bi * bn + bi);
    eq("H4[" + b_(i) + "]", sigma_trho(n, r) * bi * sigma_trho_inv(n, r), bn);
    for (int j = i + 1; j <= r; ++j)
      if (distant(i, j, r)) {
        SchurElement bj = sigma_b(n, r, j);
        eq("H2[" + b_(i) + "," + b_(j) + "]", bi * bj, bj * bi);
      }
  }
  return rep;
}

namespace {

std::vector<std::pair<std::string, SchurWord>> schur_generators(int n) {
  std::vector<std::pair<std::string, SchurWord>> g;
  for (int i = 1; i <= n; ++i) {
    g.push_back({"E" + std::to_string(i), {SchurLetter::e(i)}});
    g.push_back({"E-" + std::to_string(i), {SchurLetter::e(-i)}});
    g.push_back({"K" + std::to_string(i), {SchurLetter::k(i)}});
    g.push_back({"K" + std::to_string(i) + "^-1", {SchurLetter::k(i, -1)}});
  }
  g.push_back({"R", {SchurLetter::shift(1)}});
  g.push_back({"R^-1", {SchurLetter::shift(-1)}});
  return g;
}

TensorVector random_windowed(std::mt19937_64& rng, int r, int window, int terms) {
  std::uniform_int_distribution<int> entry(0, window - 1), coef(-3, 3), qe(-2, 2);
  TensorVector v;
  for (int k = 0; k < terms; ++k) {
    Tensor t;
    for (int j = 0; j < r; ++j) t.push_back(entry(rng));
    v.add(t, RatQ(coef(rng)) * RatQ::q(qe(rng)));
  }
  return v;
}

}  // namespace

Report verify_schur_rho(const SuiteParams& p) {
  require_schur_range(p);
  const int n = p.n, r = p.r;
  Report rep("schur");
  std::mt19937_64 rng(p.seed);
  const int window = p.window > 0 ? p.window : n + 2 * 3 + 2;
  auto adjoint_ok = [&](const SchurElement& x, std::string& witness) {
    for (int k = 0; k < 10; ++k) {
      TensorVector v = random_windowed(rng, r, window, 3), w = random_windowed(rng, r, window, 2);
      w += act(n, x, v);  // make the pairing non-trivial
      RatQ lhs = bilinear_form(act(n, x, v), w), rhs = bilinear_form(v, act(n, rho_antiinv(n, x), w));
      if (lhs != rhs) {
        witness = "v = " + v.str() + ", w = " + w.str() + ": " + lhs.str() + " vs " + rhs.str();
        return false;
      }
    }
    return true;
  };
  for (const auto& [name, word] : schur_generators(n)) {
    std::string witness;
    SchurElement x(word);
    rep.add("rho:adjoint[" + name + "]", adjoint_ok(x, witness), witness);
    SchurElement back = rho_antiinv(n, rho_antiinv(n, x));
    std::string w2;
    rep.add("rho:involution[" + name + "]", equal(n, r, back, x, default_window(n, back, x), &w2), w2);
  }
  std::uniform_int_distribution<int> len(1, 3), pick(0, static_cast<int>(schur_generators(n).size()) - 1);
  auto gens = schur_generators(n);
  std::string bad;
  const int words = 50;
  for (int k = 0; k < words && bad.empty(); ++k) {
    SchurWord w;
    for (int l = len(rng); l > 0; --l) {
      const auto& g = gens[static_cast<size_t>(pick(rng))].second;
      w.insert(w.end(), g.begin(), g.end());
    }
    std::string witness;
    if (!adjoint_ok(SchurElement(w), witness)) bad = word_str(w) + ": " + witness;
  }
  rep.add("rho:adjoint-words[" + std::to_string(words) + "]", bad.empty(), bad);
  return rep;
}

Report verify_schur_iota(const SuiteParams& p) {
  require_schur_range(p);
  const int n = p.n, r = p.r;
  Report rep("schur");
  auto mentions_n = [n](const SchurElement& x) {
    for (const auto& [w, c] : x.terms())
      for (const auto& l : w)
        if (l.kind == SchurLetter::E && std::abs(l.index) == n) return true;
    return false;
  };
  auto rels = presentation_relations(n, r);
  std::vector<std::function<CaseResult()>> tasks;
  for (const auto& rel : rels) {
    if (!mentions_n(rel.lhs) && !mentions_n(rel.rhs)) continue;
    tasks.push_back([&rel, n, r]() {
      SchurElement a = iota(n, r, rel.lhs), b = iota(n, r, rel.rhs);
      std::string witness;
      bool ok = equal(n + 1, r, a, b, default_window(n + 1, a, b), &witness);
      return CaseResult{"schur", "iota:" + rel.id, ok, witness, false};
    });
  }
  run_cases(rep, tasks, p.jobs);
  return rep;
}

Report verify_schur(const SuiteParams& p) {
  Report rep("schur");
  rep.append(verify_schur_presentation(p));
  rep.append(verify_schur_sigma(p));
  rep.append(verify_schur_rho(p));
  rep.append(verify_schur_iota(p));
  return rep;
}

}  // namespace affcat
