// Sweep for the rouquier module: d^2 = 0 on every braid word up to the
// length budget, degree homogeneity of the differentials, and the Euler
// class as a decategorification (multiplicative, braid invariant, equal to
// the Hecke image of the braid under s_i -> q^2 T_i^-1, rho -> T_rho).

#include <algorithm>
#include <random>
#include <stdexcept>

#include "affcat/rouquier.hpp"
#include "affcat/verify.hpp"

namespace affcat {

namespace {

std::vector<WordLetter> braid_letters(int r) {
  std::vector<WordLetter> out;
  for (int i = 1; i <= r; ++i) {
    out.push_back({'s', i, 1});
    out.push_back({'s', i, -1});
  }
  out.push_back({'r', 0, 1});
  out.push_back({'r', 0, -1});
  return out;
}

GenWord concat(GenWord a, const GenWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string wstr(const GenWord& w) { return w.empty() ? "e" : word_str(w); }

}  // namespace

HeckeElement expected_euler_class(int r, const GenWord& word) {
  HeckeElement h = HeckeElement::identity(r);
  for (const auto& l : word) {
    if (l.kind == 'r') {
      h = h * T(AffinePermutation::rho(r, l.exponent));
    } else if (l.kind == 's') {
      h = h * (l.exponent == 1 ? RatQ::q(2) * T_inverse_simple(r, l.index)
                               : RatQ::q(-2) * T(AffinePermutation::sigma(r, l.index)));
    } else {
      throw std::invalid_argument("braid words use s_i^{+-1} and rho^k only");
    }
  }
  return h;
}

Report verify_rouquier(const SuiteParams& p) {
  const int r = p.r;
  if (r < 3) throw std::invalid_argument("verify rouquier: r must be at least 3");
  Report rep("rouquier");
  const auto letters = braid_letters(r);

  // d^2 over all words, building each complex from its prefix.
  {
    size_t words = 0, bad = 0, bad_deg = 0;
    std::string first, first_deg;
    std::vector<std::pair<GenWord, BimComplex>> level{{GenWord{}, BimComplex::unit(r)}};
    for (int len = 0; len <= p.max_length; ++len) {
      std::vector<std::pair<GenWord, BimComplex>> next;
      for (const auto& [w, c] : level) {
        ++words;
        D2Result d2 = verify_d2(c);
        if (!d2.pass && !bad++) first = wstr(w) + ": " + d2.witness;
        D2Result dg = verify_degrees(c);
        if (!dg.pass && !bad_deg++) first_deg = wstr(w) + ": " + dg.witness;
        if (len < p.max_length)
          for (const auto& l : letters) next.push_back({concat(w, {l}), tensor(c, braid_complex(r, GenWord{l}))});
      }
      level = std::move(next);
    }
    std::string tag = "len<=" + std::to_string(p.max_length) + ":" + std::to_string(words) + "-words";
    rep.add("d2:" + tag, bad == 0, first);
    rep.add("degrees:" + tag, bad_deg == 0, first_deg);
  }

  // Negative control: flipping one differential entry must break d^2.
  {
    BimComplex c = braid_complex(r, "s1 s2");
    c.set_entry(-1, 0, 0, Morphism::scale(-1, *c.entry(-1, 0, 0)));
    bool caught = !verify_d2(c).pass;
    rep.add("d2:negative-control", caught, caught ? "" : "sign flip went undetected");
  }

  // Single letters.
  auto euler_is = [&](const std::string& id, const std::string& word, const HeckeElement& want) {
    HeckeElement got = euler_class(braid_complex(r, word));
    rep.add("euler:" + id, got == want, got == want ? "" : got.str() + " != " + want.str());
  };
  euler_is("rho", "rho", T(AffinePermutation::rho(r, 1)));
  euler_is("rho^-1", "rho^-1", T(AffinePermutation::rho(r, -1)));
  euler_is("empty", "", HeckeElement::identity(r));
  for (int i = 1; i <= r; ++i) {
    std::string s = "s" + std::to_string(i);
    euler_is(s, s, RatQ::q(1) * kl_gen(r, i) - HeckeElement::scalar(r, RatQ::q(2)));
    euler_is(s + "^-1", s + "^-1", RatQ::q(-2) * T(AffinePermutation::sigma(r, i)));
    euler_is(s + "*" + s + "^-1", s + " " + s + "^-1", HeckeElement::identity(r));
  }

  // Agreement with the Hecke image on all words of length <= 3.
  {
    size_t bad = 0;
    std::string first;
    std::vector<GenWord> level{{}};
    for (int len = 0; len <= std::min(3, p.max_length); ++len) {
      std::vector<GenWord> next;
      for (const auto& w : level) {
        HeckeElement got = euler_class(braid_complex(r, w)), want = expected_euler_class(r, w);
        if (got != want && !bad++) first = wstr(w) + ": " + got.str() + " != " + want.str();
        for (const auto& l : letters) next.push_back(concat(w, {l}));
      }
      level = std::move(next);
    }
    rep.add("euler:hecke-image-len<=3", bad == 0, first);
  }

  std::mt19937_64 rng(p.seed);
  auto random_word = [&](int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<size_t> pick(0, letters.size() - 1);
    GenWord w;
    for (int k = len(rng); k > 0; --k) w.push_back(letters[pick(rng)]);
    return w;
  };

  // Multiplicativity under tensor.
  {
    size_t bad = 0;
    std::string first;
    for (int k = 0; k < p.samples; ++k) {
      GenWord a = random_word(3), b = random_word(3);
      BimComplex ca = braid_complex(r, a), cb = braid_complex(r, b);
      HeckeElement lhs = euler_class(tensor(ca, cb)), rhs = euler_class(ca) * euler_class(cb);
      if (lhs != rhs && !bad++) first = wstr(a) + " | " + wstr(b);
    }
    rep.add("euler:multiplicative-" + std::to_string(p.samples) + "-pairs", bad == 0, first);
  }

  // Braid and rho-conjugation rewrites, bare and inside random contexts.
  {
    std::vector<std::pair<std::string, std::pair<GenWord, GenWord>>> rewrites;
    auto s = [](int i, int e = 1) { return WordLetter{'s', i, e}; };
    const WordLetter rho{'r', 0, 1}, rho_inv{'r', 0, -1};
    for (int i = 1; i <= r; ++i) {
      int j = i % r + 1;
      std::string tag = "[" + std::to_string(i) + "]";
      rewrites.push_back({"braid3" + tag, {{s(i), s(j), s(i)}, {s(j), s(i), s(j)}}});
      rewrites.push_back({"braid3-inverse" + tag, {{s(i, -1), s(j, -1), s(i, -1)}, {s(j, -1), s(i, -1), s(j, -1)}}});
      rewrites.push_back({"braid3-mixed" + tag, {{s(i), s(j), s(i, -1)}, {s(j, -1), s(i), s(j)}}});
      rewrites.push_back({"rho-conj" + tag, {{rho, s(i), rho_inv}, {s(j)}}});
      rewrites.push_back({"rho-conj-inverse" + tag, {{rho, s(i, -1), rho_inv}, {s(j, -1)}}});
      rewrites.push_back({"cancel" + tag, {{s(i), s(i, -1)}, {}}});
      rewrites.push_back({"cancel-left" + tag, {{s(i, -1), s(i)}, {}}});
      for (int k = 1; k <= r; ++k)
        if (distant_colours(i, k, r)) {
          rewrites.push_back({"commute[" + std::to_string(i) + "," + std::to_string(k) + "]", {{s(i), s(k)}, {s(k), s(i)}}});
        }
    }
    rewrites.push_back({"rho-cancel", {{rho, rho_inv}, {}}});
    for (const auto& [id, pair] : rewrites) {
      const auto& [lhs, rhs] = pair;
      bool ok = euler_class(braid_complex(r, lhs)) == euler_class(braid_complex(r, rhs));
      std::string witness = ok ? "" : wstr(lhs) + " vs " + wstr(rhs);
      for (int k = 0; ok && k < 5; ++k) {
        GenWord u = random_word(2), v = random_word(2);
        GenWord a = concat(concat(u, lhs), v), b = concat(concat(u, rhs), v);
        if (euler_class(braid_complex(r, a)) != euler_class(braid_complex(r, b))) {
          ok = false;
          witness = wstr(a) + " vs " + wstr(b);
        }
      }
      rep.add("invariance:" + id, ok, witness);
    }
  }
  return rep;
}

}  // namespace affcat
