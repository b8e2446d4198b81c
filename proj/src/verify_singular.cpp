#include <random>
#include <stdexcept>

#include "affcat/singular.hpp"
#include "affcat/verify.hpp"

namespace affcat {

namespace {

// Ordered compositions of r into positive parts.
std::vector<std::vector<int>> block_shapes(int r) {
  std::vector<std::vector<int>> out;
  for (int k = 1; k <= r; ++k)
    for (const auto& c : compositions(k, r))
      if (std::all_of(c.begin(), c.end(), [](int v) { return v > 0; })) out.push_back(c);
  return out;
}

std::string kind_id(ColourNKind k) { return colour_n_kind_str(k); }

bool is_distant(ColourNKind k) {
  return k == ColourNKind::CrossUpNJ || k == ColourNKind::CrossUpJN || k == ColourNKind::CrossDownNJ ||
         k == ColourNKind::CrossDownJN;
}

// Every (lambda, a1, a2, j) in the sweep on which the kind is defined.
template <class F>
void for_each_instance(ColourNKind kind, int n, int r, int max_end, int max_exp, F&& f) {
  for (const auto& lambda : compositions(n, r)) {
    if (lambda.front() > max_end || lambda.back() > max_end) continue;
    std::vector<int> js{0};
    if (is_distant(kind)) {
      js.clear();
      for (int j = 2; j <= n - 2; ++j) js.push_back(j);
    }
    for (int j : js) {
      if (!word_defined(kind_source(kind, n, j), lambda) || !word_defined(kind_target(kind, n, j), lambda))
        continue;
      bool no_exponents = kind == ColourNKind::CupRight || kind == ColourNKind::CupLeft ||
                          kind == ColourNKind::DotUp || kind == ColourNKind::DotDown;
      int top = no_exponents ? 0 : max_exp;
      for (int a1 = 0; a1 <= top; ++a1)
        for (int a2 = 0; a2 <= top; ++a2) f(fprime_colour_n(kind, lambda, a1, a2, j));
    }
  }
}

}  // namespace

Report verify_singular(const SuiteParams& p) {
  require_schur_range(p);
  const int n = p.n, r = p.r;
  Report rep("singular");
  std::vector<std::function<CaseResult()>> tasks;
  auto result = [](std::string id, bool pass, std::string w = "") {
    return CaseResult{"singular", std::move(id), pass, std::move(w), false};
  };

  // The shifted-elementary lemma, for every n' <= max(n, 6).
  for (int m = 1; m <= std::max(n, 6); ++m)
    tasks.push_back([m, result] {
      for (int s : {1, -1})
        for (int k = 0; k <= m; ++k)
          if (!shifted_elementary_identity(m, k, s))
            return result("lemma:n=" + std::to_string(m), false,
                          "k=" + std::to_string(k) + " sign=" + std::to_string(s));
      return result("lemma:n=" + std::to_string(m), true);
    });

  // Twisting isomorphisms between partially symmetric rings.
  for (const auto& b : block_shapes(r))
    for (int s : {1, -1})
      tasks.push_back([b, s, result] {
        SingularCheck c = twist_ring_check(b, s);
        return result(std::string("twist:") + composition_str(b) + (s > 0 ? ":rho^ik" : ":rho^-i1"), c.pass,
                      c.witness);
      });

  // Random elements built from block generators reduce to zero; a
  // non-invariant polynomial is rejected.
  tasks.push_back([r, p, result] {
    std::mt19937_64 rng(p.seed);
    auto shapes = block_shapes(r);
    std::uniform_int_distribution<size_t> pick_shape(0, shapes.size() - 1);
    std::uniform_int_distribution<int> coef(-3, 3), len(1, 3);
    for (int s = 0; s < p.samples; ++s) {
      PartialInvariantRing R(shapes[pick_shape(rng)]);
      auto gens = R.generators();
      std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
      GradedPoly f;
      for (int t = 0; t < 3; ++t) {
        GradedPoly m(coef(rng));
        for (int l = len(rng); l > 0; --l) m = m * gens[pick(rng)];
        if (coef(rng) > 0) m = m * GradedPoly::y();
        f += m;
      }
      if (!R.contains(f) || !R.generated_by_blocks(f))
        return result("ring:generated-samples", false, R.str() + " " + f.str());
    }
    return result("ring:generated-samples", true);
  });
  tasks.push_back([r, result] {
    PartialInvariantRing R({r});
    GradedPoly x1 = GradedPoly::x(1);
    bool rejected = !R.contains(x1) && !R.generated_by_blocks(x1);
    return result("ring:negative-control", rejected, rejected ? "" : "x1 accepted as symmetric");
  });

  // Colour-n formulas: agreement of displayed forms and degrees.
  const int max_end = 3, max_exp = 3;
  for (ColourNKind k : all_colour_n_kinds()) {
    if (is_distant(k) && n < 4) continue;
    if (kind_has_two_forms(k))
      tasks.push_back([k, n, r, result] {
        size_t count = 0;
        std::string bad;
        for_each_instance(k, n, r, max_end, max_exp, [&](const ColourNImage& im) {
          ++count;
          if (bad.empty() && !im.forms_agree()) bad = im.str();
        });
        return result("two-form:" + kind_id(k), bad.empty() && count > 0,
                      count == 0 ? "no instance in range" : bad);
      });
    tasks.push_back([k, n, r, result] {
      size_t count = 0;
      std::string bad;
      for_each_instance(k, n, r, max_end, max_exp, [&](const ColourNImage& im) {
        bool zero = std::all_of(im.forms.begin(), im.forms.end(), [](const GradedPoly& f) { return f.is_zero(); });
        if (zero) return;
        ++count;
        auto d = im.measured_degree();
        int want = expected_degree(im.kind, im.lambda);
        if (bad.empty() && (!d || *d != want))
          bad = im.str() + "\n  degree " + (d ? std::to_string(*d) : std::string("inhomogeneous")) +
                ", expected " + std::to_string(want);
      });
      return result("degree:" + kind_id(k), bad.empty() && count > 0, count == 0 ? "no instance in range" : bad);
    });
  }

  // Bubbles.
  tasks.push_back([n, r, result] {
    for (const auto& l : compositions(n, r))
      for (Orientation o : {Orientation::Clockwise, Orientation::CounterClockwise})
        for (int m = 0; m <= 6; ++m) {
          GradedPoly v = bubble_value_n(l, o, m);
          int d = bubble_degree(l, o, m);
          std::string id = composition_str(l) + (o == Orientation::Clockwise ? " cw" : " ccw") +
                           " m=" + std::to_string(m);
          if (d < 0 && !v.is_zero()) return result("bubble:negative-degree", false, id + " = " + v.str());
        }
    return result("bubble:negative-degree", true);
  });
  tasks.push_back([n, r, result] {
    size_t seen = 0;
    for (const auto& l : compositions(n, r)) {
      int lb = lambda_bar(l, n);
      int l1 = l.front();
      if (lb >= 1) {
        ++seen;
        GradedPoly v = bubble_value_n(l, Orientation::Clockwise, lb - 1);
        if (v != GradedPoly(l1 % 2 ? -1 : 1))
          return result("bubble:degree-zero", false, composition_str(l) + " cw = " + v.str());
      }
      if (lb <= -1) {
        ++seen;
        GradedPoly v = bubble_value_n(l, Orientation::CounterClockwise, -lb - 1);
        if (v != GradedPoly(l1 % 2 ? 1 : -1))
          return result("bubble:degree-zero", false, composition_str(l) + " ccw = " + v.str());
      }
    }
    return result("bubble:degree-zero", seen > 0, seen ? "" : "no weight with a degree-zero bubble");
  });
  tasks.push_back([n, r, result] {
    for (const auto& l : compositions(n, r))
      for (Orientation o : {Orientation::Clockwise, Orientation::CounterClockwise})
        for (int m = 0; m <= 4; ++m) {
          GradedPoly v = bubble_value_n(l, o, m);
          GradedPoly w = bubble_value_n(l, o, m, false);
          std::string id = composition_str(l) + (o == Orientation::Clockwise ? " cw" : " ccw") +
                           " m=" + std::to_string(m);
          if (!v.is_homogeneous() || (!v.is_zero() && v.degree() != bubble_degree(l, o, m)))
            return result("bubble:homogeneous", false, id + " = " + v.str());
          if (v != w) return result("bubble:homogeneous", false, id + ": dot side matters, " + v.str() + " vs " + w.str());
        }
    return result("bubble:homogeneous", true);
  });
  tasks.push_back([n, r, result] {
    GradedPoly v = bubble_value_n(one_r(n, r), Orientation::CounterClockwise, 1);
    GradedPoly want = end_ring_image("bubble" + std::to_string(n), r, n);
    return result("bubble:n-bubble-at-1r", v == want, v == want ? "" : v.str() + " vs " + want.str());
  });

  // Zig-zags.
  for (ZigZag z : {ZigZag::UpLeft, ZigZag::UpRight, ZigZag::DownLeft, ZigZag::DownRight})
    tasks.push_back([z, n, r, result] {
      size_t seen = 0;
      bool up = z == ZigZag::UpLeft || z == ZigZag::UpRight;
      for (const auto& l : compositions(n, r)) {
        if (l.front() > 2 || l.back() > 2 || !word_defined({up ? n : -n}, l)) continue;
        ++seen;
        GradedPoly v = zigzag_value(z, l);
        if (v != GradedPoly(1))
          return result("zigzag:" + zigzag_str(z), false, composition_str(l) + ": " + v.str());
      }
      return result("zigzag:" + zigzag_str(z), seen > 0);
    });

  // END(1_r).
  tasks.push_back([n, r, result] {
    GradedPoly v = expy_relation_image(r, n, false);
    return result("end:expy-relation:table", v.is_zero(), v.is_zero() ? "" : v.str());
  });
  tasks.push_back([n, r, result] {
    GradedPoly v = expy_relation_image(r, n, true);
    return result("end:expy-relation:composite", v.is_zero(), v.is_zero() ? "" : v.str());
  });
  for (int i = 0; i <= r; ++i)
    tasks.push_back([i, n, r, result] {
      SingularCheck c = triangle_check(i, r, n);
      return result(i == 0 ? std::string("triangle:box_y") : "triangle:box_" + std::to_string(i), c.pass,
                    c.witness);
    });

  run_cases(rep, tasks, p.jobs);
  return rep;
}

}  // namespace affcat
