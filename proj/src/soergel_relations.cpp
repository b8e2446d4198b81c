#include "affcat/soergel_relations.hpp"

#include <initializer_list>
#include <stdexcept>

namespace affcat {

namespace {

using Pairs = std::vector<std::pair<Morphism, Morphism>>;

// Small vocabulary for writing relations.  Colours are reduced modulo r, so
// i + 1 for i = r is colour 1.
struct Dsl {
  int r;

  int w(int c) const { return wrap_colour(c, r); }
  Morphism gen(GenKind k, int i = 0, int j = 0) const {
    bool coloured = k != GenKind::CapPlus && k != GenKind::CapMinus && k != GenKind::CupPlus &&
                    k != GenKind::CupMinus && k != GenKind::BoxY;
    bool two = k == GenKind::V4 || k == GenKind::V6;
    return Morphism::gen(r, Generator{k, coloured ? w(i) : 0, two ? w(j) : 0});
  }
  Morphism I(std::initializer_list<int> letters) const {
    std::vector<int> v;
    for (int l : letters) v.push_back(l > 0 ? w(l) : l);
    return Morphism::id(r, v);
  }
  Morphism Iw(const std::vector<int>& v) const { return Morphism::id(r, v); }

  Morphism ed(int i) const { return gen(GenKind::EndDot, i); }
  Morphism sd(int i) const { return gen(GenKind::StartDot, i); }
  Morphism mg(int i) const { return gen(GenKind::Merge, i); }
  Morphism sp(int i) const { return gen(GenKind::Split, i); }
  Morphism v4(int i, int j) const { return gen(GenKind::V4, i, j); }
  Morphism v6(int i, int j) const { return gen(GenKind::V6, i, j); }
  Morphism ur(int i) const { return gen(GenKind::M4UR, i); }
  Morphism ul(int i) const { return gen(GenKind::M4UL, i); }
  Morphism dr(int i) const { return gen(GenKind::M4DR, i); }
  Morphism dl(int i) const { return gen(GenKind::M4DL, i); }
  Morphism capP() const { return gen(GenKind::CapPlus); }
  Morphism capM() const { return gen(GenKind::CapMinus); }
  Morphism cupP() const { return gen(GenKind::CupPlus); }
  Morphism cupM() const { return gen(GenKind::CupMinus); }
  Morphism bx(int i) const { return gen(GenKind::BoxX, i); }
  Morphism by() const { return gen(GenKind::BoxY); }

  // Unoriented cap and cup, and the barbell.
  Morphism capu(int i) const { return ed(i) * mg(i); }
  Morphism cupu(int i) const { return sp(i) * sd(i); }
  Morphism bb(int i) const { return ed(i) * sd(i); }

  static int dual(int l) { return l == kPlus ? kMinus : l == kMinus ? kPlus : l; }
  // Cap consuming (l, dual l); cup producing (l, dual l).
  Morphism cap(int l) const { return l == kPlus ? capP() : l == kMinus ? capM() : capu(l); }
  Morphism cup(int l) const { return l == kPlus ? cupP() : l == kMinus ? cupM() : cupu(l); }

  Morphism h(std::initializer_list<Morphism> ms) const {
    Morphism out = Morphism::id(r, {});
    bool first = true;
    for (const auto& m : ms) {
      out = first ? m : Morphism::hcomp(out, m);
      first = false;
    }
    return out;
  }
  // c({f, g, h}) = f ∘ g ∘ h.
  Morphism c(std::initializer_list<Morphism> ms) const {
    std::vector<Morphism> v(ms);
    Morphism out = v.back();
    for (size_t k = v.size() - 1; k-- > 0;) out = Morphism::vcomp(v[k], out);
    return out;
  }
  Morphism zero(const Morphism& like) const { return Morphism::zero(r, like.source(), like.target()); }

  // One-click rotations of f: (a1..ak) -> (b1..bl).
  //   rot1(f): (a2..ak, b_l*) -> (a1*, b1..b_{l-1})
  //   rot2(f): (b1*, a1..a_{k-1}) -> (b2..bl, ak*)
  Morphism rot1(const Morphism& f) const {
    const auto& a = f.source();
    const auto& b = f.target();
    int a1d = dual(a.front()), bld = dual(b.back());
    std::vector<int> arest(a.begin() + 1, a.end()), binit(b.begin(), b.end() - 1);
    return c({h({Iw({a1d}), Iw(binit), cap(b.back())}), h({Iw({a1d}), f, Iw({bld})}),
              h({cup(a1d), Iw(arest), Iw({bld})})});
  }
  Morphism rot2(const Morphism& f) const {
    const auto& a = f.source();
    const auto& b = f.target();
    int b1d = dual(b.front()), akd = dual(a.back());
    std::vector<int> ainit(a.begin(), a.end() - 1), brest(b.begin() + 1, b.end());
    return c({h({cap(b1d), Iw(brest), Iw({akd})}), h({Iw({b1d}), f, Iw({akd})}),
              h({Iw({b1d}), Iw(ainit), cup(a.back())})});
  }

  // Applies a generator at position pos of the word, identity elsewhere.
  Morphism at(const std::vector<int>& word, size_t pos, const Morphism& g) const {
    std::vector<int> left(word.begin(), word.begin() + static_cast<long>(pos));
    std::vector<int> right(word.begin() + static_cast<long>(pos + g.source().size()), word.end());
    return h({Iw(left), g, Iw(right)});
  }
};

bool any(int, const std::vector<int>&) { return true; }
bool distant2(int r, const std::vector<int>& c) { return distant_colours(c[0], c[1], r); }
bool adjacent2(int r, const std::vector<int>& c) { return adjacent_colours(c[0], c[1], r); }

std::vector<SoergelRelation> build_catalogue() {
  std::vector<SoergelRelation> R;
  auto add = [&](std::string id, int k, std::string cond, std::function<bool(int, const std::vector<int>&)> adm,
                 std::function<Pairs(const Dsl&, const std::vector<int>&)> sides) {
    R.push_back({std::move(id), k, std::move(cond), std::move(adm),
                 [sides](int r, const std::vector<int>& c) { return sides(Dsl{r}, c); }});
  };

  // Isotopy.
  add("adj", 1, "any colour", any, [](const Dsl& d, const std::vector<int>& c) {
    int i = c[0];
    return Pairs{{d.c({d.h({d.I({i}), d.capu(i)}), d.h({d.cupu(i), d.I({i})})}), d.I({i})},
                 {d.c({d.h({d.capu(i), d.I({i})}), d.h({d.I({i}), d.cupu(i)})}), d.I({i})}};
  });
  add("curldot", 1, "any colour", any, [](const Dsl& d, const std::vector<int>& c) {
    int i = c[0];
    return Pairs{{d.ed(i), d.c({d.capu(i), d.h({d.sd(i), d.I({i})})})},
                 {d.ed(i), d.c({d.capu(i), d.h({d.I({i}), d.sd(i)})})}};
  });
  add("v3rot", 1, "any colour", any, [](const Dsl& d, const std::vector<int>& c) {
    int i = c[0];
    return Pairs{{d.mg(i), d.c({d.h({d.capu(i), d.I({i})}), d.h({d.I({i}), d.sp(i)})})},
                 {d.mg(i), d.c({d.h({d.I({i}), d.capu(i)}), d.h({d.sp(i), d.I({i})})})},
                 {d.sp(i), d.c({d.h({d.I({i}), d.mg(i)}), d.h({d.cupu(i), d.I({i})})})},
                 {d.sp(i), d.c({d.h({d.mg(i), d.I({i})}), d.h({d.I({i}), d.cupu(i)})})}};
  });
  add("v4rot", 2, "distant i, j", distant2, [](const Dsl& d, const std::vector<int>& c) {
    int i = c[0], j = c[1];
    return Pairs{{d.v4(j, i), d.rot1(d.v4(i, j))}, {d.v4(j, i), d.rot2(d.v4(i, j))}};
  });
  add("v6rot", 2, "adjacent i, j", adjacent2, [](const Dsl& d, const std::vector<int>& c) {
    int i = c[0], j = c[1];
    return Pairs{{d.v6(j, i), d.rot1(d.v6(i, j))}, {d.v6(j, i), d.rot2(d.v6(i, j))}};
  });
  add("adjmu", 0, "none", any, [](const Dsl& d, const std::vector<int>&) {
    return Pairs{{d.c({d.h({d.I({kPlus}), d.capM()}), d.h({d.cupP(), d.I({kPlus})})}), d.I({kPlus})},
                 {d.c({d.h({d.capP(), d.I({kPlus})}), d.h({d.I({kPlus}), d.cupM()})}), d.I({kPlus})}};
  });
  add("adjmd", 0, "none", any, [](const Dsl& d, const std::vector<int>&) {
    return Pairs{{d.c({d.h({d.I({kMinus}), d.capP()}), d.h({d.cupM(), d.I({kMinus})})}), d.I({kMinus})},
                 {d.c({d.h({d.capM(), d.I({kMinus})}), d.h({d.I({kMinus}), d.cupP()})}), d.I({kMinus})}};
  });
  add("v4mrotu", 1, "any colour", any, [](const Dsl& d, const std::vector<int>& c) {
    int i = c[0];
    return Pairs{{d.ur(i), d.rot1(d.ul(i))}, {d.ur(i), d.rot2(d.dr(i))}};
  });
  add("v4mrotd", 1, "any colour", any, [](const Dsl& d, const std::vector<int>& c) {
    int i = c[0];
    return Pairs{{d.dl(i), d.rot1(d.dr(i))}, {d.dl(i), d.rot2(d.ul(i))}};
  });

  // One colour.
  add("dumbrot", 1, "any colour", any, [](const Dsl& d, const std::vector<int>& c) {
    int i = c[0];
    Morphism lhs = d.sp(i) * d.mg(i);
    return Pairs{{lhs, d.c({d.h({d.I({i}), d.mg(i)}), d.h({d.sp(i), d.I({i})})})},
                 {lhs, d.c({d.h({d.mg(i), d.I({i})}), d.h({d.I({i}), d.sp(i)})})}};
  });
  add("lollipop", 1, "any colour", any, [](const Dsl& d, const std::vector<int>& c) {
    int i = c[0];
    Morphism lhs = d.mg(i) * d.sp(i);
    return Pairs{{lhs, d.zero(lhs)}};
  });
  add("deltam", 1, "any colour", any, [](const Dsl& d, const std::vector<int>& c) {
    int i = c[0];
    return Pairs{{d.h({d.bb(i), d.I({i})}) + d.h({d.I({i}), d.bb(i)}), mpq_class(2) * (d.sd(i) * d.ed(i))}};
  });

  // Two distant colours.
  add("reid2dist", 2, "distant i, j", distant2, [](const Dsl& d, const std::vector<int>& c) {
    int i = c[0], j = c[1];
    return Pairs{{d.v4(j, i) * d.v4(i, j), d.I({i, j})}};
  });
  add("slidedotdist", 2, "distant i, j", distant2, [](const Dsl& d, const std::vector<int>& c) {
    int i = c[0], j = c[1];
    return Pairs{{d.h({d.I({j}), d.ed(i)}) * d.v4(i, j), d.h({d.ed(i), d.I({j})})},
                 {d.h({d.ed(j), d.I({i})}) * d.v4(i, j), d.h({d.I({i}), d.ed(j)})},
                 {d.v4(i, j) * d.h({d.sd(i), d.I({j})}), d.h({d.I({j}), d.sd(i)})}};
  });
  add("slide3v", 2, "distant i, j", distant2, [](const Dsl& d, const std::vector<int>& c) {
    int i = c[0], j = c[1];
    return Pairs{{d.v4(i, j) * d.h({d.mg(i), d.I({j})}),
                  d.c({d.h({d.I({j}), d.mg(i)}), d.h({d.v4(i, j), d.I({i})}), d.h({d.I({i}), d.v4(i, j)})})}};
  });

  // Two adjacent colours.
  add("dot6v", 2, "adjacent i, j", adjacent2, [](const Dsl& d, const std::vector<int>& c) {
    int i = c[0], j = c[1];
    return Pairs{{d.h({d.ed(j), d.I({i, j})}) * d.v6(i, j),
                  d.h({d.I({i, j}), d.ed(i)}) +
                      d.c({d.h({d.I({i}), d.sd(j)}), d.mg(i), d.h({d.I({i}), d.ed(j), d.I({i})})})}};
  });
  add("reid3", 2, "adjacent i, j", adjacent2, [](const Dsl& d, const std::vector<int>& c) {
    int i = c[0], j = c[1];
    Morphism iota = d.h({d.I({i}), d.sd(j), d.I({i})}) * d.sp(i);
    Morphism p = d.mg(i) * d.h({d.I({i}), d.ed(j), d.I({i})});
    return Pairs{{d.v6(j, i) * d.v6(i, j), d.I({i, j, i}) + iota * p}};
  });
  add("dumbsq", 2, "adjacent i, j", adjacent2, [](const Dsl& d, const std::vector<int>& c) {
    int i = c[0], j = c[1];
    return Pairs{{d.c({d.h({d.mg(j), d.I({i, j})}), d.h({d.I({j}), d.v6(i, j)}), d.h({d.v6(i, j), d.I({i})})}),
                  d.v6(i, j) * d.h({d.I({i, j}), d.mg(i)})}};
  });
  add("slidenext", 2, "adjacent i, j", adjacent2, [](const Dsl& d, const std::vector<int>& c) {
    int i = c[0], j = c[1];
    return Pairs{{d.h({d.bb(j), d.I({i})}) - d.h({d.I({i}), d.bb(j)}),
                  mpq_class(1, 2) * (d.h({d.I({i}), d.bb(i)}) - d.h({d.bb(i), d.I({i})}))}};
  });

  // Three colours.
  add("slide4v", 3, "mutually distant i, j, k",
      [](int r, const std::vector<int>& c) {
        return distant_colours(c[0], c[1], r) && distant_colours(c[0], c[2], r) &&
               distant_colours(c[1], c[2], r);
      },
      [](const Dsl& d, const std::vector<int>& c) {
        int i = c[0], j = c[1], k = c[2];
        return Pairs{{d.c({d.h({d.I({k}), d.v4(i, j)}), d.h({d.v4(i, k), d.I({j})}), d.h({d.I({i}), d.v4(j, k)})}),
                      d.c({d.h({d.v4(j, k), d.I({i})}), d.h({d.I({j}), d.v4(i, k)}), d.h({d.v4(i, j), d.I({k})})})}};
      });
  add("slide6v", 3, "adjacent i, j; k distant from both",
      [](int r, const std::vector<int>& c) {
        return adjacent_colours(c[0], c[1], r) && distant_colours(c[0], c[2], r) &&
               distant_colours(c[1], c[2], r);
      },
      [](const Dsl& d, const std::vector<int>& c) {
        int i = c[0], j = c[1], k = c[2];
        Morphism lhs = d.c({d.h({d.I({k}), d.v6(i, j)}), d.h({d.v4(i, k), d.I({j, i})}),
                            d.h({d.I({i}), d.v4(j, k), d.I({i})}), d.h({d.I({i, j}), d.v4(i, k)})});
        Morphism rhs = d.c({d.h({d.v4(j, k), d.I({i, j})}), d.h({d.I({j}), d.v4(i, k), d.I({j})}),
                            d.h({d.I({j, i}), d.v4(j, k)}), d.h({d.v6(i, j), d.I({k})})});
        return Pairs{{lhs, rhs}};
      });
  // Colours i, i+1, i+2 with i and i+2 distant; the two sides are the two
  // ways around the braid-move square from 121321 to 321323.
  add("dumbdumbsquare", 1, "i and i+2 distant",
      [](int r, const std::vector<int>& c) { return distant_colours(c[0], c[0] + 2, r); },
      [](const Dsl& d, const std::vector<int>& c) {
        int a = d.w(c[0]), b = d.w(c[0] + 1), e = d.w(c[0] + 2);
        auto col = [&](int k) { return k == 1 ? a : k == 2 ? b : e; };
        auto path = [&](std::vector<std::pair<char, size_t>> steps) {
          std::vector<int> word{a, b, a, e, b, a};
          Morphism m = d.Iw(word);
          for (auto [kind, pos] : steps) {
            int x = word[pos], y = word[pos + 1];
            Morphism g = kind == '6' ? d.v6(x, y) : d.v4(x, y);
            m = d.at(word, pos, g) * m;
            std::vector<int> tgt = g.target();
            std::copy(tgt.begin(), tgt.end(), word.begin() + static_cast<long>(pos));
          }
          return m;
        };
        (void)col;
        Morphism pa = path({{'6', 0}, {'6', 2}, {'4', 1}, {'4', 4}, {'6', 2}, {'6', 0}, {'4', 2}});
        Morphism pb = path({{'4', 2}, {'6', 3}, {'6', 1}, {'4', 0}, {'4', 3}, {'6', 1}, {'6', 3}});
        return Pairs{{pa, pb}};
      });

  // Oriented strands only.
  add("orbub", 0, "none", any, [](const Dsl& d, const std::vector<int>&) {
    return Pairs{{d.capM() * d.cupM(), d.I({})}, {d.capP() * d.cupP(), d.I({})}};
  });
  add("capcupud", 0, "none", any, [](const Dsl& d, const std::vector<int>&) {
    return Pairs{{d.cupP() * d.capP(), d.I({kPlus, kMinus})}};
  });
  add("capcupdu", 0, "none", any, [](const Dsl& d, const std::vector<int>&) {
    return Pairs{{d.cupM() * d.capM(), d.I({kMinus, kPlus})}};
  });

  // Oriented strands with coloured strands.
  add("slide4mv", 2, "distant i, j", distant2, [](const Dsl& d, const std::vector<int>& c) {
    int i = c[0], j = c[1];
    return Pairs{
        {d.c({d.h({d.I({j + 1}), d.ur(i)}), d.h({d.ur(j), d.I({i})}), d.h({d.I({kPlus}), d.v4(i, j)})}),
         d.c({d.h({d.v4(i + 1, j + 1), d.I({kPlus})}), d.h({d.I({i + 1}), d.ur(j)}), d.h({d.ur(i), d.I({j})})})},
        {d.c({d.h({d.I({kMinus}), d.v4(i + 1, j + 1)}), d.h({d.dr(i), d.I({j + 1})}), d.h({d.I({i}), d.dr(j)})}),
         d.c({d.h({d.dr(j), d.I({i + 1})}), d.h({d.I({j}), d.dr(i)}), d.h({d.v4(i, j), d.I({kMinus})})})}};
  });
  add("reid2ml", 1, "any colour", any, [](const Dsl& d, const std::vector<int>& c) {
    int i = c[0];
    return Pairs{{d.ul(i) * d.ur(i), d.I({kPlus, i})}, {d.ur(i) * d.ul(i), d.I({i + 1, kPlus})}};
  });
  add("reid2mr", 1, "any colour", any, [](const Dsl& d, const std::vector<int>& c) {
    int i = c[0];
    return Pairs{{d.dl(i) * d.dr(i), d.I({i, kMinus})}, {d.dr(i) * d.dl(i), d.I({kMinus, i + 1})}};
  });
  add("slidedotdist-md", 1, "any colour", any, [](const Dsl& d, const std::vector<int>& c) {
    int i = c[0];
    return Pairs{{d.h({d.I({kMinus}), d.ed(i + 1)}) * d.dr(i), d.h({d.ed(i), d.I({kMinus})})},
                 {d.dr(i) * d.h({d.sd(i), d.I({kMinus})}), d.h({d.I({kMinus}), d.sd(i + 1)})}};
  });
  add("slidedotdist-mu", 1, "any colour", any, [](const Dsl& d, const std::vector<int>& c) {
    int i = c[0];
    return Pairs{{d.h({d.ed(i + 1), d.I({kPlus})}) * d.ur(i), d.h({d.I({kPlus}), d.ed(i)})},
                 {d.ur(i) * d.h({d.I({kPlus}), d.sd(i)}), d.h({d.sd(i + 1), d.I({kPlus})})}};
  });
  add("mslide3v", 1, "any colour", any, [](const Dsl& d, const std::vector<int>& c) {
    int i = c[0];
    return Pairs{{d.ur(i) * d.h({d.I({kPlus}), d.mg(i)}),
                  d.c({d.h({d.mg(i + 1), d.I({kPlus})}), d.h({d.I({i + 1}), d.ur(i)}), d.h({d.ur(i), d.I({i})})})}};
  });
  add("slide6mv", 2, "adjacent i, j", adjacent2, [](const Dsl& d, const std::vector<int>& c) {
    int i = c[0], j = c[1];
    Morphism lhs = d.c({d.h({d.v6(i + 1, j + 1), d.I({kPlus})}), d.h({d.I({i + 1, j + 1}), d.ur(i)}),
                        d.h({d.I({i + 1}), d.ur(j), d.I({i})}), d.h({d.ur(i), d.I({j, i})})});
    Morphism rhs = d.c({d.h({d.I({j + 1, i + 1}), d.ur(j)}), d.h({d.I({j + 1}), d.ur(i), d.I({j})}),
                        d.h({d.ur(j), d.I({i, j})}), d.h({d.I({kPlus}), d.v6(i, j)})});
    return Pairs{{lhs, rhs}};
  });
  add("slide6mv2", 2, "adjacent i, j", adjacent2, [](const Dsl& d, const std::vector<int>& c) {
    int i = c[0], j = c[1];
    Morphism lhs = d.c({d.h({d.I({kMinus}), d.v6(i + 1, j + 1)}), d.h({d.dr(i), d.I({j + 1, i + 1})}),
                        d.h({d.I({i}), d.dr(j), d.I({i + 1})}), d.h({d.I({i, j}), d.dr(i)})});
    Morphism rhs = d.c({d.h({d.dr(j), d.I({i + 1, j + 1})}), d.h({d.I({j}), d.dr(i), d.I({j + 1})}),
                        d.h({d.I({j, i}), d.dr(j)}), d.h({d.v6(i, j), d.I({kMinus})})});
    return Pairs{{lhs, rhs}};
  });

  // Boxes.
  add("box1", 1, "i != r", [](int r, const std::vector<int>& c) { return c[0] != r; },
      [](const Dsl& d, const std::vector<int>& c) {
        int i = c[0];
        return Pairs{{d.bb(i), d.bx(i + 1) - d.bx(i)}};
      });
  add("box12", 0, "none", any, [](const Dsl& d, const std::vector<int>&) {
    return Pairs{{d.bb(d.r), d.bx(1) - d.bx(d.r) - d.by()}};
  });
  add("box13", 1, "any colour", any, [](const Dsl& d, const std::vector<int>& c) {
    int i = c[0];
    Morphism s = d.bx(i) + d.bx(i + 1);
    return Pairs{{d.h({s, d.I({i})}), d.h({d.I({i}), s})}};
  });
  add("box14", 1, "i != r", [](int r, const std::vector<int>& c) { return c[0] != r; },
      [](const Dsl& d, const std::vector<int>& c) {
        int i = c[0];
        Morphism p = d.bx(i) * d.bx(i + 1);
        return Pairs{{d.h({p, d.I({i})}), d.h({d.I({i}), p})}};
      });
  add("box15", 0, "none", any, [](const Dsl& d, const std::vector<int>&) {
    mpq_class half(1, 2);
    Morphism p = (d.bx(d.r) + half * d.by()) * (d.bx(1) - half * d.by());
    return Pairs{{d.h({p, d.I({d.r})}), d.h({d.I({d.r}), p})}};
  });
  add("box16", 2, "j != i, i+1",
      [](int r, const std::vector<int>& c) { return c[1] != c[0] && c[1] != wrap_colour(c[0] + 1, r); },
      [](const Dsl& d, const std::vector<int>& c) {
        int i = c[0], j = c[1];
        return Pairs{{d.h({d.bx(j), d.I({i})}), d.h({d.I({i}), d.bx(j)})}};
      });
  add("box2", 1, "any colour", any, [](const Dsl& d, const std::vector<int>& c) {
    int i = c[0];
    return Pairs{{d.h({d.by(), d.I({i})}), d.h({d.I({i}), d.by()})}};
  });
  add("box3", 0, "none", any, [](const Dsl& d, const std::vector<int>&) {
    return Pairs{{d.h({d.by(), d.I({kPlus})}), d.h({d.I({kPlus}), d.by()})}};
  });
  add("box31", 0, "none", any, [](const Dsl& d, const std::vector<int>&) {
    return Pairs{{d.h({d.by(), d.I({kMinus})}), d.h({d.I({kMinus}), d.by()})}};
  });
  add("box32", 1, "i != r", [](int r, const std::vector<int>& c) { return c[0] != r; },
      [](const Dsl& d, const std::vector<int>& c) {
        int i = c[0];
        return Pairs{{d.h({d.bx(i + 1), d.I({kPlus})}), d.h({d.I({kPlus}), d.bx(i)})}};
      });
  add("box33", 0, "none", any, [](const Dsl& d, const std::vector<int>&) {
    return Pairs{{d.h({d.bx(1) - d.by(), d.I({kPlus})}), d.h({d.I({kPlus}), d.bx(d.r)})}};
  });
  add("box34", 1, "i != 1", [](int, const std::vector<int>& c) { return c[0] != 1; },
      [](const Dsl& d, const std::vector<int>& c) {
        int i = c[0];
        return Pairs{{d.h({d.bx(i - 1), d.I({kMinus})}), d.h({d.I({kMinus}), d.bx(i)})}};
      });
  add("boxlast", 0, "none", any, [](const Dsl& d, const std::vector<int>&) {
    return Pairs{{d.h({d.bx(d.r) + d.by(), d.I({kMinus})}), d.h({d.I({kMinus}), d.bx(1)})}};
  });

  // Consequences of the relations above, checked on their own.
  add("useless-v", 0, "none", any, [](const Dsl& d, const std::vector<int>&) {
    Morphism s = d.bb(1);
    for (int k = 2; k <= d.r; ++k) s = s + d.bb(k);
    return Pairs{{d.by(), mpq_class(-1) * s}};
  });
  add("useless-vi", 1, "any colour", any, [](const Dsl& d, const std::vector<int>& c) {
    int i = c[0];
    Morphism s = d.bb(i - 1) + d.bb(i) + d.bb(i + 1);
    return Pairs{{d.h({s, d.I({i})}), d.h({d.I({i}), s})}};
  });
  add("opposite-mslide3v", 1, "any colour", any, [](const Dsl& d, const std::vector<int>& c) {
    int i = c[0];
    return Pairs{{d.dr(i) * d.h({d.mg(i), d.I({kMinus})}),
                  d.c({d.h({d.I({kMinus}), d.mg(i + 1)}), d.h({d.dr(i), d.I({i + 1})}), d.h({d.I({i}), d.dr(i)})})}};
  });
  return R;
}

}  // namespace

const std::vector<SoergelRelation>& soergel_relations() {
  static const std::vector<SoergelRelation> catalogue = build_catalogue();
  return catalogue;
}

const SoergelRelation& find_relation(const std::string& id) {
  for (const auto& rel : soergel_relations())
    if (rel.id == id) return rel;
  throw std::invalid_argument("unknown relation '" + id + "'");
}

std::vector<std::vector<int>> admissible_colourings(const SoergelRelation& rel, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(static_cast<size_t>(rel.colours), 1);
  for (;;) {
    if (rel.admissible(r, c)) out.push_back(c);
    size_t k = 0;
    while (k < c.size() && c[k] == r) c[k++] = 1;
    if (k == c.size()) break;
    ++c[k];
  }
  return out;
}

CheckOutcome check_relation(const std::string& id, int r, const std::vector<int>& colours) {
  const SoergelRelation& rel = find_relation(id);
  if (static_cast<int>(colours.size()) != rel.colours)
    throw std::invalid_argument(id + " takes " + std::to_string(rel.colours) + " colour(s)");
  for (int c : colours)
    if (c < 1 || c > r) throw std::invalid_argument("colour out of range");
  if (!rel.admissible(r, colours))
    throw std::invalid_argument("invalid colour pattern for " + id + ": needs " + rel.condition);
  std::string name = id;
  if (!colours.empty()) {
    name += "[";
    for (size_t k = 0; k < colours.size(); ++k) name += (k ? "," : "") + std::to_string(colours[k]);
    name += "]";
  }
  CheckOutcome out{name, true, ""};
  auto pairs = rel.sides(r, colours);
  for (size_t k = 0; k < pairs.size(); ++k) {
    std::string w;
    if (!morphisms_equal(pairs[k].first, pairs[k].second, &w)) {
      out.pass = false;
      out.witness = "equality " + std::to_string(k + 1) + ": " + w;
      return out;
    }
  }
  return out;
}

bool Witness::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

namespace {

void expect_equal(Witness& w, const std::string& name, const Morphism& a, const Morphism& b) {
  std::string wit;
  bool pass = morphisms_equal(a, b, &wit);
  w.checks.push_back({name, pass, wit});
}

void expect_zero(Witness& w, const std::string& name, const Morphism& a) {
  expect_equal(w, name, a, Morphism::zero(a.rank(), a.source(), a.target()));
}

// Checks a map against an explicit formula on a few pure tensors.
void expect_formula(Witness& w, const std::string& name, const Morphism& m,
                    const std::function<BimElement::RawTerm(const BimElement::RawTerm&)>& formula) {
  int r = m.rank();
  SoergelObject src(r, m.source()), tgt(r, m.target());
  size_t slots = static_cast<size_t>(src.unoriented()) + 1;
  std::vector<GradedPoly> samples{GradedPoly::x(1) * GradedPoly::x(2) - GradedPoly::y(),
                                  GradedPoly::x(r) * GradedPoly::x(r) + GradedPoly::x(1),
                                  GradedPoly::y() * GradedPoly::x(2) + 3};
  for (size_t s = 0; s < samples.size(); ++s) {
    BimElement::RawTerm raw(slots);
    for (size_t k = 0; k < slots; ++k) raw[k] = samples[(s + k) % samples.size()];
    BimElement in = BimElement::normalize(src, {raw});
    BimElement got = m.apply(in), want = BimElement::normalize(tgt, {formula(raw)});
    if (got != want) {
      w.checks.push_back({name, false, "on " + in.str() + ": " + got.str() + " != " + want.str()});
      return;
    }
  }
  w.checks.push_back({name, true, ""});
}

}  // namespace

Witness decompose_witness(const std::string& kind, int r, const std::vector<int>& colours) {
  Dsl d{r};
  Witness w;
  w.kind = kind;
  auto need = [&](size_t k) {
    if (colours.size() != k) throw std::invalid_argument(kind + " takes " + std::to_string(k) + " colour(s)");
    for (int c : colours)
      if (c < 1 || c > r) throw std::invalid_argument("colour out of range");
  };
  if (kind == "S1") {
    need(1);
    int i = colours[0];
    Morphism iota1 = mpq_class(1, 2) * (d.h({d.I({i}), d.bb(i), d.I({i})}) * d.sp(i));
    Morphism p1 = d.mg(i);
    Morphism iota2 = d.sp(i);
    Morphism dot = d.h({d.I({i}), d.ed(i)});
    Morphism p2 = dot - d.c({dot, iota1, p1});
    w.maps = {{"iota1", iota1}, {"p1", p1}, {"iota2", iota2}, {"p2", p2}};
    expect_equal(w, "p1*iota1=id", p1 * iota1, d.I({i}));
    expect_zero(w, "p1*iota2=0", p1 * iota2);
    expect_zero(w, "p2*iota1=0", p2 * iota1);
    expect_equal(w, "p2*iota2=id", p2 * iota2, d.I({i}));
    expect_equal(w, "iota1*p1+iota2*p2=id", iota1 * p1 + iota2 * p2, d.I({i, i}));
    // Rank count: B_i B_i is free of rank 4 on the left, the two copies of
    // B_i of rank 2 each, in degrees differing by 2.
    SoergelObject src(r, {i, i}), one(r, {i});
    bool ranks = (1 << src.unoriented()) == 2 * (1 << one.unoriented());
    bool shifts = iota1.degree() - iota2.degree() == 2 && p1.degree() == -iota1.degree() &&
                  p2.degree() == -iota2.degree();
    w.checks.push_back({"rank-and-shift", ranks && shifts,
                        ranks && shifts ? "" : "ranks or degree shifts inconsistent"});
  } else if (kind == "S2") {
    need(2);
    int i = colours[0], j = colours[1];
    if (!distant_colours(i, j, r)) throw std::invalid_argument("S2 needs distant colours");
    w.maps = {{"f", d.v4(i, j)}, {"g", d.v4(j, i)}};
    expect_equal(w, "g*f=id", d.v4(j, i) * d.v4(i, j), d.I({i, j}));
    expect_equal(w, "f*g=id", d.v4(i, j) * d.v4(j, i), d.I({j, i}));
  } else if (kind == "S3") {
    need(2);
    int i = colours[0], j = colours[1];
    if (!adjacent_colours(i, j, r)) throw std::invalid_argument("S3 needs adjacent colours");
    // Phi: (iji) + (j) -> (jij) + (i) is [[v6(i,j), iota_j], [P_i, 0]] and
    // Psi the same with i and j exchanged.
    auto iota = [&](int a, int b) { return d.h({d.I({a}), d.sd(b), d.I({a})}) * d.sp(a); };
    auto P = [&](int a, int b) { return mpq_class(-1) * (d.mg(a) * d.h({d.I({a}), d.ed(b), d.I({a})})); };
    w.maps = {{"v6(i,j)", d.v6(i, j)}, {"iota_j", iota(j, i)}, {"P_i", P(i, j)},
              {"v6(j,i)", d.v6(j, i)}, {"iota_i", iota(i, j)}, {"P_j", P(j, i)}};
    expect_equal(w, "PsiPhi[1,1]=id", d.v6(j, i) * d.v6(i, j) + iota(i, j) * P(i, j), d.I({i, j, i}));
    expect_zero(w, "PsiPhi[1,2]=0", d.v6(j, i) * iota(j, i));
    expect_zero(w, "PsiPhi[2,1]=0", P(j, i) * d.v6(i, j));
    expect_equal(w, "PsiPhi[2,2]=id", P(j, i) * iota(j, i), d.I({j}));
    expect_equal(w, "PhiPsi[1,1]=id", d.v6(i, j) * d.v6(j, i) + iota(j, i) * P(j, i), d.I({j, i, j}));
    expect_zero(w, "PhiPsi[1,2]=0", d.v6(i, j) * iota(i, j));
    expect_zero(w, "PhiPsi[2,1]=0", P(i, j) * d.v6(j, i));
    expect_equal(w, "PhiPsi[2,2]=id", P(i, j) * iota(i, j), d.I({i}));
  } else if (kind == "S4") {
    need(1);
    int i = colours[0];
    w.maps = {{"psi", d.ur(i)}, {"psi^-1", d.ul(i)}};
    expect_equal(w, "inverse*psi=id", d.ul(i) * d.ur(i), d.I({kPlus, i}));
    expect_equal(w, "psi*inverse=id", d.ur(i) * d.ul(i), d.I({i + 1, kPlus}));
    expect_formula(w, "psi(a|b)=a|rho(b)", d.ur(i), [r](const BimElement::RawTerm& v) {
      return BimElement::RawTerm{v[0], rho_act(1, r, v[1])};
    });
    expect_formula(w, "psi^-1(a|b)=a|rho^-1(b)", d.ul(i), [r](const BimElement::RawTerm& v) {
      return BimElement::RawTerm{v[0], rho_act(-1, r, v[1])};
    });
  } else if (kind == "tiso2") {
    need(1);
    int i = colours[0];
    // Move the strand i to the right through r up strands, one crossing at
    // a time, and back.
    std::vector<int> word(static_cast<size_t>(r), kPlus);
    word.push_back(i);
    Morphism fwd = d.Iw(word);
    for (int k = 0; k < r; ++k) {
      size_t pos = static_cast<size_t>(r - 1 - k);
      Morphism g = d.ur(i + k);
      fwd = d.at(word, pos, g) * fwd;
      word[pos] = d.w(i + k + 1);
      word[pos + 1] = kPlus;
    }
    Morphism back = d.Iw(word);
    for (int k = 0; k < r; ++k) {
      size_t pos = static_cast<size_t>(k);
      Morphism g = d.ul(i + r - 1 - k);
      back = d.at(word, pos, g) * back;
      word[pos] = kPlus;
      word[pos + 1] = d.w(i + r - 1 - k);
    }
    std::vector<int> start(static_cast<size_t>(r), kPlus);
    start.push_back(i);
    std::vector<int> end{i};
    end.insert(end.end(), static_cast<size_t>(r), kPlus);
    w.maps = {{"forward", fwd}, {"backward", back}};
    expect_equal(w, "backward*forward=id", back * fwd, d.Iw(start));
    expect_equal(w, "forward*backward=id", fwd * back, d.Iw(end));
    expect_formula(w, "forward(a|b)=a|rho^r(b)", fwd, [r](const BimElement::RawTerm& v) {
      return BimElement::RawTerm{v[0], rho_act(r, r, v[1])};
    });
  } else {
    throw std::invalid_argument("unknown witness kind '" + kind + "'");
  }
  return w;
}

std::vector<CheckOutcome> degree_audit(int r) {
  std::vector<Generator> gens;
  for (GenKind k : {GenKind::CapPlus, GenKind::CapMinus, GenKind::CupPlus, GenKind::CupMinus, GenKind::BoxY})
    gens.push_back({k, 0, 0});
  for (int i = 1; i <= r; ++i) {
    for (GenKind k : {GenKind::EndDot, GenKind::StartDot, GenKind::Merge, GenKind::Split, GenKind::M4UR,
                      GenKind::M4UL, GenKind::M4DR, GenKind::M4DL, GenKind::BoxX})
      gens.push_back({k, i, 0});
    for (int j = 1; j <= r; ++j) {
      if (distant_colours(i, j, r)) gens.push_back({GenKind::V4, i, j});
      if (adjacent_colours(i, j, r)) gens.push_back({GenKind::V6, i, j});
    }
  }
  std::vector<CheckOutcome> out;
  for (const Generator& g : gens) {
    SoergelObject src(r, gen_source(r, g));
    CheckOutcome c{gen_str(g), true, ""};
    for (BimElement::Tag t = 0; t < (BimElement::Tag(1) << src.unoriented()); ++t) {
      BimElement in = BimElement::basis(src, t);
      BimElement img = apply_gen(g, 0, in);
      auto din = in.degree(), dout = img.degree();
      if (img.is_zero()) continue;
      if (!dout || *dout != *din + gen_degree(g)) {
        c.pass = false;
        c.witness = "on " + in.str() + " (degree " + std::to_string(*din) + "): image " + img.str() +
                    (dout ? " has degree " + std::to_string(*dout) : " is not homogeneous");
        break;
      }
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace affcat
