// affcat: command-line front end for the library.
//
// Every computation command prints its result on stdout.  The `verify`
// command and the checking subcommands print one report line per case,
// `SUITE CASE-ID PASS|FAIL [witness]`, and exit with status 1 when any case
// fails.  Usage errors exit with status 2.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "affcat/hecke.hpp"
#include "affcat/rouquier.hpp"
#include "affcat/schur.hpp"
#include "affcat/singular.hpp"
#include "affcat/soergel.hpp"
#include "affcat/soergel_relations.hpp"
#include "affcat/verify.hpp"
#include "affcat/weyl.hpp"

using namespace affcat;

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string t = text;
  for (char& c : t)
    if (c == ',' || c == '(' || c == ')') c = ' ';
  std::istringstream is(t);
  int v;
  while (is >> v) out.push_back(v);
  if (!is.eof()) throw std::invalid_argument("expected a comma separated list of integers: " + text);
  return out;
}

std::string nf_str(const NormalForm& nf) {
  std::string s;
  if (nf.k != 0) s = nf.k == 1 ? "rho" : "rho^" + std::to_string(nf.k);
  for (int i : nf.word) s += (s.empty() ? "" : " ") + std::string("s") + std::to_string(i);
  return s.empty() ? "e" : s;
}

int finish(const Report& rep, bool dump) {
  if (dump)
    rep.dump(std::cout);
  else
    rep.print(std::cout);
  std::cerr << rep.suite() << ": " << rep.cases().size() << " cases, " << rep.failures() << " failed";
  if (rep.seconds > 0) std::cerr << ", " << rep.seconds << " s";
  std::cerr << "\n";
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the extended affine Weyl group, Hecke algebra, affine q-Schur "
               "algebra and their bimodule categorifications"};
  app.require_subcommand(1);

  SuiteParams p;
  bool dump = false;
  int rc = 0;

  // ---- weyl -------------------------------------------------------------
  auto* weyl = app.add_subcommand("weyl", "extended affine Weyl group");
  weyl->require_subcommand(1);
  std::string word;
  auto* weyl_nf = weyl->add_subcommand("nf", "window notation, length and normal form of a word");
  weyl_nf->add_option("--r", p.r, "rank")->capture_default_str();
  weyl_nf->add_option("word,--word", word, "e.g. \"s1 rho s2\"")->required();
  weyl_nf->callback([&] {
    AffinePermutation w = evaluate_word(p.r, parse_word(p.r, word));
    std::cout << "window " << w.str() << "\nlength " << w.length() << "\nnormal-form "
              << nf_str(normal_form(w)) << "\n";
  });
  std::string poly;
  auto* weyl_act = weyl->add_subcommand("act", "action of a word on a polynomial in y, x1..xr");
  weyl_act->add_option("--r", p.r, "rank")->capture_default_str();
  weyl_act->add_option("--word", word, "group element as a word")->required();
  weyl_act->add_option("--poly", poly, "polynomial, e.g. \"x1^2 - y*x3\"")->required();
  weyl_act->callback([&] {
    AffinePermutation w = evaluate_word(p.r, parse_word(p.r, word));
    std::cout << act_poly(w, GradedPoly::parse(poly)) << "\n";
  });

  // ---- hecke ------------------------------------------------------------
  auto* hecke = app.add_subcommand("hecke", "extended affine Hecke algebra");
  hecke->require_subcommand(1);
  std::string lhs, rhs;
  auto* hecke_mul = hecke->add_subcommand("mul", "product of two elements in the T basis");
  hecke_mul->add_option("--r", p.r, "rank")->capture_default_str();
  hecke_mul->add_option("--lhs", lhs, "e.g. \"T[s1 rho] + q^2*T[e]\"")->required();
  hecke_mul->add_option("--rhs", rhs)->required();
  hecke_mul->add_option("--max-length", p.max_length, "length budget for C[w] terms")->capture_default_str();
  hecke_mul->callback([&] {
    KLTable table(p.r);
    HeckeElement a = parse_hecke(p.r, lhs, &table, p.max_length);
    HeckeElement b = parse_hecke(p.r, rhs, &table, p.max_length);
    std::cout << mul(a, b) << "\n";
  });
  auto* hecke_kl = hecke->add_subcommand("kl", "Kazhdan-Lusztig element C'_w in the T basis");
  hecke_kl->add_option("--r", p.r, "rank")->capture_default_str();
  hecke_kl->add_option("word,--word", word, "w as a word")->required();
  hecke_kl->add_option("--max-length", p.max_length, "length budget")->capture_default_str();
  hecke_kl->callback([&] {
    KLTable table(p.r);
    AffinePermutation w = evaluate_word(p.r, parse_word(p.r, word));
    std::cout << kl_basis(w, p.max_length, table) << "\n";
  });

  // ---- schur ------------------------------------------------------------
  auto* schur = app.add_subcommand("schur", "affine q-Schur algebra on tensor space");
  schur->require_subcommand(1);
  std::string tensor;
  auto* schur_act = schur->add_subcommand("act", "act with an element on a tensor");
  schur_act->add_option("--n", p.n)->capture_default_str();
  schur_act->add_option("--word", word, "e.g. \"E1 E-2 K3\"")->required();
  schur_act->add_option("--tensor", tensor, "e.g. \"(1,2,3)\"")->required();
  schur_act->callback([&] {
    std::cout << act(p.n, parse_schur_element(p.n, word), parse_tensor(tensor)) << "\n";
  });
  auto* schur_equal = schur->add_subcommand("equal", "compare two elements on windowed tensors");
  schur_equal->add_option("--n", p.n)->capture_default_str();
  schur_equal->add_option("--r", p.r)->capture_default_str();
  schur_equal->add_option("--lhs", lhs)->required();
  schur_equal->add_option("--rhs", rhs)->required();
  schur_equal->add_option("--window", p.window, "0: default window")->capture_default_str();
  schur_equal->callback([&] {
    SchurElement a = parse_schur_element(p.n, lhs), b = parse_schur_element(p.n, rhs);
    int w = p.window > 0 ? p.window : default_window(p.n, a, b);
    std::string witness;
    bool same = equal(p.n, p.r, a, b, w, &witness);
    std::cout << (same ? "EQUAL" : "DIFFERENT " + witness) << " (window " << w << ")\n";
    rc = same ? 0 : 1;
  });
  auto* schur_sigma = schur->add_subcommand("sigma-verify", "check the Hecke embedding into the Schur algebra");
  auto* schur_pres = schur->add_subcommand("presentation-sweep", "check every presentation relation");
  for (auto* c : {schur_sigma, schur_pres}) {
    c->add_option("--n", p.n)->capture_default_str();
    c->add_option("--r", p.r)->capture_default_str();
    c->add_option("--window", p.window, "0: per-relation default")->capture_default_str();
    c->add_option("--jobs", p.jobs)->capture_default_str();
    c->add_flag("--dump", dump, "key=value records instead of report lines");
  }
  schur_sigma->callback([&] { rc = finish(verify_schur_sigma(p), dump); });
  schur_pres->callback([&] { rc = finish(verify_schur_presentation(p), dump); });

  // ---- soergel ----------------------------------------------------------
  auto* soergel = app.add_subcommand("soergel", "extended Soergel bimodules");
  soergel->require_subcommand(1);
  std::string relation, colours, object, morphism, element;
  auto* soergel_check = soergel->add_subcommand("check", "evaluate a defining relation");
  soergel_check->add_option("--relation", relation, "relation id")->required();
  soergel_check->add_option("--r", p.r)->capture_default_str();
  soergel_check->add_option("--colors", colours, "e.g. 1,2; default: every admissible colouring");
  soergel_check->callback([&] {
    Report rep("soergel");
    const SoergelRelation& rel = find_relation(relation);
    std::vector<std::vector<int>> all;
    if (colours.empty())
      all = admissible_colourings(rel, p.r);
    else
      all.push_back(parse_int_list(colours));
    for (const auto& c : all) {
      CheckOutcome o = check_relation(relation, p.r, c);
      rep.add(o.name, o.pass, o.witness);
    }
    if (all.empty()) rep.add(relation + ":no-admissible-colouring", true);
    rc = finish(rep, false);
  });
  auto* soergel_eval = soergel->add_subcommand("eval", "apply a morphism expression to an element");
  soergel_eval->add_option("--r", p.r)->capture_default_str();
  soergel_eval->add_option("--object", object, "source object, e.g. \"1,+,3\"")->required();
  soergel_eval->add_option("--morphism", morphism, "e.g. \"vcomp(enddot(2), startdot(2))\"")->required();
  soergel_eval->add_option("--element", element, "slot form \"a | b; c | d\"; default: 1 (x) ... (x) 1");
  soergel_eval->callback([&] {
    SoergelObject obj = parse_object(p.r, object);
    Morphism m = parse_morphism(p.r, morphism);
    BimElement e = element.empty() ? BimElement::basis(obj, 0) : parse_element(obj, element);
    std::cout << m.str() << " : degree " << m.degree() << "\n" << m.apply(e) << "\n";
  });

  // ---- rouquier ---------------------------------------------------------
  auto* rouquier = app.add_subcommand("rouquier", "Rouquier complexes of braid words");
  rouquier->require_subcommand(1);
  std::string braid;
  auto* rq_build = rouquier->add_subcommand("build", "print the complex");
  auto* rq_d2 = rouquier->add_subcommand("d2", "check d^2 = 0 and the degrees of the differential");
  auto* rq_euler = rouquier->add_subcommand("euler", "Euler class in the T basis");
  for (auto* c : {rq_build, rq_d2, rq_euler}) {
    c->add_option("--r", p.r)->capture_default_str();
    c->add_option("--braid", braid, "e.g. \"s1 s2^-1 rho\"")->required();
  }
  rq_build->callback([&] { std::cout << braid_complex(p.r, braid).str() << "\n"; });
  rq_d2->callback([&] {
    BimComplex c = braid_complex(p.r, braid);
    Report rep("rouquier");
    D2Result d2 = verify_d2(c), deg = verify_degrees(c);
    rep.add("d2", d2.pass, d2.witness);
    rep.add("degrees", deg.pass, deg.witness);
    rc = finish(rep, false);
  });
  rq_euler->callback([&] {
    HeckeElement got = euler_class(braid_complex(p.r, braid));
    HeckeElement want = expected_euler_class(p.r, parse_word(p.r, braid));
    std::cout << got << "\n";
    if (got != want) {
      std::cerr << "euler class differs from the Hecke-side image " << want << "\n";
      rc = 1;
    }
  });

  // ---- singular ---------------------------------------------------------
  auto* singular = app.add_subcommand("singular", "singular Soergel bimodules at colour n");
  singular->require_subcommand(1);
  int k = 0;
  auto* sg_lemma = singular->add_subcommand("lemma", "shifted elementary symmetric polynomial identity");
  sg_lemma->add_option("--n", p.n)->capture_default_str();
  sg_lemma->add_option("--k", k)->required();
  sg_lemma->callback([&] {
    Report rep("singular");
    for (int s : {1, -1}) {
      std::string id = "lemma:n=" + std::to_string(p.n) + ",k=" + std::to_string(k) + (s > 0 ? ",+y" : ",-y");
      rep.add(id, shifted_elementary_identity(p.n, k, s));
    }
    rc = finish(rep, false);
  });
  std::string lambda_text;
  int max_dots = 4;
  auto* sg_bubbles = singular->add_subcommand("bubbles", "colour-n bubbles at a weight");
  sg_bubbles->add_option("--lambda", lambda_text, "e.g. 1,1,1,0")->required();
  sg_bubbles->add_option("--max-dots", max_dots)->capture_default_str();
  sg_bubbles->callback([&] {
    Composition l = parse_int_list(lambda_text);
    if (l.size() < 3) throw std::invalid_argument("--lambda needs at least three entries");
    for (Orientation o : {Orientation::Clockwise, Orientation::CounterClockwise})
      for (int m = 0; m <= max_dots; ++m)
        std::cout << (o == Orientation::Clockwise ? "cw " : "ccw ") << "dots=" << m
                  << " deg=" << bubble_degree(l, o, m) << " : " << bubble_value_n(l, o, m) << "\n";
  });
  auto* sg_triangle = singular->add_subcommand("triangle", "boxes through both functors");
  sg_triangle->add_option("--r", p.r)->capture_default_str();
  sg_triangle->add_option("--n", p.n)->capture_default_str();
  sg_triangle->callback([&] {
    require_schur_range(p);
    Report rep("singular");
    for (int i = 0; i <= p.r; ++i) {
      SingularCheck c = triangle_check(i, p.r, p.n);
      rep.add(i == 0 ? std::string("triangle:box_y") : "triangle:box_" + std::to_string(i), c.pass, c.witness);
    }
    GradedPoly e = expy_relation_image(p.r, p.n, true);
    rep.add("end:expy-relation", e.is_zero(), e.is_zero() ? "" : e.str());
    rc = finish(rep, false);
  });
  std::string blocks;
  auto* sg_twist = singular->add_subcommand("twist", "rotations between partially symmetric rings");
  sg_twist->add_option("--blocks", blocks, "e.g. 2,1")->required();
  sg_twist->callback([&] {
    std::vector<int> b = parse_int_list(blocks);
    Report rep("singular");
    for (int s : {1, -1}) {
      SingularCheck c = twist_ring_check(b, s);
      rep.add(std::string("twist:") + composition_str(b) + (s > 0 ? ":rho^ik" : ":rho^-i1"), c.pass, c.witness);
    }
    std::cout << PartialInvariantRing(b).str() << " -> " << PartialInvariantRing(rotate_blocks(b, 1)).str()
              << " and " << PartialInvariantRing(rotate_blocks(b, -1)).str() << "\n";
    rc = finish(rep, false);
  });

  // ---- verify -----------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify->add_option("suite", suite, "weyl, hecke, schur, soergel, rouquier, singular or all")
      ->required()
      ->check(CLI::IsMember({"weyl", "hecke", "schur", "soergel", "rouquier", "singular", "all"}));
  verify->add_option("--r", p.r)->capture_default_str();
  verify->add_option("--n", p.n)->capture_default_str();
  verify->add_option("--window", p.window, "0: per-relation default")->capture_default_str();
  verify->add_option("--max-length", p.max_length)->capture_default_str();
  verify->add_option("--samples", p.samples)->capture_default_str();
  verify->add_option("--seed", p.seed)->capture_default_str();
  verify->add_option("--jobs", p.jobs)->capture_default_str();
  verify->add_flag("--dump", dump, "key=value records instead of report lines");
  verify->callback([&] { rc = finish(run_suite(suite, p), dump); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
