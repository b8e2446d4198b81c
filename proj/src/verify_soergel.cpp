// Sweep for the soergel module: the full relation catalogue over every
// admissible colouring, the degree audit, the decomposition witnesses and
// the twist-weight identity on random elements.

#include <random>
#include <stdexcept>

#include "affcat/soergel_relations.hpp"
#include "affcat/verify.hpp"

namespace affcat {

namespace {

std::string colours_str(const std::vector<int>& c) {
  std::string s = "[";
  for (size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + std::to_string(c[k]);
  return s + "]";
}

GradedPoly random_poly(std::mt19937_64& rng, int r) {
  std::uniform_int_distribution<int> nterms(1, 3), var(0, r), deg(0, 2), coef(-3, 3);
  GradedPoly p;
  for (int t = nterms(rng); t > 0; --t) {
    GradedPoly m(coef(rng));
    for (int d = deg(rng); d > 0; --d) m = m * GradedPoly::var(var(rng));
    p += m;
  }
  return p;
}

}  // namespace

BimElement random_bim_element(std::mt19937_64& rng, int r, int max_letters) {
  std::uniform_int_distribution<int> len(0, max_letters), letter(-2, r), nraw(1, 2);
  std::vector<int> word;
  for (int k = len(rng); k > 0; --k) {
    int l = letter(rng);
    word.push_back(l == 0 ? kPlus : l);
  }
  SoergelObject obj(r, word);
  std::vector<BimElement::RawTerm> raw;
  for (int t = nraw(rng); t > 0; --t) {
    BimElement::RawTerm term;
    for (int s = 0; s <= obj.unoriented(); ++s) term.push_back(random_poly(rng, r));
    raw.push_back(std::move(term));
  }
  return BimElement::normalize(obj, raw);
}

Report verify_soergel(const SuiteParams& p) {
  const int r = p.r;
  if (r < 3) throw std::invalid_argument("verify soergel: r must be at least 3");
  Report rep("soergel");

  std::vector<std::function<CaseResult()>> tasks;
  for (const auto& rel : soergel_relations()) {
    auto colourings = admissible_colourings(rel, r);
    if (colourings.empty())
      rep.add_observation("rel:" + rel.id + ":vacuous", true, "no colouring with " + rel.condition);
    for (const auto& c : colourings) {
      tasks.push_back([&rel, c, r] {
        CheckOutcome o = check_relation(rel.id, r, c);
        return CaseResult{"soergel", "rel:" + o.name, o.pass, o.witness, false};
      });
    }
  }
  run_cases(rep, tasks, p.jobs);

  for (const auto& o : degree_audit(r)) rep.add("degree:" + o.name, o.pass, o.witness);

  auto witness = [&](const std::string& kind, const std::vector<int>& c) {
    Witness w = decompose_witness(kind, r, c);
    for (const auto& chk : w.checks) rep.add("witness:" + kind + colours_str(c) + ":" + chk.name, chk.pass, chk.witness);
  };
  for (int i = 1; i <= r; ++i) {
    witness("S1", {i});
    witness("S4", {i});
    witness("tiso2", {i});
    for (int j = 1; j <= r; ++j) {
      if (distant_colours(i, j, r)) witness("S2", {i, j});
      if (adjacent_colours(i, j, r)) witness("S3", {i, j});
    }
  }

  std::mt19937_64 rng(p.seed);
  size_t twist_fail = 0;
  std::string first;
  for (int k = 0; k < p.samples; ++k) {
    BimElement e = random_bim_element(rng, r, 4);
    if (!twist_weight_check(e)) {
      if (!twist_fail++) first = e.object().str() + ": " + e.str();
    }
  }
  rep.add("twist-weight:" + std::to_string(p.samples) + "-samples", twist_fail == 0, first);
  return rep;
}

}  // namespace affcat
