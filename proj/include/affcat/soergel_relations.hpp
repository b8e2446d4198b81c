#pragma once

// The defining relations of the diagrammatic category, evaluated under the
// functor to bimodules, together with the decomposition witnesses and the
// degree audit of the generator images.

#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "affcat/soergel.hpp"

namespace affcat {

struct SoergelRelation {
  std::string id;
  int colours = 0;
  std::string condition;  // side condition on the colours, for messages
  std::function<bool(int r, const std::vector<int>& c)> admissible;
  // Each pair is one equality between morphisms with equal source/target.
  std::function<std::vector<std::pair<Morphism, Morphism>>(int r, const std::vector<int>& c)> sides;
};

const std::vector<SoergelRelation>& soergel_relations();
// Throws std::invalid_argument for unknown ids.
const SoergelRelation& find_relation(const std::string& id);
// All colourings in {1..r}^k that satisfy the side condition.
std::vector<std::vector<int>> admissible_colourings(const SoergelRelation& rel, int r);

struct CheckOutcome {
  std::string name;
  bool pass = true;
  std::string witness;
};

// Evaluates every equality of the relation on every basis tag of its
// source.  Throws std::invalid_argument if the colours are not admissible.
CheckOutcome check_relation(const std::string& id, int r, const std::vector<int>& colours);

// Explicit decomposition maps.  kind is S1 (colour i), S2 (distant i, j),
// S3 (adjacent i, j), S4 (colour i) or tiso2 (colour i).
struct Witness {
  std::string kind;
  std::vector<std::pair<std::string, Morphism>> maps;
  std::vector<CheckOutcome> checks;
  bool ok() const;
};
Witness decompose_witness(const std::string& kind, int r, const std::vector<int>& colours);

// Every generator with admissible colours, applied to every basis tag of
// its source, changes the degree by exactly its table degree.
std::vector<CheckOutcome> degree_audit(int r);

// A random element of a random word of at most max_letters letters, built
// from one or two random pure tensors.
BimElement random_bim_element(std::mt19937_64& rng, int r, int max_letters);

}  // namespace affcat
