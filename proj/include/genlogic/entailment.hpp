#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "genlogic/dataset.hpp"
#include "genlogic/distribution.hpp"
#include "genlogic/engine.hpp"
#include "genlogic/formula.hpp"
#include "genlogic/rational.hpp"
#include "genlogic/regime.hpp"
#include "genlogic/semantics.hpp"

namespace genlogic {

// [[premises]] is a subset of [[alpha]] over the given (exhaustive) worlds.
bool classical_entails(std::span<const Formula> premises, const Formula& alpha, std::span<const World> worlds);

// Same, restricted to worlds of positive weight.
template <class Num>
bool possible_entails(std::span<const Formula> premises, const Formula& alpha, const ModelDistribution<Num>& dist);

// Cardinality-maximal consistent (or possible) subsets of a premise multiset.
// Subsets are sorted index lists into the premises; `models` holds the
// indices of the worlds in the union of their model sets, ascending.
struct MaximalSubsets {
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> models;
};

// Throws CapExceeded when there are more than `cap` premises.
MaximalSubsets mcs(std::span<const Formula> premises, std::span<const World> worlds,
                   std::size_t cap = kDefaultEnumerationCap);

template <class Num>
MaximalSubsets mps(std::span<const Formula> premises, const ModelDistribution<Num>& dist,
                   std::size_t cap = kDefaultEnumerationCap);

// p(conclusion | premises) >= theta; nullopt when the probability is
// undefined. Throws std::invalid_argument unless 0.5 < theta <= 1.
template <class Num>
std::optional<bool> generative_consequence(const Query& q, const Rational& theta, const ModelDistribution<Num>& dist,
                                           const MuRegime& regime);
template <class Num>
std::optional<bool> generative_consequence(const Query& q, const Rational& theta, const Dataset& data,
                                           const MuRegime& regime);

}  // namespace genlogic
