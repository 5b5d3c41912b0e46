#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "genlogic/dataset.hpp"
#include "genlogic/distribution.hpp"
#include "genlogic/formula.hpp"
#include "genlogic/rational.hpp"
#include "genlogic/regime.hpp"

namespace genlogic {

// A conditional probability that may be undefined (division by zero under
// mu = 1). std::nullopt is the undefined result; it is never an error.
template <class Num>
using Conditional = std::optional<Num>;

// p(conclusion | premises). Premises form a multiset: duplicates count once
// per occurrence, and so does a conclusion that also appears among them.
struct Query {
  Formula conclusion;
  std::vector<Formula> premises;
};

// Number of premise occurrences true in w.
std::size_t score(std::span<const Formula> premises, const World& w);

// p(f | m): the indicator of f in m for mu = 1 and mu -> 1, otherwise mu or
// 1 - mu.
template <class Num>
Num likelihood(const Formula& f, const World& w, const MuRegime& regime);

// p(alpha). A dataset source is a single pass over its entries.
template <class Num>
Num prob(const Formula& alpha, const ModelDistribution<Num>& dist, const MuRegime& regime);
template <class Num>
Num prob(const Formula& alpha, const Dataset& data, const MuRegime& regime);

// p(gamma_1, ..., gamma_J): the joint probability that every formula of the
// multiset is interpreted as true. Under mu -> 1 this is the limit value.
template <class Num>
Num joint_prob(std::span<const Formula> gamma, const ModelDistribution<Num>& dist, const MuRegime& regime);
template <class Num>
Num joint_prob(std::span<const Formula> gamma, const Dataset& data, const MuRegime& regime);

// p(alpha | premises).
//
//  one:    mass of alpha among the possible worlds satisfying every premise;
//          undefined if there are none.
//  limit:  mass of alpha among the possible worlds of maximal score (the worlds
//          of the cardinality-maximal possible subsets); equals p(alpha) for
//          empty premises.
//  fixed:  the exact Bernoulli-weighted ratio.
//
// "Possible" means positive weight; for a dataset, the worlds that carry data.
// Throws std::invalid_argument for an empty dataset or mismatched widths.
template <class Num>
Conditional<Num> cond_prob(const Query& q, const ModelDistribution<Num>& dist, const MuRegime& regime);
template <class Num>
Conditional<Num> cond_prob(const Query& q, const Dataset& data, const MuRegime& regime);

// p(d_k | premises) for every entry k (an entry with multiplicity c carries
// the mass of its c data). Sums to one; nullopt when the premises leave no
// weight (mu = 1 only).
template <class Num>
std::optional<std::vector<Num>> posterior_data(std::span<const Formula> premises, const Dataset& data,
                                               const MuRegime& regime);

// p(m | premises) for every world of the distribution.
template <class Num>
std::optional<std::vector<Num>> posterior_models(std::span<const Formula> premises, const ModelDistribution<Num>& dist,
                                                 const MuRegime& regime);

// Incrementally maintained p_K(alpha), or p_K(alpha | premises) together with
// p_K(premises).
template <class Num>
struct RunningEstimate {
  std::uint64_t count = 0;
  Conditional<Num> value;
  std::optional<Num> premise_value;
};

template <class Num>
RunningEstimate<Num> estimate(const Formula& alpha, const Dataset& data, const MuRegime& regime);

// Conditional targets support mu = 1 and fixed mu; the limit regime has no
// constant-time update and is rejected with std::invalid_argument.
template <class Num>
RunningEstimate<Num> estimate(const Query& q, const Dataset& data, const MuRegime& regime);

// p_{K+1} = (K p_K + p(alpha | m(d_{K+1}))) / (K + 1).
template <class Num>
RunningEstimate<Num> update(const RunningEstimate<Num>& est, const Formula& alpha, const World& datum,
                            const MuRegime& regime);

// Updates the joint p(alpha, premises) and p(premises) together and divides.
template <class Num>
RunningEstimate<Num> update(const RunningEstimate<Num>& est, const Query& q, const World& datum,
                            const MuRegime& regime);

}  // namespace genlogic
