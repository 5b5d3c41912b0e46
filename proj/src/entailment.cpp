#include "genlogic/entailment.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "premise_scorer.hpp"

namespace genlogic {

namespace {

template <class Pred>
bool entails_over(std::span<const Formula> premises, const Formula& alpha, std::span<const World> worlds,
                  Pred possible) {
  for (std::size_t i = 0; i < worlds.size(); ++i) {
    if (!possible(i)) continue;
    if (!std::all_of(premises.begin(), premises.end(), [&](const Formula& f) { return evaluate(f, worlds[i]); }))
      continue;
    if (!evaluate(alpha, worlds[i])) return false;
  }
  return true;
}

// The worlds of maximal score are exactly the models of the
// cardinality-maximal subsets, and the premises each of them satisfies are
// those subsets.
template <class Pred>
MaximalSubsets maximal_subsets(std::span<const Formula> premises, std::span<const World> worlds, std::size_t cap,
                               Pred possible) {
  if (premises.size() > cap)
    throw CapExceeded("maximal subsets of " + std::to_string(premises.size()) + " premises exceed the cap of " +
                      std::to_string(cap));
  MaximalSubsets out;
  if (worlds.empty()) return out;
  detail::PremiseScorer scorer(premises, worlds.front().width());
  std::optional<std::size_t> best;
  std::vector<std::size_t> scores(worlds.size(), 0);
  for (std::size_t i = 0; i < worlds.size(); ++i) {
    if (!possible(i)) continue;
    scores[i] = scorer.score(worlds[i]);
    if (!best || scores[i] > *best) best = scores[i];
  }
  if (!best) return out;
  std::set<std::vector<std::size_t>> found;
  for (std::size_t i = 0; i < worlds.size(); ++i) {
    if (!possible(i) || scores[i] != *best) continue;
    out.models.push_back(i);
    std::vector<std::size_t> subset;
    for (std::size_t j = 0; j < premises.size(); ++j)
      if (evaluate(premises[j], worlds[i])) subset.push_back(j);
    found.insert(std::move(subset));
  }
  out.subsets.assign(found.begin(), found.end());
  return out;
}

template <class Num>
std::optional<bool> threshold(const Conditional<Num>& p, const Rational& theta) {
  if (!p) return std::nullopt;
  if constexpr (std::is_same_v<Num, double>)
    return *p >= to_double(theta);
  else
    return *p >= theta;
}

void check_theta(const Rational& theta) {
  if (theta <= Rational(1, 2) || theta > 1)
    throw std::invalid_argument("theta must lie in (0.5, 1], got " + to_string(theta));
}

}  // namespace

bool classical_entails(std::span<const Formula> premises, const Formula& alpha, std::span<const World> worlds) {
  return entails_over(premises, alpha, worlds, [](std::size_t) { return true; });
}

template <class Num>
bool possible_entails(std::span<const Formula> premises, const Formula& alpha, const ModelDistribution<Num>& dist) {
  return entails_over(premises, alpha, dist.worlds(), [&](std::size_t i) { return dist.possible(i); });
}

MaximalSubsets mcs(std::span<const Formula> premises, std::span<const World> worlds, std::size_t cap) {
  return maximal_subsets(premises, worlds, cap, [](std::size_t) { return true; });
}

template <class Num>
MaximalSubsets mps(std::span<const Formula> premises, const ModelDistribution<Num>& dist, std::size_t cap) {
  return maximal_subsets(premises, dist.worlds(), cap, [&](std::size_t i) { return dist.possible(i); });
}

template <class Num>
std::optional<bool> generative_consequence(const Query& q, const Rational& theta, const ModelDistribution<Num>& dist,
                                           const MuRegime& regime) {
  check_theta(theta);
  return threshold<Num>(cond_prob<Num>(q, dist, regime), theta);
}

template <class Num>
std::optional<bool> generative_consequence(const Query& q, const Rational& theta, const Dataset& data,
                                           const MuRegime& regime) {
  check_theta(theta);
  return threshold<Num>(cond_prob<Num>(q, data, regime), theta);
}

#define GENLOGIC_INSTANTIATE(Num)                                                                           \
  template bool possible_entails<Num>(std::span<const Formula>, const Formula&, const ModelDistribution<Num>&); \
  template MaximalSubsets mps<Num>(std::span<const Formula>, const ModelDistribution<Num>&, std::size_t);     \
  template std::optional<bool> generative_consequence<Num>(const Query&, const Rational&,                     \
                                                           const ModelDistribution<Num>&, const MuRegime&);   \
  template std::optional<bool> generative_consequence<Num>(const Query&, const Rational&, const Dataset&,     \
                                                           const MuRegime&);
GENLOGIC_INSTANTIATE(Rational)
GENLOGIC_INSTANTIATE(double)
#undef GENLOGIC_INSTANTIATE

}  // namespace genlogic
