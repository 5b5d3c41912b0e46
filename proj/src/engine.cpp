#include "genlogic/engine.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <type_traits>

#include "premise_scorer.hpp"

namespace genlogic {

namespace detail {

void check_formula(const Formula& f, std::size_t width) {
  if (!f.grounded()) throw std::invalid_argument("formula must be grounded before inference");
  if (max_atom(f) >= static_cast<long>(width))
    throw std::invalid_argument("formula mentions atom " + std::to_string(max_atom(f)) + " outside a world of width " +
                                std::to_string(width));
}

PremiseScorer::PremiseScorer(std::span<const Formula> premises, std::size_t width) : size_(premises.size()) {
  const std::size_t words = (width + 63) / 64;
  // occurrences[2 * atom + polarity] = literals of that kind seen so far
  std::vector<std::size_t> occurrences;
  for (const auto& f : premises) {
    check_formula(f, width);
    if (!f.is_literal()) {
      general_.push_back(f);
      continue;
    }
    const bool positive = f.kind() == Formula::Kind::atom;
    const std::size_t atom = positive ? f.atom_index() : f.operand().atom_index();
    if (occurrences.empty()) occurrences.assign(2 * width, 0);
    const std::size_t layer = occurrences[2 * atom + (positive ? 1 : 0)]++;
    while (layers_.size() <= layer) layers_.push_back({std::vector<std::uint64_t>(words, 0), std::vector<std::uint64_t>(words, 0)});
    auto& mask = positive ? layers_[layer].pos : layers_[layer].neg;
    mask[atom >> 6] |= std::uint64_t{1} << (atom & 63);
  }
}

}  // namespace detail

namespace {

using detail::check_formula;
using detail::PremiseScorer;

// A weighted list of worlds: model weights for a distribution, multiplicities
// for a dataset.
template <class W>
struct Support {
  std::span<const World> worlds;
  std::span<const W> weights;
  std::size_t width;
};

template <class Num>
Support<Num> support_of(const ModelDistribution<Num>& dist) {
  return {dist.worlds(), dist.weights(), dist.world(0).width()};
}

Support<std::uint64_t> support_of(const Dataset& data) {
  if (data.empty()) throw std::invalid_argument("inference over an empty dataset");
  return {data.worlds(), data.counts(), data.width()};
}

template <class Num, class W>
Num to_num(const W& w) {
  if constexpr (std::is_same_v<W, std::uint64_t>)
    return NumTraits<Num>::from_count(w);
  else
    return w;
}

template <class W>
bool positive(const W& w) {
  if constexpr (std::is_same_v<W, std::uint64_t>)
    return w > 0;
  else
    return NumTraits<W>::is_positive(w);
}

template <class Num>
Num mu_of(const MuRegime& r) {
  return NumTraits<Num>::from_rational(r.mu());
}

// Powers q^0..q^n.
template <class Num>
std::vector<Num> powers(const Num& q, std::size_t n) {
  std::vector<Num> p;
  p.reserve(n + 1);
  p.push_back(Num(1));
  for (std::size_t i = 1; i <= n; ++i) p.push_back(Num(p.back() * q));
  return p;
}

// Fixed-mu weights factored as r^(|premises| - score) with r = (1 - mu)/mu.
// For doubles the exponents are shifted so that the dominant world gets
// factor 1; the shift cancels in every ratio.
template <class Num>
struct FixedFactors {
  FixedFactors(const MuRegime& regime, std::size_t premises, std::span<const std::size_t> exponents) {
    mu = mu_of<Num>(regime);
    const Num one_minus = Num(1 - mu);
    r = Num(one_minus / mu);
    if constexpr (std::is_same_v<Num, double>) {
      shrinking = r <= 1.0;
      if (!exponents.empty()) {
        auto [lo, hi] = std::minmax_element(exponents.begin(), exponents.end());
        shift = shrinking ? *lo : *hi;
      }
      table = powers<Num>(shrinking ? r : Num(1 / r), premises);
    } else {
      table = powers<Num>(r, premises);
    }
  }

  const Num& operator()(std::size_t exponent) const {
    if constexpr (std::is_same_v<Num, double>) {
      return table[shrinking ? exponent - shift : shift - exponent];
    } else {
      return table[exponent];
    }
  }

  Num mu;
  Num r;
  bool shrinking = true;
  std::size_t shift = 0;
  std::vector<Num> table;
};

constexpr std::size_t kImpossible = std::numeric_limits<std::size_t>::max();

// Score of every possible world; kImpossible for zero-weight worlds.
template <class W>
std::vector<std::size_t> scores_of(const PremiseScorer& scorer, const Support<W>& s) {
  std::vector<std::size_t> out(s.worlds.size());
  for (std::size_t i = 0; i < s.worlds.size(); ++i)
    out[i] = positive(s.weights[i]) ? scorer.score(s.worlds[i]) : kImpossible;
  return out;
}

// Score every selected world must reach under mu = 1 / mu -> 1, or nullopt
// when the support has no possible world at all.
std::optional<std::size_t> target_score(const std::vector<std::size_t>& scores, std::size_t premises,
                                        const MuRegime& regime) {
  std::optional<std::size_t> best;
  for (auto s : scores)
    if (s != kImpossible && (!best || s > *best)) best = s;
  if (!best) return std::nullopt;
  return regime.kind() == MuRegime::Kind::one ? premises : *best;
}

// Posterior weight of each world given the premises, before normalisation,
// and the normaliser. Shared by cond_prob and the posterior functions.
template <class Num, class W>
struct Posterior {
  // one / limit: selected worlds carry their support weight
  std::vector<bool> selected;
  W selected_total{};
  // fixed: support weight times the r-power factor
  std::vector<Num> weight;
  Num total{};
  std::vector<std::size_t> exponents;
  std::optional<FixedFactors<Num>> factors;
  bool defined = false;
};

template <class Num, class W>
Posterior<Num, W> posterior_of(std::span<const Formula> premises, const Support<W>& s, const MuRegime& regime) {
  PremiseScorer scorer(premises, s.width);
  const auto scores = scores_of(scorer, s);
  Posterior<Num, W> post;
  const std::size_t n = s.worlds.size();
  if (regime.kind() != MuRegime::Kind::fixed) {
    auto target = target_score(scores, premises.size(), regime);
    if (!target) throw std::invalid_argument("no possible world in the probability source");
    post.selected.assign(n, false);
    post.selected_total = W(0);
    for (std::size_t i = 0; i < n; ++i) {
      if (scores[i] == *target) {
        post.selected[i] = true;
        post.selected_total += s.weights[i];
      }
    }
    post.defined = positive(post.selected_total);
    return post;
  }
  post.exponents.assign(n, 0);
  std::vector<std::size_t> present;
  for (std::size_t i = 0; i < n; ++i) {
    if (scores[i] == kImpossible) continue;
    post.exponents[i] = premises.size() - scores[i];
    present.push_back(post.exponents[i]);
  }
  if (present.empty()) throw std::invalid_argument("no possible world in the probability source");
  post.factors.emplace(regime, premises.size(), present);
  post.weight.assign(n, Num(0));
  post.total = Num(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (scores[i] == kImpossible) continue;
    post.weight[i] = to_num<Num>(s.weights[i]) * (*post.factors)(post.exponents[i]);
    post.total += post.weight[i];
  }
  post.defined = NumTraits<Num>::is_positive(post.total);
  return post;
}

template <class Num, class W>
Num prob_impl(const Formula& alpha, const Support<W>& s, const MuRegime& regime) {
  check_formula(alpha, s.width);
  W mass(0), total(0);
  for (std::size_t i = 0; i < s.worlds.size(); ++i) {
    total += s.weights[i];
    if (positive(s.weights[i]) && evaluate(alpha, s.worlds[i])) mass += s.weights[i];
  }
  Num f = to_num<Num>(mass);
  if constexpr (std::is_same_v<W, std::uint64_t>) f /= to_num<Num>(total);
  if (regime.kind() != MuRegime::Kind::fixed) return f;
  const Num mu = mu_of<Num>(regime);
  return Num(mu * f + (1 - mu) * (1 - f));
}

template <class Num, class W>
Num joint_impl(std::span<const Formula> gamma, const Support<W>& s, const MuRegime& regime) {
  PremiseScorer scorer(gamma, s.width);
  const std::size_t j = gamma.size();
  Num acc(0);
  W mass(0), total(0);
  std::vector<Num> mu_pow, inv_pow;
  if (regime.is_fixed()) {
    const Num mu = mu_of<Num>(regime);
    mu_pow = powers<Num>(mu, j);
    inv_pow = powers<Num>(Num(1 - mu), j);
  }
  for (std::size_t i = 0; i < s.worlds.size(); ++i) {
    total += s.weights[i];
    if (!positive(s.weights[i])) continue;
    const std::size_t sc = scorer.score(s.worlds[i]);
    if (regime.is_fixed())
      acc += to_num<Num>(s.weights[i]) * mu_pow[sc] * inv_pow[j - sc];
    else if (sc == j)
      mass += s.weights[i];
  }
  if (!regime.is_fixed()) acc = to_num<Num>(mass);
  if constexpr (std::is_same_v<W, std::uint64_t>) acc /= to_num<Num>(total);
  return acc;
}

template <class Num, class W>
Conditional<Num> cond_impl(const Query& q, const Support<W>& s, const MuRegime& regime) {
  check_formula(q.conclusion, s.width);
  if (q.premises.empty()) return prob_impl<Num>(q.conclusion, s, regime);
  auto post = posterior_of<Num>(q.premises, s, regime);
  if (!post.defined) return std::nullopt;
  const std::size_t n = s.worlds.size();
  if (!regime.is_fixed()) {
    W num(0);
    for (std::size_t i = 0; i < n; ++i)
      if (post.selected[i] && evaluate(q.conclusion, s.worlds[i])) num += s.weights[i];
    return Num(to_num<Num>(num) / to_num<Num>(post.selected_total));
  }
  // p(alpha | m) / mu is 1 where alpha holds and r elsewhere.
  const auto& fac = *post.factors;
  Num num(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!NumTraits<Num>::is_positive(post.weight[i])) continue;
    if (evaluate(q.conclusion, s.worlds[i]))
      num += post.weight[i];
    else
      num += post.weight[i] * fac.r;
  }
  return Num(fac.mu * num / post.total);
}

template <class Num, class W>
std::optional<std::vector<Num>> posterior_impl(std::span<const Formula> premises, const Support<W>& s,
                                               const MuRegime& regime) {
  auto post = posterior_of<Num>(premises, s, regime);
  if (!post.defined) return std::nullopt;
  const std::size_t n = s.worlds.size();
  std::vector<Num> out(n, Num(0));
  if (!regime.is_fixed()) {
    const Num total = to_num<Num>(post.selected_total);
    for (std::size_t i = 0; i < n; ++i)
      if (post.selected[i]) out[i] = to_num<Num>(s.weights[i]) / total;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (NumTraits<Num>::is_positive(post.weight[i])) out[i] = post.weight[i] / post.total;
  return out;
}

}  // namespace

std::size_t score(std::span<const Formula> premises, const World& w) {
  return PremiseScorer(premises, w.width()).score(w);
}

template <class Num>
Num likelihood(const Formula& f, const World& w, const MuRegime& regime) {
  const bool holds = evaluate(f, w);
  if (!regime.is_fixed()) return Num(holds ? 1 : 0);
  const Num mu = mu_of<Num>(regime);
  return holds ? mu : Num(1 - mu);
}

template <class Num>
Num prob(const Formula& alpha, const ModelDistribution<Num>& dist, const MuRegime& regime) {
  return prob_impl<Num>(alpha, support_of(dist), regime);
}

template <class Num>
Num prob(const Formula& alpha, const Dataset& data, const MuRegime& regime) {
  return prob_impl<Num>(alpha, support_of(data), regime);
}

template <class Num>
Num joint_prob(std::span<const Formula> gamma, const ModelDistribution<Num>& dist, const MuRegime& regime) {
  return joint_impl<Num>(gamma, support_of(dist), regime);
}

template <class Num>
Num joint_prob(std::span<const Formula> gamma, const Dataset& data, const MuRegime& regime) {
  return joint_impl<Num>(gamma, support_of(data), regime);
}

template <class Num>
Conditional<Num> cond_prob(const Query& q, const ModelDistribution<Num>& dist, const MuRegime& regime) {
  return cond_impl<Num>(q, support_of(dist), regime);
}

template <class Num>
Conditional<Num> cond_prob(const Query& q, const Dataset& data, const MuRegime& regime) {
  return cond_impl<Num>(q, support_of(data), regime);
}

template <class Num>
std::optional<std::vector<Num>> posterior_data(std::span<const Formula> premises, const Dataset& data,
                                               const MuRegime& regime) {
  return posterior_impl<Num>(premises, support_of(data), regime);
}

template <class Num>
std::optional<std::vector<Num>> posterior_models(std::span<const Formula> premises, const ModelDistribution<Num>& dist,
                                                 const MuRegime& regime) {
  return posterior_impl<Num>(premises, support_of(dist), regime);
}

template <class Num>
RunningEstimate<Num> estimate(const Formula& alpha, const Dataset& data, const MuRegime& regime) {
  return {data.total(), prob<Num>(alpha, data, regime), std::nullopt};
}

template <class Num>
RunningEstimate<Num> estimate(const Query& q, const Dataset& data, const MuRegime& regime) {
  if (regime.kind() == MuRegime::Kind::limit_one)
    throw std::invalid_argument("conditional running estimates support mu = 1 and fixed mu only");
  return {data.total(), cond_prob<Num>(q, data, regime), joint_prob<Num>(q.premises, data, regime)};
}

template <class Num>
RunningEstimate<Num> update(const RunningEstimate<Num>& est, const Formula& alpha, const World& datum,
                            const MuRegime& regime) {
  if (est.count == 0 || !est.value) throw std::invalid_argument("running estimate needs K >= 1");
  const Num k = NumTraits<Num>::from_count(est.count);
  Num next = (k * *est.value + likelihood<Num>(alpha, datum, regime)) / Num(k + 1);
  return {est.count + 1, std::move(next), std::nullopt};
}

template <class Num>
RunningEstimate<Num> update(const RunningEstimate<Num>& est, const Query& q, const World& datum,
                            const MuRegime& regime) {
  if (regime.kind() == MuRegime::Kind::limit_one)
    throw std::invalid_argument("conditional running estimates support mu = 1 and fixed mu only");
  if (est.count == 0 || !est.premise_value) throw std::invalid_argument("conditional running estimate needs K >= 1");
  Num premises_lik(1);
  for (const auto& f : q.premises) premises_lik *= likelihood<Num>(f, datum, regime);
  const Num k = NumTraits<Num>::from_count(est.count);
  const Num& p_premises = *est.premise_value;
  const Num joint = est.value ? Num(*est.value * p_premises) : Num(0);
  const Num next_joint = k * joint + likelihood<Num>(q.conclusion, datum, regime) * premises_lik;
  const Num next_premises = k * p_premises + premises_lik;
  RunningEstimate<Num> out;
  out.count = est.count + 1;
  out.premise_value = Num(next_premises / Num(k + 1));
  if (NumTraits<Num>::is_positive(next_premises)) out.value = Num(next_joint / next_premises);
  return out;
}

#define GENLOGIC_INSTANTIATE(Num)                                                                                 \
  template Num likelihood<Num>(const Formula&, const World&, const MuRegime&);                                   \
  template Num prob<Num>(const Formula&, const ModelDistribution<Num>&, const MuRegime&);                       \
  template Num prob<Num>(const Formula&, const Dataset&, const MuRegime&);                                      \
  template Num joint_prob<Num>(std::span<const Formula>, const ModelDistribution<Num>&, const MuRegime&);       \
  template Num joint_prob<Num>(std::span<const Formula>, const Dataset&, const MuRegime&);                      \
  template Conditional<Num> cond_prob<Num>(const Query&, const ModelDistribution<Num>&, const MuRegime&);       \
  template Conditional<Num> cond_prob<Num>(const Query&, const Dataset&, const MuRegime&);                      \
  template std::optional<std::vector<Num>> posterior_data<Num>(std::span<const Formula>, const Dataset&,        \
                                                               const MuRegime&);                                  \
  template std::optional<std::vector<Num>> posterior_models<Num>(std::span<const Formula>,                      \
                                                                 const ModelDistribution<Num>&, const MuRegime&); \
  template RunningEstimate<Num> estimate<Num>(const Formula&, const Dataset&, const MuRegime&);                 \
  template RunningEstimate<Num> estimate<Num>(const Query&, const Dataset&, const MuRegime&);                   \
  template RunningEstimate<Num> update<Num>(const RunningEstimate<Num>&, const Formula&, const World&,          \
                                            const MuRegime&);                                                    \
  template RunningEstimate<Num> update<Num>(const RunningEstimate<Num>&, const Query&, const World&,            \
                                            const MuRegime&);
GENLOGIC_INSTANTIATE(Rational)
GENLOGIC_INSTANTIATE(double)
#undef GENLOGIC_INSTANTIATE

}  // namespace genlogic
