// Randomized identities over small signatures (<= 4 atoms, <= 5 premises),
// exact rationals throughout unless noted.
#include <doctest.h>

#include <cmath>

#include "genlogic/dataset.hpp"
#include "genlogic/engine.hpp"
#include "genlogic/entailment.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace genlogic;
using support::Gen;
using support::q;

namespace {

constexpr int kCases = 250;

struct Case {
  std::size_t n;
  ModelDistribution<Rational> dist;
  Formula alpha;
  Formula beta;
  std::vector<Formula> delta;
  Rational mu;
};

Case make_case(Gen& gen, bool all_positive = false) {
  const std::size_t n = 1 + gen.below(4);
  Case c{n, gen.distribution(n, all_positive), gen.formula(n), gen.formula(n), gen.formulas(n, 5), gen.mu()};
  // occasionally repeat a premise
  if (!c.delta.empty() && c.delta.size() < 5 && gen.coin(0.2)) c.delta.push_back(c.delta[gen.below(c.delta.size())]);
  return c;
}

std::vector<MuRegime> regimes(const Case& c) { return {MuRegime::one(), MuRegime::limit_one(), MuRegime::fixed(c.mu)}; }

Dataset sample_data(Gen& gen, std::size_t n) {
  const auto worlds = enumerate_worlds(n);
  Dataset data(n);
  const std::size_t entries = 1 + gen.below(8);
  for (std::size_t k = 0; k < entries; ++k) data.add(worlds[gen.below(worlds.size())], 1 + gen.below(3));
  return data;
}

bool all_entail(const std::vector<std::vector<std::size_t>>& subsets, const std::vector<Formula>& delta,
                const Formula& alpha, auto entails) {
  for (const auto& s : subsets) {
    std::vector<Formula> chosen;
    for (auto j : s) chosen.push_back(delta[j]);
    if (!entails(chosen)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("Kolmogorov axioms and negation") {
  Gen gen(1001);
  for (int i = 0; i < kCases; ++i) {
    const auto c = make_case(gen);
    for (const auto& r : regimes(c)) {
      const Rational pa = prob<Rational>(c.alpha, c.dist, r);
      const Rational pb = prob<Rational>(c.beta, c.dist, r);
      CHECK(pa >= 0);
      CHECK(pa <= 1);
      CHECK(prob<Rational>(Formula::negation(c.alpha), c.dist, r) == 1 - pa);
      CHECK(prob<Rational>(Formula::disjunction(c.alpha, c.beta), c.dist, r) ==
            pa + pb - prob<Rational>(Formula::conjunction(c.alpha, c.beta), c.dist, r));
      const auto yes = cond_prob<Rational>(Query{c.alpha, c.delta}, c.dist, r);
      const auto no = cond_prob<Rational>(Query{Formula::negation(c.alpha), c.delta}, c.dist, r);
      REQUIRE(yes.has_value() == no.has_value());
      if (yes) CHECK(*yes + *no == 1);
    }
  }
}

TEST_CASE("Bayes replacement") {
  Gen gen(1002);
  for (int i = 0; i < kCases; ++i) {
    const auto c = make_case(gen);
    for (const auto& r : {MuRegime::one(), MuRegime::fixed(c.mu)}) {
      const Rational pd = joint_prob<Rational>(c.delta, c.dist, r);
      const Rational pa = prob<Rational>(c.alpha, c.dist, r);
      if (pd == 0 || pa == 0) continue;
      auto with_alpha = c.delta;
      with_alpha.push_back(c.alpha);
      const Rational delta_given_alpha = joint_prob<Rational>(with_alpha, c.dist, r) / pa;
      CHECK(delta_given_alpha * pa / pd == cond_prob<Rational>(Query{c.alpha, c.delta}, c.dist, r));
    }
  }
}

TEST_CASE("data and model posteriors give the same conditional") {
  Gen gen(1003);
  int checked = 0;
  for (int i = 0; i < kCases; ++i) {
    const std::size_t n = 1 + gen.below(4);
    const auto data = sample_data(gen, n);
    const auto dist = mle_distribution<Rational>(data, enumerate_worlds(n));
    const Formula alpha = gen.formula(n);
    const auto delta = gen.formulas(n, 5);
    for (const auto& r : {MuRegime::one(), MuRegime::limit_one(), MuRegime::fixed(gen.mu())}) {
      const auto direct = cond_prob<Rational>(Query{alpha, delta}, data, r);
      CHECK(direct == cond_prob<Rational>(Query{alpha, delta}, dist, r));
      const auto pd = posterior_data<Rational>(delta, data, r);
      const auto pm = posterior_models<Rational>(delta, dist, r);
      REQUIRE(pd.has_value() == direct.has_value());
      REQUIRE(pm.has_value() == direct.has_value());
      if (!direct) continue;
      // under the limit p(alpha | m) is the indicator
      const MuRegime lik = r.kind() == MuRegime::Kind::limit_one ? MuRegime::one() : r;
      Rational by_data(0), by_models(0), mass(0);
      for (std::size_t k = 0; k < data.size(); ++k) {
        by_data += likelihood<Rational>(alpha, data.world(k), lik) * (*pd)[k];
        mass += (*pd)[k];
      }
      for (std::size_t m = 0; m < dist.size(); ++m) by_models += likelihood<Rational>(alpha, dist.world(m), lik) * (*pm)[m];
      CHECK(mass == 1);
      CHECK(by_data == *direct);
      CHECK(by_models == *direct);
      ++checked;
    }
  }
  CHECK(checked >= 200);
}

TEST_CASE("certainty is consequence under mu = 1") {
  Gen gen(1004);
  int c1 = 0, c2 = 0;
  for (int i = 0; i < 2 * kCases; ++i) {
    const auto pos = make_case(gen, true);
    const auto worlds = pos.dist.worlds();
    if (!models_of(pos.delta, worlds).empty()) {
      const auto p = cond_prob<Rational>(Query{pos.alpha, pos.delta}, pos.dist, MuRegime::one());
      REQUIRE(p);
      CHECK((*p == 1) == classical_entails(pos.delta, pos.alpha, worlds));
      ++c1;
    }
    const auto any = make_case(gen);
    const auto p = cond_prob<Rational>(Query{any.alpha, any.delta}, any.dist, MuRegime::one());
    if (p) {
      CHECK((*p == 1) == possible_entails(any.delta, any.alpha, any.dist));
      ++c2;
    }
  }
  CHECK(c1 >= 200);
  CHECK(c2 >= 200);
}

TEST_CASE("certainty under the limit is subset-wise consequence") {
  Gen gen(1005);
  for (int i = 0; i < kCases; ++i) {
    const auto pos = make_case(gen, true);
    const auto p = cond_prob<Rational>(Query{pos.alpha, pos.delta}, pos.dist, MuRegime::limit_one());
    REQUIRE(p);
    const auto family = oracle::mcs_bruteforce(pos.delta, pos.dist.worlds());
    CHECK((*p == 1) == all_entail(family.subsets, pos.delta, pos.alpha, [&](const std::vector<Formula>& s) {
            return classical_entails(s, pos.alpha, pos.dist.worlds());
          }));

    const auto any = make_case(gen);
    const auto pa = cond_prob<Rational>(Query{any.alpha, any.delta}, any.dist, MuRegime::limit_one());
    REQUIRE(pa);
    const auto possible = oracle::mps_bruteforce(any.delta, any.dist);
    CHECK((*pa == 1) == all_entail(possible.subsets, any.delta, any.alpha, [&](const std::vector<Formula>& s) {
            return possible_entails(s, any.alpha, any.dist);
          }));
  }
}

TEST_CASE("max-score worlds are the models of the maximal subsets") {
  Gen gen(1006);
  for (int i = 0; i < kCases; ++i) {
    const auto c = make_case(gen);
    const auto worlds = c.dist.worlds();
    const auto fast = mcs(c.delta, worlds);
    const auto slow = oracle::mcs_bruteforce(c.delta, worlds);
    CHECK(fast.subsets == slow.subsets);
    CHECK(fast.models == slow.models);
    const auto fast_p = mps(c.delta, c.dist);
    const auto slow_p = oracle::mps_bruteforce(c.delta, c.dist);
    CHECK(fast_p.subsets == slow_p.subsets);
    CHECK(fast_p.models == slow_p.models);
    if (c.dist.all_positive()) CHECK(fast_p.models == fast.models);
    // the limit posterior is supported exactly on those models
    const auto post = posterior_models<Rational>(c.delta, c.dist, MuRegime::limit_one());
    REQUIRE(post);
    std::vector<std::size_t> support_of;
    for (std::size_t m = 0; m < post->size(); ++m)
      if ((*post)[m] > 0) support_of.push_back(m);
    CHECK(support_of == slow_p.models);
  }
}

TEST_CASE("no explosion under the limit") {
  Gen gen(1007);
  for (int i = 0; i < kCases; ++i) {
    const auto c = make_case(gen);
    const Query query{c.beta, {c.alpha, Formula::negation(c.alpha)}};
    CHECK(cond_prob<Rational>(query, c.dist, MuRegime::limit_one()) == prob<Rational>(c.beta, c.dist, MuRegime::one()));
  }
}

TEST_CASE("engine agrees with the brute-force oracles") {
  Gen gen(1008);
  for (int i = 0; i < kCases; ++i) {
    const auto c = make_case(gen);
    const Query query{c.alpha, c.delta};
    CHECK(cond_prob<Rational>(query, c.dist, MuRegime::fixed(c.mu)) == oracle::cond_bruteforce(query, c.dist, c.mu));
    CHECK(cond_prob<Rational>(query, c.dist, MuRegime::one()) == oracle::cond_bruteforce(query, c.dist, q(1)));
    CHECK(cond_prob<Rational>(query, c.dist, MuRegime::limit_one()) == oracle::limit_bruteforce(query, c.dist));
    std::vector<std::pair<Formula, bool>> all_true;
    for (const auto& f : c.delta) all_true.emplace_back(f, true);
    CHECK(joint_prob<Rational>(c.delta, c.dist, MuRegime::fixed(c.mu)) == oracle::joint_bruteforce(all_true, c.dist, c.mu));
  }
}

TEST_CASE("limit regime is the mu -> 1 limit of fixed mu") {
  Gen gen(1009);
  const Rational near_one = 1 - q(1, 1000000);
  double worst = 0;
  for (int i = 0; i < kCases; ++i) {
    auto c = make_case(gen);
    if (c.delta.size() < 6 && gen.coin(0.3)) c.delta.push_back(gen.formula(c.n));
    const Query query{c.alpha, c.delta};
    const auto lim = cond_prob<Rational>(query, c.dist, MuRegime::limit_one());
    const auto fixed = cond_prob<Rational>(query, c.dist, MuRegime::fixed(near_one));
    REQUIRE(lim);
    REQUIRE(fixed);
    const double gap = std::abs(Rational(*lim - *fixed).get_d());
    worst = std::max(worst, gap);
    CHECK(gap <= 1e-3);
  }
  MESSAGE("largest gap " << worst);
}
