#include "oracle.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace oracle {

namespace {

void check_small(const ModelDistribution<Rational>& dist) {
  if (dist.world(0).width() > kMaxAtoms) throw std::length_error("oracle: too many atoms");
}

}  // namespace

bool truth(const Formula& f, const World& w) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::atom: return w.test(f.atom_index());
    case K::negation: return !truth(f.operand(), w);
    case K::conjunction: return truth(f.lhs(), w) && truth(f.rhs(), w);
    case K::disjunction: return truth(f.lhs(), w) || truth(f.rhs(), w);
    case K::implication: return !truth(f.lhs(), w) || truth(f.rhs(), w);
    case K::equivalence: return truth(f.lhs(), w) == truth(f.rhs(), w);
    default: throw std::invalid_argument("oracle: formula is not grounded");
  }
}

Rational joint_bruteforce(const std::vector<std::pair<Formula, bool>>& gamma, const ModelDistribution<Rational>& dist,
                          const Rational& mu) {
  check_small(dist);
  Rational total(0);
  for (std::size_t i = 0; i < dist.size(); ++i) {
    Rational term = dist.weight(i);
    for (const auto& [f, v] : gamma) term *= truth(f, dist.world(i)) == v ? mu : Rational(1 - mu);
    total += term;
  }
  return total;
}

std::optional<Rational> cond_bruteforce(const Query& q, const ModelDistribution<Rational>& dist, const Rational& mu) {
  std::vector<std::pair<Formula, bool>> premises;
  for (const auto& f : q.premises) premises.emplace_back(f, true);
  const Rational den = joint_bruteforce(premises, dist, mu);
  if (den == 0) return std::nullopt;
  premises.emplace_back(q.conclusion, true);
  return Rational(joint_bruteforce(premises, dist, mu) / den);
}

LimitPolynomial::LimitPolynomial(Rational constant) {
  coeffs_.push_back(std::move(constant));
  trim();
}

LimitPolynomial LimitPolynomial::eps() {
  LimitPolynomial p;
  p.coeffs_ = {Rational(0), Rational(1)};
  return p;
}

LimitPolynomial LimitPolynomial::one_minus_eps() {
  LimitPolynomial p;
  p.coeffs_ = {Rational(1), Rational(-1)};
  return p;
}

LimitPolynomial LimitPolynomial::operator+(const LimitPolynomial& o) const {
  LimitPolynomial out;
  out.coeffs_.assign(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] += coeffs_[k];
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) out.coeffs_[k] += o.coeffs_[k];
  out.trim();
  return out;
}

LimitPolynomial LimitPolynomial::operator*(const LimitPolynomial& o) const {
  LimitPolynomial out;
  if (is_zero() || o.is_zero()) return out;
  out.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t a = 0; a < coeffs_.size(); ++a)
    for (std::size_t b = 0; b < o.coeffs_.size(); ++b) out.coeffs_[a + b] += coeffs_[a] * o.coeffs_[b];
  out.trim();
  return out;
}

std::size_t LimitPolynomial::lowest_degree() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return k;
  throw std::logic_error("zero polynomial has no lowest degree");
}

Rational LimitPolynomial::evaluate(const Rational& eps) const {
  Rational acc(0);
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * eps + coeffs_[k];
  return acc;
}

void LimitPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<Rational> limit_bruteforce(const Query& q, const ModelDistribution<Rational>& dist) {
  check_small(dist);
  LimitPolynomial num, den;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const World& m = dist.world(i);
    LimitPolynomial w(dist.weight(i));
    for (const auto& f : q.premises) w = w * (truth(f, m) ? LimitPolynomial::one_minus_eps() : LimitPolynomial::eps());
    den = den + w;
    num = num + w * (truth(q.conclusion, m) ? LimitPolynomial::one_minus_eps() : LimitPolynomial::eps());
  }
  if (den.is_zero()) return std::nullopt;
  const std::size_t d = den.lowest_degree();
  return Rational(num.coefficient(d) / den.coefficient(d));
}

namespace {

template <class Possible>
SubsetFamily lattice(const std::vector<Formula>& premises, const std::vector<World>& worlds, Possible possible) {
  if (premises.size() > kMaxPremises) throw std::length_error("oracle: too many premises");
  const std::size_t n = premises.size();
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> found;  // subset, its models
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t j = 0; j < n; ++j)
      if (mask >> j & 1) subset.push_back(j);
    std::vector<std::size_t> models;
    for (std::size_t i = 0; i < worlds.size(); ++i) {
      if (!possible(i)) continue;
      bool all = true;
      for (auto j : subset) all = all && truth(premises[j], worlds[i]);
      if (all) models.push_back(i);
    }
    if (models.empty()) continue;
    if (found.empty() || subset.size() > best) {
      found.clear();
      best = subset.size();
    }
    if (subset.size() == best) found.emplace_back(std::move(subset), std::move(models));
  }
  SubsetFamily out;
  std::set<std::size_t> union_models;
  for (auto& [s, m] : found) {
    out.subsets.push_back(s);
    union_models.insert(m.begin(), m.end());
  }
  std::sort(out.subsets.begin(), out.subsets.end());
  out.models.assign(union_models.begin(), union_models.end());
  return out;
}

}  // namespace

SubsetFamily mcs_bruteforce(const std::vector<Formula>& premises, const std::vector<World>& worlds) {
  return lattice(premises, worlds, [](std::size_t) { return true; });
}

SubsetFamily mps_bruteforce(const std::vector<Formula>& premises, const ModelDistribution<Rational>& dist) {
  return lattice(premises, dist.worlds(), [&](std::size_t i) { return sgn(dist.weight(i)) > 0; });
}

std::array<Rational, 10> allnn_bruteforce(const std::vector<std::pair<std::vector<bool>, int>>& train,
                                          const std::vector<bool>& test) {
  if (train.empty()) throw std::invalid_argument("oracle: empty training set");
  if (train.size() > kMaxRows) throw std::length_error("oracle: too many rows");
  std::vector<std::size_t> dist(train.size(), 0);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t k = 0; k < train.size(); ++k) {
    const auto& bits = train[k].first;
    if (bits.size() != test.size()) throw std::invalid_argument("oracle: width mismatch");
    for (std::size_t j = 0; j < bits.size(); ++j) dist[k] += bits[j] != test[j] ? 1 : 0;
    best = std::min(best, dist[k]);
  }
  std::array<unsigned long, 10> tally{};
  unsigned long nearest = 0;
  for (std::size_t k = 0; k < train.size(); ++k) {
    if (dist[k] != best) continue;
    tally.at(static_cast<std::size_t>(train[k].second))++;
    ++nearest;
  }
  std::array<Rational, 10> out;
  for (std::size_t i = 0; i < 10; ++i) {
    out[i] = Rational(tally[i], nearest);
    out[i].canonicalize();
  }
  return out;
}

}  // namespace oracle
