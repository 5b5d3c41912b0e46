#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "genlogic/distribution.hpp"
#include "genlogic/formula.hpp"
#include "genlogic/query.hpp"
#include "genlogic/rational.hpp"
#include "genlogic/semantics.hpp"
#include "genlogic/signature.hpp"

namespace support {

using namespace genlogic;

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(GENLOGIC_TEST_DATA) / name;
}

inline Signature props(std::initializer_list<const char*> names) {
  Signature sig;
  for (auto n : names) sig.add_proposition(n);
  return sig;
}

inline Signature rainwet() { return props({"rain", "wet"}); }

inline Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// Seeded generators for the property suites.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  // Quantifier-free formula over atoms 0..n-1.
  Formula formula(std::size_t n, int depth = 3) {
    if (depth == 0 || coin(0.3)) return coin(0.25) ? literal(below(n), false) : Formula::atom(below(n));
    switch (below(5)) {
      case 0: return Formula::negation(formula(n, depth - 1));
      case 1: return Formula::conjunction(formula(n, depth - 1), formula(n, depth - 1));
      case 2: return Formula::disjunction(formula(n, depth - 1), formula(n, depth - 1));
      case 3: return Formula::implication(formula(n, depth - 1), formula(n, depth - 1));
      default: return Formula::equivalence(formula(n, depth - 1), formula(n, depth - 1));
    }
  }

  std::vector<Formula> formulas(std::size_t n, std::size_t max_count, int depth = 2) {
    std::vector<Formula> out(below(max_count + 1), Formula::atom(0));
    for (auto& f : out) f = formula(n, depth);
    return out;
  }

  // Small rational weights over 2^n worlds; some zero unless all_positive.
  std::vector<Rational> weights(std::size_t n, bool all_positive) {
    const std::size_t rows = std::size_t{1} << n;
    std::vector<long> raw(rows);
    long sum = 0;
    for (auto& r : raw) {
      r = (all_positive || coin(0.7)) ? static_cast<long>(1 + below(9)) : 0;
      sum += r;
    }
    if (sum == 0) {
      raw[below(rows)] = 1;
      sum = 1;
    }
    std::vector<Rational> w;
    for (auto r : raw) w.push_back(q(r, sum));
    return w;
  }

  ModelDistribution<Rational> distribution(std::size_t n, bool all_positive = false) {
    return distribution_from_rows<Rational>(n, weights(n, all_positive));
  }

  // Rational mu strictly inside (0, 1).
  Rational mu() {
    const long d = static_cast<long>(2 + below(19));
    return q(static_cast<long>(1 + below(static_cast<std::size_t>(d - 1))), d);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace support
