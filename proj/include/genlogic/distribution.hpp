#pragma once

#include <cmath>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "genlogic/dataset.hpp"
#include "genlogic/rational.hpp"
#include "genlogic/semantics.hpp"
#include "genlogic/signature.hpp"
#include "genlogic/world.hpp"

namespace genlogic {

// Explicit p(M) over a list of worlds (normally the full enumeration of a
// signature). Weights are non-negative and sum to one: exactly for Rational,
// within 1e-12 for double.
template <class Num>
class ModelDistribution {
 public:
  ModelDistribution(std::vector<World> worlds, std::vector<Num> weights)
      : worlds_(std::move(worlds)), weights_(std::move(weights)) {
    if (worlds_.size() != weights_.size())
      throw std::invalid_argument("distribution needs one weight per world");
    if (worlds_.empty()) throw std::invalid_argument("distribution over no worlds");
    Num sum(0);
    all_positive_ = true;
    for (const auto& w : weights_) {
      if (w < 0) throw std::invalid_argument("negative model weight");
      if (!NumTraits<Num>::is_positive(w)) all_positive_ = false;
      sum += w;
    }
    check_normalised(sum);
  }

  static ModelDistribution uniform(std::vector<World> worlds) {
    const std::size_t n = worlds.size();
    std::vector<Num> w(n, NumTraits<Num>::ratio(1, n));
    return ModelDistribution(std::move(worlds), std::move(w));
  }

  std::size_t size() const { return worlds_.size(); }
  const std::vector<World>& worlds() const { return worlds_; }
  const std::vector<Num>& weights() const { return weights_; }
  const World& world(std::size_t i) const { return worlds_[i]; }
  const Num& weight(std::size_t i) const { return weights_[i]; }
  bool possible(std::size_t i) const { return NumTraits<Num>::is_positive(weights_[i]); }

  // True iff every world has positive weight.
  bool all_positive() const { return all_positive_; }

 private:
  void check_normalised(const Num& sum) const {
    if constexpr (std::is_same_v<Num, double>) {
      // 1e-12 plus the rounding error a sum of n terms can accumulate.
      const double tol = 1e-12 + 4.0 * static_cast<double>(weights_.size()) * 2.220446049250313e-16;
      if (std::abs(sum - 1.0) > tol) throw std::invalid_argument("model weights do not sum to 1");
    } else {
      if (sum != 1) throw std::invalid_argument("model weights do not sum to 1 (got " + to_string(sum) + ")");
    }
  }

  std::vector<World> worlds_;
  std::vector<Num> weights_;
  bool all_positive_ = false;
};

// Maximum-likelihood p(M): weight(m) = K_m / K. Every datum's world must be
// among `worlds`.
template <class Num>
ModelDistribution<Num> mle_distribution(const Dataset& data, std::vector<World> worlds);

// Reads `<bits> <weight>` lines (character i of <bits> is atom i; weight a
// decimal or a/b fraction). Unlisted worlds get weight zero. The weights must
// sum to 1 within 1e-9 and are then renormalised to sum exactly to 1.
template <class Num>
ModelDistribution<Num> read_distribution(std::istream& in, const Signature& sig,
                                         std::size_t cap = kDefaultEnumerationCap);
template <class Num>
ModelDistribution<Num> load_distribution(const std::filesystem::path& path, const Signature& sig,
                                         std::size_t cap = kDefaultEnumerationCap);

// Dense distribution from weights given in truth-table row order.
template <class Num>
ModelDistribution<Num> distribution_from_rows(std::size_t atom_count, std::vector<Num> weights);

}  // namespace genlogic
