#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "genlogic/formula.hpp"
#include "genlogic/world.hpp"

namespace genlogic::detail {

// Counts how many premise occurrences hold in a world. Literal premises are
// packed into bit masks (one layer per repeated occurrence of the same
// literal) and counted with popcounts; everything else is evaluated.
class PremiseScorer {
 public:
  PremiseScorer(std::span<const Formula> premises, std::size_t width);

  std::size_t size() const { return size_; }

  std::size_t score(const World& w) const {
    std::size_t s = 0;
    const auto& words = w.words();
    for (const auto& layer : layers_) {
      for (std::size_t i = 0; i < words.size(); ++i) {
        s += static_cast<std::size_t>(std::popcount(words[i] & layer.pos[i]));
        s += static_cast<std::size_t>(std::popcount(~words[i] & layer.neg[i]));
      }
    }
    for (const auto& f : general_) s += evaluate(f, w) ? 1 : 0;
    return s;
  }

 private:
  struct Layer {
    std::vector<std::uint64_t> pos;
    std::vector<std::uint64_t> neg;
  };

  std::size_t size_ = 0;
  std::vector<Layer> layers_;
  std::vector<Formula> general_;
};

// Throws std::invalid_argument unless f is grounded and fits in `width` atoms.
void check_formula(const Formula& f, std::size_t width);

}  // namespace genlogic::detail
