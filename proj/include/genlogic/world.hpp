#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace genlogic {

// One truth assignment over the ground atoms of a signature, packed 64 atoms
// per word. Bits beyond width() are always zero.
class World {
 public:
  World() = default;
  explicit World(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

  // Parses a 0/1 string; character i is atom i.
  static World from_string(std::string_view bits);

  std::size_t width() const { return width_; }

  bool test(std::size_t atom) const {
    return (words_[atom >> 6] >> (atom & 63)) & 1u;
  }
  void set(std::size_t atom, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (atom & 63);
    if (value)
      words_[atom >> 6] |= mask;
    else
      words_[atom >> 6] &= ~mask;
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  // Number of positions where the two worlds differ. Widths must match.
  std::size_t hamming(const World& other) const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      n += static_cast<std::size_t>(std::popcount(words_[i] ^ other.words_[i]));
    return n;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  std::string to_string() const;

  friend bool operator==(const World&, const World&) = default;
  friend auto operator<=>(const World& a, const World& b) {
    if (auto c = a.width_ <=> b.width_; c != 0) return c;
    return a.words_ <=> b.words_;
  }

 private:
  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

struct WorldHash {
  std::size_t operator()(const World& w) const noexcept {
    std::uint64_t h = 1469598103934665603ull ^ w.width();
    for (auto word : w.words()) {
      h ^= word + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace genlogic
