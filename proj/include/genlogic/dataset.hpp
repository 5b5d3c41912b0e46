#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "genlogic/signature.hpp"
#include "genlogic/world.hpp"

namespace genlogic {

// Malformed input files (CSV, distributions, IDX).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Multiset of observed worlds. Entry k is a world together with its
// multiplicity; each datum maps to exactly one world and p(d) = 1/K.
class Dataset {
 public:
  explicit Dataset(std::size_t width) : width_(width) {}

  void add(World world, std::uint64_t count = 1);
  void reserve(std::size_t n) {
    worlds_.reserve(n);
    counts_.reserve(n);
  }

  std::size_t width() const { return width_; }
  std::size_t size() const { return worlds_.size(); }
  bool empty() const { return worlds_.empty(); }
  // K, the number of data (sum of multiplicities).
  std::uint64_t total() const { return total_; }

  const std::vector<World>& worlds() const { return worlds_; }
  const std::vector<std::uint64_t>& counts() const { return counts_; }
  const World& world(std::size_t k) const { return worlds_[k]; }
  std::uint64_t count(std::size_t k) const { return counts_[k]; }

  // The first n entries.
  Dataset prefix(std::size_t n) const;

  // Header names the ground atoms (signature order or any permutation), with
  // an optional trailing `count` column; rows are 0/1 values.
  static Dataset read_csv(std::istream& in, const Signature& sig);
  static Dataset load_csv(const std::filesystem::path& path, const Signature& sig);

 private:
  std::size_t width_;
  std::vector<World> worlds_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

}  // namespace genlogic
