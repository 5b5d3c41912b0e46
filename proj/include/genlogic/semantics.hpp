#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "genlogic/formula.hpp"
#include "genlogic/signature.hpp"
#include "genlogic/world.hpp"

namespace genlogic {

inline constexpr std::size_t kDefaultEnumerationCap = 20;

// Raised when exhaustive enumeration would exceed its configured cap; only the
// data-driven backend is usable for such signatures.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All 2^n worlds of the signature in truth-table row order: row r assigns
// atom i the bit (r >> (n - 1 - i)) & 1, so the first atom is the most
// significant column.
std::vector<World> enumerate_worlds(const Signature& sig, std::size_t cap = kDefaultEnumerationCap);
std::vector<World> enumerate_worlds(std::size_t atom_count, std::size_t cap = kDefaultEnumerationCap);

// Truth-table row index of a world (inverse of enumerate_worlds).
std::size_t row_index(const World& w);

// Indices (into `worlds`) of the worlds satisfying every formula of `premises`.
std::vector<std::size_t> models_of(std::span<const Formula> premises, std::span<const World> worlds);

}  // namespace genlogic
