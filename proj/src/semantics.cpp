#include "genlogic/semantics.hpp"

#include <algorithm>
#include <string>

namespace genlogic {

std::vector<World> enumerate_worlds(std::size_t n, std::size_t cap) {
  if (n > cap)
    throw CapExceeded("exhaustive enumeration over " + std::to_string(n) + " atoms exceeds the cap of " +
                      std::to_string(cap) + "; use the data-driven backend");
  if (n >= 63) throw CapExceeded("too many atoms for exhaustive enumeration");
  const std::size_t rows = std::size_t{1} << n;
  std::vector<World> out;
  out.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    World w(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((r >> (n - 1 - i)) & 1u) w.set(i);
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<World> enumerate_worlds(const Signature& sig, std::size_t cap) {
  return enumerate_worlds(sig.atom_count(), cap);
}

std::size_t row_index(const World& w) {
  const std::size_t n = w.width();
  std::size_t r = 0;
  for (std::size_t i = 0; i < n; ++i) r = (r << 1) | (w.test(i) ? 1u : 0u);
  return r;
}

std::vector<std::size_t> models_of(std::span<const Formula> premises, std::span<const World> worlds) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < worlds.size(); ++i) {
    const bool all = std::all_of(premises.begin(), premises.end(),
                                 [&](const Formula& f) { return evaluate(f, worlds[i]); });
    if (all) out.push_back(i);
  }
  return out;
}

}  // namespace genlogic
