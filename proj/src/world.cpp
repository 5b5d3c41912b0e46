#include "genlogic/world.hpp"

#include <stdexcept>

namespace genlogic {

World World::from_string(std::string_view bits) {
  World w(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      w.set(i);
    else if (bits[i] != '0')
      throw std::invalid_argument("world bits must be 0/1, got '" + std::string(bits) + "'");
  }
  return w;
}

std::string World::to_string() const {
  std::string s(width_, '0');
  for (std::size_t i = 0; i < width_; ++i)
    if (test(i)) s[i] = '1';
  return s;
}

}  // namespace genlogic
