#include "genlogic/regime.hpp"

#include <stdexcept>

namespace genlogic {

MuRegime MuRegime::fixed(Rational mu) {
  if (sgn(mu) <= 0 || mu >= 1)
    throw std::invalid_argument("mu must lie strictly between 0 and 1, got " + genlogic::to_string(mu));
  return MuRegime(Kind::fixed, std::move(mu));
}

MuRegime MuRegime::parse(std::string_view text) {
  if (text == "one") return one();
  if (text == "limit") return limit_one();
  if (text.rfind("mu=", 0) == 0) {
    Rational mu = parse_rational(text.substr(3));
    if (mu == 1) return one();
    return fixed(std::move(mu));
  }
  throw std::invalid_argument("unknown regime '" + std::string(text) + "' (expected one, limit or mu=<value>)");
}

std::string MuRegime::to_string() const {
  switch (kind_) {
    case Kind::one: return "one";
    case Kind::limit_one: return "limit";
    case Kind::fixed: return "mu=" + genlogic::to_string(mu_);
  }
  return "?";
}

}  // namespace genlogic
