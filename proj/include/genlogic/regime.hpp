#pragma once

#include <string>
#include <string_view>

#include "genlogic/rational.hpp"

namespace genlogic {

// How strictly formulas are interpreted in a world: mu = 1 (classical), the
// limit mu -> 1, or a fixed Bernoulli parameter 0 < mu < 1.
class MuRegime {
 public:
  enum class Kind { one, limit_one, fixed };

  static MuRegime one() { return MuRegime(Kind::one, Rational(1)); }
  static MuRegime limit_one() { return MuRegime(Kind::limit_one, Rational(1)); }
  // Throws std::invalid_argument unless 0 < mu < 1.
  static MuRegime fixed(Rational mu);

  // "one", "limit", "mu=<value>" (mu=1 means one).
  static MuRegime parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_fixed() const { return kind_ == Kind::fixed; }
  const Rational& mu() const { return mu_; }

  std::string to_string() const;

 private:
  MuRegime(Kind kind, Rational mu) : kind_(kind), mu_(std::move(mu)) {}

  Kind kind_;
  Rational mu_;
};

}  // namespace genlogic
