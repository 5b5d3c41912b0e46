#pragma once

#include <string_view>
#include <vector>

#include "genlogic/engine.hpp"
#include "genlogic/formula.hpp"
#include "genlogic/signature.hpp"

namespace genlogic {

// "alpha | beta1; beta2; ...": the first `|` outside parentheses separates the
// conclusion from the premises, so a disjunctive conclusion needs
// parentheses. Without a separator the whole text is the conclusion. All
// formulas come back grounded. Throws ParseError.
Query parse_query(std::string_view text, const Signature& sig);

// "beta1; beta2; ..." (an optional leading `|` is ignored); empty text is the
// empty multiset.
std::vector<Formula> parse_premises(std::string_view text, const Signature& sig);

}  // namespace genlogic
