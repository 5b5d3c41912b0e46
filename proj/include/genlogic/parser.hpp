#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "genlogic/formula.hpp"
#include "genlogic/signature.hpp"

namespace genlogic {

class ParseError : public std::runtime_error {
 public:
  enum class Code { syntax, unknown_identifier, arity_mismatch, unbound_variable };

  ParseError(Code code, std::size_t position, const std::string& message);

  Code code() const { return code_; }
  // Byte offset into the input where the problem was detected.
  std::size_t position() const { return position_; }
  // The message without the position prefix.
  const std::string& detail() const { return detail_; }

 private:
  Code code_;
  std::size_t position_;
  std::string detail_;
};

// Grammar, loosest to tightest binding:
//
//   form    := iff
//   iff     := imp ("<->" iff)?          right-associative
//   imp     := or ("->" imp)?            right-associative
//   or      := and ("|" and)*
//   and     := neg ("&" neg)*
//   neg     := "~" neg | atomterm
//   atomterm:= "(" form ")" | "forall" VAR "." neg | "exists" VAR "." neg
//            | IDENT | IDENT "(" term ("," term)* ")"
//
// Bound variables shadow constants of the same name.
Formula parse_formula(std::string_view text, const Signature& sig);

}  // namespace genlogic
