#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace genlogic {

struct Predicate {
  std::string name;
  std::size_t arity;
};

class SignatureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Propositions, predicates and constants of a closed, function-free language.
//
// The ground atoms are ordered as: all propositions in declaration order, then
// for each predicate (in declaration order) every tuple of constants in
// lexicographic order of the constant list, first argument most significant.
class Signature {
 public:
  Signature() = default;

  Signature& add_proposition(std::string name);
  Signature& add_predicate(std::string name, std::size_t arity);
  Signature& add_constant(std::string name);

  // Reads `prop <name>`, `pred <name>/<arity>` and `const <name>` lines;
  // `#` starts a comment.
  static Signature parse(std::istream& in);
  static Signature load(const std::filesystem::path& path);

  const std::vector<std::string>& propositions() const { return propositions_; }
  const std::vector<Predicate>& predicates() const { return predicates_; }
  const std::vector<std::string>& constants() const { return constants_; }

  std::size_t atom_count() const;
  // Ground atom names, e.g. "rain" or "blames(a,b)".
  std::vector<std::string> atom_names() const;
  std::string atom_name(std::size_t atom) const;

  std::optional<std::size_t> find_proposition(std::string_view name) const;
  std::optional<std::size_t> find_predicate(std::string_view name) const;
  std::optional<std::size_t> find_constant(std::string_view name) const;

  // Index of a proposition's ground atom.
  std::size_t proposition_atom(std::size_t prop) const { return prop; }
  // Index of predicate `pred` applied to the given constant indices.
  std::size_t predicate_atom(std::size_t pred, const std::vector<std::size_t>& args) const;

  // Resolves a ground atom name ("rain", "blames(a,b)") to its index.
  std::optional<std::size_t> find_atom(std::string_view name) const;

 private:
  enum class Kind { proposition, predicate, constant };
  void claim(const std::string& name, Kind kind, std::size_t index);

  std::vector<std::string> propositions_;
  std::vector<Predicate> predicates_;
  std::vector<std::string> constants_;
  std::unordered_map<std::string, std::pair<Kind, std::size_t>> names_;
};

}  // namespace genlogic
