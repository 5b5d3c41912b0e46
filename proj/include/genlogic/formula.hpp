#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "genlogic/signature.hpp"
#include "genlogic/world.hpp"

namespace genlogic {

// Argument of a predicate application: a constant of the signature or a
// variable bound by an enclosing quantifier.
struct Term {
  static Term constant(std::size_t index) { return Term{index, {}}; }
  static Term variable(std::string name) { return Term{0, std::move(name)}; }

  bool is_variable() const { return !var.empty(); }

  std::size_t constant_index = 0;
  std::string var;

  friend bool operator==(const Term&, const Term&) = default;
};

// Immutable formula tree with value semantics; copies share structure.
//
// Applications whose arguments are all constants are stored as ground atoms
// (Kind::atom). Kind::predicate only appears under a quantifier binding one of
// its variables.
class Formula {
 public:
  enum class Kind {
    atom,
    predicate,
    negation,
    conjunction,
    disjunction,
    implication,
    equivalence,
    forall,
    exists,
  };

  static Formula atom(std::size_t ground_atom);
  static Formula predicate(std::size_t pred, std::vector<Term> args);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula equivalence(Formula lhs, Formula rhs);
  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);

  Kind kind() const;

  std::size_t atom_index() const;       // atom
  std::size_t predicate_index() const;  // predicate
  const std::vector<Term>& terms() const;
  const std::string& variable() const;  // forall / exists

  const Formula& operand() const;  // negation
  const Formula& lhs() const;
  const Formula& rhs() const;
  const Formula& body() const;  // forall / exists

  bool is_binary() const;
  bool is_quantifier() const;

  // No quantifiers and no variables.
  bool grounded() const;

  // atom or negated atom
  bool is_literal() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Kind kind;
  std::size_t index = 0;
  std::vector<Term> terms;
  std::string var;
  std::vector<Formula> children;
};

inline Formula::Kind Formula::kind() const { return node_->kind; }
inline std::size_t Formula::atom_index() const { return node_->index; }
inline std::size_t Formula::predicate_index() const { return node_->index; }
inline const std::vector<Term>& Formula::terms() const { return node_->terms; }
inline const std::string& Formula::variable() const { return node_->var; }
inline const Formula& Formula::operand() const { return node_->children[0]; }
inline const Formula& Formula::lhs() const { return node_->children[0]; }
inline const Formula& Formula::rhs() const { return node_->children[1]; }
inline const Formula& Formula::body() const { return node_->children[0]; }
inline bool Formula::is_quantifier() const { return kind() == Kind::forall || kind() == Kind::exists; }

Formula literal(std::size_t atom, bool positive);

// Precedence-aware rendering in the parser's surface syntax; reparses to an
// identical tree.
std::string to_string(const Formula& f, const Signature& sig);

// Expands quantifiers over the signature's constants (forall into a
// conjunction, exists into a disjunction, instances in declaration order).
// Quantifier-free input is returned unchanged. Throws SignatureError when a
// quantifier is grounded over an empty constant list.
Formula ground(const Formula& f, const Signature& sig);

// Classical truth value of a grounded formula. Throws std::invalid_argument if
// the formula is not grounded or mentions an atom beyond the world's width.
bool evaluate(const Formula& f, const World& w);

// Largest ground-atom index mentioned, or -1 when none; used for width checks.
long max_atom(const Formula& f);

}  // namespace genlogic
