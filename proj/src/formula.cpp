#include "genlogic/formula.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace genlogic {

namespace {

using Kind = Formula::Kind;

int precedence(Kind k) {
  switch (k) {
    case Kind::equivalence: return 1;
    case Kind::implication: return 2;
    case Kind::disjunction: return 3;
    case Kind::conjunction: return 4;
    default: return 5;
  }
}

const char* symbol(Kind k) {
  switch (k) {
    case Kind::equivalence: return " <-> ";
    case Kind::implication: return " -> ";
    case Kind::disjunction: return " | ";
    case Kind::conjunction: return " & ";
    default: return "";
  }
}

bool right_assoc(Kind k) { return k == Kind::implication || k == Kind::equivalence; }

void render(const Formula& f, const Signature& sig, std::string& out);

void render_child(const Formula& f, bool parens, const Signature& sig, std::string& out) {
  if (parens) out += '(';
  render(f, sig, out);
  if (parens) out += ')';
}

void render(const Formula& f, const Signature& sig, std::string& out) {
  switch (f.kind()) {
    case Kind::atom:
      out += sig.atom_name(f.atom_index());
      return;
    case Kind::predicate: {
      out += sig.predicates().at(f.predicate_index()).name;
      out += '(';
      for (std::size_t i = 0; i < f.terms().size(); ++i) {
        if (i) out += ',';
        const Term& t = f.terms()[i];
        out += t.is_variable() ? t.var : sig.constants().at(t.constant_index);
      }
      out += ')';
      return;
    }
    case Kind::negation:
      out += '~';
      render_child(f.operand(), precedence(f.operand().kind()) < 5, sig, out);
      return;
    case Kind::forall:
    case Kind::exists:
      out += f.kind() == Kind::forall ? "forall " : "exists ";
      out += f.variable();
      out += ". ";
      render_child(f.body(), precedence(f.body().kind()) < 5, sig, out);
      return;
    default: {
      const int p = precedence(f.kind());
      const int pl = precedence(f.lhs().kind());
      const int pr = precedence(f.rhs().kind());
      const bool ra = right_assoc(f.kind());
      render_child(f.lhs(), ra ? pl <= p : pl < p, sig, out);
      out += symbol(f.kind());
      render_child(f.rhs(), ra ? pr < p : pr <= p, sig, out);
      return;
    }
  }
}

using Env = std::vector<std::pair<std::string, std::size_t>>;

Formula ground_with(const Formula& f, const Signature& sig, Env& env) {
  switch (f.kind()) {
    case Kind::atom:
      return f;
    case Kind::predicate: {
      std::vector<std::size_t> args;
      args.reserve(f.terms().size());
      for (const Term& t : f.terms()) {
        if (!t.is_variable()) {
          args.push_back(t.constant_index);
          continue;
        }
        auto it = env.rbegin();
        for (; it != env.rend(); ++it)
          if (it->first == t.var) break;
        if (it == env.rend()) throw std::invalid_argument("unbound variable '" + t.var + "'");
        args.push_back(it->second);
      }
      return Formula::atom(sig.predicate_atom(f.predicate_index(), args));
    }
    case Kind::negation:
      return Formula::negation(ground_with(f.operand(), sig, env));
    case Kind::conjunction:
      return Formula::conjunction(ground_with(f.lhs(), sig, env), ground_with(f.rhs(), sig, env));
    case Kind::disjunction:
      return Formula::disjunction(ground_with(f.lhs(), sig, env), ground_with(f.rhs(), sig, env));
    case Kind::implication:
      return Formula::implication(ground_with(f.lhs(), sig, env), ground_with(f.rhs(), sig, env));
    case Kind::equivalence:
      return Formula::equivalence(ground_with(f.lhs(), sig, env), ground_with(f.rhs(), sig, env));
    case Kind::forall:
    case Kind::exists: {
      const std::size_t c = sig.constants().size();
      if (c == 0) throw SignatureError("cannot ground a quantifier over an empty constant list");
      const bool universal = f.kind() == Kind::forall;
      std::optional<Formula> acc;
      for (std::size_t i = 0; i < c; ++i) {
        env.emplace_back(f.variable(), i);
        Formula instance = ground_with(f.body(), sig, env);
        env.pop_back();
        if (!acc)
          acc = std::move(instance);
        else
          acc = universal ? Formula::conjunction(std::move(*acc), std::move(instance))
                          : Formula::disjunction(std::move(*acc), std::move(instance));
      }
      return *acc;
    }
  }
  throw std::logic_error("unreachable formula kind");
}

}  // namespace

Formula Formula::atom(std::size_t ground_atom) {
  return Formula(std::make_shared<const Node>(Node{Kind::atom, ground_atom, {}, {}, {}}));
}

Formula Formula::predicate(std::size_t pred, std::vector<Term> args) {
  return Formula(std::make_shared<const Node>(Node{Kind::predicate, pred, std::move(args), {}, {}}));
}

Formula Formula::negation(Formula operand) {
  return Formula(std::make_shared<const Node>(Node{Kind::negation, 0, {}, {}, {std::move(operand)}}));
}

#define GENLOGIC_BINARY(fn, kind)                                                         \
  Formula Formula::fn(Formula lhs, Formula rhs) {                                         \
    return Formula(                                                                       \
        std::make_shared<const Node>(Node{kind, 0, {}, {}, {std::move(lhs), std::move(rhs)}})); \
  }
GENLOGIC_BINARY(conjunction, Kind::conjunction)
GENLOGIC_BINARY(disjunction, Kind::disjunction)
GENLOGIC_BINARY(implication, Kind::implication)
GENLOGIC_BINARY(equivalence, Kind::equivalence)
#undef GENLOGIC_BINARY

Formula Formula::forall(std::string var, Formula body) {
  return Formula(std::make_shared<const Node>(Node{Kind::forall, 0, {}, std::move(var), {std::move(body)}}));
}

Formula Formula::exists(std::string var, Formula body) {
  return Formula(std::make_shared<const Node>(Node{Kind::exists, 0, {}, std::move(var), {std::move(body)}}));
}

bool Formula::is_binary() const {
  switch (kind()) {
    case Kind::conjunction:
    case Kind::disjunction:
    case Kind::implication:
    case Kind::equivalence:
      return true;
    default:
      return false;
  }
}

bool Formula::grounded() const {
  switch (kind()) {
    case Kind::atom: return true;
    case Kind::predicate:
    case Kind::forall:
    case Kind::exists: return false;
    case Kind::negation: return operand().grounded();
    default: return lhs().grounded() && rhs().grounded();
  }
}

bool Formula::is_literal() const {
  return kind() == Kind::atom || (kind() == Kind::negation && operand().kind() == Kind::atom);
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.index == y.index && x.terms == y.terms && x.var == y.var &&
         x.children == y.children;
}

Formula literal(std::size_t atom, bool positive) {
  return positive ? Formula::atom(atom) : Formula::negation(Formula::atom(atom));
}

std::string to_string(const Formula& f, const Signature& sig) {
  std::string out;
  render(f, sig, out);
  return out;
}

Formula ground(const Formula& f, const Signature& sig) {
  if (f.grounded()) return f;
  Env env;
  return ground_with(f, sig, env);
}

bool evaluate(const Formula& f, const World& w) {
  switch (f.kind()) {
    case Kind::atom:
      if (f.atom_index() >= w.width())
        throw std::invalid_argument("formula mentions atom " + std::to_string(f.atom_index()) +
                                    " but the world has width " + std::to_string(w.width()));
      return w.test(f.atom_index());
    case Kind::negation: return !evaluate(f.operand(), w);
    case Kind::conjunction: return evaluate(f.lhs(), w) && evaluate(f.rhs(), w);
    case Kind::disjunction: return evaluate(f.lhs(), w) || evaluate(f.rhs(), w);
    case Kind::implication: return !evaluate(f.lhs(), w) || evaluate(f.rhs(), w);
    case Kind::equivalence: return evaluate(f.lhs(), w) == evaluate(f.rhs(), w);
    default: throw std::invalid_argument("evaluate requires a grounded formula");
  }
}

long max_atom(const Formula& f) {
  switch (f.kind()) {
    case Kind::atom: return static_cast<long>(f.atom_index());
    case Kind::predicate: return -1;
    case Kind::negation:
    case Kind::forall:
    case Kind::exists: return max_atom(f.operand());
    default: return std::max(max_atom(f.lhs()), max_atom(f.rhs()));
  }
}

}  // namespace genlogic
