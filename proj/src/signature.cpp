#include "genlogic/signature.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

namespace genlogic {

namespace {

bool valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return s != "forall" && s != "exists";
}

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > static_cast<std::size_t>(-1) / base)
      throw SignatureError("ground-atom count overflows");
    r *= base;
  }
  return r;
}

}  // namespace

void Signature::claim(const std::string& name, Kind kind, std::size_t index) {
  if (!valid_identifier(name)) throw SignatureError("invalid identifier '" + name + "'");
  if (!names_.emplace(name, std::make_pair(kind, index)).second)
    throw SignatureError("duplicate name '" + name + "'");
}

Signature& Signature::add_proposition(std::string name) {
  claim(name, Kind::proposition, propositions_.size());
  propositions_.push_back(std::move(name));
  return *this;
}

Signature& Signature::add_predicate(std::string name, std::size_t arity) {
  if (arity == 0) throw SignatureError("predicate '" + name + "' must have arity >= 1");
  claim(name, Kind::predicate, predicates_.size());
  predicates_.push_back({std::move(name), arity});
  return *this;
}

Signature& Signature::add_constant(std::string name) {
  claim(name, Kind::constant, constants_.size());
  constants_.push_back(std::move(name));
  return *this;
}

Signature Signature::parse(std::istream& in) {
  Signature sig;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string keyword, name, extra;
    if (!(fields >> keyword)) continue;
    auto fail = [&](const std::string& what) {
      return SignatureError("signature line " + std::to_string(lineno) + ": " + what);
    };
    if (!(fields >> name)) throw fail("missing name after '" + keyword + "'");
    if (fields >> extra) throw fail("unexpected trailing text '" + extra + "'");
    try {
      if (keyword == "prop") {
        sig.add_proposition(name);
      } else if (keyword == "const") {
        sig.add_constant(name);
      } else if (keyword == "pred") {
        auto slash = name.find('/');
        if (slash == std::string::npos) throw fail("expected pred <name>/<arity>");
        std::string arity_text = name.substr(slash + 1);
        if (arity_text.empty() || arity_text.find_first_not_of("0123456789") != std::string::npos)
          throw fail("bad arity '" + arity_text + "'");
        sig.add_predicate(name.substr(0, slash), std::stoul(arity_text));
      } else {
        throw fail("unknown keyword '" + keyword + "'");
      }
    } catch (const SignatureError& e) {
      std::string msg = e.what();
      if (msg.rfind("signature line", 0) == 0) throw;
      throw fail(msg);
    }
  }
  return sig;
}

Signature Signature::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SignatureError("cannot open signature file '" + path.string() + "'");
  return parse(in);
}

std::size_t Signature::atom_count() const {
  std::size_t n = propositions_.size();
  for (const auto& p : predicates_) n += ipow(constants_.size(), p.arity);
  return n;
}

std::vector<std::string> Signature::atom_names() const {
  std::vector<std::string> names;
  const std::size_t n = atom_count();
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(atom_name(i));
  return names;
}

std::string Signature::atom_name(std::size_t atom) const {
  if (atom < propositions_.size()) return propositions_[atom];
  std::size_t offset = atom - propositions_.size();
  const std::size_t c = constants_.size();
  for (const auto& p : predicates_) {
    const std::size_t block = ipow(c, p.arity);
    if (offset < block) {
      std::vector<std::size_t> args(p.arity);
      for (std::size_t k = p.arity; k-- > 0;) {
        args[k] = offset % c;
        offset /= c;
      }
      std::string name = p.name + "(";
      for (std::size_t k = 0; k < args.size(); ++k) {
        if (k) name += ",";
        name += constants_[args[k]];
      }
      return name + ")";
    }
    offset -= block;
  }
  throw std::out_of_range("atom index " + std::to_string(atom) + " out of range");
}

std::optional<std::size_t> Signature::find_proposition(std::string_view name) const {
  auto it = names_.find(std::string(name));
  if (it == names_.end() || it->second.first != Kind::proposition) return std::nullopt;
  return it->second.second;
}

std::optional<std::size_t> Signature::find_predicate(std::string_view name) const {
  auto it = names_.find(std::string(name));
  if (it == names_.end() || it->second.first != Kind::predicate) return std::nullopt;
  return it->second.second;
}

std::optional<std::size_t> Signature::find_constant(std::string_view name) const {
  auto it = names_.find(std::string(name));
  if (it == names_.end() || it->second.first != Kind::constant) return std::nullopt;
  return it->second.second;
}

std::size_t Signature::predicate_atom(std::size_t pred, const std::vector<std::size_t>& args) const {
  const auto& p = predicates_.at(pred);
  if (args.size() != p.arity) throw std::invalid_argument("arity mismatch for '" + p.name + "'");
  std::size_t base = propositions_.size();
  for (std::size_t i = 0; i < pred; ++i) base += ipow(constants_.size(), predicates_[i].arity);
  std::size_t offset = 0;
  for (auto a : args) offset = offset * constants_.size() + a;
  return base + offset;
}

std::optional<std::size_t> Signature::find_atom(std::string_view name) const {
  auto open = name.find('(');
  if (open == std::string_view::npos) return find_proposition(name);
  if (name.back() != ')') return std::nullopt;
  auto pred = find_predicate(name.substr(0, open));
  if (!pred) return std::nullopt;
  std::vector<std::size_t> args;
  std::string_view rest = name.substr(open + 1, name.size() - open - 2);
  while (true) {
    auto comma = rest.find(',');
    auto arg = rest.substr(0, comma);
    while (!arg.empty() && arg.front() == ' ') arg.remove_prefix(1);
    while (!arg.empty() && arg.back() == ' ') arg.remove_suffix(1);
    auto c = find_constant(arg);
    if (!c) return std::nullopt;
    args.push_back(*c);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (args.size() != predicates_[*pred].arity) return std::nullopt;
  return predicate_atom(*pred, args);
}

}  // namespace genlogic
