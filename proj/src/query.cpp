#include "genlogic/query.hpp"

#include <cctype>
#include <string>

#include "genlogic/parser.hpp"

namespace genlogic {

namespace {

bool blank(std::string_view s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view::size_type top_level_bar(std::string_view text) {
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == '|' && depth == 0) return i;
  }
  return std::string_view::npos;
}

// Parse errors point into the full query text.
Formula parse_part(std::string_view text, std::size_t offset, const Signature& sig) {
  try {
    return ground(parse_formula(text, sig), sig);
  } catch (const ParseError& e) {
    throw ParseError(e.code(), e.position() + offset, e.detail());
  }
}

std::vector<Formula> premises_at(std::string_view text, std::size_t offset, const Signature& sig) {
  std::vector<Formula> out;
  if (blank(text)) return out;
  std::size_t start = 0;
  while (true) {
    const auto semi = text.find(';', start);
    const auto part = text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
    if (blank(part)) throw ParseError(ParseError::Code::syntax, offset + start, "empty premise");
    out.push_back(parse_part(part, offset + start, sig));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return out;
}

}  // namespace

Query parse_query(std::string_view text, const Signature& sig) {
  const auto bar = top_level_bar(text);
  const auto head = text.substr(0, bar);
  if (blank(head)) throw ParseError(ParseError::Code::syntax, 0, "missing conclusion");
  Query q{parse_part(head, 0, sig), {}};
  if (bar != std::string_view::npos) {
    const auto tail = text.substr(bar + 1);
    if (blank(tail)) throw ParseError(ParseError::Code::syntax, bar, "'|' without premises");
    q.premises = premises_at(tail, bar + 1, sig);
  }
  return q;
}

std::vector<Formula> parse_premises(std::string_view text, const Signature& sig) {
  std::size_t offset = 0;
  while (offset < text.size() && std::isspace(static_cast<unsigned char>(text[offset]))) ++offset;
  if (offset < text.size() && text[offset] == '|') ++offset;
  return premises_at(text.substr(offset), offset, sig);
}

}  // namespace genlogic
