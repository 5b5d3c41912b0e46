#include "genlogic/dataset.hpp"

#include <fstream>
#include <istream>
#include <string>
#include <string_view>

namespace genlogic {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cell);
      cell.clear();
    } else if (c != '\r') {
      cell += c;
    }
  }
  out.push_back(cell);
  for (auto& s : out) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    s = b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  }
  return out;
}

// The header may name predicate atoms with embedded commas, e.g.
// "blames(a,b)"; rejoin cells until the parentheses balance.
std::vector<std::string> join_atom_cells(const std::vector<std::string>& cells) {
  std::vector<std::string> out;
  int depth = 0;
  for (const auto& c : cells) {
    if (depth > 0)
      out.back() += "," + c;
    else
      out.push_back(c);
    for (char ch : c) depth += ch == '(' ? 1 : ch == ')' ? -1 : 0;
  }
  return out;
}

}  // namespace

void Dataset::add(World world, std::uint64_t count) {
  if (world.width() != width_)
    throw std::invalid_argument("datum has width " + std::to_string(world.width()) + ", dataset expects " +
                                std::to_string(width_));
  if (count == 0) throw std::invalid_argument("multiplicity must be >= 1");
  worlds_.push_back(std::move(world));
  counts_.push_back(count);
  total_ += count;
}

Dataset Dataset::prefix(std::size_t n) const {
  if (n > size()) throw std::out_of_range("prefix larger than dataset");
  Dataset d(width_);
  d.reserve(n);
  for (std::size_t k = 0; k < n; ++k) d.add(worlds_[k], counts_[k]);
  return d;
}

Dataset Dataset::read_csv(std::istream& in, const Signature& sig) {
  const std::size_t n = sig.atom_count();
  std::string line;
  if (!std::getline(in, line)) throw DataError("dataset CSV is empty");
  auto header = join_atom_cells(split_csv(line));
  bool has_count = !header.empty() && header.back() == "count";
  if (has_count) header.pop_back();
  if (header.size() != n)
    throw DataError("dataset header has " + std::to_string(header.size()) + " atom columns, signature has " +
                    std::to_string(n));
  std::vector<std::size_t> column_atom(n);
  std::vector<bool> seen(n, false);
  for (std::size_t c = 0; c < n; ++c) {
    auto atom = sig.find_atom(header[c]);
    if (!atom) throw DataError("dataset header names unknown atom '" + header[c] + "'");
    if (seen[*atom]) throw DataError("dataset header repeats atom '" + header[c] + "'");
    seen[*atom] = true;
    column_atom[c] = *atom;
  }

  Dataset data(n);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto cells = split_csv(line);
    const std::size_t expected = n + (has_count ? 1 : 0);
    if (cells.size() != expected)
      throw DataError("dataset line " + std::to_string(lineno) + ": expected " + std::to_string(expected) +
                      " values, got " + std::to_string(cells.size()));
    World w(n);
    for (std::size_t c = 0; c < n; ++c) {
      if (cells[c] == "1")
        w.set(column_atom[c]);
      else if (cells[c] != "0")
        throw DataError("dataset line " + std::to_string(lineno) + ": value '" + cells[c] + "' is not 0/1");
    }
    std::uint64_t count = 1;
    if (has_count) {
      const auto& t = cells.back();
      if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos || t.size() > 18)
        throw DataError("dataset line " + std::to_string(lineno) + ": bad count '" + t + "'");
      count = std::stoull(t);
      if (count == 0) throw DataError("dataset line " + std::to_string(lineno) + ": count must be >= 1");
    }
    data.add(std::move(w), count);
  }
  return data;
}

Dataset Dataset::load_csv(const std::filesystem::path& path, const Signature& sig) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open dataset '" + path.string() + "'");
  return read_csv(in, sig);
}

}  // namespace genlogic
