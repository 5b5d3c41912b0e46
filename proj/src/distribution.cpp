#include "genlogic/distribution.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <unordered_map>

namespace genlogic {

template <class Num>
ModelDistribution<Num> mle_distribution(const Dataset& data, std::vector<World> worlds) {
  if (data.empty()) throw std::invalid_argument("empty dataset");
  std::unordered_map<World, std::size_t, WorldHash> index;
  for (std::size_t i = 0; i < worlds.size(); ++i) index.emplace(worlds[i], i);
  std::vector<std::uint64_t> counts(worlds.size(), 0);
  for (std::size_t k = 0; k < data.size(); ++k) {
    auto it = index.find(data.world(k));
    if (it == index.end()) throw std::invalid_argument("datum world " + data.world(k).to_string() + " not enumerated");
    counts[it->second] += data.count(k);
  }
  std::vector<Num> weights;
  weights.reserve(worlds.size());
  for (auto c : counts) weights.push_back(NumTraits<Num>::ratio(c, data.total()));
  if constexpr (std::is_same_v<Num, double>) {
    // Rounded ratios need not sum to exactly 1; renormalise in index order.
    double sum = 0;
    for (double w : weights) sum += w;
    for (double& w : weights) w /= sum;
  }
  return ModelDistribution<Num>(std::move(worlds), std::move(weights));
}

template <class Num>
ModelDistribution<Num> read_distribution(std::istream& in, const Signature& sig, std::size_t cap) {
  auto worlds = enumerate_worlds(sig, cap);
  const std::size_t n = sig.atom_count();
  std::vector<Rational> exact(worlds.size(), Rational(0));
  std::vector<bool> listed(worlds.size(), false);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string bits, weight, extra;
    if (!(fields >> bits)) continue;
    auto fail = [&](const std::string& what) {
      return DataError("distribution line " + std::to_string(lineno) + ": " + what);
    };
    if (!(fields >> weight)) throw fail("missing weight");
    if (fields >> extra) throw fail("unexpected trailing text");
    if (bits.size() != n) throw fail("world '" + bits + "' has " + std::to_string(bits.size()) + " bits, expected " +
                                     std::to_string(n));
    World w;
    try {
      w = World::from_string(bits);
    } catch (const std::invalid_argument& e) {
      throw fail(e.what());
    }
    const std::size_t row = row_index(w);
    if (listed[row]) throw fail("world '" + bits + "' listed twice");
    listed[row] = true;
    try {
      exact[row] = parse_rational(weight);
    } catch (const std::invalid_argument& e) {
      throw fail(e.what());
    }
    if (sgn(exact[row]) < 0) throw fail("negative weight");
  }
  Rational sum(0);
  for (const auto& q : exact) sum += q;
  Rational diff = sum - 1;
  if (abs(diff) > Rational(1, 1000000000)) throw DataError("distribution weights sum to " + to_string(to_double(sum)) + ", not 1");
  std::vector<Num> weights;
  weights.reserve(exact.size());
  for (auto& q : exact) {
    q /= sum;
    weights.push_back(NumTraits<Num>::from_rational(q));
  }
  if constexpr (std::is_same_v<Num, double>) {
    double s = 0;
    for (double w : weights) s += w;
    for (double& w : weights) w /= s;
  }
  return ModelDistribution<Num>(std::move(worlds), std::move(weights));
}

template <class Num>
ModelDistribution<Num> load_distribution(const std::filesystem::path& path, const Signature& sig, std::size_t cap) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open distribution '" + path.string() + "'");
  return read_distribution<Num>(in, sig, cap);
}

template <class Num>
ModelDistribution<Num> distribution_from_rows(std::size_t atom_count, std::vector<Num> weights) {
  return ModelDistribution<Num>(enumerate_worlds(atom_count), std::move(weights));
}

#define GENLOGIC_INSTANTIATE(Num)                                                                         \
  template ModelDistribution<Num> mle_distribution<Num>(const Dataset&, std::vector<World>);            \
  template ModelDistribution<Num> read_distribution<Num>(std::istream&, const Signature&, std::size_t);  \
  template ModelDistribution<Num> load_distribution<Num>(const std::filesystem::path&, const Signature&, \
                                                         std::size_t);                                   \
  template ModelDistribution<Num> distribution_from_rows<Num>(std::size_t, std::vector<Num>);
GENLOGIC_INSTANTIATE(Rational)
GENLOGIC_INSTANTIATE(double)
#undef GENLOGIC_INSTANTIATE

}  // namespace genlogic
