#include "genlogic/mnist/harness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "genlogic/engine.hpp"

namespace genlogic::mnist {

std::vector<bool> binarize(const Image& img, std::uint8_t threshold) {
  std::vector<bool> bits(kPixels);
  for (std::size_t j = 0; j < kPixels; ++j) bits[j] = img[j] >= threshold;
  return bits;
}

Signature mnist_signature() {
  Signature sig;
  for (std::size_t j = 0; j < kPixels; ++j) sig.add_proposition("P" + std::to_string(j));
  for (std::size_t i = 0; i < kDigits; ++i) sig.add_proposition("N" + std::to_string(i));
  return sig;
}

World pixel_world(const std::vector<bool>& bits) {
  if (bits.size() != kPixels) throw std::invalid_argument("expected 784 pixel bits");
  World w(kWidth);
  for (std::size_t j = 0; j < kPixels; ++j)
    if (bits[j]) w.set(pixel_atom(j));
  return w;
}

World pixel_world(const Image& img, std::uint8_t threshold) {
  World w(kWidth);
  for (std::size_t j = 0; j < kPixels; ++j)
    if (img[j] >= threshold) w.set(pixel_atom(j));
  return w;
}

World labelled_world(const Image& img, std::uint8_t label, std::uint8_t threshold) {
  if (label >= kDigits) throw DataError("label " + std::to_string(label) + " outside 0..9");
  World w = pixel_world(img, threshold);
  w.set(digit_atom(label));
  return w;
}

Dataset make_dataset(const ImageSet& set, std::size_t limit, std::uint8_t threshold) {
  if (limit > set.size())
    throw std::invalid_argument("requested " + std::to_string(limit) + " images but only " +
                                std::to_string(set.size()) + " are available");
  Dataset data(kWidth);
  data.reserve(limit);
  for (std::size_t k = 0; k < limit; ++k) data.add(labelled_world(set.images[k], set.labels[k], threshold));
  return data;
}

std::size_t label_of(const World& w) {
  std::size_t found = kDigits;
  for (std::size_t i = 0; i < kDigits; ++i) {
    if (!w.test(digit_atom(i))) continue;
    if (found != kDigits) throw DataError("world carries more than one digit label");
    found = i;
  }
  if (found == kDigits) throw DataError("world carries no digit label");
  return found;
}

std::vector<Formula> pixel_premises(const World& test) {
  std::vector<Formula> delta;
  delta.reserve(kPixels);
  for (std::size_t j = 0; j < kPixels; ++j) delta.push_back(literal(pixel_atom(j), test.test(pixel_atom(j))));
  return delta;
}

template <class Num>
std::vector<Num> generate_digit(const Dataset& train, std::size_t digit) {
  if (digit >= kDigits) throw std::invalid_argument("digit outside 0..9");
  const std::vector<Formula> given{Formula::atom(digit_atom(digit))};
  // The posterior given N_i selects the class; p(P_j | N_i) is then the
  // class-weighted pixel tally.
  const auto post = posterior_data<Num>(given, train, MuRegime::one());
  if (!post) throw DataError("no training image shows digit " + std::to_string(digit));
  std::vector<std::uint64_t> white(kPixels, 0);
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < train.size(); ++k) {
    if (!NumTraits<Num>::is_positive((*post)[k])) continue;
    const World& w = train.world(k);
    const std::uint64_t c = train.count(k);
    total += c;
    for (std::size_t j = 0; j < kPixels; ++j)
      if (w.test(pixel_atom(j))) white[j] += c;
  }
  std::vector<Num> probs;
  probs.reserve(kPixels);
  for (auto c : white) probs.push_back(NumTraits<Num>::ratio(c, total));
  return probs;
}

void write_pgm(const std::filesystem::path& path, std::span<const double> probs) {
  if (probs.size() != kPixels) throw std::invalid_argument("expected 784 pixel probabilities");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << "P5\n" << kCols << ' ' << kRows << "\n255\n";
  for (double p : probs) {
    const double grey = std::round(std::clamp(p, 0.0, 1.0) * 255.0);
    out.put(static_cast<char>(static_cast<unsigned char>(grey)));
  }
  if (!out) throw DataError("failed writing " + path.string());
}

template <class Num>
std::array<Num, kDigits> predict_digit(const Dataset& train, const World& test, const MuRegime& regime) {
  if (regime.kind() == MuRegime::Kind::one)
    throw std::invalid_argument("prediction needs the limit regime or a fixed mu below 1");
  const auto delta = pixel_premises(test);
  const auto post = posterior_data<Num>(delta, train, regime);
  std::array<Num, kDigits> out;
  out.fill(Num(0));
  // Always defined: both regimes give every datum positive weight or select
  // the nearest ones.
  for (std::size_t k = 0; k < train.size(); ++k)
    if (NumTraits<Num>::is_positive((*post)[k])) out[label_of(train.world(k))] += (*post)[k];
  return out;
}

namespace {

std::size_t pixel_distance(const World& a, const World& b) {
  const auto& x = a.words();
  const auto& y = b.words();
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::uint64_t diff = x[i] ^ y[i];
    const std::size_t lo = i * 64;
    if (lo + 64 > kPixels) diff &= (std::uint64_t{1} << (kPixels > lo ? kPixels - lo : 0)) - 1;  // label atoms
    d += static_cast<std::size_t>(std::popcount(diff));
  }
  return d;
}

}  // namespace

std::array<double, kDigits> knn_predict(const Dataset& train, const World& test, std::size_t k) {
  if (k == 0 || k > train.total())
    throw std::invalid_argument("K must lie in 1.." + std::to_string(train.total()) + ", got " + std::to_string(k));
  std::vector<std::pair<std::size_t, std::size_t>> order;  // (distance, entry)
  order.reserve(train.size());
  for (std::size_t e = 0; e < train.size(); ++e) order.emplace_back(pixel_distance(train.world(e), test), e);
  std::sort(order.begin(), order.end());
  std::array<double, kDigits> out{};
  std::uint64_t taken = 0;
  for (const auto& [d, e] : order) {
    if (taken == k) break;
    const std::uint64_t c = std::min<std::uint64_t>(train.count(e), k - taken);
    out[label_of(train.world(e))] += static_cast<double>(c);
    taken += c;
  }
  for (auto& v : out) v /= static_cast<double>(k);
  return out;
}

template std::vector<Rational> generate_digit<Rational>(const Dataset&, std::size_t);
template std::vector<double> generate_digit<double>(const Dataset&, std::size_t);
template std::array<Rational, kDigits> predict_digit<Rational>(const Dataset&, const World&, const MuRegime&);
template std::array<double, kDigits> predict_digit<double>(const Dataset&, const World&, const MuRegime&);

}  // namespace genlogic::mnist
