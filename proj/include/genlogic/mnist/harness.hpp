#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "genlogic/dataset.hpp"
#include "genlogic/formula.hpp"
#include "genlogic/mnist/idx.hpp"
#include "genlogic/regime.hpp"
#include "genlogic/signature.hpp"
#include "genlogic/world.hpp"

namespace genlogic::mnist {

inline constexpr std::uint8_t kDefaultThreshold = 30;
inline constexpr std::size_t kWidth = kPixels + kDigits;

// Pixel j is white iff its byte is >= threshold.
std::vector<bool> binarize(const Image& img, std::uint8_t threshold = kDefaultThreshold);

// Atoms P0..P783 (pixels, row-major) followed by N0..N9 (digit labels).
inline std::size_t pixel_atom(std::size_t j) { return j; }
inline std::size_t digit_atom(std::size_t i) { return kPixels + i; }
Signature mnist_signature();

// 794-bit world: the binarised pixels plus the one-hot label.
World labelled_world(const Image& img, std::uint8_t label, std::uint8_t threshold = kDefaultThreshold);
// 794-bit world with every label atom false (a test image).
World pixel_world(const std::vector<bool>& bits);
World pixel_world(const Image& img, std::uint8_t threshold = kDefaultThreshold);

// One entry per image, in file order, for the first `limit` images.
Dataset make_dataset(const ImageSet& set, std::size_t limit, std::uint8_t threshold = kDefaultThreshold);

// Digit label of a labelled world; throws DataError unless exactly one N_i holds.
std::size_t label_of(const World& w);

// Delta for a test image: P_j if pixel j is white, ~P_j otherwise.
std::vector<Formula> pixel_premises(const World& test);

// p(P_j | N_i) under mu = 1 for every pixel; a class mean. Throws DataError
// when no image carries digit i.
template <class Num>
std::vector<Num> generate_digit(const Dataset& train, std::size_t digit);

// Binary PGM (P5), grey level round(p * 255).
void write_pgm(const std::filesystem::path& path, std::span<const double> probs);

// Posterior label mass sum_d [[N_i]]_d p(d | Delta) for each digit. The limit
// regime gives the label frequencies among the nearest training images; fixed
// mu weights each image by r^distance. mu = 1 is rejected.
template <class Num>
std::array<Num, kDigits> predict_digit(const Dataset& train, const World& test, const MuRegime& regime);

// Fraction of the K Hamming-nearest training images with each label; ties at
// the K-th distance go to the lower training index.
std::array<double, kDigits> knn_predict(const Dataset& train, const World& test, std::size_t k);

}  // namespace genlogic::mnist
