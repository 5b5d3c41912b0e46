#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "genlogic/dataset.hpp"

namespace genlogic::mnist {

inline constexpr std::size_t kRows = 28;
inline constexpr std::size_t kCols = 28;
inline constexpr std::size_t kPixels = kRows * kCols;
inline constexpr std::size_t kDigits = 10;

using Image = std::array<std::uint8_t, kPixels>;

struct ImageSet {
  std::vector<Image> images;
  std::vector<std::uint8_t> labels;

  std::size_t size() const { return images.size(); }
};

// IDX containers: big-endian magic 2051 (images, dims n x 28 x 28) or 2049
// (labels, dim n), then raw bytes. Throws DataError on a bad magic number,
// truncation, other dimensions, labels outside 0..9 or a count mismatch.
std::vector<Image> load_idx_images(const std::filesystem::path& path);
std::vector<std::uint8_t> load_idx_labels(const std::filesystem::path& path);
ImageSet load_idx(const std::filesystem::path& images_path, const std::filesystem::path& labels_path);

// Standard file names inside an MNIST directory.
struct MnistFiles {
  std::filesystem::path train_images, train_labels, test_images, test_labels;
  static MnistFiles in(const std::filesystem::path& dir);
};

}  // namespace genlogic::mnist
