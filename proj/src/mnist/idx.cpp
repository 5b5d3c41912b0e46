#include "genlogic/mnist/idx.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <string>

namespace genlogic::mnist {

namespace {

std::vector<std::uint8_t> read_all(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::uint32_t be32(const std::vector<std::uint8_t>& buf, std::size_t at, const std::filesystem::path& path) {
  if (buf.size() < at + 4) throw DataError(path.string() + ": truncated header");
  return std::uint32_t{buf[at]} << 24 | std::uint32_t{buf[at + 1]} << 16 | std::uint32_t{buf[at + 2]} << 8 |
         std::uint32_t{buf[at + 3]};
}

void expect_magic(std::uint32_t got, std::uint32_t want, const std::filesystem::path& path) {
  if (got != want)
    throw DataError(path.string() + ": bad magic " + std::to_string(got) + " (expected " + std::to_string(want) + ")");
}

}  // namespace

std::vector<Image> load_idx_images(const std::filesystem::path& path) {
  const auto buf = read_all(path);
  expect_magic(be32(buf, 0, path), 2051, path);
  const std::size_t n = be32(buf, 4, path);
  const std::size_t rows = be32(buf, 8, path);
  const std::size_t cols = be32(buf, 12, path);
  if (rows != kRows || cols != kCols)
    throw DataError(path.string() + ": images are " + std::to_string(rows) + "x" + std::to_string(cols) +
                    ", expected 28x28");
  if (buf.size() < 16 + n * kPixels) throw DataError(path.string() + ": truncated pixel data");
  std::vector<Image> images(n);
  for (std::size_t i = 0; i < n; ++i)
    std::copy_n(buf.begin() + static_cast<std::ptrdiff_t>(16 + i * kPixels), kPixels, images[i].begin());
  return images;
}

std::vector<std::uint8_t> load_idx_labels(const std::filesystem::path& path) {
  const auto buf = read_all(path);
  expect_magic(be32(buf, 0, path), 2049, path);
  const std::size_t n = be32(buf, 4, path);
  if (buf.size() < 8 + n) throw DataError(path.string() + ": truncated label data");
  std::vector<std::uint8_t> labels(buf.begin() + 8, buf.begin() + static_cast<std::ptrdiff_t>(8 + n));
  for (auto l : labels)
    if (l >= kDigits) throw DataError(path.string() + ": label " + std::to_string(l) + " outside 0..9");
  return labels;
}

ImageSet load_idx(const std::filesystem::path& images_path, const std::filesystem::path& labels_path) {
  ImageSet set{load_idx_images(images_path), load_idx_labels(labels_path)};
  if (set.images.size() != set.labels.size())
    throw DataError("count mismatch: " + std::to_string(set.images.size()) + " images but " +
                    std::to_string(set.labels.size()) + " labels");
  return set;
}

MnistFiles MnistFiles::in(const std::filesystem::path& dir) {
  return {dir / "train-images-idx3-ubyte", dir / "train-labels-idx1-ubyte", dir / "t10k-images-idx3-ubyte",
          dir / "t10k-labels-idx1-ubyte"};
}

}  // namespace genlogic::mnist
