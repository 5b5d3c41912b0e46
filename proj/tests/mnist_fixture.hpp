#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "genlogic/mnist/idx.hpp"

namespace mnist_fixture {

using genlogic::mnist::Image;
using genlogic::mnist::ImageSet;

inline void put32(std::ofstream& out, std::uint32_t v) {
  const char b[4] = {char(v >> 24), char(v >> 16), char(v >> 8), char(v)};
  out.write(b, 4);
}

inline void write_images(const std::filesystem::path& path, const std::vector<Image>& images,
                         std::uint32_t magic = 2051, std::uint32_t rows = 28, std::uint32_t cols = 28,
                         std::size_t drop = 0) {
  std::ofstream out(path, std::ios::binary);
  put32(out, magic);
  put32(out, static_cast<std::uint32_t>(images.size()));
  put32(out, rows);
  put32(out, cols);
  std::string bytes;
  for (const auto& img : images) bytes.append(img.begin(), img.end());
  bytes.resize(bytes.size() - drop);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

inline void write_labels(const std::filesystem::path& path, const std::vector<std::uint8_t>& labels,
                         std::uint32_t magic = 2049) {
  std::ofstream out(path, std::ios::binary);
  put32(out, magic);
  put32(out, static_cast<std::uint32_t>(labels.size()));
  out.write(reinterpret_cast<const char*>(labels.data()), static_cast<std::streamsize>(labels.size()));
}

// Noisy class prototypes: digit d lights a band of rows, so the classes are
// learnable; labels cycle through 0..9.
inline ImageSet synthetic(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> byte(0, 255);
  std::bernoulli_distribution flip(0.1);
  ImageSet set;
  for (std::size_t k = 0; k < n; ++k) {
    const auto d = static_cast<std::uint8_t>(k % 10);
    Image img{};
    for (std::size_t j = 0; j < img.size(); ++j) {
      const bool on = (j / 28) / 3 == d;
      const bool lit = flip(rng) ? !on : on;
      img[j] = static_cast<std::uint8_t>(lit ? 30 + byte(rng) % 226 : byte(rng) % 30);
    }
    set.images.push_back(img);
    set.labels.push_back(d);
  }
  return set;
}

// A scratch directory with the four standard IDX files.
struct MnistDir {
  std::filesystem::path dir;
  ImageSet train, test;

  MnistDir(const std::string& name, std::size_t n_train, std::size_t n_test) {
    dir = std::filesystem::temp_directory_path() / ("genlogic-" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    train = synthetic(n_train, 1);
    test = synthetic(n_test, 2);
    const auto f = genlogic::mnist::MnistFiles::in(dir);
    write_images(f.train_images, train.images);
    write_labels(f.train_labels, train.labels);
    write_images(f.test_images, test.images);
    write_labels(f.test_labels, test.labels);
  }
  ~MnistDir() { std::filesystem::remove_all(dir); }
};

}  // namespace mnist_fixture
