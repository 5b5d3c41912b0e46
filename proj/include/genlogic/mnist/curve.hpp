#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "genlogic/mnist/harness.hpp"
#include "genlogic/mnist/idx.hpp"
#include "genlogic/rational.hpp"

namespace genlogic::mnist {

struct CurveConfig {
  std::vector<std::size_t> train_sizes;
  std::size_t test_size = 1000;
  bool gl_limit = true;
  std::vector<Rational> mus;  // fixed-mu GL runs
  std::vector<std::size_t> ks;  // K-NN runs
  std::uint8_t threshold = kDefaultThreshold;
  // When set, roc_<method>_<digit>.csv files for the largest size go here.
  std::optional<std::filesystem::path> roc_dir;
};

struct CurveRow {
  std::string method;  // gl-limit, gl-mu, knn
  std::string param;   // "", mu, K
  std::size_t train_size = 0;
  std::string digit;   // 0..9 or macro
  double auc = 0;
  double macro_auc = 0;
};

// Uses the first n training images and the first test_size test images.
// Throws std::invalid_argument for sizes outside the sets.
std::vector<CurveRow> learning_curve(const ImageSet& train, const ImageSet& test, const CurveConfig& config);

// method,param,train_size,digit,auc,macro_auc
void write_curve_csv(std::ostream& out, const std::vector<CurveRow>& rows);

}  // namespace genlogic::mnist
