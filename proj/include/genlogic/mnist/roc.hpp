#pragma once

#include <filesystem>
#include <span>
#include <utility>
#include <vector>

namespace genlogic::mnist {

struct RocCurve {
  // (false-positive rate, true-positive rate), from (0,0) to (1,1).
  std::vector<std::pair<double, double>> points;
  double auc = 0;
};

// One-vs-rest sweep over the distinct scores in decreasing order, trapezoidal
// area. Throws std::invalid_argument unless both classes occur.
RocCurve roc_auc(std::span<const double> scores, std::span<const bool> truths);

// CSV with header fpr,tpr.
void write_roc_csv(const std::filesystem::path& path, const RocCurve& roc);

}  // namespace genlogic::mnist
