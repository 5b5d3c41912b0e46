#include "genlogic/mnist/roc.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "genlogic/dataset.hpp"
#include "genlogic/rational.hpp"

namespace genlogic::mnist {

RocCurve roc_auc(std::span<const double> scores, std::span<const bool> truths) {
  if (scores.size() != truths.size()) throw std::invalid_argument("one truth value per score is required");
  const auto positives = static_cast<std::size_t>(std::count(truths.begin(), truths.end(), true));
  const std::size_t negatives = truths.size() - positives;
  if (positives == 0 || negatives == 0) throw std::invalid_argument("ROC needs both positive and negative examples");

  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

  RocCurve roc;
  roc.points.emplace_back(0.0, 0.0);
  std::size_t tp = 0, fp = 0;
  for (std::size_t i = 0; i < order.size();) {
    const double s = scores[order[i]];
    for (; i < order.size() && scores[order[i]] == s; ++i) (truths[order[i]] ? tp : fp)++;
    roc.points.emplace_back(static_cast<double>(fp) / static_cast<double>(negatives),
                            static_cast<double>(tp) / static_cast<double>(positives));
  }
  for (std::size_t i = 1; i < roc.points.size(); ++i) {
    const auto& [x0, y0] = roc.points[i - 1];
    const auto& [x1, y1] = roc.points[i];
    roc.auc += (x1 - x0) * (y0 + y1) / 2.0;
  }
  return roc;
}

void write_roc_csv(const std::filesystem::path& path, const RocCurve& roc) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  out << "fpr,tpr\n";
  for (const auto& [x, y] : roc.points) out << to_string(x) << ',' << to_string(y) << '\n';
}

}  // namespace genlogic::mnist
