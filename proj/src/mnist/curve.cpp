#include "genlogic/mnist/curve.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <memory>
#include <ostream>
#include <stdexcept>

#include "genlogic/mnist/roc.hpp"

namespace genlogic::mnist {

namespace {

using Scores = std::array<std::vector<double>, kDigits>;
using Predictor = std::function<std::array<double, kDigits>(const Dataset&, const World&)>;

struct Method {
  std::string name;
  std::string param;
  std::string file_tag;
  Predictor predict;
};

std::vector<Method> methods_of(const CurveConfig& config) {
  std::vector<Method> out;
  if (config.gl_limit)
    out.push_back({"gl-limit", "", "gl-limit", [](const Dataset& train, const World& test) {
                     return predict_digit<double>(train, test, MuRegime::limit_one());
                   }});
  for (const auto& mu : config.mus) {
    const auto regime = MuRegime::fixed(mu);
    const std::string p = to_string(to_double(mu));
    out.push_back({"gl-mu", p, "gl-mu-" + p, [regime](const Dataset& train, const World& test) {
                     return predict_digit<double>(train, test, regime);
                   }});
  }
  for (auto k : config.ks) {
    const std::string p = std::to_string(k);
    out.push_back({"knn", p, "knn-" + p,
                   [k](const Dataset& train, const World& test) { return knn_predict(train, test, k); }});
  }
  return out;
}

}  // namespace

std::vector<CurveRow> learning_curve(const ImageSet& train, const ImageSet& test, const CurveConfig& config) {
  if (config.test_size == 0 || config.test_size > test.size())
    throw std::invalid_argument("test size must lie in 1.." + std::to_string(test.size()));
  for (auto n : config.train_sizes)
    if (n == 0 || n > train.size())
      throw std::invalid_argument("training size must lie in 1.." + std::to_string(train.size()) + ", got " +
                                  std::to_string(n));
  const auto methods = methods_of(config);

  std::vector<World> tests;
  std::array<std::vector<bool>, kDigits> truths;
  for (std::size_t t = 0; t < config.test_size; ++t) {
    tests.push_back(pixel_world(test.images[t], config.threshold));
    for (std::size_t d = 0; d < kDigits; ++d) truths[d].push_back(test.labels[t] == d);
  }
  // vector<bool> has no contiguous storage for span<const bool>.
  std::array<std::unique_ptr<bool[]>, kDigits> truth_buf;
  for (std::size_t d = 0; d < kDigits; ++d) {
    truth_buf[d] = std::make_unique<bool[]>(tests.size());
    std::copy(truths[d].begin(), truths[d].end(), truth_buf[d].get());
  }

  const std::size_t largest =
      config.train_sizes.empty() ? 0 : *std::max_element(config.train_sizes.begin(), config.train_sizes.end());
  std::vector<CurveRow> rows;
  for (auto n : config.train_sizes) {
    const Dataset data = make_dataset(train, n, config.threshold);
    for (const auto& m : methods) {
      Scores scores;
      for (const auto& w : tests) {
        const auto p = m.predict(data, w);
        for (std::size_t d = 0; d < kDigits; ++d) scores[d].push_back(p[d]);
      }
      std::array<double, kDigits> auc{};
      double macro = 0;
      for (std::size_t d = 0; d < kDigits; ++d) {
        const auto roc = roc_auc(scores[d], std::span<const bool>(truth_buf[d].get(), tests.size()));
        auc[d] = roc.auc;
        macro += roc.auc;
        if (config.roc_dir && n == largest)
          write_roc_csv(*config.roc_dir / ("roc_" + m.file_tag + "_" + std::to_string(d) + ".csv"), roc);
      }
      macro /= static_cast<double>(kDigits);
      for (std::size_t d = 0; d < kDigits; ++d) rows.push_back({m.name, m.param, n, std::to_string(d), auc[d], macro});
      rows.push_back({m.name, m.param, n, "macro", macro, macro});
    }
  }
  return rows;
}

void write_curve_csv(std::ostream& out, const std::vector<CurveRow>& rows) {
  out << "method,param,train_size,digit,auc,macro_auc\n";
  for (const auto& r : rows)
    out << r.method << ',' << r.param << ',' << r.train_size << ',' << r.digit << ',' << to_string(r.auc) << ','
        << to_string(r.macro_auc) << '\n';
}

}  // namespace genlogic::mnist
