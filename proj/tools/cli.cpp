#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "genlogic/dataset.hpp"
#include "genlogic/distribution.hpp"
#include "genlogic/engine.hpp"
#include "genlogic/entailment.hpp"
#include "genlogic/mnist/curve.hpp"
#include "genlogic/mnist/harness.hpp"
#include "genlogic/mnist/idx.hpp"
#include "genlogic/parser.hpp"
#include "genlogic/query.hpp"
#include "genlogic/rational.hpp"
#include "genlogic/regime.hpp"
#include "genlogic/semantics.hpp"
#include "genlogic/signature.hpp"

namespace genlogic::cli {

namespace {

namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RegimeFlags {
  std::optional<std::string> mu;
  bool limit = false;
  bool one = false;

  void attach(CLI::App& app) {
    auto* m = app.add_option("--mu", mu, "fixed Bernoulli parameter (1 means --one)");
    auto* l = app.add_flag("--limit", limit, "mu -> 1");
    auto* o = app.add_flag("--one", one, "mu = 1");
    m->excludes(l)->excludes(o);
    l->excludes(o);
  }

  MuRegime resolve(MuRegime fallback) const {
    if (mu) return MuRegime::parse("mu=" + *mu);
    if (limit) return MuRegime::limit_one();
    if (one) return MuRegime::one();
    return fallback;
  }
};

struct SourceFlags {
  std::string signature;
  std::string data;
  std::string dist;
  bool use_float = false;
  bool exact = false;
  std::size_t cap = kDefaultEnumerationCap;

  void attach(CLI::App& app) {
    app.add_option("--signature", signature, "signature file")->required();
    auto* d = app.add_option("--data", data, "dataset CSV");
    auto* p = app.add_option("--dist", dist, "model distribution file");
    d->excludes(p);
    auto* f = app.add_flag("--float", use_float, "double precision");
    auto* e = app.add_flag("--exact", exact, "exact rationals (default)");
    f->excludes(e);
    app.add_option("--cap", cap, "enumeration cap in atoms")->check(CLI::Range(0, 62));
  }

  bool has_source() const { return !data.empty() || !dist.empty(); }
  void require_source() const {
    if (!has_source()) throw UsageError("one of --data or --dist is required");
  }
};

std::string join_subset(const std::vector<std::size_t>& subset, std::span<const Formula> premises,
                        const Signature& sig) {
  std::string s = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) s += ", ";
    s += to_string(premises[subset[i]], sig);
  }
  return s + "}";
}

template <class Num>
int infer(const SourceFlags& src, const RegimeFlags& rf, const std::string& text, std::ostream& out) {
  const Signature sig = Signature::load(src.signature);
  const Query q = parse_query(text, sig);
  const MuRegime regime = rf.resolve(MuRegime::one());
  src.require_source();
  Conditional<Num> p;
  if (!src.data.empty())
    p = cond_prob<Num>(q, Dataset::load_csv(src.data, sig), regime);
  else
    p = cond_prob<Num>(q, load_distribution<Num>(src.dist, sig, src.cap), regime);
  out << (p ? format_number(*p) : std::string("undefined")) << '\n';
  return kOk;
}

template <class Num>
ModelDistribution<Num> distribution_of(const SourceFlags& src, const Signature& sig) {
  src.require_source();
  if (!src.dist.empty()) return load_distribution<Num>(src.dist, sig, src.cap);
  return mle_distribution<Num>(Dataset::load_csv(src.data, sig), enumerate_worlds(sig, src.cap));
}

void print_subsets(const MaximalSubsets& found, std::span<const Formula> premises, std::span<const World> worlds,
                   const Signature& sig, std::ostream& out) {
  for (const auto& s : found.subsets) out << join_subset(s, premises, sig) << '\n';
  out << "models:";
  for (auto i : found.models) out << ' ' << worlds[i].to_string();
  out << '\n';
}

template <class Num>
int entail(const std::string& mode, const SourceFlags& src, const RegimeFlags& rf, const std::string& theta,
           const std::string& text, std::ostream& out) {
  const Signature sig = Signature::load(src.signature);
  const auto yes_no = [&](bool b) { out << (b ? "yes" : "no") << '\n'; };
  if (mode == "mcs" || mode == "mps") {
    const auto premises = parse_premises(text, sig);
    if (mode == "mcs") {
      const auto worlds = enumerate_worlds(sig, src.cap);
      print_subsets(mcs(premises, worlds, src.cap), premises, worlds, sig, out);
    } else {
      const auto dist = distribution_of<Num>(src, sig);
      print_subsets(mps(premises, dist, src.cap), premises, dist.worlds(), sig, out);
    }
    return kOk;
  }
  const Query q = parse_query(text, sig);
  if (mode == "classical") {
    yes_no(classical_entails(q.premises, q.conclusion, enumerate_worlds(sig, src.cap)));
  } else if (mode == "possible") {
    yes_no(possible_entails(q.premises, q.conclusion, distribution_of<Num>(src, sig)));
  } else {
    if (theta.empty()) throw UsageError("gc needs --theta");
    const Rational t = parse_rational(theta);
    const MuRegime regime = rf.resolve(MuRegime::one());
    src.require_source();
    std::optional<bool> verdict;
    if (!src.data.empty())
      verdict = generative_consequence<Num>(q, t, Dataset::load_csv(src.data, sig), regime);
    else
      verdict = generative_consequence<Num>(q, t, load_distribution<Num>(src.dist, sig, src.cap), regime);
    if (verdict)
      yes_no(*verdict);
    else
      out << "undefined\n";
  }
  return kOk;
}

struct MnistFlags {
  std::string dir = ".";
  std::string train_images, train_labels, test_images, test_labels;
  int threshold = mnist::kDefaultThreshold;
  std::string out_dir = ".";
  std::size_t train_size = 0;  // 0: all

  void attach(CLI::App& app, bool with_test) {
    app.add_option("--mnist-dir", dir, "directory with the four IDX files");
    app.add_option("--train-images", train_images);
    app.add_option("--train-labels", train_labels);
    if (with_test) {
      app.add_option("--test-images", test_images);
      app.add_option("--test-labels", test_labels);
    }
    app.add_option("--threshold", threshold, "white if byte >= threshold")->check(CLI::Range(0, 255));
    app.add_option("--out", out_dir, "output directory");
  }

  mnist::ImageSet train() const {
    const auto f = mnist::MnistFiles::in(dir);
    return mnist::load_idx(train_images.empty() ? f.train_images : fs::path(train_images),
                           train_labels.empty() ? f.train_labels : fs::path(train_labels));
  }
  mnist::ImageSet test() const {
    const auto f = mnist::MnistFiles::in(dir);
    return mnist::load_idx(test_images.empty() ? f.test_images : fs::path(test_images),
                           test_labels.empty() ? f.test_labels : fs::path(test_labels));
  }
  std::uint8_t byte() const { return static_cast<std::uint8_t>(threshold); }
  std::size_t limit(const mnist::ImageSet& set) const { return train_size == 0 ? set.size() : train_size; }
};

template <class Num>
int mnist_generate(const MnistFlags& mf, std::ostream& out) {
  const auto set = mf.train();
  const Dataset data = mnist::make_dataset(set, mf.limit(set), mf.byte());
  fs::create_directories(mf.out_dir);
  for (std::size_t d = 0; d < mnist::kDigits; ++d) {
    const auto probs = mnist::generate_digit<Num>(data, d);
    std::vector<double> grey;
    for (const auto& p : probs) grey.push_back(NumTraits<Num>::to_double(p));
    const fs::path path = fs::path(mf.out_dir) / ("digit-" + std::to_string(d) + ".pgm");
    mnist::write_pgm(path, grey);
    out << path.string() << '\n';
  }
  return kOk;
}

template <class Num>
int mnist_predict(const MnistFlags& mf, const RegimeFlags& rf, std::size_t index, std::optional<std::size_t> k,
                  std::ostream& out) {
  const auto train = mf.train();
  const auto test = mf.test();
  if (index >= test.size()) throw UsageError("--index must be below " + std::to_string(test.size()));
  const Dataset data = mnist::make_dataset(train, mf.limit(train), mf.byte());
  const World w = mnist::pixel_world(test.images[index], mf.byte());
  out << "label " << int(test.labels[index]) << '\n';
  if (k) {
    const auto p = mnist::knn_predict(data, w, *k);
    for (std::size_t d = 0; d < mnist::kDigits; ++d) out << d << ' ' << format_number(p[d]) << '\n';
    return kOk;
  }
  const MuRegime regime = rf.resolve(MuRegime::limit_one());
  const auto p = mnist::predict_digit<Num>(data, w, regime);
  for (std::size_t d = 0; d < mnist::kDigits; ++d) out << d << ' ' << format_number(p[d]) << '\n';
  return kOk;
}

int mnist_curve(const MnistFlags& mf, mnist::CurveConfig config, const std::vector<std::string>& mus,
                std::ostream& out) {
  for (const auto& m : mus) config.mus.push_back(parse_rational(m));
  if (config.train_sizes.empty()) throw UsageError("--sizes is required");
  const auto train = mf.train();
  const auto test = mf.test();
  fs::create_directories(mf.out_dir);
  config.threshold = mf.byte();
  config.roc_dir = fs::path(mf.out_dir);
  const auto rows = mnist::learning_curve(train, test, config);
  const fs::path path = fs::path(mf.out_dir) / "learning_curve.csv";
  std::ofstream csv(path);
  if (!csv) throw DataError("cannot write " + path.string());
  mnist::write_curve_csv(csv, rows);
  for (const auto& r : rows)
    if (r.digit == "macro")
      out << r.method << (r.param.empty() ? "" : " " + r.param) << " n=" << r.train_size
          << " macro_auc=" << format_number(r.macro_auc) << '\n';
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generative-logic inference from model distributions and data", "genlogic"};
  app.require_subcommand(1);

  // infer
  auto* infer_cmd = app.add_subcommand("infer", "conditional probability of a query");
  SourceFlags infer_src;
  RegimeFlags infer_regime;
  std::string infer_query;
  infer_src.attach(*infer_cmd);
  infer_regime.attach(*infer_cmd);
  infer_cmd->add_option("query", infer_query, "\"alpha | beta1; beta2\"")->required();

  // entail
  auto* entail_cmd = app.add_subcommand("entail", "consequence relations");
  SourceFlags entail_src;
  RegimeFlags entail_regime;
  std::string mode, entail_query, theta;
  entail_cmd->add_option("mode", mode, "classical|possible|mcs|mps|gc")
      ->required()
      ->check(CLI::IsMember({"classical", "possible", "mcs", "mps", "gc"}));
  entail_cmd->add_option("query", entail_query, "\"alpha | beta1; beta2\" (premises only for mcs/mps)")->required();
  entail_src.attach(*entail_cmd);
  entail_regime.attach(*entail_cmd);
  entail_cmd->add_option("--theta", theta, "threshold in (0.5, 1] for gc");

  // mnist
  auto* mnist_cmd = app.add_subcommand("mnist", "MNIST experiments");
  mnist_cmd->require_subcommand(1);

  auto* gen_cmd = mnist_cmd->add_subcommand("generate", "standard image of every digit");
  MnistFlags gen_flags;
  bool gen_exact = false;
  gen_flags.attach(*gen_cmd, false);
  gen_cmd->add_option("--train-size", gen_flags.train_size, "first n training images (default all)");
  gen_cmd->add_flag("--exact", gen_exact, "exact rationals");
  gen_cmd->add_flag("--float", "double precision (default)");

  auto* pred_cmd = mnist_cmd->add_subcommand("predict", "digit distribution of one test image");
  MnistFlags pred_flags;
  RegimeFlags pred_regime;
  std::size_t index = 0;
  std::optional<std::size_t> pred_k;
  bool pred_exact = false;
  pred_flags.attach(*pred_cmd, true);
  pred_regime.attach(*pred_cmd);
  pred_cmd->add_option("--train-size", pred_flags.train_size, "first n training images (default all)");
  pred_cmd->add_option("--index", index, "test image index")->required();
  pred_cmd->add_option("--k", pred_k, "K-NN baseline instead of generative logic")->check(CLI::PositiveNumber);
  pred_cmd->add_flag("--exact", pred_exact, "exact rationals");
  pred_cmd->add_flag("--float", "double precision (default)");

  auto* curve_cmd = mnist_cmd->add_subcommand("curve", "learning curves and ROC files");
  MnistFlags curve_flags;
  mnist::CurveConfig curve;
  std::vector<std::string> curve_mus{"0.8"};
  curve.ks = {1, 3, 5};
  curve_flags.attach(*curve_cmd, true);
  curve_cmd->add_option("--sizes", curve.train_sizes, "training sizes, e.g. 100,1000")->delimiter(',');
  curve_cmd->add_option("--test", curve.test_size, "first n test images")->capture_default_str();
  curve_cmd->add_option("--mu", curve_mus, "fixed-mu values")->delimiter(',')->capture_default_str();
  curve_cmd->add_option("--k", curve.ks, "K-NN values")->delimiter(',')->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (infer_cmd->parsed()) {
      return infer_src.use_float ? infer<double>(infer_src, infer_regime, infer_query, out)
                                 : infer<Rational>(infer_src, infer_regime, infer_query, out);
    }
    if (entail_cmd->parsed()) {
      return entail_src.use_float ? entail<double>(mode, entail_src, entail_regime, theta, entail_query, out)
                                  : entail<Rational>(mode, entail_src, entail_regime, theta, entail_query, out);
    }
    if (gen_cmd->parsed()) return gen_exact ? mnist_generate<Rational>(gen_flags, out) : mnist_generate<double>(gen_flags, out);
    if (pred_cmd->parsed())
      return pred_exact ? mnist_predict<Rational>(pred_flags, pred_regime, index, pred_k, out)
                        : mnist_predict<double>(pred_flags, pred_regime, index, pred_k, out);
    if (curve_cmd->parsed()) return mnist_curve(curve_flags, curve, curve_mus, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: query " << e.what() << '\n';
    return kUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const SignatureError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"genlogic"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace genlogic::cli
