// kernellab: spectral kernel classifiers, smoothness estimation, and
// convergence-rate experiments over synthetic and image data.

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kernellab/data_synth.hpp"
#include "kernellab/dataset_io.hpp"
#include "kernellab/eigensystem.hpp"
#include "kernellab/estimator.hpp"
#include "kernellab/filters.hpp"
#include "kernellab/kernels.hpp"
#include "kernellab/risk.hpp"
#include "kernellab/smoothness.hpp"

namespace kl = kernellab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitDomain = 4;
constexpr int kExitNumerical = 5;
constexpr int kExitDegenerateFit = 6;
constexpr int kExitDataset = 7;
constexpr int kExitModel = 8;
constexpr int kExitSearchExhausted = 9;
constexpr int kExitOther = 10;

const char* kExitCodeHelp =
    "Exit codes:\n"
    "  0   success\n"
    "  2   invalid flags or config file\n"
    "  3   file could not be read or written\n"
    "  4   input outside a kernel or model domain\n"
    "  5   numerical failure (eigensolver, singular matrix)\n"
    "  6   degenerate least-squares fit\n"
    "  7   dataset file malformed or insufficient\n"
    "  8   conditional model produced an invalid value\n"
    "  9   randomized search exhausted its retry cap\n"
    "  10  unexpected error\n";

std::string fmt(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path) : path_(path) {
    if (path.empty()) throw kl::ConfigError("empty output path");
    stream_.open(path, std::ios::trunc);
    if (!stream_) throw kl::IoError("cannot open output file: " + path);
  }
  ~CsvWriter() {
    if (stream_.is_open()) stream_.close();
  }
  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) stream_ << ',';
      stream_ << cells[i];
    }
    stream_ << '\n';
    if (!stream_) throw kl::IoError("write failure: " + path_);
  }

 private:
  std::string path_;
  std::ofstream stream_;
};

struct KernelOptions {
  std::string kind = "min";
  int depth = 1;

  kl::KernelSpec build() const {
    if (kind == "min") return kl::KernelSpec::min_kernel();
    if (kind == "ntk") return kl::KernelSpec::ntk(depth);
    throw kl::ConfigError("unknown kernel: " + kind);
  }
};

struct DataOptions {
  std::string model = "cos2pix";
  std::string images_path, labels_path, cifar_path;
  int label_pos = 1;
  int label_neg = 7;

  bool uses_files() const { return !images_path.empty() || !cifar_path.empty(); }
};

void add_kernel_flags(CLI::App* cmd, KernelOptions* opts) {
  cmd->add_option("--kernel", opts->kind, "Kernel: min or ntk")
      ->check(CLI::IsMember({"min", "ntk"}))
      ->capture_default_str();
  cmd->add_option("--depth", opts->depth, "Hidden-layer count for the ntk kernel")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

kl::Filter parse_filter(const std::string& name, int tikhonov_steps) {
  if (name == "gradient-flow" || name == "gf") return kl::Filter::gradient_flow();
  if (name == "ridge") return kl::Filter::ridge();
  if (name == "cutoff") return kl::Filter::spectral_cutoff();
  if (name == "tikhonov") return kl::Filter::iterated_tikhonov(tikhonov_steps);
  throw kl::ConfigError("unknown filter: " + name);
}

kl::ConditionalModel parse_model(const std::string& name) {
  if (name == "cos2pix") return kl::cosine_model();
  if (name.rfind("const:", 0) == 0) {
    try {
      return kl::constant_model(std::stod(name.substr(6)));
    } catch (const std::logic_error&) {
      throw kl::ConfigError("unparseable level in model: " + name);
    }
  }
  throw kl::ConfigError("unknown model: " + name + " (expected cos2pix or const:<level>)");
}

kl::LabeledImages load_images(const DataOptions& data) {
  if (!data.cifar_path.empty()) return kl::load_cifar10(data.cifar_path);
  if (data.labels_path.empty()) {
    throw kl::ConfigError("--images requires --labels");
  }
  return kl::from_idx(kl::load_idx(data.images_path), kl::load_idx(data.labels_path),
                      data.images_path);
}

// ---------------------------------------------------------------------------
// estimate-smoothness

struct SmoothnessArgs {
  KernelOptions kernel;
  DataOptions data;
  int n = 5000;
  int truncation = 100;
  double beta = 2.0;
  int reps = 50;
  std::uint64_t seed = 0;
  std::string task = "classification";
  double sigma = 0.1;
  std::string design = "auto";
  std::string out;
};

int run_estimate_smoothness(const SmoothnessArgs& args) {
  const kl::KernelSpec kernel = args.kernel.build();
  kl::LabeledSampler sampler;
  if (args.data.uses_files()) {
    const kl::LabeledImages images = load_images(args.data);
    const int pos = args.data.label_pos, neg = args.data.label_neg;
    sampler = [images, pos, neg](int n, std::uint64_t seed) {
      return kl::two_class_subset(images, pos, neg, n, seed);
    };
  } else {
    const kl::ConditionalModel model = parse_model(args.data.model);
    const bool grid_design =
        args.design == "grid" || (args.design == "auto" && args.task == "regression");
    if (args.task == "classification") {
      if (grid_design) throw kl::ConfigError("grid design applies to regression only");
      sampler = [model](int n, std::uint64_t seed) {
        return kl::sample_classification(model, n, seed);
      };
    } else {
      const double sigma = args.sigma;
      if (grid_design) {
        sampler = [model, sigma](int n, std::uint64_t seed) {
          const kl::PointSet x = kl::equispaced_design(n);
          kl::Rng rng(seed);
          std::normal_distribution<double> gauss(0.0, 1.0);
          Eigen::VectorXd y(n);
          for (int i = 0; i < n; ++i) {
            const kl::Point xi = x.row(i);
            y(i) = model.f_star(xi) + (sigma > 0.0 ? sigma * gauss(rng) : 0.0);
          }
          return std::pair{x, y};
        };
      } else {
        sampler = [model, sigma](int n, std::uint64_t seed) {
          return kl::sample_regression(model, n, sigma, seed);
        };
      }
    }
  }

  const kl::RepeatedEstimate result = kl::repeated_estimate(
      sampler, kernel, args.n, args.truncation, args.beta, args.reps, args.seed);

  CsvWriter csv(args.out);
  csv.row({"rep", "s_hat"});
  for (std::size_t rep = 0; rep < result.estimates.size(); ++rep) {
    csv.row({std::to_string(rep), fmt(result.estimates[rep])});
  }
  csv.row({"mean", fmt(result.mean)});
  csv.row({"std", fmt(result.stddev)});
  std::cout << "estimate-smoothness: kernel=" << kernel.name() << " n=" << args.n
            << " truncation=" << args.truncation << " reps=" << args.reps
            << " mean_s_hat=" << fmt(result.mean) << " std=" << fmt(result.stddev) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// rate-study

struct RateStudyArgs {
  KernelOptions kernel;
  std::string model = "cos2pix";
  double s = 0.5;
  double beta = 2.0;
  std::vector<int> n_grid;
  int reps = 10;
  std::uint64_t seed = 0;
  std::string filter = "gradient-flow";
  int tikhonov_steps = 2;
  double nu_constant = 1.0;
  std::string out;
};

int run_rate_study(const RateStudyArgs& args) {
  const kl::ConditionalModel model = parse_model(args.model);
  const kl::KernelSpec kernel = args.kernel.build();
  const kl::Filter filter = parse_filter(args.filter, args.tikhonov_steps);
  const kl::RateStudyResult result = kl::rate_study(
      model, kernel, filter, args.n_grid, args.s, args.beta, args.reps, args.seed,
      args.nu_constant);

  CsvWriter csv(args.out);
  csv.row({"n", "mean_risk", "std", "nu"});
  for (const auto& row : result.rows) {
    csv.row({std::to_string(row.n), fmt(row.mean_excess_risk), fmt(row.std_excess_risk),
             fmt(row.nu)});
  }
  csv.row({"fitted_slope", fmt(result.fitted_slope)});
  csv.row({"theoretical_slope", fmt(result.theoretical_slope)});
  csv.row({"fitted_l2_slope", fmt(result.fitted_l2_slope)});
  std::cout << "rate-study: fitted_slope=" << fmt(result.fitted_slope)
            << " theoretical_slope=" << fmt(result.theoretical_slope)
            << " fitted_l2_slope=" << fmt(result.fitted_l2_slope) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// fit-predict

struct FitPredictArgs {
  KernelOptions kernel;
  std::string model = "cos2pix";
  int n = 1000;
  std::uint64_t seed = 0;
  std::string filter = "gradient-flow";
  int tikhonov_steps = 2;
  double nu = 0.0;  // 0 means: use the schedule below
  double s = 0.5;
  double beta = 2.0;
  double nu_constant = 1.0;
  int grid_points = 501;
  std::string out;
};

int run_fit_predict(const FitPredictArgs& args) {
  const kl::ConditionalModel model = parse_model(args.model);
  const kl::KernelSpec kernel = args.kernel.build();
  const kl::Filter filter = parse_filter(args.filter, args.tikhonov_steps);
  const double nu =
      args.nu > 0.0 ? args.nu : kl::nu_rule(args.n, args.s, args.beta, args.nu_constant);

  auto [x, y] = kl::sample_classification(model, args.n, args.seed);
  const kl::FittedClassifier fitted = kl::fit(kernel, x, y, filter, nu);
  const kl::Classifier classifier = [&fitted](const kl::Point& p) {
    return kl::predict(fitted, p);
  };

  const double train_risk = kl::zero_one_risk(classifier, x, y);
  const double excess =
      kl::excess_risk(model, classifier, kl::QuadratureMethod{});

  CsvWriter csv(args.out);
  csv.row({"x", "f_star", "f_hat", "label"});
  for (int i = 0; i < args.grid_points; ++i) {
    kl::Point p(1);
    p(0) = static_cast<double>(i) / (args.grid_points - 1);
    const double f_hat = kl::predict(fitted, p);
    csv.row({fmt(p(0)), fmt(model.f_star(p)), fmt(f_hat), f_hat >= 0.0 ? "1" : "-1"});
  }
  std::cout << "fit-predict: kernel=" << kernel.name() << " filter=" << filter.name()
            << " nu=" << fmt(nu) << " train_01_risk=" << fmt(train_risk)
            << " excess_risk=" << fmt(excess) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// kernel-check

struct KernelCheckArgs {
  KernelOptions kernel;
  int n = 64;
  std::uint64_t seed = 0;
  std::string out;
};

int run_kernel_check(const KernelCheckArgs& args) {
  const kl::KernelSpec kernel = args.kernel.build();
  kl::Rng rng(args.seed);
  kl::PointSet points;
  if (kernel.kind() == kl::KernelSpec::Kind::Min) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    points.resize(args.n, 1);
    for (int i = 0; i < args.n; ++i) points(i, 0) = unif(rng);
  } else {
    const int dim = 8;
    std::normal_distribution<double> gauss(0.0, 1.0);
    points.resize(args.n, dim);
    for (int i = 0; i < args.n; ++i) {
      Eigen::VectorXd v(dim);
      do {
        for (int j = 0; j < dim; ++j) v(j) = gauss(rng);
      } while (v.norm() == 0.0);
      points.row(i) = v / v.norm();
    }
  }

  const kl::GramMatrix gram = kl::gram_matrix(kernel, points);
  const double expected_diag =
      kernel.kind() == kl::KernelSpec::Kind::Ntk ? args.kernel.depth + 1.0 : -1.0;
  double max_diag_error = 0.0;
  if (expected_diag > 0.0) {
    for (int i = 0; i < args.n; ++i) {
      max_diag_error = std::max(max_diag_error,
                                std::abs(gram.entries(i, i) - expected_diag));
    }
  }
  const double asym =
      (gram.entries - gram.entries.transpose()).cwiseAbs().maxCoeff();
  const kl::EmpiricalSpectrum spectrum = kl::empirical_eigendecomposition(gram);
  const double min_eig = spectrum.values(spectrum.values.size() - 1) * args.n;
  const double psd_floor = -1e-8 * args.n;

  const bool diag_ok = expected_diag < 0.0 || max_diag_error <= 1e-10;
  const bool sym_ok = asym <= 1e-12 * std::max(1.0, gram.entries.cwiseAbs().maxCoeff());
  const bool psd_ok = min_eig >= psd_floor;

  std::cout << "kernel-check: kernel=" << kernel.name() << " n=" << args.n << "\n";
  if (expected_diag > 0.0) {
    std::cout << "  diagonal: expected " << fmt(expected_diag) << ", max |error| "
              << fmt(max_diag_error) << " -> " << (diag_ok ? "ok" : "FAIL") << "\n";
  }
  std::cout << "  symmetry: max |K - K^T| = " << fmt(asym) << " -> "
            << (sym_ok ? "ok" : "FAIL") << "\n";
  std::cout << "  psd: min eigenvalue " << fmt(min_eig) << " (floor " << fmt(psd_floor)
            << ") -> " << (psd_ok ? "ok" : "FAIL") << "\n";

  if (!args.out.empty()) {
    CsvWriter csv(args.out);
    csv.row({"metric", "value"});
    csv.row({"kappa_bound", fmt(kernel.kappa_bound())});
    csv.row({"max_diag_error", fmt(expected_diag > 0.0 ? max_diag_error : 0.0)});
    csv.row({"max_asymmetry", fmt(asym)});
    csv.row({"min_gram_eigenvalue", fmt(min_eig)});
  }
  return diag_ok && sym_ok && psd_ok ? kExitOk : kExitNumerical;
}

// ---------------------------------------------------------------------------
// hard-instance

struct HardInstanceArgs {
  int q = 4;
  int dim = 1;
  double sr = 1.0;
  double c_psi = 1.0;
  int omega_index = 0;
  int n = 1000;
  std::uint64_t seed = 0;
  std::string out;
  std::string codebook_out;
};

int run_hard_instance(const HardInstanceArgs& args) {
  int cells = 1;
  for (int i = 0; i < args.dim; ++i) cells *= args.q;
  if (cells < 8) {
    throw kl::ConfigError("hard-instance: q^dim must be at least 8 for a codebook");
  }
  const auto codebook = kl::varshamov_gilbert(cells, args.seed);
  if (args.omega_index < 0 || args.omega_index >= static_cast<int>(codebook.size())) {
    throw kl::ConfigError("hard-instance: --omega-index outside the generated codebook");
  }
  const kl::HardInstance inst = kl::make_hard_instance(
      args.q, args.dim, args.sr, args.c_psi, codebook[static_cast<std::size_t>(args.omega_index)]);
  const kl::ConditionalModel model = kl::hard_instance_model(inst);
  const auto [x, y] = kl::sample_classification(model, args.n, args.seed + 1);

  CsvWriter csv(args.out);
  std::vector<std::string> header;
  for (int d = 0; d < args.dim; ++d) header.push_back("x" + std::to_string(d + 1));
  header.emplace_back("label");
  csv.row(header);
  for (int i = 0; i < args.n; ++i) {
    std::vector<std::string> row;
    for (int d = 0; d < args.dim; ++d) row.push_back(fmt(x(i, d)));
    row.push_back(y(i) > 0 ? "1" : "-1");
    csv.row(row);
  }

  if (!args.codebook_out.empty()) {
    CsvWriter cb(args.codebook_out);
    std::vector<std::string> head{"word"};
    for (int k = 0; k < cells; ++k) head.push_back("w" + std::to_string(k));
    cb.row(head);
    for (std::size_t w = 0; w < codebook.size(); ++w) {
      std::vector<std::string> row{std::to_string(w)};
      for (int k = 0; k < cells; ++k) row.push_back(std::to_string(codebook[w][static_cast<std::size_t>(k)]));
      cb.row(row);
    }
  }

  const double amplitude = args.c_psi * std::pow(static_cast<double>(args.q), -args.sr);
  std::cout << "hard-instance: q=" << args.q << " dim=" << args.dim << " cells=" << cells
            << " codebook_size=" << codebook.size() << " amplitude=" << fmt(amplitude)
            << " samples=" << args.n << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kernellab: spectral kernel classifiers, smoothness estimation, and "
               "rate experiments"};
  app.footer(kExitCodeHelp);
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from an INI file (flags take precedence)");

  int threads = 0;
  app.add_option("--threads", threads, "Cap worker threads (0 = hardware default)")
      ->capture_default_str();

  SmoothnessArgs sm;
  CLI::App* sm_cmd = app.add_subcommand(
      "estimate-smoothness", "Estimate the relative smoothness from projection decay");
  add_kernel_flags(sm_cmd, &sm.kernel);
  CLI::Option* sm_model =
      sm_cmd->add_option("--model", sm.data.model, "Synthetic model (cos2pix, const:<v>)")
          ->capture_default_str();
  CLI::Option* sm_images = sm_cmd->add_option("--images", sm.data.images_path, "IDX image file");
  CLI::Option* sm_labels = sm_cmd->add_option("--labels", sm.data.labels_path, "IDX label file");
  CLI::Option* sm_cifar =
      sm_cmd->add_option("--cifar", sm.data.cifar_path, "CIFAR-10 binary batch file");
  sm_images->needs(sm_labels);
  sm_images->excludes(sm_cifar)->excludes(sm_model);
  sm_cifar->excludes(sm_model);
  sm_cmd->add_option("--label-pos", sm.data.label_pos, "Class mapped to +1")
      ->capture_default_str();
  sm_cmd->add_option("--label-neg", sm.data.label_neg, "Class mapped to -1")
      ->capture_default_str();
  sm_cmd->add_option("--n", sm.n, "Sample size per replicate")->check(CLI::PositiveNumber);
  sm_cmd->add_option("--truncation", sm.truncation, "Truncation point of the decay fit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sm_cmd->add_option("--beta", sm.beta, "Eigenvalue decay exponent of the kernel")
      ->capture_default_str();
  sm_cmd->add_option("--reps", sm.reps, "Replicates")->check(CLI::PositiveNumber)
      ->capture_default_str();
  sm_cmd->add_option("--seed", sm.seed, "Base seed")->capture_default_str();
  sm_cmd->add_option("--task", sm.task, "classification or regression")
      ->check(CLI::IsMember({"classification", "regression"}))
      ->capture_default_str();
  sm_cmd->add_option("--sigma", sm.sigma, "Gaussian noise level for regression")
      ->capture_default_str();
  sm_cmd->add_option("--design", sm.design, "iid, grid, or auto (grid for regression)")
      ->check(CLI::IsMember({"iid", "grid", "auto"}))
      ->capture_default_str();
  sm_cmd->add_option("--out", sm.out, "Output CSV path")->required();

  RateStudyArgs rs;
  CLI::App* rs_cmd = app.add_subcommand(
      "rate-study", "Excess-risk decay against sample size under the nu schedule");
  add_kernel_flags(rs_cmd, &rs.kernel);
  rs_cmd->add_option("--model", rs.model, "Synthetic model")->capture_default_str();
  rs_cmd->add_option("--s", rs.s, "Relative smoothness of the target")
      ->capture_default_str();
  rs_cmd->add_option("--beta", rs.beta, "Eigenvalue decay exponent")->capture_default_str();
  rs_cmd->add_option("--n-grid", rs.n_grid, "Comma-separated sample sizes")
      ->required()
      ->delimiter(',');
  rs_cmd->add_option("--reps", rs.reps, "Replicates per sample size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  rs_cmd->add_option("--seed", rs.seed, "Base seed")->capture_default_str();
  rs_cmd->add_option("--filter", rs.filter, "gradient-flow, ridge, cutoff, tikhonov")
      ->capture_default_str();
  rs_cmd->add_option("--tikhonov-steps", rs.tikhonov_steps, "Steps for the tikhonov filter")
      ->capture_default_str();
  rs_cmd->add_option("--nu-constant", rs.nu_constant, "Constant in the nu schedule")
      ->capture_default_str();
  rs_cmd->add_option("--out", rs.out, "Output CSV path")->required();

  FitPredictArgs fp;
  CLI::App* fp_cmd =
      app.add_subcommand("fit-predict", "Fit one classifier and tabulate it on a grid");
  add_kernel_flags(fp_cmd, &fp.kernel);
  fp_cmd->add_option("--model", fp.model, "Synthetic model")->capture_default_str();
  fp_cmd->add_option("--n", fp.n, "Training sample size")->check(CLI::PositiveNumber)
      ->capture_default_str();
  fp_cmd->add_option("--seed", fp.seed, "Seed")->capture_default_str();
  fp_cmd->add_option("--filter", fp.filter, "gradient-flow, ridge, cutoff, tikhonov")
      ->capture_default_str();
  fp_cmd->add_option("--tikhonov-steps", fp.tikhonov_steps, "Steps for the tikhonov filter")
      ->capture_default_str();
  fp_cmd->add_option("--nu", fp.nu, "Regularization parameter (0 = use the schedule)")
      ->capture_default_str();
  fp_cmd->add_option("--s", fp.s, "Smoothness for the schedule")->capture_default_str();
  fp_cmd->add_option("--beta", fp.beta, "Decay exponent for the schedule")
      ->capture_default_str();
  fp_cmd->add_option("--nu-constant", fp.nu_constant, "Constant in the schedule")
      ->capture_default_str();
  fp_cmd->add_option("--grid", fp.grid_points, "Evaluation grid size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  fp_cmd->add_option("--out", fp.out, "Output CSV path")->required();

  KernelCheckArgs kc;
  CLI::App* kc_cmd = app.add_subcommand(
      "kernel-check", "Verify diagonal, symmetry, and positive semidefiniteness");
  add_kernel_flags(kc_cmd, &kc.kernel);
  kc_cmd->add_option("--n", kc.n, "Random sample size")->check(CLI::PositiveNumber)
      ->capture_default_str();
  kc_cmd->add_option("--seed", kc.seed, "Seed")->capture_default_str();
  kc_cmd->add_option("--out", kc.out, "Optional report CSV path");

  HardInstanceArgs hi;
  CLI::App* hi_cmd = app.add_subcommand(
      "hard-instance", "Sample a signed-bump hard classification instance");
  hi_cmd->add_option("--q", hi.q, "Grid resolution per coordinate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  hi_cmd->add_option("--dim", hi.dim, "Dimension")->check(CLI::PositiveNumber)
      ->capture_default_str();
  hi_cmd->add_option("--sr", hi.sr, "Smoothness-order product")->capture_default_str();
  hi_cmd->add_option("--c-psi", hi.c_psi, "Bump amplitude scale in (0,1]")
      ->capture_default_str();
  hi_cmd->add_option("--omega-index", hi.omega_index, "Codeword index within the codebook")
      ->capture_default_str();
  hi_cmd->add_option("--n", hi.n, "Sample size")->check(CLI::PositiveNumber)
      ->capture_default_str();
  hi_cmd->add_option("--seed", hi.seed, "Seed")->capture_default_str();
  hi_cmd->add_option("--out", hi.out, "Output CSV path")->required();
  hi_cmd->add_option("--codebook-out", hi.codebook_out, "Optional codebook CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  kl::set_max_threads(threads);

  try {
    if (sm_cmd->parsed()) return run_estimate_smoothness(sm);
    if (rs_cmd->parsed()) return run_rate_study(rs);
    if (fp_cmd->parsed()) return run_fit_predict(fp);
    if (kc_cmd->parsed()) return run_kernel_check(kc);
    if (hi_cmd->parsed()) return run_hard_instance(hi);
  } catch (const kl::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const kl::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const kl::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const kl::NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const kl::SingularMatrixError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const kl::DegenerateFitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegenerateFit;
  } catch (const kl::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataset;
  } catch (const kl::LabelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataset;
  } catch (const kl::InsufficientDataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataset;
  } catch (const kl::ZeroImageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataset;
  } catch (const kl::ModelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitModel;
  } catch (const kl::SearchExhaustedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSearchExhausted;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOther;
  }
  return kExitConfig;
}
