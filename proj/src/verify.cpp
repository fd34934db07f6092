#include "halfshift/verify.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "halfshift/bounds.hpp"
#include "halfshift/concentration.hpp"
#include "halfshift/dpss.hpp"
#include "halfshift/errors.hpp"
#include "halfshift/fracshift.hpp"
#include "json.hpp"

namespace halfshift {

namespace {

std::string fmt_w(double w) {
  std::ostringstream out;
  out << w;
  return out.str();
}

std::string case_nw(int n, double w) { return "N=" + std::to_string(n) + " W=" + fmt_w(w); }
std::string case_n(int n) { return "N=" + std::to_string(n); }

class Recorder {
 public:
  Recorder(std::string check, const RunConfig& config, std::vector<ReportRow>& rows)
      : check_(std::move(check)), config_(config), rows_(rows) {}

  void gate(std::string case_label, std::string metric, double value, double tolerance) {
    const double tol = config_.tol.value_or(tolerance);
    const bool pass = std::isfinite(value) && value <= tol;
    rows_.push_back({check_, std::move(case_label), std::move(metric), value, tol,
                     pass ? "pass" : "fail"});
  }

  void info(std::string case_label, std::string metric, double value) {
    rows_.push_back({check_, std::move(case_label), std::move(metric), value, 0.0, "info"});
  }

  std::mt19937_64 rng(const std::string& label) const {
    return derived_rng(config_.seed, check_ + "/" + label);
  }

 private:
  std::string check_;
  const RunConfig& config_;
  std::vector<ReportRow>& rows_;
};

double max_abs_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double out = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    out = std::max(out, std::abs(a[i] - b[i]));
  }
  return out;
}

void check_lemma1(const RunConfig& config, Recorder& rec) {
  for (int n : config.n_list) {
    for (double w : config.w_list) {
      auto rng = rec.rng(case_nw(n, w));
      double worst = 0.0;
      for (int c = 0; c < config.cases; ++c) {
        const Sequence r = random_unit_sequence(n, rng);
        const Sequence up = upsample2(r);
        const auto lhs = apply_shift(r, {w, 0.5}, -2 * n, 2 * n);
        std::vector<Complex> rhs;
        for (int k = -2 * n; k <= 2 * n; ++k) {
          rhs.push_back(shifted_sample(up, {0.5 * w, 1.0}, 2 * k));
        }
        worst = std::max(worst, max_abs_diff(lhs, rhs));
      }
      rec.gate(case_nw(n, w), "max_sample_diff", worst, 1e-12);
    }
  }
}

double eigen_residual(const DpssSet& set) {
  const int m = set.length();
  const double w = set.params().half_bandwidth;
  double worst = 0.0;
  for (int l = 0; l < m; ++l) {
    for (int i = 0; i < m; ++i) {
      double ks = 0.0;
      for (int j = 0; j < m; ++j) {
        ks += dpss_kernel(w, i - j) * set.vectors()(j, l);
      }
      worst = std::max(worst, std::abs(set.eigenvalue(l) * set.vectors()(i, l) - ks));
    }
  }
  return worst;
}

double orthonormality_error(const Eigen::MatrixXd& columns) {
  const Eigen::MatrixXd gram = columns.transpose() * columns;
  return (gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

void check_dpss(const RunConfig& config, Recorder& rec) {
  const DpssParams cases[] = {{19, 0.25}, {35, 0.25}, {33, 0.1}};
  for (const DpssParams& p : cases) {
    const DpssSet set = compute_dpss(p);
    const std::string label = "M=" + std::to_string(p.length) + " W'=" + fmt_w(p.half_bandwidth);
    rec.gate(label, "eigen_residual", eigen_residual(set), 1e-9);
    rec.gate(label, "orthonormality", orthonormality_error(set.vectors()), 1e-9);
    double trace = 0.0;
    for (double lam : set.eigenvalues()) {
      trace += lam;
    }
    rec.gate(label, "trace_error", std::abs(trace - 2.0 * p.half_bandwidth * p.length), 1e-9);
  }
  for (int n : config.n_list) {
    const DpssSet set = compute_dpss({2 * n + 3, 0.25});
    const FlipPairingResiduals res = flip_pairing_report(set);
    rec.gate(case_n(n), "flip_residual", res.flip, 1e-9);
    rec.gate(case_n(n), "pairing_residual", res.pairing, 1e-9);
    rec.gate(case_n(n), "middle_eigenvalue_error", std::abs(set.eigenvalue(n + 1) - 0.5), 1e-10);
  }
}

void check_lemma4(const RunConfig& config, Recorder& rec) {
  for (int n : config.n_list) {
    const OrthoBasis basis = even_subsample_basis(n);
    rec.gate(case_n(n), "gram_error", orthonormality_error(basis.members), 1e-9);
    rec.gate(case_n(n), "middle_even_samples", middle_member_even_sample_max(basis.source), 1e-9);
  }
}

void check_fracshift(const RunConfig& config, Recorder& rec) {
  for (int n : config.n_list) {
    for (double w : config.w_list) {
      auto rng = rec.rng(case_nw(n, w));
      double tau_spread = 0.0;
      double alias = 0.0;
      for (int c = 0; c < config.cases; ++c) {
        const Sequence r = random_unit_sequence(n, rng);
        const double base = total_energy(r, {w, 0.0});
        for (double tau : {0.3, 0.5, 1.7}) {
          tau_spread = std::max(tau_spread, std::abs(total_energy(r, {w, tau}) - base));
        }
        alias = std::max(alias,
                         std::abs(total_energy(upsample2(r), {0.5 * w, 0.5}) - 2.0 * base));
      }
      rec.gate(case_nw(n, w), "total_energy_tau_spread", tau_spread, 1e-12);
      rec.gate(case_nw(n, w), "upsample_energy_ratio_error", alias, 1e-10);
    }
  }
}

void check_theorem1(const RunConfig& config, Recorder& rec) {
  for (int n : config.n_list) {
    for (double w : config.w_list) {
      auto rng = rec.rng(case_nw(n, w));
      double worst = -std::numeric_limits<double>::infinity();
      for (int c = 0; c < config.cases; ++c) {
        const Sequence r = random_unit_sequence(n, rng);
        const BoundReport report = theorem1_bound(r, w);
        worst = std::max(worst, -*report.slack);
        if (c == 0) {
          const TailWindow window{r.half_width(), r.half_width()};
          const TruncatedTail oracle = tail_energy_truncated(r, {w, 0.5}, window, 1e-10);
          rec.gate(case_nw(n, w), "truncated_oracle_diff",
                   std::abs(oracle.value - *report.exact_value), 1e-9);
        }
      }
      rec.gate(case_nw(n, w), "exact_minus_bound", worst, 1e-10);
    }
  }
}

double equality_error(double value, double exact) {
  const double diff = std::abs(value - exact);
  // Relative above 1e-6, otherwise absolute scaled to the same threshold.
  return std::abs(exact) >= 1e-6 ? diff / std::abs(exact) : diff * 1e4;
}

void check_equality(const RunConfig& config, Recorder& rec) {
  for (int n : config.n_list) {
    auto rng = rec.rng(case_n(n));
    double worst = 0.0;
    for (int c = 0; c < config.cases; ++c) {
      const Sequence r = random_unit_sequence(n, rng);
      const BoundReport report = theorem1_equality(r);
      worst = std::max(worst, equality_error(report.bound_value, *report.exact_value));
    }
    rec.gate(case_n(n), "max_relative_error", worst, 1e-8);
  }
}

void check_theorem2(const RunConfig& config, Recorder& rec) {
  for (int n : config.n_list) {
    const DpssSet set = compute_dpss({2 * n + 3, 0.25});
    auto rng = rec.rng(case_n(n));
    double corrected = 0.0;
    double literal = 0.0;
    double coefficient = 0.0;
    for (int c = 0; c < config.cases; ++c) {
      const ConcentrationReport report = concentration(random_unit_sequence(n, rng), set);
      corrected = std::max(corrected, std::abs(report.corrected_value - report.direct_value));
      literal = std::max(literal, std::abs(report.formula_value - report.direct_value));
      coefficient = std::max(coefficient, std::abs(report.coefficient_sum - 0.25));
    }
    rec.gate(case_n(n), "corrected_formula_vs_direct", corrected, 1e-8);
    rec.info(case_n(n), "literal_formula_vs_direct", literal);
    rec.info(case_n(n), "coefficient_sum_minus_quarter", coefficient);
  }
}

void check_corollary1(const RunConfig& config, Recorder& rec) {
  for (int n : config.n_list) {
    const RankedBasis ranked = ranked_basis(n);
    const double best = ranked.concentrations.front();
    double increase = -std::numeric_limits<double>::infinity();
    for (std::size_t l = 1; l < ranked.concentrations.size(); ++l) {
      increase = std::max(increase, ranked.concentrations[l] - ranked.concentrations[l - 1]);
    }
    if (ranked.concentrations.size() > 1) {
      rec.gate(case_n(n), "ranked_max_increase", increase, 1e-12);
    }
    const OptimalSequence opt = optimal_sequence(n);
    rec.gate(case_n(n), "optimum_vs_basis_max",
             std::abs(opt.report.concentration - best), 1e-12);
    auto rng = rec.rng(case_n(n));
    double excess = -std::numeric_limits<double>::infinity();
    for (int c = 0; c < config.search_samples; ++c) {
      const ConcentrationReport report =
          concentration(random_unit_sequence(n, rng), ranked.basis.source);
      excess = std::max(excess, report.concentration - opt.report.concentration);
    }
    rec.gate(case_n(n), "random_minus_optimum", excess, 1e-9);
    rec.info(case_n(n), "displayed_optimum_minus_direct",
             opt.displayed_optimum_value - opt.report.direct_value);
  }
}

void check_lemma2(const RunConfig& config, Recorder& rec) {
  for (int n : config.n_list) {
    for (double w : config.w_list) {
      auto rng = rec.rng(case_nw(n, w));
      double worst = -std::numeric_limits<double>::infinity();
      for (int c = 0; c < config.cases; ++c) {
        const Sequence r = random_unit_sequence(n, rng);
        for (const TailWindow window : {TailWindow{n / 2, n / 2}, TailWindow{n / 2 + 1, n / 2 + 2}}) {
          const Lemma2Result res = lemma2_bound(r, w, window);
          worst = std::max(worst, res.lhs - res.rhs);
        }
      }
      rec.gate(case_nw(n, w), "lhs_minus_rhs", worst, 1e-10);
    }
  }
}

void check_lemma3(const RunConfig& config, Recorder& rec) {
  for (int n : config.n_list) {
    auto rng = rec.rng(case_n(n));
    double worst = 0.0;
    for (int c = 0; c < config.cases; ++c) {
      const Sequence r = random_unit_sequence(n, rng);
      const Sequence up = upsample2(r);
      for (int l = n / 2; l <= n / 2 + 1; ++l) {
        for (int m = n / 2 + 1; m <= n / 2 + 2; ++m) {
          const double lhs = tail_energy_exact(r, {0.5, 0.5}, {l, m}).value;
          const double rhs = tail_energy_exact(up, {0.25, 0.0}, {2 * l + 1, 2 * m - 1}).value;
          worst = std::max(worst, std::abs(lhs - rhs));
        }
      }
    }
    rec.gate(case_n(n), "max_abs_diff", worst, 1e-9);
  }
}

void check_matrix_form(const RunConfig& config, Recorder& rec) {
  for (int n : config.n_list) {
    const DpssSet set = compute_dpss({2 * n + 3, 0.25});
    auto rng = rec.rng(case_n(n));
    double worst = 0.0;
    for (int c = 0; c < config.cases; ++c) {
      const Sequence r = random_unit_sequence(n, rng);
      try {
        const MatrixFormCheck res = matrix_form_check(r, set);
        worst = std::max({worst, std::abs(res.numerator_quad - res.scalar_numerator),
                          std::abs(res.denominator_quad - res.scalar_denominator)});
      } catch (const std::logic_error&) {
        worst = std::numeric_limits<double>::infinity();
      }
    }
    rec.gate(case_n(n), "max_quad_vs_scalar", worst, 1e-10);
  }
}

using CheckFn = std::function<void(const RunConfig&, Recorder&)>;

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> checks{
      {"lemma1", check_lemma1},       {"dpss", check_dpss},
      {"lemma4", check_lemma4},       {"fracshift", check_fracshift},
      {"theorem1", check_theorem1},   {"equality", check_equality},
      {"theorem2", check_theorem2},   {"corollary1", check_corollary1},
      {"lemma2", check_lemma2},       {"lemma3", check_lemma3},
      {"matrix_form", check_matrix_form},
  };
  return checks;
}

}  // namespace

const std::vector<std::string>& verification_checks() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) {
      out.push_back(name);
    }
    return out;
  }();
  return names;
}

void RunConfig::validate() const {
  if (n_list.empty()) {
    throw ParameterError("n_list must not be empty");
  }
  for (int n : n_list) {
    if (n < 2 || n % 2 != 0) {
      throw ParameterError("every N must be even and >= 2, got " + std::to_string(n));
    }
  }
  if (w_list.empty()) {
    throw ParameterError("w_list must not be empty");
  }
  for (double w : w_list) {
    if (!(w > 0.0 && w <= 0.5)) {
      throw ParameterError("every W must lie in (0, 0.5], got " + fmt_w(w));
    }
  }
  if (tol && !(*tol > 0.0)) {
    throw ParameterError("tol must be positive");
  }
  if (cases < 1 || search_samples < 1) {
    throw ParameterError("cases and search_samples must be positive");
  }
  if (only) {
    const auto& names = verification_checks();
    if (std::find(names.begin(), names.end(), *only) == names.end()) {
      throw ParameterError("unknown check '" + *only + "'");
    }
  }
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open config " + path.string());
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  RunConfig config;
  try {
    if (doc.contains("seed")) config.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("n_list")) config.n_list = doc["n_list"].get<std::vector<int>>();
    if (doc.contains("w_list")) config.w_list = doc["w_list"].get<std::vector<double>>();
    if (doc.contains("tol")) config.tol = doc["tol"].get<double>();
    if (doc.contains("cases")) config.cases = doc["cases"].get<int>();
    if (doc.contains("search_samples")) config.search_samples = doc["search_samples"].get<int>();
    if (doc.contains("only")) config.only = doc["only"].get<std::string>();
    if (doc.contains("format")) config.output_format = parse_output_format(doc["format"].get<std::string>());
    if (doc.contains("out")) config.output_path = doc["out"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return config;
}

int VerificationReport::passed() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(),
                                        [](const ReportRow& r) { return r.status == "pass"; }));
}

int VerificationReport::failed() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(),
                                        [](const ReportRow& r) { return r.status == "fail"; }));
}

Table VerificationReport::to_table() const {
  Table table{"verify", {"check", "case", "metric", "value", "tolerance", "status"}, {}, {}};
  for (const ReportRow& row : rows) {
    table.add_row({row.check, row.case_label, row.metric, row.value, row.tolerance, row.status});
  }
  table.summary = {{"seed", static_cast<std::int64_t>(seed)},
                   {"rows", static_cast<std::int64_t>(rows.size())},
                   {"passed", std::int64_t{passed()}},
                   {"failed", std::int64_t{failed()}},
                   {"ok", ok()}};
  return table;
}

VerificationReport run_verification(const RunConfig& config) {
  config.validate();
  VerificationReport report;
  report.seed = config.seed;
  for (const auto& [name, fn] : registry()) {
    if (config.only && *config.only != name) {
      continue;
    }
    Recorder rec(name, config, report.rows);
    fn(config, rec);
  }
  return report;
}

Sequence random_unit_sequence(int order, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::vector<Complex> values(static_cast<std::size_t>(order) + 1);
  double energy = 0.0;
  for (Complex& v : values) {
    v = {normal(rng), normal(rng)};
    energy += std::norm(v);
  }
  const double scale = 1.0 / std::sqrt(energy);
  for (Complex& v : values) {
    v *= scale;
  }
  return Sequence(order, std::move(values));
}

std::mt19937_64 derived_rng(std::uint64_t seed, const std::string& label) {
  // FNV-1a over the label, folded into the seed.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : label) {
    h = (h ^ c) * 1099511628211ULL;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace halfshift
