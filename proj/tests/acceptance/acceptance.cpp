// Acceptance suite: one PASS/FAIL line per criterion.
//
//   halfshift_acceptance            run every criterion
//   halfshift_acceptance 4 7        run only the listed criteria
//
// Exit status is 0 only if every selected criterion passes, including its
// runtime budget.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "halfshift/bounds.hpp"
#include "halfshift/concentration.hpp"
#include "halfshift/dpss.hpp"
#include "halfshift/fracshift.hpp"
#include "halfshift/verify.hpp"

using namespace halfshift;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Tracks the worst value of one metric against its tolerance.
struct Gauge {
  std::string name;
  double tolerance;
  double worst = -std::numeric_limits<double>::infinity();

  void observe(double value) {
    // NaN must never pass.
    worst = std::isnan(value) ? std::numeric_limits<double>::infinity() : std::max(worst, value);
  }
  bool ok() const { return worst <= tolerance; }
  std::string str() const {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s=%.3g (tol %.0e)", name.c_str(), worst, tolerance);
    return buf;
  }
};

Outcome summarize(std::initializer_list<const Gauge*> gauges, std::string extra = {}) {
  Outcome out;
  for (const Gauge* g : gauges) {
    out.pass = out.pass && g->ok();
    out.detail += (out.detail.empty() ? "" : ", ") + g->str();
  }
  if (!extra.empty()) {
    out.detail += ", " + extra;
  }
  return out;
}

std::mt19937_64 rng_for(const std::string& label) { return derived_rng(20240611, label); }

std::string label_nw(int n, double w) {
  std::ostringstream s;
  s << "N=" << n << " W=" << w;
  return s.str();
}

double gram_error(const Eigen::MatrixXd& columns) {
  const Eigen::MatrixXd gram = columns.transpose() * columns;
  return (gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

Outcome half_shift_identity() {
  Gauge diff{"max_sample_diff", 1e-12};
  int count = 0;
  for (int n : {2, 4, 8, 16, 32}) {
    for (double w : {0.1, 0.25, 0.4, 0.5}) {
      auto rng = rng_for("identity/" + label_nw(n, w));
      for (int c = 0; c < 200; ++c, ++count) {
        const Sequence r = random_unit_sequence(n, rng);
        const Sequence up = upsample2(r);
        const auto lhs = apply_shift(r, {w, 0.5}, -2 * n, 2 * n);
        for (int k = -2 * n; k <= 2 * n; ++k) {
          const Complex rhs = shifted_sample(up, {0.5 * w, 1.0}, 2 * k);
          diff.observe(std::abs(lhs[static_cast<std::size_t>(k + 2 * n)] - rhs));
        }
      }
    }
  }
  return summarize({&diff}, std::to_string(count) + " sequences");
}

Outcome dpss_correctness() {
  Gauge residual{"eigen_residual", 1e-9};
  Gauge ortho{"orthonormality", 1e-9};
  Gauge trace{"trace_error", 1e-9};
  for (const DpssParams p : {DpssParams{19, 0.25}, DpssParams{35, 0.25}, DpssParams{33, 0.1}}) {
    const DpssSet set = compute_dpss(p);
    Eigen::MatrixXd kernel(p.length, p.length);
    for (int i = 0; i < p.length; ++i) {
      for (int j = 0; j < p.length; ++j) {
        kernel(i, j) = dpss_kernel(p.half_bandwidth, i - j);
      }
    }
    const Eigen::VectorXd lambda =
        Eigen::Map<const Eigen::VectorXd>(set.eigenvalues().data(), p.length);
    const Eigen::MatrixXd res = kernel * set.vectors() - set.vectors() * lambda.asDiagonal();
    residual.observe(res.cwiseAbs().maxCoeff());
    ortho.observe(gram_error(set.vectors()));
    trace.observe(std::abs(lambda.sum() - 2.0 * p.half_bandwidth * p.length));
  }
  Gauge flip{"flip_residual", 1e-9};
  Gauge pairing{"pairing_residual", 1e-9};
  Gauge middle{"middle_eigenvalue_error", 1e-10};
  for (int n = 2; n <= 64; n += 2) {
    const DpssSet set = compute_dpss({2 * n + 3, 0.25});
    const FlipPairingResiduals r = flip_pairing_report(set);
    flip.observe(r.flip);
    pairing.observe(r.pairing);
    middle.observe(std::abs(set.eigenvalue(n + 1) - 0.5));
  }
  return summarize({&residual, &ortho, &trace, &flip, &pairing, &middle}, "pairing family N=2..64");
}

Outcome even_subsample_basis_check() {
  Gauge gram{"gram_error", 1e-9};
  Gauge middle{"middle_even_samples", 1e-9};
  for (int n = 2; n <= 64; n += 2) {
    const OrthoBasis basis = even_subsample_basis(n);
    gram.observe(gram_error(basis.members));
    middle.observe(middle_member_even_sample_max(basis.source));
  }
  return summarize({&gram, &middle}, "N=2..64");
}

Outcome tail_bound() {
  Gauge excess{"exact_minus_bound", 1e-10};
  Gauge oracle{"truncated_oracle_diff", 1e-9};
  int count = 0;
  for (int n : {2, 4, 6, 8, 12, 16}) {
    for (double w : {0.1, 0.2, 0.3, 0.4, 0.5}) {
      auto rng = rng_for("bound/" + label_nw(n, w));
      for (int c = 0; c < 20; ++c, ++count) {
        const Sequence r = random_unit_sequence(n, rng);
        const BoundReport report = theorem1_bound(r, w);
        excess.observe(*report.exact_value - report.bound_value);
        if (c == 0) {
          const TailWindow window{r.half_width(), r.half_width()};
          const TruncatedTail t = tail_energy_truncated(r, {w, 0.5}, window, 1e-10);
          oracle.observe(std::abs(t.value - *report.exact_value));
        }
      }
    }
  }
  return summarize({&excess, &oracle}, std::to_string(count) + " cases");
}

Outcome full_band_equality() {
  Gauge rel{"relative_error", 1e-8};
  int mismatches = 0;
  for (int n : {2, 4, 8, 16}) {
    auto rng = rng_for("equality/N=" + std::to_string(n));
    for (int c = 0; c < 100; ++c) {
      const BoundReport report = theorem1_equality(random_unit_sequence(n, rng));
      const double exact = *report.exact_value;
      if (std::abs(exact) >= 1e-6) {
        rel.observe(std::abs(report.bound_value - exact) / std::abs(exact));
      }
      if (!equality_within_tolerance(report.bound_value, exact)) {
        ++mismatches;
      }
    }
  }
  Outcome out = summarize({&rel}, "mismatches=" + std::to_string(mismatches) + " of 400");
  out.pass = out.pass && mismatches == 0;
  return out;
}

// The closed form as stated, compared with the direct energy ratio.
Outcome concentration_formula() {
  Gauge formula{"formula_vs_direct", 1e-8};
  Gauge coeff{"coefficient_sum_minus_quarter", 1e-9};
  Gauge corrected{"corrected_vs_direct", 1e-8};
  for (int n : {2, 4, 8, 16}) {
    const DpssSet set = compute_dpss({2 * n + 3, 0.25});
    auto rng = rng_for("concentration/N=" + std::to_string(n));
    for (int c = 0; c < 100; ++c) {
      const ConcentrationReport report = concentration(random_unit_sequence(n, rng), set);
      formula.observe(std::abs(report.formula_value - report.direct_value));
      coeff.observe(std::abs(report.coefficient_sum - 0.25));
      corrected.observe(std::abs(report.corrected_value - report.direct_value));
    }
  }
  // The corrected form is informational; it does not decide this criterion.
  Outcome out = summarize({&formula, &coeff});
  out.detail += ", info: " + corrected.str();
  return out;
}

Outcome optimality() {
  Gauge excess{"random_minus_optimum", 1e-9};
  Gauge increase{"ranked_increase", 0.0};
  for (int n : {2, 4, 8}) {
    const RankedBasis ranked = ranked_basis(n);
    for (std::size_t l = 1; l < ranked.concentrations.size(); ++l) {
      increase.observe(ranked.concentrations[l] - ranked.concentrations[l - 1]);
    }
    const OptimalSequence opt = optimal_sequence(n);
    auto rng = rng_for("optimality/N=" + std::to_string(n));
    for (int c = 0; c < 10000; ++c) {
      const ConcentrationReport report =
          concentration(random_unit_sequence(n, rng), ranked.basis.source);
      excess.observe(report.direct_value - opt.report.direct_value);
    }
  }
  return summarize({&excess, &increase}, "10000 samples per N");
}

Outcome upsampled_tail_relations() {
  Gauge slack{"lhs_minus_rhs", 1e-10};
  Gauge equal{"upsampled_equality_diff", 1e-9};
  for (int n : {2, 4, 8, 16}) {
    for (double w : {0.1, 0.2, 0.25, 0.3, 0.4, 0.5}) {
      auto rng = rng_for("upsampled/" + label_nw(n, w));
      for (int c = 0; c < 25; ++c) {
        const Sequence r = random_unit_sequence(n, rng);
        for (int l = n / 2; l <= n / 2 + 2; ++l) {
          for (int m = n / 2; m <= n / 2 + 2; ++m) {
            const Lemma2Result res = lemma2_bound(r, w, {l, m});
            slack.observe(res.lhs - res.rhs);
          }
        }
      }
    }
    auto rng = rng_for("upsampled/N=" + std::to_string(n));
    for (int c = 0; c < 25; ++c) {
      const Sequence r = random_unit_sequence(n, rng);
      const Sequence up = upsample2(r);
      for (int l = n / 2; l <= n / 2 + 3; ++l) {
        for (int m = n / 2 + 1; m <= n / 2 + 4; ++m) {
          const double lhs = tail_energy_exact(r, {0.5, 0.5}, {l, m}).value;
          const double rhs = tail_energy_exact(up, {0.25, 0.0}, {2 * l + 1, 2 * m - 1}).value;
          equal.observe(std::abs(lhs - rhs));
        }
      }
    }
  }
  return summarize({&slack, &equal});
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome determinism() {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("halfshift_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  std::string reports[2];
  int codes[2];
  for (int i = 0; i < 2; ++i) {
    const auto path = dir / ("verify_" + std::to_string(i) + ".json");
    std::ostringstream out;
    std::ostringstream err;
    codes[i] = cli::run({"halfshift", "verify", "--seed", "42", "--format", "json", "--out",
                         path.string()},
                        out, err);
    reports[i] = slurp(path);
  }
  std::filesystem::remove_all(dir);
  Outcome out;
  out.pass = codes[0] == 0 && codes[1] == 0 && !reports[0].empty() && reports[0] == reports[1];
  out.detail = "exit codes " + std::to_string(codes[0]) + "/" + std::to_string(codes[1]) + ", " +
               std::to_string(reports[0].size()) + " bytes, " +
               (reports[0] == reports[1] ? "identical" : "different");
  return out;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {1, "half-shift / upsampled identity", 10, half_shift_identity},
      {2, "dpss correctness", 5, dpss_correctness},
      {3, "even-subsample orthonormal basis", 20, even_subsample_basis_check},
      {4, "tail energy bound", 60, tail_bound},
      {5, "full-band tail equality", 30, full_band_equality},
      {6, "concentration closed form", 30, concentration_formula},
      {7, "optimal concentration", 60, optimality},
      {8, "upsampled tail bound and equality", 30, upsampled_tail_relations},
      {9, "verify determinism", 60, determinism},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    selected.push_back(std::atoi(argv[i]));
  }
  bool all_pass = true;
  for (const Criterion& c : criteria()) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) {
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = seconds < c.budget_seconds;
    const bool pass = outcome.pass && in_budget;
    all_pass = all_pass && pass;
    std::printf("criterion %d [%s]: %s  %s  (%.2fs, budget %.0fs%s)\n", c.id, c.name,
                pass ? "PASS" : "FAIL", outcome.detail.c_str(), seconds, c.budget_seconds,
                in_budget ? "" : ", over budget");
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
