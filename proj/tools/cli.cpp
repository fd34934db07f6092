#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "halfshift/bounds.hpp"
#include "halfshift/concentration.hpp"
#include "halfshift/dpss.hpp"
#include "halfshift/errors.hpp"
#include "halfshift/fracshift.hpp"
#include "halfshift/io.hpp"
#include "halfshift/verify.hpp"

namespace halfshift::cli {

namespace {

struct OutputOptions {
  std::string format = "csv";
  std::string out;
};

void add_output_options(CLI::App& cmd, OutputOptions& opts) {
  cmd.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd.add_option("--out", opts.out, "Output path (default: stdout or $HALFSHIFT_OUTPUT_DIR)");
}

void emit(const Table& table, const OutputOptions& opts, std::ostream& out) {
  const OutputFormat format = parse_output_format(opts.format);
  std::filesystem::path path = opts.out;
  if (path.empty()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
      path = std::filesystem::path(dir) / (table.command + "." + opts.format);
    }
  }
  if (path.empty()) {
    write_table(table, format, out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw IoError("cannot write " + path.string());
  }
  write_table(table, format, file);
  if (!file) {
    throw IoError("write failed for " + path.string());
  }
}

Table dpss_table(const DpssSet& set, const std::string& command) {
  Table table{command, {"l", "lambda", "n", "value"}, {}, {}};
  table.summary = {{"length", std::int64_t{set.length()}},
                   {"half_bandwidth", set.params().half_bandwidth}};
  const int half = set.half_length();
  for (int l = 0; l < set.length(); ++l) {
    for (int n = -half; n <= half; ++n) {
      table.add_row({std::int64_t{l}, set.eigenvalue(l), std::int64_t{n}, set.value(l, n)});
    }
  }
  return table;
}

Table basis_table(const OrthoBasis& basis) {
  Table table{"basis", {"l", "lambda", "n", "value"}, {}, {}};
  table.summary = {{"N", std::int64_t{basis.order}}};
  const int half = basis.order / 2;
  for (int l = 0; l < basis.size(); ++l) {
    for (int n = -half; n <= half; ++n) {
      table.add_row({std::int64_t{l}, basis.source_eigenvalue(l), std::int64_t{n},
                     basis.value(l, n)});
    }
  }
  return table;
}

Table shift_table(const Sequence& r, double w, double tau, std::int64_t first, std::int64_t last) {
  const ShiftSpec spec{w, tau};
  spec.validate();
  if (first > last) {
    throw ParameterError("shift window must satisfy first <= last");
  }
  const auto samples = apply_shift(r, spec, first, last);
  Table table{"shift", {"n", "re", "im"}, {}, {}};
  const double total = total_energy(r, spec);
  double kept = 0.0;
  for (const Complex& v : samples) {
    kept += std::norm(v);
  }
  table.summary = {{"half_bandwidth", w},
                   {"tau", tau},
                   {"first", first},
                   {"last", last},
                   {"total_energy", total},
                   {"window_energy", kept},
                   {"tail_energy", std::max(0.0, total - kept)}};
  for (std::size_t i = 0; i < samples.size(); ++i) {
    table.add_row({first + static_cast<std::int64_t>(i), samples[i].real(), samples[i].imag()});
  }
  return table;
}

Table tail_table(const Sequence& r, double w, double tau, const TailWindow& window, double tol) {
  const ShiftSpec spec{w, tau};
  const TailEnergy exact = tail_energy_exact(r, spec, window);
  const TruncatedTail truncated = tail_energy_truncated(r, spec, window, tol);
  Table table{"tail",
              {"exact", "truncated", "horizon", "raw_remainder_bound", "total_energy",
               "window_energy", "clamped"},
              {},
              {}};
  table.summary = {{"half_bandwidth", w},
                   {"tau", tau},
                   {"window_left", std::int64_t{window.left}},
                   {"window_right", std::int64_t{window.right}},
                   {"tol", tol}};
  table.add_row({exact.value, truncated.value, truncated.horizon, truncated.raw_remainder_bound,
                 total_energy(r, spec), window_energy(r, spec, window), exact.clamped});
  return table;
}

Table bound_table(const Sequence& r, double w, const TailWindow& window) {
  const BoundReport report = theorem1_bound(r, w);
  const Lemma2Result lemma2 = lemma2_bound(r, w, window);
  const DpssSet set = compute_dpss({2 * r.order() + 1, 0.5 * w});
  Table table{"bound", {"l", "a_re", "a_im", "lambda", "component"}, {}, {}};
  table.summary = {{"N", std::int64_t{r.order()}},
                   {"half_bandwidth", w},
                   {"bound", report.bound_value},
                   {"exact", *report.exact_value},
                   {"slack", *report.slack},
                   {"lemma2_window_left", std::int64_t{window.left}},
                   {"lemma2_window_right", std::int64_t{window.right}},
                   {"lemma2_lhs", lemma2.lhs},
                   {"lemma2_rhs", lemma2.rhs},
                   {"lemma2_a_term", lemma2.a_term}};
  for (std::size_t l = 0; l < report.components.size(); ++l) {
    const Complex a = report.coeffs.values[l];
    table.add_row({static_cast<std::int64_t>(l), a.real(), a.imag(),
                   set.eigenvalue(static_cast<int>(l)), report.components[l]});
  }
  return table;
}

Table equality_table(const Sequence& r) {
  const BoundReport report = theorem1_equality(r);
  const DpssSet set = compute_dpss({2 * r.order() + 3, 0.25});
  const int mirror = 2 * r.order() + 2;
  Table table{"equality", {"l", "abar_re", "abar_im", "lambda", "paired_lambda", "component"}, {}, {}};
  table.summary = {{"N", std::int64_t{r.order()}},
                   {"equality_value", report.bound_value},
                   {"exact", *report.exact_value},
                   {"difference", *report.slack},
                   {"matches", *report.matches}};
  for (std::size_t l = 0; l < report.components.size(); ++l) {
    const Complex a = report.coeffs.values[l];
    const int li = static_cast<int>(l);
    table.add_row({static_cast<std::int64_t>(l), a.real(), a.imag(), set.eigenvalue(li),
                   set.eigenvalue(mirror - li), report.components[l]});
  }
  return table;
}

Table ranked_table(int order) {
  const RankedBasis ranked = ranked_basis(order);
  Table table{"concentration",
              {"l", "lambda", "concentration", "formula_value", "corrected_value"},
              {},
              {}};
  table.summary = {{"N", std::int64_t{order}}};
  for (int l = 0; l < ranked.basis.size(); ++l) {
    const ConcentrationReport report =
        concentration(basis_member(ranked.basis, l), ranked.basis.source);
    table.add_row({std::int64_t{l}, ranked.basis.source_eigenvalue(l),
                   ranked.concentrations[static_cast<std::size_t>(l)], report.formula_value,
                   report.corrected_value});
  }
  return table;
}

Table single_concentration_table(const Sequence& r, std::ostream& err) {
  const ConcentrationReport report = concentration(r);
  if (report.normalization_notice) {
    err << "notice: input energy " << report.input_energy
        << " is more than 10% away from 1; the sequence was normalized\n";
  }
  Table table{"concentration",
              {"concentration", "direct_value", "formula_value", "corrected_value",
               "window_energy", "tail_energy", "total_energy", "coefficient_sum",
               "formula_in_regime", "normalized"},
              {},
              {}};
  table.summary = {{"N", std::int64_t{r.order()}}, {"input_energy", report.input_energy}};
  table.add_row({report.concentration, report.direct_value, report.formula_value,
                 report.corrected_value, report.window_energy, report.tail_energy,
                 report.total_energy, report.coefficient_sum, report.formula_in_regime,
                 report.normalized});
  return table;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Half-sample fractional shifts, DPSS tail-energy bounds and concentration"};
  app.require_subcommand(1);

  OutputOptions output;
  int length = 0;
  double half_bandwidth = 0.0;
  int order = 0;
  std::string input;
  double tau = 0.5;
  std::vector<int> window_args;
  double tol = 1e-10;

  auto* dpss = app.add_subcommand("dpss", "Compute a DPSS family (vectors and eigenvalues)");
  dpss->add_option("--length", length, "Odd sequence length M")->required();
  dpss->add_option("--half-bandwidth,-w", half_bandwidth, "Half-bandwidth W' in (0, 0.5)")->required();
  add_output_options(*dpss, output);

  auto* shift = app.add_subcommand("shift", "Apply the fractional shift B_W^tau to a sequence");
  shift->add_option("--input", input, "Sequence file (CSV n,re,im or JSON)")->required();
  shift->add_option("--half-bandwidth,-w", half_bandwidth, "Half-bandwidth W in (0, 0.5]")->required();
  shift->add_option("--tau", tau, "Shift in samples")->capture_default_str();
  shift->add_option("--window", window_args, "Output samples n = FIRST..LAST")->expected(2)->required();
  add_output_options(*shift, output);

  auto* tail = app.add_subcommand("tail", "Exact and truncated tail energy outside [-L, M]");
  tail->add_option("--input", input, "Sequence file")->required();
  tail->add_option("--half-bandwidth,-w", half_bandwidth, "Half-bandwidth W in (0, 0.5]")->required();
  tail->add_option("--tau", tau, "Shift in samples")->capture_default_str();
  tail->add_option("--window", window_args, "Kept window L M")->expected(2)->required();
  tail->add_option("--tol", tol, "Truncated oracle tolerance")->capture_default_str();
  add_output_options(*tail, output);

  auto* bound = app.add_subcommand("bound", "Tail-energy upper bound after a half-sample shift");
  bound->add_option("--input", input, "Sequence file")->required();
  bound->add_option("--half-bandwidth,-w", half_bandwidth, "Half-bandwidth W in (0, 0.5]")->required();
  bound->add_option("--window", window_args, "Window L M for the tightened bound (default N/2 N/2)")
      ->expected(2);
  add_output_options(*bound, output);

  auto* equality = app.add_subcommand("equality", "Exact tail energy at W = 1/2 via DPSS");
  equality->add_option("--input", input, "Sequence file")->required();
  add_output_options(*equality, output);

  auto* conc = app.add_subcommand("concentration",
                                  "Concentration of the ranked basis (--n) or of one sequence (--input)");
  auto* conc_n = conc->add_option("--n", order, "Even support width N");
  auto* conc_in = conc->add_option("--input", input, "Sequence file");
  conc_n->excludes(conc_in);
  add_output_options(*conc, output);

  auto* basis = app.add_subcommand("basis", "Orthonormal even-subsampled DPSS basis");
  basis->add_option("--n", order, "Even support width N")->required();
  add_output_options(*basis, output);

  RunConfig config;
  std::string config_path;
  std::uint64_t seed = 0;
  std::vector<int> n_list;
  std::vector<double> w_list;
  double verify_tol = 0.0;
  std::string only;
  int cases = 0;
  int search_samples = 0;
  OutputOptions verify_output{"json", ""};
  auto* verify = app.add_subcommand("verify", "Run the property verification suite");
  verify->add_option("--config", config_path, "JSON config file");
  auto* seed_opt = verify->add_option("--seed", seed, "Master random seed");
  auto* n_opt = verify->add_option("--n", n_list, "Even support widths N");
  auto* w_opt = verify->add_option("--half-bandwidth,-w", w_list, "Half-bandwidths W");
  auto* tol_opt = verify->add_option("--tol", verify_tol, "Override every check tolerance");
  auto* only_opt = verify->add_option("--only", only, "Run a single check")
                       ->check(CLI::IsMember(verification_checks()));
  auto* cases_opt = verify->add_option("--cases", cases, "Random sequences per case");
  auto* search_opt = verify->add_option("--search-samples", search_samples,
                                        "Random sequences per N in the optimality search");
  auto* vformat_opt = verify->add_option("--format", verify_output.format, "Output format")
                          ->check(CLI::IsMember({"csv", "json"}));
  auto* vout_opt = verify->add_option("--out", verify_output.out, "Output path");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  }

  auto window_or = [&](int left, int right) {
    if (window_args.size() == 2) {
      return TailWindow{window_args[0], window_args[1]};
    }
    return TailWindow{left, right};
  };

  try {
    if (*dpss) {
      emit(dpss_table(compute_dpss({length, half_bandwidth}), "dpss"), output, out);
    } else if (*shift) {
      emit(shift_table(read_sequence(input), half_bandwidth, tau, window_args[0], window_args[1]),
           output, out);
    } else if (*tail) {
      emit(tail_table(read_sequence(input), half_bandwidth, tau, window_or(0, 0), tol), output, out);
    } else if (*bound) {
      const Sequence r = read_sequence(input);
      emit(bound_table(r, half_bandwidth, window_or(r.half_width(), r.half_width())), output, out);
    } else if (*equality) {
      emit(equality_table(read_sequence(input)), output, out);
    } else if (*conc) {
      if (conc_n->count() > 0) {
        emit(ranked_table(order), output, out);
      } else if (conc_in->count() > 0) {
        emit(single_concentration_table(read_sequence(input), err), output, out);
      } else {
        err << "concentration: one of --n or --input is required\n";
        return kUsageError;
      }
    } else if (*basis) {
      emit(basis_table(even_subsample_basis(order)), output, out);
    } else if (*verify) {
      if (!config_path.empty()) {
        config = load_run_config(config_path);
        if (config.output_path) {
          verify_output.out = config.output_path->string();
        }
        verify_output.format = config.output_format == OutputFormat::csv ? "csv" : "json";
      }
      if (seed_opt->count()) config.seed = seed;
      if (n_opt->count()) config.n_list = n_list;
      if (w_opt->count()) config.w_list = w_list;
      if (tol_opt->count()) config.tol = verify_tol;
      if (only_opt->count()) config.only = only;
      if (cases_opt->count()) config.cases = cases;
      if (search_opt->count()) config.search_samples = search_samples;
      if (vformat_opt->count()) verify_output.format = vformat_opt->as<std::string>();
      if (vout_opt->count()) verify_output.out = vout_opt->as<std::string>();
      const VerificationReport report = run_verification(config);
      emit(report.to_table(), verify_output, out);
      if (!report.ok()) {
        for (const ReportRow& row : report.rows) {
          if (row.status == "fail") {
            err << "FAIL " << row.check << " [" << row.case_label << "] " << row.metric << " = "
                << format_double(row.value) << " > " << format_double(row.tolerance) << '\n';
          }
        }
        return kVerificationFailed;
      }
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kOk;
}

}  // namespace halfshift::cli
