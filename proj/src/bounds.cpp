#include "halfshift/bounds.hpp"

#include <cmath>
#include <string>

#include "halfshift/errors.hpp"
#include "halfshift/sinc.hpp"

namespace halfshift {

CoeffVector dpss_coeffs(const Sequence& r, const DpssSet& set) {
  const int n = r.order();
  if (set.length() != 2 * n + 1 && set.length() != 2 * n + 3) {
    throw ParameterError("DPSS length " + std::to_string(set.length()) +
                         " does not match a sequence of order " + std::to_string(n) +
                         " (expected " + std::to_string(2 * n + 1) + " or " +
                         std::to_string(2 * n + 3) + ")");
  }
  CoeffVector out{std::vector<Complex>(static_cast<std::size_t>(set.length())),
                  set.params()};
  for (int l = 0; l < set.length(); ++l) {
    Complex sum{};
    for (int k = r.first_index(); k <= r.last_index(); ++k) {
      sum += r[k] * set.value(l, 2 * k);
    }
    out.values[static_cast<std::size_t>(l)] = sum;
  }
  return out;
}

BoundReport theorem1_bound(const Sequence& r, double half_bandwidth,
                           const DpssOptions& options) {
  const ShiftSpec spec{half_bandwidth, 0.5};
  spec.validate();
  const int n = r.order();
  const DpssSet set = compute_dpss({2 * n + 1, 0.5 * half_bandwidth}, options);

  BoundReport report;
  report.coeffs = dpss_coeffs(r, set);
  report.components.reserve(static_cast<std::size_t>(set.length()));
  const double w2 = half_bandwidth * half_bandwidth;
  for (int l = 0; l < set.length(); ++l) {
    const double a2 = std::norm(report.coeffs.values[static_cast<std::size_t>(l)]);
    const double term = a2 / w2 * set.eigenvalue(l) * set.complement(l);
    report.components.push_back(term);
    report.bound_value += term;
  }
  const double exact =
      tail_energy_exact(r, spec, {r.half_width(), r.half_width()}).value;
  report.exact_value = exact;
  report.slack = report.bound_value - exact;
  return report;
}

bool equality_within_tolerance(double value, double exact) {
  const double diff = std::abs(value - exact);
  if (std::abs(exact) >= 1e-6) {
    return diff <= 1e-8 * std::abs(exact);
  }
  return diff <= 1e-12;
}

BoundReport theorem1_equality(const Sequence& r, const DpssOptions& options) {
  const int n = r.order();
  const DpssSet set = compute_dpss({2 * n + 3, 0.25}, options);
  const int mirror = 2 * n + 2;

  BoundReport report;
  report.coeffs = dpss_coeffs(r, set);
  for (int l = 0; l <= n; ++l) {
    const double a2 = std::norm(report.coeffs.values[static_cast<std::size_t>(l)]);
    // 1 - lambda_l taken as lambda_{2N+2-l}.
    const double term = 8.0 * a2 * set.eigenvalue(l) * set.eigenvalue(mirror - l);
    report.components.push_back(term);
    report.bound_value += term;
  }
  const double exact =
      tail_energy_exact(r, {0.5, 0.5}, {r.half_width(), r.half_width() + 1}).value;
  report.exact_value = exact;
  report.slack = report.bound_value - exact;
  report.matches = equality_within_tolerance(report.bound_value, exact);
  return report;
}

Lemma2Result lemma2_bound(const Sequence& r, double half_bandwidth,
                          const TailWindow& window, const Lemma2Options& options) {
  const ShiftSpec shifted{half_bandwidth, 0.5};
  shifted.validate();
  window.validate();
  const ShiftSpec upsampled_spec{0.5 * half_bandwidth, 0.0};
  const Sequence up = upsample2(r);

  double a_term = 0.0;
  if (options.literal_a_term) {
    const double two_w = 2.0 * half_bandwidth;
    for (int i = 1; i <= 2; ++i) {
      for (int q = r.first_index(); q <= r.last_index(); ++q) {
        const double s = sinc(two_w * (-window.left - 0.5 * i - q));
        a_term += std::norm(r[q]) * s * s;
      }
    }
  } else {
    for (int i = 1; i <= 2; ++i) {
      a_term += std::norm(shifted_sample(up, upsampled_spec, -2 * window.left - i));
    }
  }

  Lemma2Result out;
  out.a_term = a_term;
  out.rhs = tail_energy_exact(up, upsampled_spec, {2 * window.left, 2 * window.right}).value -
            a_term;
  out.lhs = tail_energy_exact(r, shifted, window).value;
  return out;
}

}  // namespace halfshift
