#include "halfshift/concentration.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "halfshift/errors.hpp"
#include "halfshift/fracshift.hpp"

namespace halfshift {

namespace {

void require_pairing_set(const Sequence& r, const DpssSet& set) {
  if (set.length() != 2 * r.order() + 3 || set.params().half_bandwidth != 0.25) {
    throw ParameterError("expected the (2N+3, 0.25) DPSS set for N = " +
                         std::to_string(r.order()));
  }
}

}  // namespace

ConcentrationReport concentration(const Sequence& r, const DpssOptions& options) {
  const DpssSet set = compute_dpss({2 * r.order() + 3, 0.25}, options);
  return concentration(r, set);
}

ConcentrationReport concentration(const Sequence& input, const DpssSet& set) {
  require_pairing_set(input, set);
  ConcentrationReport out;
  out.input_energy = input.energy();
  if (out.input_energy == 0.0) {
    throw ParameterError("zero-energy input");
  }
  Sequence r = input;
  if (std::abs(out.input_energy - 1.0) > 1e-10) {
    r = input.scaled(1.0 / std::sqrt(out.input_energy));
    out.normalized = true;
    out.normalization_notice = std::abs(out.input_energy - 1.0) > 0.1;
  }

  const int n = r.order();
  const int mirror = 2 * n + 2;
  const ShiftSpec half_shift{0.5, 0.5};
  const TailWindow window{r.half_width(), r.half_width() + 1};

  out.total_energy = total_energy(r, half_shift);
  out.window_energy = window_energy(r, half_shift, window);
  out.tail_energy = tail_energy_exact(r, half_shift, window).value;
  out.direct_value = out.window_energy / out.total_energy;
  out.concentration = out.direct_value;

  out.coeffs = dpss_coeffs(r, set);
  double s1 = 0.0;
  double s2 = 0.0;
  double paired_squares = 0.0;
  for (int l = 0; l <= n; ++l) {
    const double a2 = std::norm(out.coeffs.values[static_cast<std::size_t>(l)]);
    const double lam = set.eigenvalue(l);
    const double paired = set.eigenvalue(mirror - l);
    s1 += a2 * lam * paired;
    s2 += lam * lam * a2;
    paired_squares += paired * paired * a2;
    out.coefficient_sum += lam * a2;
  }
  out.tail_energy_formula = 8.0 * s1;
  out.window_energy_formula = 8.0 * s2 - 1.0;
  out.window_energy_corrected = 4.0 * (s2 + paired_squares) - 1.0;

  const double denom = s2 - 0.125;
  out.formula_in_regime = denom > 0.0;
  out.formula_value = out.formula_in_regime ? 1.0 / (1.0 + s1 / denom)
                                            : std::numeric_limits<double>::quiet_NaN();
  out.corrected_value = out.window_energy_corrected /
                        (out.window_energy_corrected + out.tail_energy_formula);
  return out;
}

Sequence basis_member(const OrthoBasis& basis, int l) {
  std::vector<Complex> values(static_cast<std::size_t>(basis.size()));
  for (int i = 0; i < basis.size(); ++i) {
    values[static_cast<std::size_t>(i)] = basis.members(i, l);
  }
  return Sequence(basis.order, std::move(values));
}

OptimalSequence optimal_sequence(int order, const DpssOptions& options) {
  OrthoBasis basis = even_subsample_basis(order, options);
  Sequence best = basis_member(basis, 0);
  ConcentrationReport report = concentration(best, basis.source);
  const double lam = basis.source.eigenvalue(0);
  const double paired = basis.source.eigenvalue(2 * order + 2);
  const double displayed = 1.0 / (1.0 + lam * paired / (lam * lam - 0.125));
  return OptimalSequence{std::move(best), std::move(report), displayed};
}

RankedBasis ranked_basis(int order, const DpssOptions& options) {
  RankedBasis out{even_subsample_basis(order, options), {}};
  for (int l = 0; l < out.basis.size(); ++l) {
    const Sequence member = basis_member(out.basis, l);
    out.concentrations.push_back(concentration(member, out.basis.source).direct_value);
  }
  for (std::size_t l = 1; l < out.concentrations.size(); ++l) {
    if (out.concentrations[l] > out.concentrations[l - 1] + 1e-12) {
      throw NumericalError("basis concentrations increase at member " +
                           std::to_string(l));
    }
  }
  return out;
}

MatrixFormCheck matrix_form_check(const Sequence& r, const DpssOptions& options) {
  const DpssSet set = compute_dpss({2 * r.order() + 3, 0.25}, options);
  return matrix_form_check(r, set);
}

MatrixFormCheck matrix_form_check(const Sequence& r, const DpssSet& set) {
  require_pairing_set(r, set);
  const int n = r.order();
  const int size = n + 1;
  const int half = r.half_width();
  const int mirror = 2 * n + 2;

  Eigen::MatrixXd s(size, size);
  Eigen::VectorXcd x(size);
  Eigen::VectorXd lambda(size);
  Eigen::VectorXd lambda_j_lambda(size);
  for (int row = 0; row < size; ++row) {
    x(row) = r[row - half];
  }
  for (int l = 0; l < size; ++l) {
    lambda(l) = set.eigenvalue(l);
    lambda_j_lambda(l) = set.eigenvalue(l) * set.eigenvalue(mirror - l);
    for (int row = 0; row < size; ++row) {
      s(row, l) = set.value(l, 2 * (row - half));
    }
  }
  const Eigen::VectorXcd projected = s.transpose() * x;
  const Eigen::VectorXcd numer = lambda_j_lambda.cwiseSqrt().asDiagonal() * projected;
  const Eigen::VectorXcd denom = lambda.asDiagonal() * projected;

  MatrixFormCheck out;
  out.numerator_quad = numer.squaredNorm();
  out.denominator_quad = denom.squaredNorm();

  // Scalar route: coefficients by direct inner products, 1 - lambda from the
  // set's complements rather than the pairing.
  const CoeffVector coeffs = dpss_coeffs(r, set);
  for (int l = 0; l < size; ++l) {
    const double a2 = std::norm(coeffs.values[static_cast<std::size_t>(l)]);
    const double lam = set.eigenvalue(l);
    out.numerator_terms.push_back(a2 * lam * set.complement(l));
    out.denominator_terms.push_back(lam * lam * a2);
    out.scalar_numerator += out.numerator_terms.back();
    out.scalar_denominator += out.denominator_terms.back();
  }
  if (std::abs(out.numerator_quad - out.scalar_numerator) > 1e-10 ||
      std::abs(out.denominator_quad - out.scalar_denominator) > 1e-10) {
    throw std::logic_error("matrix form and scalar sums disagree");
  }
  return out;
}

}  // namespace halfshift
