#pragma once

#include <vector>

#include "halfshift/bounds.hpp"
#include "halfshift/dpss.hpp"
#include "halfshift/sequence.hpp"

namespace halfshift {

// Energy concentration of B_{1/2}^{1/2} r over [-N/2, N/2+1], evaluated
// directly and through the DPSS closed forms. Coefficients abar_l are the
// even-sample projections onto the (2N+3, 0.25) set.
//
// Two closed forms are reported. `formula_value` is
//   1 / (1 + S1 / (S2 - 1/8)),  S1 = sum_{l<=N} |abar_l|^2 lambda_l (1 - lambda_l),
//                               S2 = sum_{l<=N} lambda_l^2 |abar_l|^2,
// whose numerator treats lambda_{2N+2-l}^2 as lambda_l^2. The pairing
// lambda_{2N+2-l} = 1 - lambda_l gives the window energy
//   4 sum_{l<=N} (lambda_l^2 + (1 - lambda_l)^2) |abar_l|^2 - 1
// instead, and `corrected_value` is built from that. Only corrected_value
// agrees with the direct energy ratio in general.
struct ConcentrationReport {
  CoeffVector coeffs;
  double window_energy = 0.0;   // direct, over [-N/2, N/2+1]
  double tail_energy = 0.0;     // Gram identity
  double total_energy = 0.0;
  double concentration = 0.0;   // == direct_value
  double direct_value = 0.0;
  double formula_value = 0.0;
  double corrected_value = 0.0;
  double window_energy_formula = 0.0;    // 8 S2 - 1
  double window_energy_corrected = 0.0;
  double tail_energy_formula = 0.0;      // 8 S1
  double coefficient_sum = 0.0;          // sum_{l<=N} lambda_l |abar_l|^2
  // False when S2 - 1/8 <= 0 and formula_value is meaningless.
  bool formula_in_regime = true;
  // The input was rescaled to unit energy before evaluation.
  bool normalized = false;
  // Input energy was off from 1 by more than 10%.
  bool normalization_notice = false;
  double input_energy = 0.0;
};

// Throws ParameterError for a zero-energy input.
ConcentrationReport concentration(const Sequence& r, const DpssOptions& options = {});

// Same, against an already computed (2N+3, 0.25) set.
ConcentrationReport concentration(const Sequence& r, const DpssSet& pairing_set);

struct OptimalSequence {
  Sequence sequence;            // sqrt(2) s_0[2n; 2N+3, 0.25]
  ConcentrationReport report;
  // 1 / (1 + lambda_0 (1 - lambda_0) / (lambda_0^2 - 1/8)), as displayed for
  // the optimum.
  double displayed_optimum_value = 0.0;
};

OptimalSequence optimal_sequence(int order, const DpssOptions& options = {});

struct RankedBasis {
  OrthoBasis basis;
  std::vector<double> concentrations;  // direct values, nonincreasing in l
};

// Throws NumericalError if the concentrations increase by more than 1e-12.
RankedBasis ranked_basis(int order, const DpssOptions& options = {});

// Sequence of basis member l.
Sequence basis_member(const OrthoBasis& basis, int l);

// Matrix-form evaluation of the two quadratic forms in the concentration:
// q1 = ||(lambda J lambda)^{1/2} S^T r||^2 and q2 = ||(lambda lambda)^{1/2} S^T r||^2
// with S_{n,l} = s_l[2n; 2N+3, 0.25] (no sqrt 2), lambda = diag(lambda_0..lambda_N)
// and lambda J lambda the diagonal of lambda_l lambda_{2N+2-l}.
struct MatrixFormCheck {
  double numerator_quad = 0.0;    // q1
  double denominator_quad = 0.0;  // q2
  double scalar_numerator = 0.0;  // sum |abar_l|^2 lambda_l (1 - lambda_l)
  double scalar_denominator = 0.0;
  std::vector<double> numerator_terms;
  std::vector<double> denominator_terms;
};

// Throws std::logic_error if either quadratic form disagrees with its scalar
// sum by more than 1e-10.
MatrixFormCheck matrix_form_check(const Sequence& r, const DpssOptions& options = {});
MatrixFormCheck matrix_form_check(const Sequence& r, const DpssSet& pairing_set);

}  // namespace halfshift
