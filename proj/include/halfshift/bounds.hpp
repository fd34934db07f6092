#pragma once

#include <optional>
#include <vector>

#include "halfshift/dpss.hpp"
#include "halfshift/fracshift.hpp"
#include "halfshift/sequence.hpp"

namespace halfshift {

// Even-sample DPSS projections a_l = sum_n r[n] s_l[2n], one per member of the
// generating set.
struct CoeffVector {
  std::vector<Complex> values;
  DpssParams source;
};

// Throws ParameterError unless the set has length 2N+1 or 2N+3 for the
// sequence's order N.
CoeffVector dpss_coeffs(const Sequence& r, const DpssSet& set);

struct BoundReport {
  double bound_value = 0.0;
  std::optional<double> exact_value;
  std::optional<double> slack;        // bound - exact
  std::vector<double> components;     // per-l terms, summing to bound_value
  CoeffVector coeffs;
  // Equality checks only: whether |bound - exact| meets the tolerance rule.
  std::optional<bool> matches;
};

// Tail energy outside [-N/2, N/2] after a half-sample shift at half-bandwidth
// W is at most sum_{l=0}^{2N} |a_l / W|^2 lambda_l (1 - lambda_l), using the
// (2N+1, W/2) DPSS set. The report also carries the exact tail and the slack.
BoundReport theorem1_bound(const Sequence& r, double half_bandwidth,
                           const DpssOptions& options = {});

// At W = 1/2 the tail outside [-N/2, N/2+1] equals
// 8 sum_{l=0}^{N} |abar_l|^2 lambda_l lambda_{2N+2-l} with the (2N+3, 0.25)
// set. `matches` follows the equality tolerance: relative 1e-8 when the exact
// tail is >= 1e-6, absolute 1e-12 otherwise.
BoundReport theorem1_equality(const Sequence& r, const DpssOptions& options = {});

// True when |value - exact| meets the equality tolerance rule above.
bool equality_within_tolerance(double value, double exact);

struct Lemma2Options {
  // Use the displayed finite-sum expression sum_i sum_q |r[q]|^2 sinc^2(...)
  // for A instead of the squared interpolated samples. Debug comparison only.
  bool literal_a_term = false;
};

struct Lemma2Result {
  double rhs = 0.0;     // tail(r up2, (W/2, 0), (2l, 2m)) - A
  double a_term = 0.0;  // the A actually subtracted
  double lhs = 0.0;     // tail(r, (W, 1/2), (l, m))
};

Lemma2Result lemma2_bound(const Sequence& r, double half_bandwidth,
                          const TailWindow& window, const Lemma2Options& options = {});

}  // namespace halfshift
