#include "halfshift/fracshift.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "halfshift/errors.hpp"
#include "halfshift/sinc.hpp"

namespace halfshift {

void ShiftSpec::validate() const {
  if (!(half_bandwidth > 0.0 && half_bandwidth <= 0.5)) {
    throw ParameterError("half-bandwidth W must lie in (0, 0.5], got " +
                         std::to_string(half_bandwidth));
  }
  if (!std::isfinite(shift)) {
    throw ParameterError("shift tau must be finite");
  }
}

void TailWindow::validate() const {
  if (left < 0 || right < 0) {
    throw ParameterError("tail window bounds must be nonnegative, got (" +
                         std::to_string(left) + ", " + std::to_string(right) + ")");
  }
}

Sequence upsample2(const Sequence& r) {
  const int order = 2 * r.order();
  std::vector<Complex> out(static_cast<std::size_t>(order) + 1);
  for (int n = r.first_index(); n <= r.last_index(); ++n) {
    out[static_cast<std::size_t>(2 * n + order / 2)] = r[n];
  }
  return Sequence(order, std::move(out));
}

Complex shifted_sample(const Sequence& r, const ShiftSpec& spec, std::int64_t n) {
  const double two_w = 2.0 * spec.half_bandwidth;
  Complex sum{};
  for (int q = r.first_index(); q <= r.last_index(); ++q) {
    const double offset = static_cast<double>(n - q) - spec.shift;
    sum += r[q] * sinc(two_w * offset);
  }
  return sum;
}

std::vector<Complex> apply_shift(const Sequence& r, const ShiftSpec& spec,
                                 std::int64_t first, std::int64_t last) {
  spec.validate();
  if (last < first) {
    throw ParameterError("shift window is empty");
  }
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(last - first + 1));
  for (std::int64_t n = first; n <= last; ++n) {
    out.push_back(shifted_sample(r, spec, n));
  }
  return out;
}

double total_energy(const Sequence& r, const ShiftSpec& spec) {
  spec.validate();
  const auto& v = r.values();
  const std::size_t len = v.size();
  const double two_w = 2.0 * spec.half_bandwidth;
  // Autocorrelation form: sum_d sinc(2W d) sum_q r[q] conj(r[q-d]).
  long double sum = 0.0L;
  for (std::size_t i = 0; i < len; ++i) {
    sum += std::norm(v[i]);
  }
  for (std::size_t d = 1; d < len; ++d) {
    long double lag = 0.0L;
    for (std::size_t i = d; i < len; ++i) {
      lag += (v[i] * std::conj(v[i - d])).real();
    }
    sum += 2.0L * lag * sinc(two_w * static_cast<double>(d));
  }
  return static_cast<double>(sum / two_w);
}

double window_energy(const Sequence& r, const ShiftSpec& spec,
                     const TailWindow& window) {
  spec.validate();
  window.validate();
  long double sum = 0.0L;
  for (std::int64_t n = -window.left; n <= window.right; ++n) {
    sum += std::norm(shifted_sample(r, spec, n));
  }
  return static_cast<double>(sum);
}

TailEnergy tail_energy_exact(const Sequence& r, const ShiftSpec& spec,
                             const TailWindow& window) {
  const double total = total_energy(r, spec);
  const double kept = window_energy(r, spec, window);
  const double tail = total - kept;
  if (tail >= 0.0) {
    return {tail, false};
  }
  if (tail >= -1e-12 * std::max(1.0, total)) {
    return {0.0, true};
  }
  throw NumericalError("negative tail energy " + std::to_string(tail) +
                       " exceeds rounding tolerance");
}

namespace {

// Evaluates |{B r}[n]|^2 far from the support, where the kernel argument never
// approaches zero. sin(pi (theta_n - beta_q)) is expanded by angle addition so
// each n costs one sine/cosine pair.
class FarFieldEvaluator {
 public:
  FarFieldEvaluator(const Sequence& r, const ShiftSpec& spec)
      : r_(r), spec_(spec), two_w_(2.0 * spec.half_bandwidth) {
    for (int q = r.first_index(); q <= r.last_index(); ++q) {
      sin_beta_.push_back(sin_pi(two_w_ * q));
      cos_beta_.push_back(cos_pi(two_w_ * q));
    }
  }

  double power(std::int64_t n) const {
    const double theta = two_w_ * (static_cast<double>(n) - spec_.shift);
    const double s = sin_pi(theta);
    const double c = cos_pi(theta);
    Complex sum{};
    std::size_t i = 0;
    for (int q = r_.first_index(); q <= r_.last_index(); ++q, ++i) {
      const double x = two_w_ * (static_cast<double>(n - q) - spec_.shift);
      const double numer = s * cos_beta_[i] - c * sin_beta_[i];
      sum += r_[q] * (numer / (std::numbers::pi * x));
    }
    return std::norm(sum);
  }

 private:
  const Sequence& r_;
  ShiftSpec spec_;
  double two_w_;
  std::vector<double> sin_beta_;
  std::vector<double> cos_beta_;
};

}  // namespace

TruncatedTail tail_energy_truncated(const Sequence& r, const ShiftSpec& spec,
                                    const TailWindow& window, double tol) {
  spec.validate();
  window.validate();
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw ParameterError("tolerance must be positive and finite");
  }
  if (r.energy() == 0.0) {
    return {0.0, kTruncationStartHorizon, 0.0};
  }

  const double abs_tau = std::abs(spec.shift);
  const std::int64_t near = r.half_width() + static_cast<std::int64_t>(std::ceil(abs_tau)) + 2;
  const std::int64_t reach = std::max<std::int64_t>(window.left, window.right) + near;
  std::int64_t horizon = kTruncationStartHorizon;
  while (horizon <= 2 * reach) {
    horizon *= 2;
  }

  const FarFieldEvaluator far(r, spec);
  auto power = [&](std::int64_t n) {
    if (n >= -near && n <= near) {
      return std::norm(shifted_sample(r, spec, n));
    }
    return far.power(n);
  };
  // Tail samples with lo <= |n| <= hi (both sides, outside the window).
  auto shell = [&](std::int64_t lo, std::int64_t hi) {
    long double sum = 0.0L;
    for (std::int64_t n = std::max<std::int64_t>(lo, window.right + 1); n <= hi; ++n) {
      sum += power(n);
    }
    for (std::int64_t n = std::max<std::int64_t>(lo, window.left + 1); n <= hi; ++n) {
      sum += power(-n);
    }
    return sum;
  };

  const double l1 = r.l1_norm();
  const double two_w = 2.0 * spec.half_bandwidth;
  auto remainder_bound = [&](std::int64_t h) {
    const double gap = static_cast<double>(h - window.right) - abs_tau - r.order();
    return l1 * l1 / (std::numbers::pi * std::numbers::pi * two_w * two_w) * (2.0 / gap);
  };

  // The second-order remainder oscillates with the band edge, so neighbouring
  // extrapolations can agree by accident; require two agreements in a row.
  long double truncated = shell(0, horizon);
  std::vector<long double> extrapolated;
  while (true) {
    const std::int64_t next = 2 * horizon;
    if (next > kTruncationMaxHorizon) {
      throw HorizonExceededError("truncated tail did not converge to tol " +
                                 std::to_string(tol) + " within horizon 2^26");
    }
    const long double extended = truncated + shell(horizon + 1, next);
    extrapolated.push_back(2.0L * extended - truncated);
    truncated = extended;
    horizon = next;
    const std::size_t k = extrapolated.size();
    if (k >= 3 &&
        std::abs(static_cast<double>(extrapolated[k - 1] - extrapolated[k - 2])) < tol &&
        std::abs(static_cast<double>(extrapolated[k - 2] - extrapolated[k - 3])) < tol) {
      return {static_cast<double>(extrapolated.back()), horizon, remainder_bound(horizon)};
    }
  }
}

}  // namespace halfshift
