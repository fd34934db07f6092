#pragma once

#include <cstdint>
#include <vector>

#include "halfshift/sequence.hpp"

namespace halfshift {

// Band-limit to half-bandwidth W (cycles/sample) and shift by tau samples:
//   {B_W^tau r}[n] = sum_q r[q] sinc(2W (n - tau - q)).
// No 1/W gain is applied.
struct ShiftSpec {
  double half_bandwidth = 0.5;
  double shift = 0.0;

  // Throws ParameterError unless 0 < W <= 0.5 and tau is finite.
  void validate() const;
};

// Kept region [-left, right], inclusive. Everything outside is tail.
struct TailWindow {
  int left = 0;
  int right = 0;

  void validate() const;
};

// Two-fold zero insertion: out[2n] = r[n], odd samples zero. The result has
// support [-N, N].
Sequence upsample2(const Sequence& r);

Complex shifted_sample(const Sequence& r, const ShiftSpec& spec, std::int64_t n);

// {B_W^tau r}[n] for n = first..last.
std::vector<Complex> apply_shift(const Sequence& r, const ShiftSpec& spec,
                                 std::int64_t first, std::int64_t last);

// Energy of B_W^tau r over all n, from the Gram identity
//   (1 / 2W) sum_{q,q'} r[q] conj(r[q']) sinc(2W (q - q')),
// which does not depend on tau.
double total_energy(const Sequence& r, const ShiftSpec& spec);

// Energy of B_W^tau r over the kept window [-left, right].
double window_energy(const Sequence& r, const ShiftSpec& spec,
                     const TailWindow& window);

struct TailEnergy {
  double value = 0.0;
  // Set when a slightly negative difference (rounding) was clamped to zero.
  bool clamped = false;
};

// total_energy - window_energy. Differences below -1e-12 * max(1, total) throw
// NumericalError; smaller negative values are clamped to zero and flagged.
TailEnergy tail_energy_exact(const Sequence& r, const ShiftSpec& spec,
                             const TailWindow& window);

struct TruncatedTail {
  double value = 0.0;
  std::int64_t horizon = 0;
  // ||r||_1^2 / (pi^2 (2W)^2) * 2 / (H - m - |tau| - N): bound on what the
  // raw truncated sum at the final horizon leaves out.
  double raw_remainder_bound = 0.0;
};

inline constexpr std::int64_t kTruncationStartHorizon = 1024;
inline constexpr std::int64_t kTruncationMaxHorizon = std::int64_t{1} << 26;

// Brute-force tail energy: sums |{B r}[n]|^2 outside the window for
// |n| <= H, doubling H from 1024. The leading 1/H truncation error is removed
// by Richardson extrapolation between consecutive horizons, and the loop stops
// once three successive extrapolated values agree to within tol. Throws
// HorizonExceededError past 2^26, ParameterError for tol <= 0.
TruncatedTail tail_energy_truncated(const Sequence& r, const ShiftSpec& spec,
                                    const TailWindow& window, double tol);

}  // namespace halfshift
