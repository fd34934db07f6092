#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "halfshift/dpss.hpp"
#include "halfshift/errors.hpp"
#include "halfshift/fracshift.hpp"
#include "oracles.hpp"

using namespace halfshift;

namespace {

std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace

TEST(Upsample, InsertsZeros) {
  const Sequence r(2, {1.0, 2.0, 3.0});
  const Sequence up = upsample2(r);
  ASSERT_EQ(up.order(), 4);
  const std::vector<Complex> expected{1.0, 0.0, 2.0, 0.0, 3.0};
  for (int n = -2; n <= 2; ++n) {
    EXPECT_EQ(up[n], expected[static_cast<std::size_t>(n + 2)]);
  }
  const Sequence delta(2, {0.0, 1.0, 0.0});
  EXPECT_EQ(upsample2(delta)[0], Complex(1.0));
  EXPECT_DOUBLE_EQ(upsample2(delta).energy(), 1.0);
}

TEST(Upsample, PreservesEnergy) {
  auto rng = make_rng(1);
  const Sequence r = oracle::random_sequence(10, rng, false);
  EXPECT_NEAR(upsample2(r).energy(), r.energy(), 1e-13);
}

TEST(ShiftSpec, Validation) {
  EXPECT_THROW((ShiftSpec{0.0, 0.0}.validate()), ParameterError);
  EXPECT_THROW((ShiftSpec{0.6, 0.0}.validate()), ParameterError);
  EXPECT_THROW((ShiftSpec{0.25, INFINITY}.validate()), ParameterError);
  EXPECT_NO_THROW((ShiftSpec{0.5, -3.2}.validate()));
  EXPECT_THROW((TailWindow{-1, 0}.validate()), ParameterError);
}

TEST(ApplyShift, FullBandZeroShiftIsIdentity) {
  auto rng = make_rng(2);
  const Sequence r = oracle::random_sequence(8, rng);
  const auto out = apply_shift(r, {0.5, 0.0}, -10, 10);
  for (int n = -10; n <= 10; ++n) {
    EXPECT_EQ(out[static_cast<std::size_t>(n + 10)], r[n]) << n;
  }
}

TEST(ApplyShift, HalfShiftedImpulse) {
  const Sequence r = oracle::impulse(2);
  const auto out = apply_shift(r, {0.5, 0.5}, 0, 1);
  EXPECT_NEAR(out[0].real(), 2.0 / std::numbers::pi, 1e-15);
  EXPECT_NEAR(out[1].real(), 2.0 / std::numbers::pi, 1e-15);
}

TEST(ApplyShift, MatchesNaiveSum) {
  auto rng = make_rng(3);
  for (double w : {0.1, 0.25, 0.37, 0.5}) {
    for (double tau : {0.0, 0.5, 1.7, -2.3}) {
      const Sequence r = oracle::random_sequence(12, rng);
      const auto out = apply_shift(r, {w, tau}, -40, 40);
      for (int n = -40; n <= 40; ++n) {
        EXPECT_NEAR(std::abs(out[static_cast<std::size_t>(n + 40)] -
                             oracle::naive_shift(r, w, tau, n)),
                    0.0, 1e-14);
      }
    }
  }
}

TEST(ApplyShift, HalfShiftEqualsUpsampledIntegerShift) {
  auto rng = make_rng(4);
  for (int order : {2, 8, 32}) {
    for (double w : {0.1, 0.25, 0.4, 0.5}) {
      const Sequence r = oracle::random_sequence(order, rng);
      const Sequence up = upsample2(r);
      for (int n = -2 * order; n <= 2 * order; ++n) {
        const Complex lhs = shifted_sample(r, {w, 0.5}, n);
        const Complex rhs = shifted_sample(up, {0.5 * w, 1.0}, 2 * n);
        EXPECT_LE(std::abs(lhs - rhs), 1e-12);
      }
    }
  }
}

TEST(TotalEnergy, FullBandIsUnitForUnitInput) {
  auto rng = make_rng(5);
  const Sequence r = oracle::random_sequence(6, rng);
  for (double tau : {0.0, 0.3, 0.5, 1.7}) {
    EXPECT_NEAR(total_energy(r, {0.5, tau}), 1.0, 1e-12);
  }
}

TEST(TotalEnergy, MatchesBruteForceSum) {
  auto rng = make_rng(6);
  const Sequence r = oracle::random_sequence(4, rng);
  // Brute force to |n| <= 1e5 leaves a remainder near 1e-6 * |r|_1^2.
  const double brute = oracle::naive_energy(r, 0.25, 0.0, 100000);
  EXPECT_NEAR(total_energy(r, {0.25, 0.0}), brute, 2e-5);
  const TruncatedTail t = tail_energy_truncated(r, {0.25, 0.0}, {0, 0}, 1e-11);
  const double window = std::norm(oracle::naive_shift(r, 0.25, 0.0, 0));
  EXPECT_NEAR(total_energy(r, {0.25, 0.0}), t.value + window, 1e-8);
}

TEST(TotalEnergy, IndependentOfShift) {
  auto rng = make_rng(7);
  for (double w : {0.1, 0.3, 0.45}) {
    const Sequence r = oracle::random_sequence(10, rng);
    const double base = total_energy(r, {w, 0.0});
    for (double tau : {0.3, 0.5, 1.7}) {
      EXPECT_NEAR(total_energy(r, {w, tau}), base, 1e-12);
    }
  }
}

TEST(TotalEnergy, UpsampledEnergyDoubles) {
  auto rng = make_rng(8);
  for (double w : {0.1, 0.25, 0.5}) {
    const Sequence r = oracle::random_sequence(8, rng);
    EXPECT_NEAR(total_energy(upsample2(r), {0.5 * w, 0.5}), 2.0 * total_energy(r, {w, 0.5}),
                1e-10);
  }
}

TEST(TotalEnergy, DpssMemberEnergyIsLambdaOverWSquared) {
  const int order = 8;
  const double w = 0.3;
  const DpssSet set = compute_dpss({2 * order + 1, 0.5 * w});
  for (int l : {0, 3, 8, 16}) {
    std::vector<double> samples(set.vector(l).begin(), set.vector(l).end());
    const Sequence s = Sequence::from_real(2 * order, samples);
    EXPECT_NEAR(total_energy(s, {0.5 * w, 0.0}), set.eigenvalue(l) / (w * w), 1e-10) << l;
    const double tail = tail_energy_exact(s, {0.5 * w, 0.0}, {order, order}).value;
    EXPECT_NEAR(tail, set.eigenvalue(l) * set.complement(l) / (w * w), 1e-10) << l;
  }
}

TEST(TailEnergy, ZeroSequence) {
  const Sequence z = Sequence::zeros(4);
  EXPECT_EQ(tail_energy_exact(z, {0.3, 0.5}, {2, 2}).value, 0.0);
  const TruncatedTail t = tail_energy_truncated(z, {0.3, 0.5}, {2, 2}, 1e-10);
  EXPECT_EQ(t.value, 0.0);
  EXPECT_EQ(t.horizon, 1024);
}

TEST(TailEnergy, HalfShiftedImpulse) {
  const Sequence r = oracle::impulse(2);
  const TailEnergy exact = tail_energy_exact(r, {0.5, 0.5}, {0, 1});
  EXPECT_NEAR(exact.value, oracle::kImpulseTail, 1e-15);
  EXPECT_NEAR(exact.value, 0.189430, 1e-6);
  const TruncatedTail t = tail_energy_truncated(r, {0.5, 0.5}, {0, 1}, 1e-10);
  EXPECT_NEAR(t.value, oracle::kImpulseTail, 1e-9);
}

TEST(TailEnergy, WindowCoveringEverythingLeavesNoTail) {
  auto rng = make_rng(9);
  const Sequence r = oracle::random_sequence(6, rng);
  // Full band, integer shift: the output is r moved by 2 samples.
  const TailEnergy t = tail_energy_exact(r, {0.5, 2.0}, {1, 5});
  EXPECT_LE(t.value, 1e-14);
}

TEST(TailEnergy, ExactAgreesWithTruncatedOracle) {
  auto rng = make_rng(10);
  int checked = 0;
  for (int order : {2, 4, 8}) {
    for (double w : {0.1, 0.25, 0.4}) {
      for (int c = 0; c < 4; ++c, ++checked) {
        const Sequence r = oracle::random_sequence(order, rng);
        const TailWindow window{order / 2, order / 2 + 1};
        const double exact = tail_energy_exact(r, {w, 0.5}, window).value;
        const TruncatedTail t = tail_energy_truncated(r, {w, 0.5}, window, 1e-10);
        EXPECT_NEAR(t.value, exact, 1e-9) << "N=" << order << " W=" << w;
        EXPECT_GE(t.horizon, 2048);
      }
    }
  }
  EXPECT_EQ(checked, 36);
}

TEST(TailEnergy, TruncatedRejectsBadTolerance) {
  const Sequence r = oracle::impulse(2);
  EXPECT_THROW(tail_energy_truncated(r, {0.5, 0.5}, {0, 1}, 0.0), ParameterError);
}

TEST(TailEnergy, TruncatedReportsHorizonExceeded) {
  const Sequence r = oracle::impulse(2);
  // The extrapolated sums only settle to about 1e-16.
  EXPECT_THROW(tail_energy_truncated(r, {0.31, 0.5}, {0, 1}, 1e-30), HorizonExceededError);
}
