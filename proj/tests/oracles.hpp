#pragma once

// Independent reference computations and frozen reference values for the
// unit tests. Nothing here calls into the library's numerical code.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "halfshift/sequence.hpp"

namespace oracle {

using halfshift::Complex;
using halfshift::Sequence;

// Plain sin(pi x) / (pi x) in long double, no argument reduction.
inline long double naive_sinc(long double x) {
  if (x == 0.0L) {
    return 1.0L;
  }
  const long double px = std::numbers::pi_v<long double> * x;
  return std::sin(px) / px;
}

// {B_W^tau r}[n] straight from the defining sum.
inline Complex naive_shift(const Sequence& r, double w, double tau, std::int64_t n) {
  std::complex<long double> sum{};
  for (int q = r.first_index(); q <= r.last_index(); ++q) {
    const long double x = 2.0L * w * (static_cast<long double>(n) - tau - q);
    sum += std::complex<long double>(r[q].real(), r[q].imag()) * naive_sinc(x);
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

// Energy of B_W^tau r over |n| <= horizon, by brute force.
inline double naive_energy(const Sequence& r, double w, double tau, std::int64_t horizon) {
  long double sum = 0.0L;
  for (std::int64_t n = -horizon; n <= horizon; ++n) {
    sum += std::norm(naive_shift(r, w, tau, n));
  }
  return static_cast<double>(sum);
}

// Dense kernel matrix K(n, m) = 2W' sinc(2W' (n - m)).
inline Eigen::MatrixXd kernel_matrix(int length, double w) {
  Eigen::MatrixXd k(length, length);
  for (int i = 0; i < length; ++i) {
    for (int j = 0; j < length; ++j) {
      k(i, j) = 2.0 * w * static_cast<double>(naive_sinc(2.0L * w * (i - j)));
    }
  }
  return k;
}

struct DenseEigen {
  Eigen::VectorXd values;   // descending
  Eigen::MatrixXd vectors;  // matching columns
};

// Dense symmetric eigendecomposition of the kernel, sorted descending.
inline DenseEigen dense_dpss(int length, double w) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(kernel_matrix(length, w));
  DenseEigen out;
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

inline Sequence random_sequence(int order, std::mt19937_64& rng, bool unit = true) {
  std::normal_distribution<double> normal;
  std::vector<Complex> values(static_cast<std::size_t>(order) + 1);
  double energy = 0.0;
  for (Complex& v : values) {
    v = {normal(rng), normal(rng)};
    energy += std::norm(v);
  }
  if (unit) {
    for (Complex& v : values) {
      v /= std::sqrt(energy);
    }
  }
  return Sequence(order, std::move(values));
}

inline Sequence impulse(int order) {
  std::vector<Complex> values(static_cast<std::size_t>(order) + 1);
  values[static_cast<std::size_t>(order / 2)] = 1.0;
  return Sequence(order, std::move(values));
}

// Tail of the full-band half-sample shifted impulse outside [0, 1]: the two
// kept samples are both 2/pi.
inline const double kImpulseTail = 1.0 - 8.0 / (std::numbers::pi * std::numbers::pi);

// Kernel eigenvalues from a 50-digit dense eigensolve
// (tests/oracles/dpss_golden.py). Each entry is {lambda_l, 1 - lambda_l}.
struct GoldenEigen {
  int l;
  double lambda;
  double complement;
};

inline const std::vector<GoldenEigen> kGolden19 = {
    {0, 0.99999999999989954075, 1.0045925453331585175e-13},
    {1, 0.99999999998026952882, 1.9730471182850135988e-11},
    {2, 0.99999999823833692994, 1.7616630700581933089e-9},
    {3, 0.99999990554105819915, 9.4458941800848271138e-8},
    {4, 0.99999661875589207239, 3.3812441079276109326e-6},
    {5, 0.99991520916502635303, 0.000084790834973646965807},
    {6, 0.99848854451448251628, 0.0015114554855174837242},
    {7, 0.98140377987471856788, 0.018596220125281432121},
    {8, 0.86140871917489625623, 0.13859128082510374377},
    {9, 0.5, 0.5},
    {16, 1.7616630700581933089e-9, 0.99999999823833692994},
    {17, 1.9730471182850135988e-11, 0.99999999998026952882},
    {18, 1.0045925453331585175e-13, 0.99999999999989954075},
};

inline const std::vector<GoldenEigen> kGolden33 = {
    {0, 0.99999998418002781609, 1.5819972183910025749e-8},
    {1, 0.99999869961474478107, 1.3003852552189256309e-6},
    {2, 0.99995171187597519449, 0.000048288124024805509052},
    {3, 0.99894412787087179463, 0.0010558721291282053663},
    {4, 0.98545595342087466973, 0.014544046579125330267},
    {5, 0.88255440406438398053, 0.11744559593561601947},
    {6, 0.5423517919911798267, 0.4576482080088201733},
    {7, 0.1640542412448100885, 0.8359457587551899115},
    {12, 3.4119859758344160751e-7, 0.99999965880140241656},
    {16, 1.7584996250893512476e-13, 0.99999999999982415004},
    {20, 6.3547151787200552658e-21, 1.0},
    {23, 3.0830807360720052787e-27, 1.0},
};

inline const std::vector<GoldenEigen> kGolden35 = {
    {0, 1.0, 7.8366030339330783875e-26},
    {1, 1.0, 2.9598781182739085779e-23},
    {2, 1.0, 5.3252000777394859942e-21},
    {5, 0.99999999999999697984, 3.020158288357611171e-15},
    {9, 0.99999999528079725062, 4.7192027493782903006e-9},
    {14, 0.99623068695399371004, 0.0037693130460062899597},
    {16, 0.83643939891548302932, 0.16356060108451697068},
    {17, 0.5, 0.5},
    {18, 0.16356060108451697068, 0.83643939891548302932},
    {25, 4.7192027493782903006e-9, 0.99999999528079725062},
    {32, 5.3252000777394859942e-21, 1.0},
    {33, 2.9598781182739085779e-23, 1.0},
    {34, 7.8366030339330783875e-26, 1.0},
};

}  // namespace oracle
