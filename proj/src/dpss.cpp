#include "halfshift/dpss.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "halfshift/errors.hpp"
#include "halfshift/sinc.hpp"

namespace halfshift {

namespace {

using Quad = __float128;

// sin(pi x) for a quad argument, reduced like sin_pi().
Quad sin_pi_quad(Quad x) {
  Quad r = x - 2 * nearbyintq(x / 2);
  if (r > 0.5Q) {
    r = 1 - r;
  } else if (r < -0.5Q) {
    r = -1 - r;
  }
  return sinq(M_PIq * r);
}

// K(d) for d = 0..M-1 in quad precision.
std::vector<Quad> kernel_row_quad(double half_bandwidth, int length) {
  std::vector<Quad> row(static_cast<std::size_t>(length));
  const Quad w = half_bandwidth;
  row[0] = 2 * w;
  for (int d = 1; d < length; ++d) {
    row[static_cast<std::size_t>(d)] = sin_pi_quad(2 * w * d) / (M_PIq * d);
  }
  return row;
}

struct RayleighQuotient {
  double lambda;
  double complement;
};

RayleighQuotient rayleigh_quotient(const std::vector<Quad>& kernel,
                                   const double* v, int length) {
  std::vector<Quad> x(v, v + length);
  Quad energy = 0;
  Quad form = 0;
  for (int i = 0; i < length; ++i) {
    Quad kx = 0;
    for (int j = 0; j < length; ++j) {
      kx += kernel[static_cast<std::size_t>(std::abs(i - j))] * x[static_cast<std::size_t>(j)];
    }
    form += x[static_cast<std::size_t>(i)] * kx;
    energy += x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
  }
  return {static_cast<double>(form / energy),
          static_cast<double>((energy - form) / energy)};
}

bool in_pairing_family(const DpssParams& p) {
  return p.half_bandwidth == 0.25 && p.length % 4 == 3;
}

}  // namespace

void DpssParams::validate() const {
  if (length < 3 || length % 2 == 0) {
    throw ParameterError("length must be odd and >= 3, got " +
                         std::to_string(length));
  }
  if (!(half_bandwidth > 0.0 && half_bandwidth < 0.5)) {
    throw ParameterError("half-bandwidth must lie in (0, 0.5), got " +
                         std::to_string(half_bandwidth));
  }
}

double dpss_kernel(double half_bandwidth, int lag) {
  return 2.0 * half_bandwidth * sinc(2.0 * half_bandwidth * lag);
}

DpssSet::DpssSet(DpssParams params, Eigen::MatrixXd vectors,
                 std::vector<double> eigenvalues,
                 std::vector<double> complements)
    : params_(params),
      vectors_(std::move(vectors)),
      eigenvalues_(std::move(eigenvalues)),
      complements_(std::move(complements)) {
  const auto m = static_cast<Eigen::Index>(params_.length);
  if (vectors_.rows() != m || vectors_.cols() != m ||
      eigenvalues_.size() != static_cast<std::size_t>(m) ||
      complements_.size() != static_cast<std::size_t>(m)) {
    throw ParameterError("DPSS set parts do not match length " +
                         std::to_string(params_.length));
  }
}

void canonicalize_sign(std::span<double> v) {
  double peak = 0.0;
  for (double x : v) {
    peak = std::max(peak, std::abs(x));
  }
  const double threshold = 1e-9 * peak;
  for (double x : v) {
    if (std::abs(x) > threshold) {
      if (x < 0.0) {
        for (double& y : v) {
          y = -y;
        }
      }
      return;
    }
  }
}

DpssSet compute_dpss(const DpssParams& params, const DpssOptions& options) {
  params.validate();
  if (params.length > options.max_length) {
    throw SizeLimitError("length " + std::to_string(params.length) +
                         " exceeds the maximum of " +
                         std::to_string(options.max_length));
  }
  const int m = params.length;

  // Commuting tridiagonal matrix, indices i = 0..M-1.
  Eigen::VectorXd diag(m);
  Eigen::VectorXd sub(m - 1);
  const double c = std::cos(2.0 * std::numbers::pi * params.half_bandwidth);
  for (int i = 0; i < m; ++i) {
    const double h = 0.5 * (m - 1 - 2 * i);
    diag(i) = h * h * c;
  }
  for (int i = 1; i < m; ++i) {
    sub(i - 1) = 0.5 * i * (m - i);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("tridiagonal eigensolver did not converge for length " +
                         std::to_string(m));
  }

  // Eigen sorts ascending; the DPSS order is descending.
  const Eigen::VectorXd& t = solver.eigenvalues();
  const double scale = std::max(1.0, t.cwiseAbs().maxCoeff());
  for (int i = 0; i + 1 < m; ++i) {
    if (std::abs(t(i + 1) - t(i)) < 1e-13 * scale) {
      throw NumericalError("commuting matrix reports tied eigenvalues at index " +
                           std::to_string(m - 2 - i));
    }
  }
  Eigen::MatrixXd vectors = solver.eigenvectors().rowwise().reverse();
  for (int l = 0; l < m; ++l) {
    canonicalize_sign({vectors.col(l).data(), static_cast<std::size_t>(m)});
  }

  const std::vector<Quad> kernel = kernel_row_quad(params.half_bandwidth, m);
  std::vector<double> eigenvalues(static_cast<std::size_t>(m));
  std::vector<double> complements(static_cast<std::size_t>(m));
  for (int l = 0; l < m; ++l) {
    const RayleighQuotient rq = rayleigh_quotient(kernel, vectors.col(l).data(), m);
    eigenvalues[static_cast<std::size_t>(l)] = rq.lambda;
    complements[static_cast<std::size_t>(l)] = rq.complement;
  }
  return DpssSet(params, std::move(vectors), std::move(eigenvalues),
                 std::move(complements));
}

OrthoBasis even_subsample_basis(int order, const DpssOptions& options) {
  if (order < 2 || order % 2 != 0) {
    throw ParameterError("N must be even and >= 2, got " + std::to_string(order));
  }
  DpssSet source = compute_dpss({2 * order + 3, 0.25}, options);
  const int size = order + 1;
  const int half = order / 2;
  Eigen::MatrixXd members(size, size);
  for (int l = 0; l < size; ++l) {
    for (int n = -half; n <= half; ++n) {
      members(n + half, l) = std::numbers::sqrt2 * source.value(l, 2 * n);
    }
  }
  return OrthoBasis{order, std::move(members), std::move(source)};
}

FlipPairingResiduals flip_pairing_report(const DpssSet& set) {
  if (!in_pairing_family(set.params())) {
    throw ParameterError(
        "flip/pairing properties hold only for the (2N+3, 0.25) family with N "
        "even");
  }
  const int m = set.length();
  const int half = set.half_length();  // N + 1
  const int mirror = m - 1;            // 2N + 2
  FlipPairingResiduals out;
  std::vector<double> lhs(static_cast<std::size_t>(m));
  std::vector<double> rhs(static_cast<std::size_t>(m));
  for (int l = 0; l < m; ++l) {
    const int k = mirror - l;
    out.pairing = std::max(
        out.pairing, std::abs(set.eigenvalue(l) + set.eigenvalue(k) - 1.0));
    if (l == half) {
      continue;
    }
    for (int n = -half; n <= half; ++n) {
      const double sign = ((n + 1) % 2 == 0) ? 1.0 : -1.0;
      lhs[static_cast<std::size_t>(n + half)] = set.value(l, n);
      rhs[static_cast<std::size_t>(n + half)] = sign * set.value(k, -n);
    }
    canonicalize_sign(lhs);
    canonicalize_sign(rhs);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      out.flip = std::max(out.flip, std::abs(lhs[i] - rhs[i]));
    }
  }
  return out;
}

double middle_member_even_sample_max(const DpssSet& set) {
  if (!in_pairing_family(set.params())) {
    throw ParameterError("expected a (2N+3, 0.25) DPSS set");
  }
  const int half = set.half_length();  // N + 1, odd
  double peak = 0.0;
  for (int n = -(half - 1); n <= half - 1; n += 2) {
    peak = std::max(peak, std::abs(set.value(half, n)));
  }
  return peak;
}

}  // namespace halfshift
