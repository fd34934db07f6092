#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace halfshift {

// Parameters of a DPSS family: odd length M on indices -(M-1)/2..(M-1)/2 and
// half-bandwidth W' in cycles/sample.
struct DpssParams {
  int length = 0;
  double half_bandwidth = 0.0;

  int half_length() const { return (length - 1) / 2; }

  // Throws ParameterError unless M is odd, M >= 3 and 0 < W' < 0.5.
  void validate() const;

  bool operator==(const DpssParams&) const = default;
};

struct DpssOptions {
  int max_length = 8193;
};

// Kernel of the concentration problem, K(d) = 2 W' sinc(2 W' d).
double dpss_kernel(double half_bandwidth, int lag);

// Immutable DPSS family. Vector l is stored as column l; row i holds the
// sample at n = i - (M-1)/2. Eigenvalues are nonincreasing in l and each
// vector has unit energy.
class DpssSet {
 public:
  // Assembles a set from precomputed parts; only shapes are checked. Used by
  // compute_dpss and by tests that need to perturb a set.
  DpssSet(DpssParams params, Eigen::MatrixXd vectors,
          std::vector<double> eigenvalues, std::vector<double> complements);

  const DpssParams& params() const { return params_; }
  int length() const { return params_.length; }
  int half_length() const { return params_.half_length(); }

  // s_l[n] for centered n; zero outside the support.
  double value(int l, int n) const {
    if (n < -half_length() || n > half_length()) {
      return 0.0;
    }
    return vectors_(n + half_length(), l);
  }

  std::span<const double> vector(int l) const {
    return {vectors_.col(l).data(), static_cast<std::size_t>(length())};
  }
  const Eigen::MatrixXd& vectors() const { return vectors_; }

  double eigenvalue(int l) const { return eigenvalues_[static_cast<std::size_t>(l)]; }
  // 1 - lambda_l, evaluated without cancellation.
  double complement(int l) const { return complements_[static_cast<std::size_t>(l)]; }
  const std::vector<double>& eigenvalues() const { return eigenvalues_; }
  const std::vector<double>& complements() const { return complements_; }

 private:
  DpssParams params_;
  Eigen::MatrixXd vectors_;
  std::vector<double> eigenvalues_;
  std::vector<double> complements_;
};

// Computes the full DPSS family for `params`.
//
// Eigenvectors come from the tridiagonal matrix that commutes with the sinc
// kernel; its spectrum is well separated even where the kernel eigenvalues
// cluster at 0 or 1 below double resolution. Each eigenvalue (and its
// complement 1 - lambda) is then the Rayleigh quotient against the kernel,
// evaluated in quad precision. Vectors are sign-canonicalized so the first
// non-negligible sample is positive.
//
// Throws ParameterError for invalid params, SizeLimitError above
// options.max_length and NumericalError if the commuting matrix reports
// (numerically) tied eigenvalues.
DpssSet compute_dpss(const DpssParams& params, const DpssOptions& options = {});

// Flips v so that its first entry with |v| > 1e-9 max|v| is positive.
void canonicalize_sign(std::span<double> v);

// Eigenvalues below this (or complements below it) are at the resolution
// floor of the quad-precision Rayleigh quotient and are not ordered reliably.
inline constexpr double kEigenvalueResolutionFloor = 1e-28;

// sqrt(2) s_l[2n; 2N+3, 0.25] for n = -N/2..N/2 and l = 0..N, an orthonormal
// basis of sequences on [-N/2, N/2].
struct OrthoBasis {
  int order = 0;              // N
  Eigen::MatrixXd members;    // (N+1) x (N+1); column l is member l
  DpssSet source;             // the (2N+3, 0.25) parent family

  int size() const { return order + 1; }
  double value(int l, int n) const { return members(n + order / 2, l); }
  double source_eigenvalue(int l) const { return source.eigenvalue(l); }
};

// Throws ParameterError for odd N or N < 2.
OrthoBasis even_subsample_basis(int order, const DpssOptions& options = {});

// Max residuals of the flip symmetry s_l[n] = (-1)^(n+1) s_{2N+2-l}[-n]
// (over l != N+1, compared after sign canonicalization of both sides) and of
// the pairing lambda_l + lambda_{2N+2-l} = 1 (over all l).
struct FlipPairingResiduals {
  double flip = 0.0;
  double pairing = 0.0;
};

// Throws ParameterError unless the set belongs to the (2N+3, 0.25) family
// with N even.
FlipPairingResiduals flip_pairing_report(const DpssSet& set);

// Largest |s_{N+1}[2n]| over the even samples of a (2N+3, 0.25) set.
double middle_member_even_sample_max(const DpssSet& set);

}  // namespace halfshift
