#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "halfshift/errors.hpp"

namespace halfshift {

using Complex = std::complex<double>;

// A finite complex sequence on the centered support [-N/2, N/2], N even and
// at least 2. Samples outside the support read as zero.
class Sequence {
 public:
  Sequence(int order, std::vector<Complex> values)
      : order_(order), values_(std::move(values)) {
    if (order_ < 2 || order_ % 2 != 0) {
      throw ParameterError("sequence order N must be even and >= 2, got " +
                           std::to_string(order_));
    }
    if (values_.size() != static_cast<std::size_t>(order_) + 1) {
      throw ParameterError("sequence of order " + std::to_string(order_) +
                           " needs " + std::to_string(order_ + 1) +
                           " samples, got " + std::to_string(values_.size()));
    }
    for (const Complex& v : values_) {
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw ParameterError("sequence samples must be finite");
      }
    }
  }

  static Sequence zeros(int order) {
    return Sequence(order, std::vector<Complex>(order > 0 ? order + 1 : 0));
  }

  static Sequence from_real(int order, std::span<const double> values) {
    return Sequence(order, std::vector<Complex>(values.begin(), values.end()));
  }

  // N, the (even) support width; the sequence has N + 1 samples.
  int order() const { return order_; }
  int half_width() const { return order_ / 2; }
  int first_index() const { return -half_width(); }
  int last_index() const { return half_width(); }
  std::size_t size() const { return values_.size(); }

  // Sample at centered index n; zero outside the support.
  Complex operator[](int n) const {
    if (n < first_index() || n > last_index()) {
      return {};
    }
    return values_[static_cast<std::size_t>(n + half_width())];
  }

  std::span<const Complex> values() const { return values_; }

  double energy() const {
    double sum = 0.0;
    for (const Complex& v : values_) {
      sum += std::norm(v);
    }
    return sum;
  }

  double l1_norm() const {
    double sum = 0.0;
    for (const Complex& v : values_) {
      sum += std::abs(v);
    }
    return sum;
  }

  Sequence scaled(Complex factor) const {
    std::vector<Complex> out(values_);
    for (Complex& v : out) {
      v *= factor;
    }
    return Sequence(order_, std::move(out));
  }

 private:
  int order_;
  std::vector<Complex> values_;
};

}  // namespace halfshift
