#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "nbvslab/summation.hpp"

namespace nbvslab {

/// Weight lambda(x) = scale * x^power * (log(e+x))^log_power on [1, inf).
struct WeightFn {
  double scale = 1.0;
  double power = 0.0;
  double log_power = 0.0;

  double operator()(double x) const {
    if (!(x >= 1.0)) throw std::invalid_argument("WeightFn: domain is [1, inf)");
    const double l = std::log(std::exp(1.0) + x);
    return scale * std::pow(x, power) * (log_power == 0.0 ? 1.0 : std::pow(l, log_power));
  }

  void validate() const {
    if (!(scale > 0.0)) throw std::invalid_argument("WeightFn: scale must be positive");
  }
};

struct DoublingCheck {
  double k1 = 0.0;  // inf over levels of lambda(2^{n+1}) / lambda(2^n)
  double k2 = 0.0;  // sup over levels
  bool monotone = false;
};

/// Doubling constants and a monotonicity probe on a geometric ladder.
inline DoublingCheck weight_doubling(const WeightFn& w, int levels = 40) {
  w.validate();
  DoublingCheck out;
  out.k1 = kInf;
  out.k2 = 0.0;
  double prev = w(1.0);
  for (int n = 1; n <= levels; ++n) {
    const double cur = w(std::pow(2.0, static_cast<double>(n)));
    const double ratio = cur / prev;
    out.k1 = std::min(out.k1, ratio);
    out.k2 = std::max(out.k2, ratio);
    prev = cur;
  }
  // monotone on [1, 2^levels]: probe at eighth-octave resolution
  int sign = 0;
  bool ok = true;
  double x_prev = 1.0, f_prev = w(1.0);
  for (int i = 1; i <= levels * 8; ++i) {
    const double x = std::pow(2.0, static_cast<double>(i) / 8.0);
    const double fx = w(x);
    const double d = fx - f_prev;
    const double tol = 1e-14 * std::max(std::abs(fx), std::abs(f_prev));
    if (d > tol) {
      if (sign < 0) ok = false;
      sign = 1;
    } else if (d < -tol) {
      if (sign > 0) ok = false;
      sign = -1;
    }
    x_prev = x;
    f_prev = fx;
  }
  (void)x_prev;
  out.monotone = ok;
  return out;
}

/// Nondecreasing sequence phi_n = (log(e+n))^s with its step extension
/// phi(x) = phi_n on (n-1, n] and partial sums Phi.
struct PhiWeight {
  double s = 0.0;

  void validate() const {
    if (!(s >= 0.0)) throw std::invalid_argument("PhiWeight: s must be >= 0");
  }

  double phi(std::int64_t n) const {
    if (n < 1) throw std::invalid_argument("PhiWeight: n must be >= 1");
    return s == 0.0 ? 1.0 : std::pow(std::log(std::exp(1.0) + static_cast<double>(n)), s);
  }

  double phi_step(double x) const {
    if (!(x > 0.0)) throw std::invalid_argument("PhiWeight: step argument must be positive");
    const auto n = static_cast<std::int64_t>(std::ceil(x));
    return phi(std::max<std::int64_t>(1, n));
  }

  /// Phi(x) = sum_{n<=x} n^exponent phi_n.
  double capital_phi(double x, double exponent) const {
    KahanSum acc;
    for (std::int64_t n = 1; n <= static_cast<std::int64_t>(std::floor(x)); ++n)
      acc.add(std::pow(static_cast<double>(n), exponent) * phi(n));
    return acc.value();
  }

  /// Largest phi_{n^2} / phi_n ratio on a dyadic ladder up to max_n.
  double square_index_ratio(std::int64_t max_n = 1 << 16) const {
    double worst = 1.0;
    for (std::int64_t n = 2; n * n <= max_n * max_n && n <= max_n; n *= 2)
      worst = std::max(worst, phi(n * n) / phi(n));
    return worst;
  }
};

}  // namespace nbvslab
