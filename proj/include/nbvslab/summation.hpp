#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace nbvslab {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Neumaier-compensated accumulator. Ascending-index summation with this
/// keeps series tails accurate to a few ulp even for 1e5-term sums.
class KahanSum {
 public:
  KahanSum() = default;
  explicit KahanSum(double v) : sum_(v) {}

  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }

  KahanSum& operator+=(double v) {
    add(v);
    return *this;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> xs) {
  KahanSum s;
  for (double x : xs) s.add(x);
  return s.value();
}

namespace detail {

// Composite 16-point Gauss-Legendre for integral of g over [a, b].
inline double gauss16(double a, double b, const auto& g) {
  // nodes/weights on [-1, 1]
  static const double xs[8] = {
      0.09501250983763744018531933542496, 0.28160355077925891323046050146050,
      0.45801677765722738634241944298358, 0.61787624440264374844667176404879,
      0.75540440835500303389510119484744, 0.86563120238783174388046789771239,
      0.94457502307323257607798841553461, 0.98940093499164993259615417345033};
  static const double ws[8] = {
      0.18945061045506849628539672320828, 0.18260341504492358886676366796922,
      0.16915651939500253818931207903036, 0.14959598881657673208150173054748,
      0.12462897125553387205247628219202, 0.09515851168249278480992510760225,
      0.06225352393864789286284383699438, 0.02715245941175409485178057245602};
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  KahanSum acc;
  for (int i = 0; i < 8; ++i) {
    const double dx = half * xs[i];
    acc.add(ws[i] * (g(mid - dx) + g(mid + dx)));
  }
  return half * acc.value();
}

}  // namespace detail

/// Tail sum  sum_{k >= m} k^{-s} (log(e + k))^t.
///
/// Returns +infinity when the series diverges (s < 1, or s == 1 with
/// t >= -1). Direct compensated summation up to a switch point, then
/// Euler-Maclaurin with the integral evaluated by substitution
/// x = K e^u; relative error is far below 1e-10 for every admissible s.
inline double powlog_tail(double s, double t, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("powlog_tail: m must be >= 1");
  if (s < 1.0 || (s == 1.0 && t >= -1.0))
    return std::numeric_limits<double>::infinity();

  const auto g = [s, t](double x) {
    const double l = std::log(std::exp(1.0) + x);
    return std::pow(x, -s) * (t == 0.0 ? 1.0 : std::pow(l, t));
  };
  const auto gprime = [s, t](double x) {
    if (t == 0.0) return -s * std::pow(x, -s - 1.0);
    const double ex = std::exp(1.0) + x;
    const double l = std::log(ex);
    return std::pow(x, -s - 1.0) * std::pow(l, t - 1.0) * (-s * l + t * x / ex);
  };

  // the critical-exponent tail decays only logarithmically; push the switch
  // point far enough out that log(e+x) ~ log(x) holds to first order
  const std::int64_t kSwitch =
      std::max<std::int64_t>(m, s == 1.0 ? (1 << 20) : (1 << 14));
  KahanSum acc;
  for (std::int64_t k = m; k < kSwitch; ++k) acc.add(g(static_cast<double>(k)));

  const double K = static_cast<double>(kSwitch);
  // integral_K^inf g(x) dx with x = K e^u; integrand decays like e^{-(s-1)u}
  double integral = 0.0;
  if (s == 1.0) {
    // integral_K^inf x^-1 L^t dx = integral_W^inf (w + log(1+e^{1-w}))^t dw,
    // W = log K; expand to first order in the exponentially small shift
    const double W = std::log(K);
    integral = std::pow(W, t + 1.0) / (-t - 1.0);
    KahanSum corr;  // t * e * integral_W^inf w^{t-1} e^{-w} dw
    double v0 = 0.0;
    for (int j = 0; j < 200; ++j) {
      const double part = detail::gauss16(v0, v0 + 1.0, [&](double v) {
        return std::pow(W + v, t - 1.0) * std::exp(-v);
      });
      corr.add(part);
      v0 += 1.0;
      if (part < 1e-18 * std::max(1e-300, corr.value())) break;
    }
    integral += t * std::exp(1.0) * std::exp(-W) * corr.value();
  } else if (t == 0.0) {
    integral = std::pow(K, 1.0 - s) / (s - 1.0);
  } else {
    const double seg = 1.0 / (s - 1.0);
    const double lnK = std::log(K);
    // g(x) x in log space: x = K e^u overflows for barely supercritical s
    // long before the geometric decay has run its course
    const auto integrand = [&](double u) {
      const double l =
          u > 600.0 ? lnK + u : std::log(std::exp(1.0) + K * std::exp(u));
      return std::exp((1.0 - s) * (lnK + u)) * (t == 0.0 ? 1.0 : std::pow(l, t));
    };
    KahanSum iacc;
    double u0 = 0.0;
    for (int j = 0; j < 4000; ++j) {
      const double u1 = u0 + seg;
      const double part = detail::gauss16(u0, u1, integrand);
      iacc.add(part);
      u0 = u1;
      if (std::abs(part) < 1e-18 * std::max(1e-300, std::abs(iacc.value()))) break;
    }
    integral = iacc.value();
  }

  acc.add(integral);
  acc.add(0.5 * g(K));
  acc.add(-gprime(K) / 12.0);
  return acc.value();
}

/// Tail sum  sum_{k >= m} k^{-s}  (pure power case).
inline double zeta_tail(double s, std::int64_t m) { return powlog_tail(s, 0.0, m); }

}  // namespace nbvslab
