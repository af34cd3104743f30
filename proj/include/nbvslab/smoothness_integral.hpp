#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nbvslab/trigseries.hpp"
#include "nbvslab/weights.hpp"

namespace nbvslab {

struct IntegralOptions {
  int t_steps = 64;             // quadrature nodes per decade of t
  double target_rel = 1e-6;     // certified truncation error target
  double nondecay_ratio = 0.97; // octave contributions above this ratio signal divergence
  int nondecay_window = 3;
  int max_octaves = 200;
};

struct IntegralResult {
  double value = 0.0;
  bool divergent = false;
  double t_min = 0.0;         // lower truncation point actually used
  double certified_rel = 0.0; // bound on the truncated remainder, relative
  std::string note;
};

namespace detail {

// inner(t) = integral_0^pi |f(x+t)+f(x-t)-2f(x)|^p dx; by the even/odd
// symmetry of the series this is half the full-period integral.
inline double second_difference_inner(const TrigPoly& f, double t, double p, const Grid* g,
                                      NormMethod method) {
  const HarmonicCoeffs d = symmetric_difference(f, t);
  const bool coeff_route =
      (method == NormMethod::coefficients) || (method == NormMethod::automatic && p == 2.0);
  if (coeff_route) {
    KahanSum e;
    for (double c : d.cos_part) e.add(c * c);
    for (double s : d.sin_part) e.add(s * s);
    return 0.5 * kPi * e.value();
  }
  if (g == nullptr) throw std::invalid_argument("second_difference_inner: grid required for p != 2");
  const std::vector<double> samples = evaluate(d, *g);
  KahanSum acc;
  for (double v : samples) acc.add(std::pow(std::abs(v), p));
  return 0.5 * acc.value() * g->weight();
}

// integral_0^T t^q (log(e + 1/t))^lp dt by geometric-octave Simpson;
// +inf when q <= -1 (the log factor cannot rescue integrability for lp >= 0,
// and the callers only certify with lp >= 0).
inline double small_t_majorant_integral(double q, double lp, double T) {
  if (q <= -1.0) return kInf;
  KahanSum total;
  double hi = T;
  for (int oct = 0; oct < 20000; ++oct) {
    const double lo = 0.5 * hi;
    // Simpson on [lo, hi] in u = log t with 8 intervals
    const int nsub = 8;
    const double ulo = std::log(lo), uhi = std::log(hi);
    const double du = (uhi - ulo) / nsub;
    KahanSum simpson;
    for (int i = 0; i <= nsub; ++i) {
      const double u = ulo + du * i;
      const double t = std::exp(u);
      const double val = std::pow(t, q + 1.0) * std::pow(std::log(std::exp(1.0) + 1.0 / t), lp);
      const double w = (i == 0 || i == nsub) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
      simpson.add(w * val);
    }
    const double contrib = simpson.value() * du / 3.0;
    total.add(contrib);
    hi = lo;
    if (contrib < 1e-9 * std::max(1e-300, total.value()) && oct > 4) break;
  }
  return total.value();
}

struct WeightedIntegrandSpec {
  std::function<double(double)> weight_at_inverse;  // evaluated at 1/t
  double bound_scale = 1.0;   // pointwise bound of the weight: c x^gamma L(x)^delta
  double bound_power = 0.0;
  double bound_log_power = 0.0;
  double t_exponent = 0.0;    // the t^q factor in front of the inner norm
  double upper = 1.0;         // upper integration limit
};

/// integral_0^upper w(1/t) t^{t_exponent} inner(t)^{r/p} dt with octave
/// descent toward 0, a certified small-t cutoff from |D2_t f| <= t^2 sum v^2 a_v,
/// and non-decaying-octave divergence detection.
inline IntegralResult weighted_second_difference_integral(const TrigPoly& f,
                                                          const WeightedIntegrandSpec& spec,
                                                          double r, double p,
                                                          const IntegralOptions& opt,
                                                          const Grid* g, NormMethod method) {
  if (!(p > 1.0)) throw std::invalid_argument("smoothness integral: p must exceed 1");
  if (!(r >= 1.0)) throw std::invalid_argument("smoothness integral: r must be >= 1");
  if (opt.t_steps < 1) throw std::invalid_argument("smoothness integral: t_steps must be >= 1");

  IntegralResult out;
  out.t_min = spec.upper;

  KahanSum c2_acc;  // sum v^2 a_v, the curvature scale of f
  for (std::int64_t v = 1; v <= f.degree(); ++v)
    c2_acc.add(static_cast<double>(v) * static_cast<double>(v) * f.coeffs.a(v));
  const double c2 = c2_acc.value();
  if (c2 == 0.0) return out;  // zero polynomial: integral is 0

  const double q_small = spec.t_exponent + 2.0 * r - spec.bound_power;
  const auto remainder_bound = [&](double tmin) {
    const double j = small_t_majorant_integral(q_small, spec.bound_log_power, tmin);
    return spec.bound_scale * std::pow(kPi, r / p) * std::pow(c2, r) * j;
  };

  const auto integrand_log = [&](double u) {  // in u = log t, includes the du Jacobian
    const double t = std::exp(u);
    const double inner = second_difference_inner(f, t, p, g, method);
    return spec.weight_at_inverse(1.0 / t) * std::pow(t, spec.t_exponent + 1.0) *
           std::pow(inner, r / p);
  };

  // nodes per octave from the per-decade budget; Simpson needs an even count
  int nsub = static_cast<int>(std::ceil(opt.t_steps * 0.30103));
  if (nsub < 4) nsub = 4;
  if (nsub % 2 == 1) ++nsub;

  KahanSum total;
  std::vector<double> contribs;
  double hi = spec.upper;
  for (int oct = 0; oct < opt.max_octaves; ++oct) {
    const double lo = 0.5 * hi;
    const double ulo = std::log(lo), uhi = std::log(hi);
    const double du = (uhi - ulo) / nsub;
    KahanSum simpson;
    for (int i = 0; i <= nsub; ++i) {
      const double w = (i == 0 || i == nsub) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
      simpson.add(w * integrand_log(ulo + du * i));
    }
    const double contrib = simpson.value() * du / 3.0;
    contribs.push_back(contrib);
    total.add(contrib);
    hi = lo;
    out.t_min = hi;

    const double bound = remainder_bound(hi);
    if (std::isfinite(bound) && bound <= opt.target_rel * std::max(1e-300, total.value() + bound)) {
      out.value = total.value();
      out.certified_rel = bound / std::max(1e-300, total.value());
      return out;
    }

    if (static_cast<int>(contribs.size()) > opt.nondecay_window) {
      bool nondecaying = true;
      for (int k = 0; k < opt.nondecay_window; ++k) {
        const std::size_t i = contribs.size() - 1 - k;
        if (!(contribs[i] >= opt.nondecay_ratio * contribs[i - 1])) {
          nondecaying = false;
          break;
        }
      }
      if (nondecaying && contribs.back() > 1e-12 * std::max(1e-300, total.value())) {
        out.divergent = true;
        out.value = total.value();
        out.note = "octave contributions stopped decaying";
        return out;
      }
    }
  }

  out.value = total.value();
  out.divergent = true;
  out.note = "octave budget exhausted before certification";
  return out;
}

}  // namespace detail

/// I(f, lambda, r, p) =
///   integral_0^1 lambda(1/t) t^{r-2-r/p} ( integral_0^pi |f(x+t)+f(x-t)-2f(x)|^p dx )^{r/p} dt.
/// Divergent parameter combinations are reported as such, never as a number.
inline IntegralResult smoothness_integral(const TrigPoly& f, const WeightFn& lam, double r,
                                          double p, const IntegralOptions& opt = {},
                                          const Grid* g = nullptr,
                                          NormMethod method = NormMethod::automatic) {
  lam.validate();
  detail::WeightedIntegrandSpec spec;
  spec.weight_at_inverse = [lam](double x) { return lam(x); };
  spec.bound_scale = lam.scale;
  spec.bound_power = lam.power;
  spec.bound_log_power = lam.log_power;
  spec.t_exponent = r - 2.0 - r / p;
  spec.upper = 1.0;
  return detail::weighted_second_difference_integral(f, spec, r, p, opt, g, method);
}

/// The step-weight analogue over (0, pi]:
///   integral_0^pi phi(1/t) t^{-r/p} (inner)^{r/p} dt,
/// used by the ninth equivalence functional.
inline IntegralResult phi_second_difference_integral(const TrigPoly& f, const PhiWeight& phi,
                                                     double r, double p,
                                                     const IntegralOptions& opt = {},
                                                     const Grid* g = nullptr,
                                                     NormMethod method = NormMethod::automatic) {
  phi.validate();
  detail::WeightedIntegrandSpec spec;
  spec.weight_at_inverse = [phi](double x) { return phi.phi_step(x); };
  // phi(ceil(x)) <= (log(e + x + 1))^s <= (1.3 log(e + x))^s pointwise
  spec.bound_scale = std::pow(1.3, phi.s);
  spec.bound_power = 0.0;
  spec.bound_log_power = phi.s;
  spec.t_exponent = -r / p;
  spec.upper = kPi;
  return detail::weighted_second_difference_integral(f, spec, r, p, opt, g, method);
}

}  // namespace nbvslab
