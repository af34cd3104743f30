#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "nbvslab/seqclass.hpp"
#include "nbvslab/summation.hpp"

namespace nbvslab {

enum class Parity { cosine, sine };

/// f(x) = sum_{n=1}^{N} a_n cos(nx)  or  sum a_n sin(nx).
struct TrigPoly {
  Parity parity = Parity::cosine;
  CoeffSeq coeffs;

  std::int64_t degree() const { return coeffs.size(); }
};

/// Uniform periodic grid x_j = 2*pi*j/M, M a power of two. The rectangle
/// rule on it integrates trig polynomials of degree < M exactly, so the
/// resolution margin M >= 4*degree + 4 keeps every product we form
/// alias-free. Synthesis of sample values runs through a cached-twiddle
/// radix-2 transform.
class Grid {
 public:
  explicit Grid(std::int64_t m) : m_(m) {
    if (m < 8 || (m & (m - 1)) != 0)
      throw std::invalid_argument("Grid: M must be a power of two, >= 8");
    twiddles_.resize(static_cast<std::size_t>(m / 2));
    for (std::int64_t k = 0; k < m / 2; ++k) {
      const double ang = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(m);
      twiddles_[static_cast<std::size_t>(k)] = {std::cos(ang), std::sin(ang)};
    }
  }

  std::int64_t size() const { return m_; }
  double point(std::int64_t j) const { return 2.0 * kPi * static_cast<double>(j) / static_cast<double>(m_); }
  double weight() const { return 2.0 * kPi / static_cast<double>(m_); }
  bool resolves(std::int64_t degree) const { return m_ >= 4 * degree + 4; }

  /// In-place unscaled synthesis: a[j] <- sum_k a[k] e^{+2 pi i jk / M}.
  void synthesize(std::vector<std::complex<double>>& a) const {
    const std::size_t n = a.size();
    if (n != static_cast<std::size_t>(m_))
      throw std::invalid_argument("Grid::synthesize: spectrum length must equal M");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
      std::size_t bit = n >> 1;
      for (; j & bit; bit >>= 1) j ^= bit;
      j ^= bit;
      if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
      const std::size_t stride = n / len;
      for (std::size_t i = 0; i < n; i += len) {
        for (std::size_t k = 0; k < len / 2; ++k) {
          const std::complex<double> w = twiddles_[k * stride];
          const std::complex<double> u = a[i + k];
          const std::complex<double> v = a[i + k + len / 2] * w;
          a[i + k] = u + v;
          a[i + k + len / 2] = u - v;
        }
      }
    }
  }

 private:
  std::int64_t m_;
  std::vector<std::complex<double>> twiddles_;
};

/// General real trig polynomial sum_{n>=1} (cos_part_n cos(nx) + sin_part_n sin(nx)).
/// First differences of a TrigPoly mix parities, so shifted evaluation goes
/// through this form with exactly phase-rotated coefficients.
struct HarmonicCoeffs {
  std::vector<double> cos_part;
  std::vector<double> sin_part;

  std::int64_t degree() const { return static_cast<std::int64_t>(cos_part.size()); }
};

inline HarmonicCoeffs to_harmonic(const TrigPoly& f) {
  const auto n = static_cast<std::size_t>(f.degree());
  HarmonicCoeffs h;
  h.cos_part.assign(n, 0.0);
  h.sin_part.assign(n, 0.0);
  auto& dst = f.parity == Parity::cosine ? h.cos_part : h.sin_part;
  dst = f.coeffs.values();
  return h;
}

/// Coefficients of x -> f(x + t) - f(x); exact in the coefficients.
inline HarmonicCoeffs shift_difference(const TrigPoly& f, double t) {
  const auto n = static_cast<std::size_t>(f.degree());
  HarmonicCoeffs h;
  h.cos_part.assign(n, 0.0);
  h.sin_part.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = f.coeffs.values()[i];
    const double nt = static_cast<double>(i + 1) * t;
    const double c = std::cos(nt), s = std::sin(nt);
    if (f.parity == Parity::cosine) {
      h.cos_part[i] = a * (c - 1.0);
      h.sin_part[i] = -a * s;
    } else {
      h.cos_part[i] = a * s;
      h.sin_part[i] = a * (c - 1.0);
    }
  }
  return h;
}

/// Coefficients of x -> f(x+t) + f(x-t) - 2 f(x); parity preserved, each
/// mode scaled by -4 sin^2(nt/2).
inline HarmonicCoeffs symmetric_difference(const TrigPoly& f, double t) {
  const auto n = static_cast<std::size_t>(f.degree());
  HarmonicCoeffs h;
  h.cos_part.assign(n, 0.0);
  h.sin_part.assign(n, 0.0);
  auto& dst = f.parity == Parity::cosine ? h.cos_part : h.sin_part;
  for (std::size_t i = 0; i < n; ++i) {
    const double sh = std::sin(0.5 * static_cast<double>(i + 1) * t);
    dst[i] = -4.0 * f.coeffs.values()[i] * sh * sh;
  }
  return h;
}

inline std::vector<double> evaluate(const HarmonicCoeffs& h, const Grid& g) {
  if (!g.resolves(h.degree())) throw std::invalid_argument("evaluate: grid too coarse");
  std::vector<std::complex<double>> spec(static_cast<std::size_t>(g.size()), {0.0, 0.0});
  for (std::size_t i = 0; i < h.cos_part.size(); ++i)
    spec[i + 1] = {h.cos_part[i], -h.sin_part[i]};
  g.synthesize(spec);
  std::vector<double> out(spec.size());
  for (std::size_t j = 0; j < spec.size(); ++j) out[j] = spec[j].real();
  return out;
}

inline std::vector<double> evaluate(const TrigPoly& f, const Grid& g) {
  return evaluate(to_harmonic(f), g);
}

inline double lp_norm(std::span<const double> samples, double p, double weight) {
  KahanSum acc;
  if (p == 2.0) {
    for (double v : samples) acc.add(v * v);
  } else {
    for (double v : samples) acc.add(std::pow(std::abs(v), p));
  }
  return std::pow(acc.value() * weight, 1.0 / p);
}

/// L^p norm over one full period [0, 2pi).
inline double lp_norm(const TrigPoly& f, double p, const Grid& g) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
  return lp_norm(evaluate(f, g), p, g.weight());
}

namespace detail {

// Full-period L^2 norm straight from coefficients (Parseval); for grids
// with M > 2*degree this equals the quadrature value to rounding.
inline double l2_norm_coeff(const HarmonicCoeffs& h) {
  KahanSum acc;
  for (std::size_t i = 0; i < h.cos_part.size(); ++i)
    acc.add(h.cos_part[i] * h.cos_part[i] + h.sin_part[i] * h.sin_part[i]);
  return std::sqrt(kPi * acc.value());
}

// golden-section maximization on [lo, hi]
inline double golden_max(double lo, double hi, const auto& fn, int iters = 48) {
  constexpr double invphi = 0.6180339887498949;
  double x1 = hi - invphi * (hi - lo);
  double x2 = lo + invphi * (hi - lo);
  double f1 = fn(x1), f2 = fn(x2);
  double best = std::max(f1, f2);
  for (int i = 0; i < iters; ++i) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invphi * (hi - lo);
      f2 = fn(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invphi * (hi - lo);
      f1 = fn(x1);
    }
    best = std::max({best, f1, f2});
  }
  return best;
}

}  // namespace detail

enum class NormMethod {
  automatic,     // coefficient route when p == 2, grid quadrature otherwise
  grid,          // always sample-and-integrate
  coefficients,  // Parseval route; requires p == 2
};

namespace detail {

inline double difference_norm(const HarmonicCoeffs& h, double p, const Grid& g,
                              NormMethod method) {
  const bool coeff_route =
      (method == NormMethod::coefficients) || (method == NormMethod::automatic && p == 2.0);
  if (coeff_route) {
    if (p != 2.0) throw std::invalid_argument("difference_norm: coefficient route needs p = 2");
    return l2_norm_coeff(h);
  }
  return lp_norm(evaluate(h, g), p, g.weight());
}

inline double sup_over_shifts(double h, int t_steps, const auto& norm_at) {
  double best = 0.0;
  double arg = h;
  for (int i = 1; i <= t_steps; ++i) {
    const double t = h * static_cast<double>(i) / static_cast<double>(t_steps);
    const double v = norm_at(t);
    if (v > best) {
      best = v;
      arg = t;
    }
  }
  const double step = h / static_cast<double>(t_steps);
  const double lo = std::max(arg - step, 0.5 * step * 1e-6);
  const double hi = std::min(arg + step, h);
  return std::max(best, golden_max(lo, hi, norm_at));
}

}  // namespace detail

/// First-order modulus of smoothness: sup_{0<t<=h} ||f(.+t) - f(.)||_p,
/// realized as a shift-grid max plus golden-section refinement.
inline double modulus(const TrigPoly& f, double p, double h, const Grid& g, int t_steps = 64,
                      NormMethod method = NormMethod::automatic) {
  if (!(p >= 1.0)) throw std::invalid_argument("modulus: p must be >= 1");
  if (!(h > 0.0 && h <= kPi)) throw std::invalid_argument("modulus: h must lie in (0, pi]");
  if (t_steps < 64) throw std::invalid_argument("modulus: need at least 64 shift steps");
  if (!g.resolves(f.degree())) throw std::invalid_argument("modulus: grid too coarse");
  return detail::sup_over_shifts(h, t_steps, [&](double t) {
    return detail::difference_norm(shift_difference(f, t), p, g, method);
  });
}

/// Second-order (Zygmund) modulus: sup_{0<t<=h} ||f(.+t) + f(.-t) - 2 f(.)||_p.
inline double modulus_star(const TrigPoly& f, double p, double h, const Grid& g, int t_steps = 64,
                           NormMethod method = NormMethod::automatic) {
  if (!(p >= 1.0)) throw std::invalid_argument("modulus_star: p must be >= 1");
  if (!(h > 0.0 && h <= kPi)) throw std::invalid_argument("modulus_star: h must lie in (0, pi]");
  if (t_steps < 64) throw std::invalid_argument("modulus_star: need at least 64 shift steps");
  if (!g.resolves(f.degree())) throw std::invalid_argument("modulus_star: grid too coarse");
  return detail::sup_over_shifts(h, t_steps, [&](double t) {
    return detail::difference_norm(symmetric_difference(f, t), p, g, method);
  });
}

struct BestApprox {
  double value = 0.0;
  bool exact = false;  // true only for the p = 2 Parseval tail
};

/// E_n in L^p. Exact for p = 2 (Parseval tail, including any analytic
/// coefficient tail); for p != 2 the partial-sum tail norm, an upper bound.
inline BestApprox best_approx(const TrigPoly& f, std::int64_t n, double p, const Grid& g) {
  if (n < 1) throw std::out_of_range("best_approx: n must be >= 1");
  if (!(p >= 1.0)) throw std::invalid_argument("best_approx: p must be >= 1");
  BestApprox out;
  if (p == 2.0) {
    KahanSum acc;
    for (std::int64_t k = n + 1; k <= f.degree(); ++k) acc.add(f.coeffs.a(k) * f.coeffs.a(k));
    acc.add(f.coeffs.tail_power_sum(0.0, 2.0));
    out.value = std::sqrt(kPi * acc.value());
    out.exact = true;
    return out;
  }
  HarmonicCoeffs tail = to_harmonic(f);
  for (std::int64_t k = 1; k <= std::min(n, f.degree()); ++k) {
    tail.cos_part[static_cast<std::size_t>(k - 1)] = 0.0;
    tail.sin_part[static_cast<std::size_t>(k - 1)] = 0.0;
  }
  out.value = lp_norm(evaluate(tail, g), p, g.weight());
  out.exact = false;
  return out;
}

/// Samples of the block kernel T_{m,2n}(x) = sum_{v=m}^{2n} cos(vx)
/// (or the conjugate sine block when `parity` is sine).
inline std::vector<double> dirichlet_block(std::int64_t m, std::int64_t n, const Grid& g,
                                           Parity parity = Parity::cosine) {
  if (m < 1 || m > 2 * n) throw std::invalid_argument("dirichlet_block: need 1 <= m <= 2n");
  if (!g.resolves(2 * n)) throw std::invalid_argument("dirichlet_block: grid too coarse");
  std::vector<double> coeffs(static_cast<std::size_t>(2 * n), 0.0);
  for (std::int64_t v = m; v <= 2 * n; ++v) coeffs[static_cast<std::size_t>(v - 1)] = 1.0;
  return evaluate(TrigPoly{parity, CoeffSeq(std::move(coeffs))}, g);
}

struct Identity43 {
  double integral_side = 0.0;
  double explicit_side = 0.0;
  double rel_err = 0.0;
};

/// Checks the block-kernel identity
///   integral (2f(x) - f(x+t) - f(x-t)) T_{m,2n}(x) dx
///     = 4 pi sum_{v=m}^{2n} a_v sin^2(vt/2)
/// by full-period quadrature against the explicit coefficient sum. The
/// kernel parity follows the parity of f (the sine series pairs with the
/// conjugate block kernel).
inline Identity43 dirichlet_identity(const TrigPoly& f, std::int64_t m, std::int64_t n, double t,
                                     const Grid& g) {
  if (m < 1 || m > 2 * n) throw std::invalid_argument("dirichlet_identity: need 1 <= m <= 2n");
  if (!g.resolves(std::max(f.degree(), 2 * n)))
    throw std::invalid_argument("dirichlet_identity: grid too coarse");

  HarmonicCoeffs neg2nd = symmetric_difference(f, t);
  for (double& c : neg2nd.cos_part) c = -c;  // integrand is 2f - f(.+t) - f(.-t)
  for (double& s : neg2nd.sin_part) s = -s;
  const std::vector<double> diff = evaluate(neg2nd, g);
  const std::vector<double> kernel = dirichlet_block(m, n, g, f.parity);

  KahanSum integral;
  for (std::size_t j = 0; j < diff.size(); ++j) integral.add(diff[j] * kernel[j]);

  Identity43 out;
  out.integral_side = integral.value() * g.weight();
  KahanSum expl;
  for (std::int64_t v = m; v <= 2 * n; ++v) {
    const double sh = std::sin(0.5 * static_cast<double>(v) * t);
    expl.add(f.coeffs.a(v) * sh * sh);
  }
  out.explicit_side = 4.0 * kPi * expl.value();
  // both sides can vanish exactly (sin^2 zeros, or a block above the
  // degree); measure the discrepancy against the coefficient mass then,
  // which is what bounds the quadrature side's roundoff
  KahanSum mass;
  for (std::int64_t v = 1; v <= f.degree(); ++v) mass.add(f.coeffs.a(v));
  const double floor = 1e-6 * 4.0 * kPi * mass.value();
  const double scale =
      std::max({std::abs(out.integral_side), std::abs(out.explicit_side), floor, 1e-300});
  out.rel_err = std::abs(out.integral_side - out.explicit_side) / scale;
  return out;
}

/// omega_p, omega_p^* and E_n along a scale schedule.
struct SmoothnessProfile {
  std::vector<std::int64_t> schedule;
  std::vector<double> omega;
  std::vector<double> omega_star;
  std::vector<double> best_approx;
  bool best_exact = false;
};

inline SmoothnessProfile smoothness_profile(const TrigPoly& f, double p,
                                            std::span<const std::int64_t> schedule, const Grid& g,
                                            int t_steps = 64,
                                            NormMethod method = NormMethod::automatic) {
  SmoothnessProfile out;
  out.best_exact = (p == 2.0);
  for (std::int64_t n : schedule) {
    if (n < 1) throw std::invalid_argument("smoothness_profile: schedule entries must be >= 1");
    const double h = 1.0 / static_cast<double>(n);
    out.schedule.push_back(n);
    out.omega.push_back(modulus(f, p, h, g, t_steps, method));
    out.omega_star.push_back(modulus_star(f, p, h, g, t_steps, method));
    out.best_approx.push_back(best_approx(f, n, p, g).value);
  }
  return out;
}

}  // namespace nbvslab
