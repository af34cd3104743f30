#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "nbvslab/summation.hpp"

namespace nbvslab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Analytic continuation of a coefficient sequence past its stored prefix:
/// a_k = scale * k^{-exponent} * (log(e+k))^{log_exponent} for k > N.
/// Sequences without a model have an exact zero tail.
struct TailModel {
  bool present = false;
  double scale = 0.0;
  double exponent = 0.0;
  double log_exponent = 0.0;
};

/// Finite nonnegative coefficient prefix a_1..a_N. Consumers treat indices
/// beyond N as exactly zero unless they opt into the tail model.
class CoeffSeq {
 public:
  explicit CoeffSeq(std::vector<double> values, TailModel tail = {})
      : values_(std::move(values)), tail_(tail) {
    if (values_.empty()) throw std::invalid_argument("CoeffSeq: N must be >= 1");
    for (double v : values_)
      if (!(v >= 0.0)) throw std::invalid_argument("CoeffSeq: entries must be nonnegative");
  }

  std::int64_t size() const { return static_cast<std::int64_t>(values_.size()); }

  /// a_n with the zero-tail convention (1-indexed).
  double a(std::int64_t n) const {
    if (n < 1) throw std::out_of_range("CoeffSeq: index must be >= 1");
    return n <= size() ? values_[static_cast<std::size_t>(n - 1)] : 0.0;
  }

  /// a_n continued by the tail model past N (equals a(n) without one).
  double at_extended(std::int64_t n) const {
    if (n <= size()) return a(n);
    if (!tail_.present) return 0.0;
    const double x = static_cast<double>(n);
    const double l = std::log(std::exp(1.0) + x);
    return tail_.scale * std::pow(x, -tail_.exponent) *
           (tail_.log_exponent == 0.0 ? 1.0 : std::pow(l, tail_.log_exponent));
  }

  /// sum_{k > N} k^q a_k^p via the tail model; 0 for zero-tail sequences.
  double tail_power_sum(double q, double p) const {
    if (!tail_.present || tail_.scale == 0.0) return 0.0;
    const double s = tail_.exponent * p - q;
    const double t = tail_.log_exponent * p;
    return std::pow(tail_.scale, p) * powlog_tail(s, t, size() + 1);
  }

  /// Last index with a positive entry; 0 for the all-zero sequence.
  std::int64_t last_support() const {
    for (std::int64_t n = size(); n >= 1; --n)
      if (values_[static_cast<std::size_t>(n - 1)] > 0.0) return n;
    return 0;
  }

  const std::vector<double>& values() const { return values_; }
  const TailModel& tail() const { return tail_; }

 private:
  std::vector<double> values_;
  TailModel tail_;
};

/// Forward differences Delta a_n = a_n - a_{n+1}, n = 1..N, with a_{N+1} = 0;
/// in particular Delta a_N = a_N.
inline std::vector<double> diff_sequence(const CoeffSeq& a) {
  const std::int64_t n = a.size();
  std::vector<double> d(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= n; ++i)
    d[static_cast<std::size_t>(i - 1)] = a.a(i) - (i < n ? a.a(i + 1) : 0.0);
  return d;
}

inline CoeffSeq scaled(const CoeffSeq& a, double c) {
  if (!(c > 0.0)) throw std::invalid_argument("scaled: factor must be positive");
  std::vector<double> v = a.values();
  for (double& x : v) x *= c;
  TailModel t = a.tail();
  t.scale *= c;
  return CoeffSeq(std::move(v), t);
}

enum class FamilyKind {
  power,           // a_n = n^{-beta}
  power_log,       // a_n = n^{-beta} (log(e+n))^{log_exponent}
  block_witness,   // a_n = rho^{k+1} on [4^k, 2*4^k], 0 in the gaps
  alternating,     // a_n = level for n even, 0 for n odd
  monotone_custom, // seeded random nonincreasing values
  explicit_values,
};

struct SeqFamily {
  FamilyKind kind = FamilyKind::power;
  std::int64_t n = 1;
  double beta = 1.0;
  double log_exponent = 0.0;
  double rho = 0.5;
  double level = 1.0;
  std::uint64_t seed = 1;
  std::vector<double> values;
};

inline CoeffSeq generate_family(const SeqFamily& spec) {
  if (spec.n < 1) throw std::invalid_argument("generate_family: N must be >= 1");
  const auto n = static_cast<std::size_t>(spec.n);
  std::vector<double> v(n, 0.0);
  switch (spec.kind) {
    case FamilyKind::power:
    case FamilyKind::power_log: {
      if (!(spec.beta > 0.0)) throw std::invalid_argument("generate_family: beta must be > 0");
      for (std::size_t i = 0; i < n; ++i) {
        const double x = static_cast<double>(i + 1);
        v[i] = std::pow(x, -spec.beta);
        if (spec.kind == FamilyKind::power_log && spec.log_exponent != 0.0)
          v[i] *= std::pow(std::log(std::exp(1.0) + x), spec.log_exponent);
      }
      TailModel tail{true, 1.0, spec.beta,
                     spec.kind == FamilyKind::power_log ? spec.log_exponent : 0.0};
      return CoeffSeq(std::move(v), tail);
    }
    case FamilyKind::block_witness: {
      if (!(spec.rho > 0.0 && spec.rho < 1.0))
        throw std::invalid_argument("generate_family: rho must lie in (0,1)");
      for (std::int64_t k = 0;; ++k) {
        const double lo = std::pow(4.0, static_cast<double>(k));
        if (lo > static_cast<double>(spec.n)) break;
        const auto first = static_cast<std::int64_t>(lo);
        const auto last = std::min<std::int64_t>(2 * first, spec.n);
        const double value = std::pow(spec.rho, static_cast<double>(k + 1));
        for (std::int64_t i = first; i <= last; ++i)
          v[static_cast<std::size_t>(i - 1)] = value;
      }
      return CoeffSeq(std::move(v));
    }
    case FamilyKind::alternating: {
      if (!(spec.level > 0.0)) throw std::invalid_argument("generate_family: level must be > 0");
      for (std::size_t i = 0; i < n; ++i)
        if ((i + 1) % 2 == 0) v[i] = spec.level;
      return CoeffSeq(std::move(v));
    }
    case FamilyKind::monotone_custom: {
      std::mt19937_64 rng(spec.seed);
      std::uniform_real_distribution<double> uni(0.0, 1.0);
      for (auto& x : v) x = uni(rng);
      std::sort(v.begin(), v.end(), std::greater<>());
      // occasionally zero a suffix so audits also see finite-support cases
      if (n >= 4 && rng() % 4 == 0) {
        const std::size_t cut = n - n / 4;
        std::fill(v.begin() + static_cast<std::ptrdiff_t>(cut), v.end(), 0.0);
      }
      return CoeffSeq(std::move(v));
    }
    case FamilyKind::explicit_values: {
      if (spec.values.size() != n)
        throw std::invalid_argument("generate_family: explicit values must have length N");
      return CoeffSeq(spec.values);
    }
  }
  throw std::logic_error("generate_family: unknown kind");
}

struct ClassStat {
  double k_min = 0.0;
  std::int64_t witness = 0;
  bool stable = true;
};

/// Minimal constants for the four variation classes on one truncation.
struct ClassReport {
  ClassStat rbvs, cqms, gbvs, nbvs;
};

namespace detail {

inline double class_ratio(double num, double den) {
  if (num == 0.0 && den == 0.0) return 0.0;
  if (den == 0.0) return kInf;
  return num / den;
}

inline void take_sup(ClassStat& st, double ratio, std::int64_t index) {
  if (ratio > st.k_min) {
    st.k_min = ratio;
    st.witness = index;
  }
}

}  // namespace detail

/// Class constants as suprema of the defining ratios.
///
/// RBVS and CQMS range over every index of the prefix (the zero tail makes
/// their right-hand data exact). The GBVS/NBVS block ratios are taken over
/// n with 2n <= N only: a truncation cannot certify a block it does not
/// fully contain, and clipped blocks would charge truncation edges to the
/// sequence itself.
inline ClassReport classify(const CoeffSeq& a) {
  const std::int64_t n = a.size();
  const std::vector<double> d = diff_sequence(a);

  // ascending prefix sums of |Delta a|; shared prefixes keep the
  // RBVS >= GBVS >= NBVS comparisons exact in floating point
  std::vector<double> prefix(static_cast<std::size_t>(n) + 1, 0.0);
  for (std::int64_t i = 1; i <= n; ++i)
    prefix[static_cast<std::size_t>(i)] =
        prefix[static_cast<std::size_t>(i - 1)] + std::abs(d[static_cast<std::size_t>(i - 1)]);

  ClassReport rep;
  for (std::int64_t m = 1; m <= n; ++m) {
    const double num = prefix[static_cast<std::size_t>(n)] - prefix[static_cast<std::size_t>(m - 1)];
    detail::take_sup(rep.rbvs, detail::class_ratio(num, a.a(m)), m);
  }
  for (std::int64_t k = 1; 2 * k <= n; ++k) {
    const double num =
        prefix[static_cast<std::size_t>(2 * k)] - prefix[static_cast<std::size_t>(k - 1)];
    detail::take_sup(rep.gbvs, detail::class_ratio(num, a.a(k)), k);
    detail::take_sup(rep.nbvs, detail::class_ratio(num, a.a(k) + a.a(2 * k)), k);
  }

  const std::int64_t support = a.last_support();
  for (std::int64_t m = 1; m < support; ++m) {
    const double cur = a.a(m), next = a.a(m + 1);
    if (cur == 0.0 && next > 0.0) {
      detail::take_sup(rep.cqms, kInf, m);
      break;
    }
    if (next > cur)
      detail::take_sup(rep.cqms, static_cast<double>(m) * (next - cur) / cur, m);
  }
  return rep;
}

struct FamilyClassification {
  ClassReport base;     // at N, with stability flags filled in
  ClassReport doubled;  // at 2N
};

namespace detail {

inline bool stat_stable(const ClassStat& at_n, const ClassStat& at_2n, double factor) {
  if (std::isinf(at_n.k_min)) return std::isinf(at_2n.k_min);
  if (std::isinf(at_2n.k_min)) return false;
  return at_2n.k_min <= factor * at_n.k_min;
}

}  // namespace detail

/// Classify a family at N and 2N; a class constant is "stable" when it does
/// not grow by more than `stability_factor` under the doubling.
inline FamilyClassification classify_family(const SeqFamily& spec, double stability_factor = 1.1) {
  SeqFamily twice = spec;
  twice.n = 2 * spec.n;
  if (spec.kind == FamilyKind::explicit_values)
    throw std::invalid_argument("classify_family: explicit sequences have no extension rule");
  FamilyClassification out;
  out.base = classify(generate_family(spec));
  out.doubled = classify(generate_family(twice));
  out.base.rbvs.stable = detail::stat_stable(out.base.rbvs, out.doubled.rbvs, stability_factor);
  out.base.cqms.stable = detail::stat_stable(out.base.cqms, out.doubled.cqms, stability_factor);
  out.base.gbvs.stable = detail::stat_stable(out.base.gbvs, out.doubled.gbvs, stability_factor);
  out.base.nbvs.stable = detail::stat_stable(out.base.nbvs, out.doubled.nbvs, stability_factor);
  return out;
}

inline bool nbvs_stable(const FamilyClassification& fc) {
  return std::isfinite(fc.base.nbvs.k_min) && fc.base.nbvs.stable;
}

struct AuditResult {
  bool chain_ok = false;
  ClassReport report;
};

/// Checks K(RBVS) >= K(GBVS) >= K(NBVS) as extended reals.
inline AuditResult embedding_audit(const CoeffSeq& a) {
  AuditResult res;
  res.report = classify(a);
  res.chain_ok = res.report.rbvs.k_min >= res.report.gbvs.k_min &&
                 res.report.gbvs.k_min >= res.report.nbvs.k_min;
  return res;
}

}  // namespace nbvslab
