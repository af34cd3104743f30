#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nbvslab/seqclass.hpp"
#include "nbvslab/summation.hpp"

namespace nbvslab {

enum class IneqStatus { evaluated, skipped };

/// One evaluated inequality instance. When the asserted constant is
/// explicit (e.g. p^p) `holds` compares lhs against constant * rhs;
/// for existential constants it just records whether the ratio is finite.
struct IneqReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  double constant_bound = std::numeric_limits<double>::quiet_NaN();
  bool holds = true;
  IneqStatus status = IneqStatus::evaluated;
  std::string note;
};

struct AnalysisParams {
  double p = 2.0;
  double r = 1.0;
  std::int64_t n = 1;
  double h = kPi;

  void validate() const {
    if (!(p > 1.0)) throw std::invalid_argument("AnalysisParams: p must exceed 1");
    if (!(r >= 1.0)) throw std::invalid_argument("AnalysisParams: r must be >= 1");
    if (n < 1) throw std::invalid_argument("AnalysisParams: n must be >= 1");
    if (!(h > 0.0 && h <= kPi)) throw std::invalid_argument("AnalysisParams: h must lie in (0, pi]");
  }
};

namespace detail {

inline double ineq_ratio(double num, double den) {
  if (num == 0.0 && den == 0.0) return 0.0;
  if (den == 0.0) return kInf;
  return num / den;
}

inline void require_nonnegative(std::span<const double> xs, const char* who) {
  for (double x : xs)
    if (!(x >= 0.0)) throw std::invalid_argument(std::string(who) + ": entries must be nonnegative");
}

inline std::vector<std::size_t> positive_indices(std::span<const double> xs) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (xs[i] > 0.0) idx.push_back(i);
  return idx;
}

// |a_k - a_{k+1}| honoring the tail model at the truncation boundary
inline double abs_diff_extended(const CoeffSeq& a, std::int64_t k) {
  return std::abs(a.a(k) - a.at_extended(k + 1));
}

inline void finish_empirical(IneqReport& rep) {
  rep.ratio = ineq_ratio(rep.lhs, rep.rhs);
  rep.holds = std::isfinite(rep.ratio);
}

}  // namespace detail

/// One-sided Hardy inequality, ascending form:
///   sum_n lambda_n (sum_{k<=n} alpha_k)^p  <=  p^p * (weighted block sum).
/// Holds unconditionally for nonnegative data; `rel_tol` absorbs roundoff.
inline IneqReport hardy_33(std::span<const double> lambda, std::span<const double> alpha,
                           double p, double rel_tol = 1e-9) {
  if (!(p > 1.0)) throw std::invalid_argument("hardy_33: p must exceed 1");
  detail::require_nonnegative(lambda, "hardy_33");
  detail::require_nonnegative(alpha, "hardy_33");

  KahanSum lhs;
  KahanSum alpha_prefix;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i < alpha.size()) alpha_prefix.add(alpha[i]);
    if (lambda[i] > 0.0) lhs.add(lambda[i] * std::pow(alpha_prefix.value(), p));
  }

  const auto nu = detail::positive_indices(lambda);
  std::vector<double> lambda_suffix(lambda.size() + 1, 0.0);
  {
    KahanSum s;
    for (std::size_t i = lambda.size(); i-- > 0;) {
      s.add(lambda[i]);
      lambda_suffix[i] = s.value();
    }
  }

  KahanSum rhs;
  std::size_t block_begin = 0;  // alpha block (nu_{j-1}, nu_j] as 0-based [begin, nu_j]
  for (std::size_t j = 0; j < nu.size(); ++j) {
    const std::size_t v = nu[j];
    KahanSum block;
    for (std::size_t k = block_begin; k <= v && k < alpha.size(); ++k) block.add(alpha[k]);
    rhs.add(std::pow(lambda[v], 1.0 - p) * std::pow(lambda_suffix[v], p) *
            std::pow(block.value(), p));
    block_begin = v + 1;
  }

  IneqReport rep;
  rep.lhs = lhs.value();
  rep.rhs = rhs.value();
  rep.ratio = detail::ineq_ratio(rep.lhs, rep.rhs);
  rep.constant_bound = std::pow(p, p);
  rep.holds = rep.lhs <= rep.constant_bound * rep.rhs * (1.0 + rel_tol);
  return rep;
}

/// Companion tail form:
///   sum_n lambda_n (sum_{k>=n} alpha_k)^p  <=  p^p * (weighted block sum),
/// with the final alpha block running to the end of the data.
inline IneqReport hardy_34(std::span<const double> lambda, std::span<const double> alpha,
                           double p, double rel_tol = 1e-9) {
  if (!(p > 1.0)) throw std::invalid_argument("hardy_34: p must exceed 1");
  detail::require_nonnegative(lambda, "hardy_34");
  detail::require_nonnegative(alpha, "hardy_34");

  const std::size_t len = std::max(lambda.size(), alpha.size());
  std::vector<double> alpha_suffix(len + 1, 0.0);
  {
    KahanSum s;
    for (std::size_t i = len; i-- > 0;) {
      if (i < alpha.size()) s.add(alpha[i]);
      alpha_suffix[i] = s.value();
    }
  }

  KahanSum lhs;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (lambda[i] > 0.0) lhs.add(lambda[i] * std::pow(alpha_suffix[i], p));

  const auto nu = detail::positive_indices(lambda);
  KahanSum rhs;
  KahanSum lambda_prefix;
  std::size_t consumed = 0;
  for (std::size_t j = 0; j < nu.size(); ++j) {
    const std::size_t v = nu[j];
    while (consumed <= v) lambda_prefix.add(lambda[consumed++]);
    const std::size_t block_end = (j + 1 < nu.size()) ? nu[j + 1] : len;  // [v, block_end)
    KahanSum block;
    for (std::size_t k = v; k < block_end && k < alpha.size(); ++k) block.add(alpha[k]);
    rhs.add(std::pow(lambda[v], 1.0 - p) * std::pow(lambda_prefix.value(), p) *
            std::pow(block.value(), p));
  }

  IneqReport rep;
  rep.lhs = lhs.value();
  rep.rhs = rhs.value();
  rep.ratio = detail::ineq_ratio(rep.lhs, rep.rhs);
  rep.constant_bound = std::pow(p, p);
  rep.holds = rep.lhs <= rep.constant_bound * rep.rhs * (1.0 + rel_tol);
  return rep;
}

/// Tail variation against the four-point-plus-average majorant:
///   sum_{k>=n} |Delta a_k|  vs  a_n + a_{2n} + a_{4n} + sum_{k>=n} a_k / k.
inline IneqReport tail_variation_bound(const CoeffSeq& a, std::int64_t n) {
  const std::int64_t size = a.size();
  if (n < 1 || n > size) throw std::out_of_range("tail_variation_bound: n out of range");

  if (a.tail().present && a.tail().log_exponent > 0.0) {
    // variation of the analytic tail below assumes it decays monotonically
    const double x = static_cast<double>(size + 1);
    if (a.tail().exponent * std::log(std::exp(1.0) + x) < a.tail().log_exponent)
      throw std::invalid_argument("tail_variation_bound: tail model not monotone past N");
  }

  KahanSum lhs;
  for (std::int64_t k = n; k < size; ++k) lhs.add(std::abs(a.a(k) - a.a(k + 1)));
  lhs.add(detail::abs_diff_extended(a, size));
  lhs.add(a.at_extended(size + 1));  // telescoped variation of the monotone tail

  KahanSum rhs;
  rhs.add(a.at_extended(n));
  rhs.add(a.at_extended(2 * n));
  rhs.add(a.at_extended(4 * n));
  for (std::int64_t k = n; k <= size; ++k) rhs.add(a.a(k) / static_cast<double>(k));
  rhs.add(a.tail_power_sum(-1.0, 1.0));

  IneqReport rep;
  rep.lhs = lhs.value();
  rep.rhs = rhs.value();
  detail::finish_empirical(rep);
  return rep;
}

namespace detail {

// shared right side of the two weighted-variation bounds:
// n^{-p} sum_{v<n} v^{2p-2} a_v^p + sum_{v>=n} v^{p-2} a_v^p
inline double weighted_tail_rhs(const CoeffSeq& a, std::int64_t n, double p) {
  KahanSum head;
  for (std::int64_t v = 1; v < n; ++v)
    head.add(std::pow(static_cast<double>(v), 2.0 * p - 2.0) * std::pow(a.a(v), p));
  KahanSum tail;
  for (std::int64_t v = n; v <= a.size(); ++v)
    tail.add(std::pow(static_cast<double>(v), p - 2.0) * std::pow(a.a(v), p));
  tail.add(a.tail_power_sum(p - 2.0, p));
  return std::pow(static_cast<double>(n), -p) * head.value() + tail.value();
}

}  // namespace detail

/// Weighted variation bound, inner sums ascending from 1:
///   n^{-p} sum_{m<n} m^{-2} (sum_{v<=m} v^2 |Delta a_v|)^p  vs  weighted_tail_rhs.
inline IneqReport lemma5_bound(const CoeffSeq& a, std::int64_t n, double p) {
  if (n < 2 || n > a.size()) throw std::out_of_range("lemma5_bound: n out of range");
  if (!(p > 1.0)) throw std::invalid_argument("lemma5_bound: p must exceed 1");

  KahanSum lhs;
  KahanSum inner;  // sum_{v<=m} v^2 |Delta a_v|
  for (std::int64_t m = 1; m < n; ++m) {
    inner.add(std::pow(static_cast<double>(m), 2.0) * detail::abs_diff_extended(a, m));
    lhs.add(std::pow(static_cast<double>(m), -2.0) * std::pow(inner.value(), p));
  }

  IneqReport rep;
  rep.lhs = std::pow(static_cast<double>(n), -p) * lhs.value();
  rep.rhs = detail::weighted_tail_rhs(a, n, p);
  detail::finish_empirical(rep);
  return rep;
}

/// Weighted variation bound, inner sums descending to n:
///   n^{-p} sum_{m<n} m^{p-2} (sum_{v=m+1}^{n} v |Delta a_v|)^p  vs  weighted_tail_rhs.
inline IneqReport lemma6_bound(const CoeffSeq& a, std::int64_t n, double p) {
  if (n < 2 || n > a.size()) throw std::out_of_range("lemma6_bound: n out of range");
  if (!(p > 1.0)) throw std::invalid_argument("lemma6_bound: p must exceed 1");

  std::vector<double> inner(static_cast<std::size_t>(n), 0.0);  // inner[m] for m = n-1 .. 1
  {
    KahanSum s;
    for (std::int64_t m = n - 1; m >= 1; --m) {
      s.add(static_cast<double>(m + 1) * detail::abs_diff_extended(a, m + 1));
      inner[static_cast<std::size_t>(m)] = s.value();
    }
  }
  KahanSum lhs;
  for (std::int64_t m = 1; m < n; ++m)
    lhs.add(std::pow(static_cast<double>(m), p - 2.0) *
            std::pow(inner[static_cast<std::size_t>(m)], p));

  IneqReport rep;
  rep.lhs = std::pow(static_cast<double>(n), -p) * lhs.value();
  rep.rhs = detail::weighted_tail_rhs(a, n, p);
  detail::finish_empirical(rep);
  return rep;
}

struct BlockMeanReports {
  IneqReport point_vs_mean;   // a_n vs n^{-1} sum_{k=[n/2]+1}^{2n-2} a_k
  IneqReport block_vs_point;  // sum_{k=[n/2]}^{2n} a_k vs n a_n (lower bound)
};

inline BlockMeanReports block_mean_bound(const CoeffSeq& a, std::int64_t n) {
  if (n < 2 || n > a.size()) throw std::out_of_range("block_mean_bound: n out of range");
  BlockMeanReports out;

  {
    KahanSum s;
    for (std::int64_t k = n / 2 + 1; k <= 2 * n - 2; ++k) s.add(a.at_extended(k));
    out.point_vs_mean.lhs = a.a(n);
    out.point_vs_mean.rhs = s.value() / static_cast<double>(n);
    detail::finish_empirical(out.point_vs_mean);
  }
  {
    KahanSum s;
    for (std::int64_t k = std::max<std::int64_t>(1, n / 2); k <= 2 * n; ++k)
      s.add(a.at_extended(k));
    out.block_vs_point.lhs = s.value();
    out.block_vs_point.rhs = static_cast<double>(n) * a.a(n);
    if (a.a(n) == 0.0) {
      out.block_vs_point.status = IneqStatus::skipped;
      out.block_vs_point.note = "a_n = 0; lower-bound ratio undefined";
      out.block_vs_point.ratio = 0.0;
    } else {
      detail::finish_empirical(out.block_vs_point);
    }
  }
  return out;
}

struct ConvergencePolicy {
  double increment_ratio = 0.9;  // dyadic increments must decay at least this fast
  int window = 3;                // number of trailing ratios examined
  double tiny_rel = 1e-14;       // increments below tiny_rel*max(1,|S|) count as zero
};

enum class SumVerdict { convergent, divergent };

inline const char* to_string(SumVerdict v) {
  return v == SumVerdict::convergent ? "convergent" : "divergent";
}

/// Convergence heuristic on a doubling schedule of partial sums: the last
/// `window` increment-magnitude ratios must all be <= increment_ratio.
inline SumVerdict classify_partial_sums(std::span<const double> partial,
                                        const ConvergencePolicy& pol = {}) {
  if (partial.size() < 2) return SumVerdict::convergent;
  const double tiny =
      pol.tiny_rel * std::max(1.0, std::abs(partial.back()));
  std::vector<double> inc;
  for (std::size_t i = 1; i < partial.size(); ++i)
    inc.push_back(std::abs(partial[i] - partial[i - 1]));
  const std::size_t first =
      inc.size() > static_cast<std::size_t>(pol.window) ? inc.size() - pol.window : 1;
  for (std::size_t i = first; i < inc.size(); ++i) {
    const double prev = inc[i - 1], cur = inc[i];
    double ratio;
    if (prev <= tiny)
      ratio = cur <= tiny ? 0.0 : kInf;
    else
      ratio = cur / prev;
    if (!(ratio <= pol.increment_ratio)) return SumVerdict::divergent;
  }
  return SumVerdict::convergent;
}

/// Geometric decay test for a positive sequence (e.g. Cauchy increments):
/// the last `window` successive ratios must be <= max_ratio.
inline bool geometric_decay(std::span<const double> vals, double max_ratio, int window = 3,
                            double tiny_abs = 1e-14) {
  if (vals.size() < 2) return true;
  const std::size_t first =
      vals.size() > static_cast<std::size_t>(window) + 1 ? vals.size() - window - 1 : 0;
  for (std::size_t i = first + 1; i < vals.size(); ++i) {
    const double prev = vals[i - 1], cur = vals[i];
    if (prev <= tiny_abs) {
      if (cur > tiny_abs) return false;
      continue;
    }
    if (!(cur / prev <= max_ratio)) return false;
  }
  return true;
}

enum class CoeffCondition { eq21, eq28 };

struct PartialSumCurve {
  std::vector<std::int64_t> schedule;
  std::vector<double> partial;
  SumVerdict verdict = SumVerdict::convergent;
};

/// Partial sums S_M = sum_{n<=M} n^q a_n^p along a doubling schedule,
/// q = p-2 (eq21 mode) or q = 2p-2 (eq28 mode), plus the convergence verdict.
inline PartialSumCurve coefficient_condition(const CoeffSeq& a, double p, CoeffCondition mode,
                                             const ConvergencePolicy& pol = {}) {
  if (!(p > 1.0)) throw std::invalid_argument("coefficient_condition: p must exceed 1");
  const double q = (mode == CoeffCondition::eq21) ? p - 2.0 : 2.0 * p - 2.0;

  PartialSumCurve curve;
  for (std::int64_t m = 8; m <= a.size(); m *= 2) curve.schedule.push_back(m);
  if (curve.schedule.empty()) curve.schedule.push_back(a.size());

  KahanSum s;
  std::size_t next = 0;
  for (std::int64_t n = 1; n <= a.size() && next < curve.schedule.size(); ++n) {
    s.add(std::pow(static_cast<double>(n), q) * std::pow(a.a(n), p));
    while (next < curve.schedule.size() && curve.schedule[next] == n) {
      curve.partial.push_back(s.value());
      ++next;
    }
  }
  curve.verdict = classify_partial_sums(curve.partial, pol);
  return curve;
}

}  // namespace nbvslab
