#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "nbvslab/discrete_ineq.hpp"
#include "nbvslab/smoothness_integral.hpp"
#include "nbvslab/trigseries.hpp"
#include "nbvslab/weights.hpp"

namespace nbvslab {

enum class Trend { bounded, growing, decaying };

inline const char* to_string(Trend t) {
  switch (t) {
    case Trend::bounded: return "bounded";
    case Trend::growing: return "growing";
    case Trend::decaying: return "decaying";
  }
  return "?";
}

struct TrendPolicy {
  double growth_factor = 1.15;  // per-doubling change that counts as growth
  int window = 3;               // trailing points examined
};

/// Trend of a ratio sequence across a doubling ladder, judged on the last
/// `window` points: growing iff every step gains >= growth_factor, decaying
/// symmetrically, otherwise bounded.
inline Trend classify_trend(std::span<const double> ratios, const TrendPolicy& pol = {}) {
  const std::size_t n = ratios.size();
  if (n < 2) return Trend::bounded;
  const std::size_t first = n > static_cast<std::size_t>(pol.window)
                                ? n - static_cast<std::size_t>(pol.window)
                                : 0;
  bool all_up = true, all_down = true;
  for (std::size_t i = first + 1; i < n; ++i) {
    const double prev = ratios[i - 1], cur = ratios[i];
    if (std::isinf(cur) && !std::isinf(prev)) return Trend::growing;
    const double step = prev == 0.0 ? (cur == 0.0 ? 1.0 : kInf) : cur / prev;
    if (!(step >= pol.growth_factor)) all_up = false;
    if (!(step <= 1.0 / pol.growth_factor)) all_down = false;
  }
  if (all_up) return Trend::growing;
  if (all_down) return Trend::decaying;
  return Trend::bounded;
}

struct SweepPoint {
  double scale = 0.0;  // the ladder coordinate (n or h)
  IneqReport report;
};

/// One inequality swept across a scale ladder; the trend verdict is the
/// testable surrogate for "holds with some constant K".
struct SweepResult {
  std::string check_id;
  std::vector<SweepPoint> points;
  Trend trend = Trend::bounded;
  double k_sup = 0.0;   // sup of lhs / rhs over the ladder
  double k1_est = 0.0;  // sup of lhs against the first rhs term, when split
  double k2_est = 0.0;  // sup of lhs against the second rhs term
  bool skipped = false;
  std::string skip_reason;

  std::vector<double> ratios() const {
    std::vector<double> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(p.report.ratio);
    return out;
  }
};

struct TheoremConfig {
  std::vector<std::int64_t> n_ladder{8, 16, 32, 64, 128, 256};
  std::vector<double> h_ladder{};  // empty: use 1/n over n_ladder
  std::int64_t family_n = 1024;    // truncation degree of the sum-function
  std::int64_t condition_n = 1 << 14;  // truncation for coefficient-sum verdicts
  std::int64_t grid_m = 1 << 13;
  int t_steps = 64;
  NormMethod method = NormMethod::automatic;
  TrendPolicy trend{};
  ConvergencePolicy convergence{};
  double stability_factor = 1.1;
  double cauchy_decay_ratio = 0.95;
  double s_offset = 0.25;  // equivalence-list parameter s = 1/p - 1/r + s_offset
  double lip_variation_tol = 0.20;  // Lipschitz dichotomy: bounded band width
  double lip_growth_min = 0.30;     // Lipschitz dichotomy: required end-to-end growth
  std::vector<std::int64_t> truncation_ladder{64, 128, 256, 512, 1024};
  IntegralOptions integral{};

  std::vector<double> effective_h_ladder() const {
    if (!h_ladder.empty()) return h_ladder;
    std::vector<double> out;
    for (std::int64_t n : n_ladder) out.push_back(1.0 / static_cast<double>(n));
    return out;
  }
};

namespace detail {

// explicit sequences carry no extension rule: they are their own
// truncation at any requested length, and a finite vector always has
// finite class constants, so the stability precondition is vacuous
inline CoeffSeq family_truncation(const SeqFamily& fam, std::int64_t n) {
  if (fam.kind == FamilyKind::explicit_values) return generate_family(fam);
  SeqFamily t = fam;
  t.n = n;
  return generate_family(t);
}

inline bool family_nbvs_stable(const SeqFamily& fam, double factor) {
  if (fam.kind == FamilyKind::explicit_values)
    return std::isfinite(classify(generate_family(fam)).nbvs.k_min);
  return nbvs_stable(classify_family(fam, factor));
}

inline double head_sum(const CoeffSeq& a, std::int64_t n, double p) {
  KahanSum s;
  for (std::int64_t v = 1; v < n; ++v)
    s.add(std::pow(static_cast<double>(v), 2.0 * p - 2.0) * std::pow(a.a(v), p));
  return s.value();
}

inline double tail_sum(const CoeffSeq& a, std::int64_t n, double p) {
  KahanSum s;
  for (std::int64_t v = n; v <= a.size(); ++v)
    s.add(std::pow(static_cast<double>(v), p - 2.0) * std::pow(a.a(v), p));
  s.add(a.tail_power_sum(p - 2.0, p));
  return s.value();
}

inline void finish_sweep(SweepResult& sw, const TrendPolicy& pol) {
  sw.trend = classify_trend(sw.ratios(), pol);
  for (const auto& pt : sw.points) sw.k_sup = std::max(sw.k_sup, pt.report.ratio);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Lemma sweeps (shared by the CLI and the acceptance suite)

enum class LemmaId { hardy_ascending, hardy_tail, tail_variation, weighted5, weighted6, mean38, mean42 };

inline SweepResult lemma_sweep(LemmaId id, const CoeffSeq& a, double p, const TheoremConfig& cfg) {
  SweepResult sw;
  for (std::int64_t n : cfg.n_ladder) {
    SweepPoint pt;
    pt.scale = static_cast<double>(n);
    switch (id) {
      case LemmaId::tail_variation: pt.report = tail_variation_bound(a, n); break;
      case LemmaId::weighted5: pt.report = lemma5_bound(a, n, p); break;
      case LemmaId::weighted6: pt.report = lemma6_bound(a, n, p); break;
      case LemmaId::mean38: pt.report = block_mean_bound(a, n).point_vs_mean; break;
      case LemmaId::mean42: pt.report = block_mean_bound(a, n).block_vs_point; break;
      default: throw std::invalid_argument("lemma_sweep: hardy suites are not ladder sweeps");
    }
    sw.points.push_back(std::move(pt));
  }
  detail::finish_sweep(sw, cfg.trend);
  return sw;
}

struct HardySuiteResult {
  int total = 0;
  int held = 0;
  double worst_ratio = 0.0;  // max over trials of lhs / (p^p rhs)
};

/// Randomized unconditional suite for the two Hardy forms.
inline HardySuiteResult hardy_suite(LemmaId which, int count, double p, std::uint64_t seed,
                                    int len_max = 64, double rel_tol = 1e-9) {
  if (which != LemmaId::hardy_ascending && which != LemmaId::hardy_tail)
    throw std::invalid_argument("hardy_suite: expects a hardy lemma id");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 4.0);
  HardySuiteResult res;
  res.total = count;
  for (int trial = 0; trial < count; ++trial) {
    const auto draw = [&](std::vector<double>& v) {
      v.resize(1 + rng() % static_cast<std::uint64_t>(len_max));
      for (auto& x : v) x = (rng() % 4 == 0) ? 0.0 : uni(rng);
    };
    std::vector<double> lam, alf;
    draw(lam);
    draw(alf);
    const IneqReport rep = which == LemmaId::hardy_ascending ? hardy_33(lam, alf, p, rel_tol)
                                                             : hardy_34(lam, alf, p, rel_tol);
    if (rep.holds) ++res.held;
    if (rep.rhs > 0.0)
      res.worst_ratio = std::max(res.worst_ratio, rep.lhs / (rep.constant_bound * rep.rhs));
  }
  return res;
}

// ---------------------------------------------------------------------------
// Theorem 1

struct Theorem1Result {
  bool skipped = false;
  std::string skip_reason;
  SweepResult cosine, sine;
};

/// First-modulus bound against the split coefficient sums, both parities.
inline Theorem1Result verify_theorem1(const SeqFamily& family, double p,
                                      const TheoremConfig& cfg) {
  Theorem1Result out;

  if (!detail::family_nbvs_stable(family, cfg.stability_factor)) {
    out.skipped = true;
    out.skip_reason = "family is not NBVS-stable on this truncation";
    return out;
  }
  if (coefficient_condition(detail::family_truncation(family, cfg.condition_n), p,
                            CoeffCondition::eq21, cfg.convergence)
          .verdict != SumVerdict::convergent) {
    out.skipped = true;
    out.skip_reason = "coefficient sum sum n^{p-2} a_n^p diverges";
    return out;
  }

  const CoeffSeq a = detail::family_truncation(family, cfg.family_n);
  const Grid grid(cfg.grid_m);

  for (Parity parity : {Parity::cosine, Parity::sine}) {
    const TrigPoly f{parity, a};
    SweepResult sw;
    for (std::int64_t n : cfg.n_ladder) {
      const double term1 = std::pow(detail::head_sum(a, n, p), 1.0 / p) / static_cast<double>(n);
      const double term2 = std::pow(detail::tail_sum(a, n, p), 1.0 / p);
      SweepPoint pt;
      pt.scale = static_cast<double>(n);
      pt.report.lhs = modulus(f, p, 1.0 / static_cast<double>(n), grid, cfg.t_steps, cfg.method);
      pt.report.rhs = term1 + term2;
      detail::finish_empirical(pt.report);
      sw.points.push_back(pt);
      if (term1 > 0.0) sw.k1_est = std::max(sw.k1_est, pt.report.lhs / term1);
      if (term2 > 0.0) sw.k2_est = std::max(sw.k2_est, pt.report.lhs / term2);
    }
    detail::finish_sweep(sw, cfg.trend);
    (parity == Parity::cosine ? out.cosine : out.sine) = std::move(sw);
  }
  out.cosine.check_id = "theorem1/cosine";
  out.sine.check_id = "theorem1/sine";
  return out;
}

// ---------------------------------------------------------------------------
// Theorem 2

struct Theorem2Result {
  bool skipped = false;          // weight fails the basic doubling hypothesis
  std::string skip_reason;
  DoublingCheck doubling;
  SweepResult cond25, cond26;    // the two summability conditions on the weight
  bool cond25_ok = false, cond26_ok = false;
  SweepResult forward;           // coefficient sum vs I(f, lambda, r, p)
  SweepResult reverse;           // I vs coefficient sum; skipped unless both conditions hold
};

inline Theorem2Result verify_theorem2(const SeqFamily& family, const WeightFn& lam, double r,
                                      double p, const TheoremConfig& cfg) {
  if (!(p > 1.0) || !(r >= 1.0)) throw std::invalid_argument("verify_theorem2: need p > 1, r >= 1");
  Theorem2Result out;
  out.doubling = weight_doubling(lam);
  if (!out.doubling.monotone || !(out.doubling.k1 > 0.0)) {
    out.skipped = true;
    out.skip_reason = "weight is not positive monotone with two-sided doubling";
    return out;
  }

  // head summability (cond25): sum_{n<=m} lambda(n) n^{r/p-r}  vs  lambda(m) m^{r/p-r+1}
  {
    const double e = r / p - r;
    KahanSum acc;
    std::int64_t covered = 0;
    for (std::int64_t m : cfg.truncation_ladder) {
      while (covered < m) {
        ++covered;
        acc.add(lam(static_cast<double>(covered)) * std::pow(static_cast<double>(covered), e));
      }
      SweepPoint pt;
      pt.scale = static_cast<double>(m);
      pt.report.lhs = acc.value();
      pt.report.rhs = lam(static_cast<double>(m)) * std::pow(static_cast<double>(m), e + 1.0);
      detail::finish_empirical(pt.report);
      out.cond25.points.push_back(pt);
    }
    detail::finish_sweep(out.cond25, cfg.trend);
    out.cond25.check_id = "theorem2/cond25";
    out.cond25_ok = out.cond25.trend != Trend::growing;
  }

  // tail summability (cond26): sum_{n>=m} lambda(n) n^{r(1/p-3)}  vs  lambda(m) m^{1+r(1/p-3)}
  {
    const double e = r * (1.0 / p - 3.0);
    const double s = -(lam.power + e);
    bool finite = true;
    for (std::int64_t m : cfg.truncation_ladder) {
      SweepPoint pt;
      pt.scale = static_cast<double>(m);
      pt.report.lhs = lam.scale * powlog_tail(s, lam.log_power, m);
      pt.report.rhs = lam(static_cast<double>(m)) * std::pow(static_cast<double>(m), 1.0 + e);
      detail::finish_empirical(pt.report);
      finite = finite && std::isfinite(pt.report.lhs);
      out.cond26.points.push_back(pt);
    }
    detail::finish_sweep(out.cond26, cfg.trend);
    out.cond26.check_id = "theorem2/cond26";
    out.cond26_ok = finite && out.cond26.trend != Trend::growing;
  }

  // two-sided comparison along the truncation ladder
  const Grid grid(cfg.grid_m);
  for (std::int64_t big_n : cfg.truncation_ladder) {
    const CoeffSeq a = detail::family_truncation(family, big_n);
    const TrigPoly f{Parity::cosine, a};

    KahanSum coeff;
    for (std::int64_t n = 1; n <= big_n; ++n)
      coeff.add(lam(static_cast<double>(n)) * std::pow(a.a(n), r));

    const IntegralResult integral =
        smoothness_integral(f, lam, r, p, cfg.integral, &grid, cfg.method);

    SweepPoint fwd;
    fwd.scale = static_cast<double>(big_n);
    fwd.report.lhs = coeff.value();
    fwd.report.rhs = integral.divergent ? kInf : integral.value;
    detail::finish_empirical(fwd.report);
    if (integral.divergent) fwd.report.note = "integral divergent";
    out.forward.points.push_back(fwd);

    SweepPoint rev;
    rev.scale = fwd.scale;
    rev.report.lhs = fwd.report.rhs;
    rev.report.rhs = fwd.report.lhs;
    detail::finish_empirical(rev.report);
    out.reverse.points.push_back(rev);
  }
  detail::finish_sweep(out.forward, cfg.trend);
  out.forward.check_id = "theorem2/forward24";
  detail::finish_sweep(out.reverse, cfg.trend);
  out.reverse.check_id = "theorem2/reverse27";
  if (!(out.cond25_ok && out.cond26_ok)) {
    out.reverse.skipped = true;
    out.reverse.skip_reason = "weight fails a summability condition; reverse bound not asserted";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Theorem 3

struct FunctionalCurve {
  std::string name;
  std::vector<double> values;  // one per truncation-ladder point
  SumVerdict verdict = SumVerdict::convergent;
};

struct Theorem3Result {
  bool skipped = false;
  std::string skip_reason;
  double phi_square_ratio = 0.0;
  std::vector<FunctionalCurve> functionals;  // the nine equivalent quantities
  bool consistent = false;
};

namespace detail {

// omega_p(f, 1/n) for every n in [1, n_max. For p = 2 this walks the
// coefficient route per n; otherwise it samples octaves and interpolates
// geometrically (classification-grade only).
inline std::vector<double> modulus_curve(const TrigPoly& f, double p, std::int64_t n_max,
                                         const Grid& grid, const TheoremConfig& cfg) {
  std::vector<double> omega(static_cast<std::size_t>(n_max) + 1, 0.0);
  const bool coeff_route =
      cfg.method == NormMethod::coefficients || (cfg.method == NormMethod::automatic && p == 2.0);
  if (coeff_route) {
    for (std::int64_t n = 1; n <= n_max; ++n)
      omega[static_cast<std::size_t>(n)] =
          modulus(f, p, 1.0 / static_cast<double>(n), grid, cfg.t_steps, NormMethod::coefficients);
    return omega;
  }
  std::vector<std::int64_t> nodes{1};
  while (nodes.back() < n_max) nodes.push_back(std::min(n_max, nodes.back() * 2));
  std::vector<double> at(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    at[i] = modulus(f, p, 1.0 / static_cast<double>(nodes[i]), grid, cfg.t_steps, cfg.method);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    std::size_t hi = 0;
    while (nodes[hi] < n) ++hi;
    if (nodes[hi] == n || hi == 0) {
      omega[static_cast<std::size_t>(n)] = at[hi];
    } else {
      const double t = (std::log2(static_cast<double>(n)) - std::log2(static_cast<double>(nodes[hi - 1]))) /
                       (std::log2(static_cast<double>(nodes[hi])) - std::log2(static_cast<double>(nodes[hi - 1])));
      omega[static_cast<std::size_t>(n)] = std::exp((1.0 - t) * std::log(std::max(at[hi - 1], 1e-300)) +
                                                    t * std::log(std::max(at[hi], 1e-300)));
    }
  }
  return omega;
}

inline SumVerdict curve_verdict(const std::vector<double>& values, const ConvergencePolicy& pol) {
  for (double v : values)
    if (!std::isfinite(v)) return SumVerdict::divergent;
  if (classify_partial_sums(values, pol) == SumVerdict::convergent) return SumVerdict::convergent;
  // quadrature wobble on a stabilized curve can defeat the increment test;
  // a narrow relative band over the trailing window still means convergent
  const std::size_t window = static_cast<std::size_t>(pol.window) + 1;
  const std::size_t first = values.size() > window ? values.size() - window : 0;
  double lo = kInf, hi = -kInf;
  for (std::size_t i = first; i < values.size(); ++i) {
    lo = std::min(lo, values[i]);
    hi = std::max(hi, values[i]);
  }
  const double scale = std::max(std::abs(values.back()), 1e-300);
  return (hi - lo) <= 0.10 * scale ? SumVerdict::convergent : SumVerdict::divergent;
}

}  // namespace detail

/// Truncations of the nine equivalent quantities plus the all-agree verdict.
inline Theorem3Result theorem3_functionals(const SeqFamily& family, const PhiWeight& phi, double r,
                                           double p, const TheoremConfig& cfg) {
  if (!(1.0 < p && p < r)) throw std::invalid_argument("theorem3_functionals: need 1 < p < r");
  phi.validate();

  Theorem3Result out;
  out.phi_square_ratio = phi.square_index_ratio();
  if (!detail::family_nbvs_stable(family, cfg.stability_factor)) {
    out.skipped = true;
    out.skip_reason = "family is not NBVS-stable on this truncation";
    return out;
  }

  const double s = 1.0 / p - 1.0 / r + cfg.s_offset;
  const std::vector<std::int64_t>& ladder = cfg.truncation_ladder;
  const std::int64_t n_max = ladder.back();

  const CoeffSeq a = detail::family_truncation(family, n_max);
  const Grid grid(cfg.grid_m);

  out.functionals.assign(9, {});
  auto& F = out.functionals;
  F[0].name = "coeff_power_sum";
  F[1].name = "inner_prefix_sum";
  F[2].name = "inner_tail_sum";
  F[3].name = "modulus_sum";
  F[4].name = "best_approx_sum";
  F[5].name = "integral_capital_phi";
  F[6].name = "integral_phi_of_f";
  F[7].name = "integral_phi_inverse_x";
  F[8].name = "second_difference_integral";

  // F1, F2: single ascending passes with checkpoints at the ladder.
  // The double sum carries outer weight n^{-rs + r/p - 2}: with that sign
  // both power regimes collapse to the F1 threshold for every admissible s,
  // which is what makes the nine statements equivalent.
  {
    KahanSum f1, f2, inner;
    std::size_t next = 0;
    for (std::int64_t n = 1; n <= n_max && next < ladder.size(); ++n) {
      const double x = static_cast<double>(n);
      f1.add(phi.phi(n) * std::pow(x, r - 2.0) * std::pow(a.a(n), r));
      inner.add(std::pow(x, (s + 1.0) * p - 2.0) * std::pow(a.a(n), p));
      f2.add(phi.phi(n) * std::pow(x, -r * s + r / p - 2.0) *
             std::pow(inner.value(), r / p));
      while (next < ladder.size() && ladder[next] == n) {
        F[0].values.push_back(f1.value());
        F[1].values.push_back(f2.value());
        ++next;
      }
    }
  }

  // F3: per truncation, suffix sums within that truncation
  for (std::int64_t big_n : ladder) {
    std::vector<double> suffix(static_cast<std::size_t>(big_n) + 2, 0.0);
    for (std::int64_t k = big_n; k >= 1; --k)
      suffix[static_cast<std::size_t>(k)] =
          suffix[static_cast<std::size_t>(k + 1)] +
          std::pow(static_cast<double>(k), p - 2.0) * std::pow(a.a(k), p);
    KahanSum f3;
    for (std::int64_t n = 1; n <= big_n; ++n)
      f3.add(phi.phi(n) * std::pow(static_cast<double>(n), r / p - 2.0) *
             std::pow(suffix[static_cast<std::size_t>(n)], r / p));
    F[2].values.push_back(f3.value());
  }

  // F4, F5: smoothness and best-approximation sums, each ladder point
  // evaluated against its own truncated sum-function (the fixed deepest
  // truncation would saturate the small-h moduli near the edge)
  {
    const bool coeff_route = cfg.method == NormMethod::coefficients ||
                             (cfg.method == NormMethod::automatic && p == 2.0);
    for (std::int64_t big_n : ladder) {
      const CoeffSeq aj = detail::family_truncation(family, big_n);
      const TrigPoly fj{Parity::cosine, aj};
      const std::vector<double> omega = detail::modulus_curve(fj, p, big_n, grid, cfg);

      std::vector<double> en(static_cast<std::size_t>(big_n) + 1, 0.0);
      if (coeff_route) {
        std::vector<double> suffix(static_cast<std::size_t>(big_n) + 2, 0.0);
        for (std::int64_t k = big_n; k >= 1; --k)
          suffix[static_cast<std::size_t>(k)] =
              suffix[static_cast<std::size_t>(k + 1)] + aj.a(k) * aj.a(k);
        for (std::int64_t n = 1; n <= big_n; ++n)
          en[static_cast<std::size_t>(n)] =
              std::sqrt(kPi * suffix[static_cast<std::size_t>(n + 1)]);
      } else {
        for (std::int64_t n = 1; n <= big_n; ++n)
          en[static_cast<std::size_t>(n)] = best_approx(fj, n, p, grid).value;
      }

      KahanSum f4, f5;
      for (std::int64_t n = 1; n <= big_n; ++n) {
        const double w = phi.phi(n) * std::pow(static_cast<double>(n), r / p - 2.0);
        f4.add(w * std::pow(omega[static_cast<std::size_t>(n)], r));
        f5.add(w * std::pow(en[static_cast<std::size_t>(n)], r));
      }
      F[3].values.push_back(f4.value());
      F[4].values.push_back(f5.value());
    }
  }

  // F6-F8: integrals of the truncated sum-functions over (0, pi]
  for (std::int64_t big_n : ladder) {
    const TrigPoly f{Parity::cosine, detail::family_truncation(family, big_n)};
    const std::vector<double> samples = evaluate(f, grid);
    KahanSum f6, f7, f8;
    const std::int64_t half = grid.size() / 2;
    for (std::int64_t j = 1; j <= half; ++j) {
      const double x = grid.point(j);
      const double av = std::abs(samples[static_cast<std::size_t>(j)]);
      if (av > 0.0) {
        f6.add(std::pow(av, r - r / p + 1.0) * phi.capital_phi(av, r / p - 2.0));
        f7.add(std::pow(av, r) * phi.phi_step(av));
        f8.add(std::pow(av, r) * phi.phi_step(1.0 / x));
      }
    }
    F[5].values.push_back(f6.value() * grid.weight());
    F[6].values.push_back(f7.value() * grid.weight());
    F[7].values.push_back(f8.value() * grid.weight());
  }

  // F9: step-weighted second-difference integral of each truncation
  for (std::int64_t big_n : ladder) {
    const TrigPoly f{Parity::cosine, detail::family_truncation(family, big_n)};
    const IntegralResult res =
        phi_second_difference_integral(f, phi, r, p, cfg.integral, &grid, cfg.method);
    F[8].values.push_back(res.divergent ? kInf : res.value);
  }

  for (auto& fc2 : out.functionals) fc2.verdict = detail::curve_verdict(fc2.values, cfg.convergence);
  out.consistent = true;
  for (const auto& fc2 : out.functionals)
    if (fc2.verdict != out.functionals.front().verdict) out.consistent = false;
  return out;
}

// ---------------------------------------------------------------------------
// Theorem 4

enum class LipschitzVerdict { bounded, growing, indeterminate };

inline const char* to_string(LipschitzVerdict v) {
  switch (v) {
    case LipschitzVerdict::bounded: return "bounded";
    case LipschitzVerdict::growing: return "growing";
    case LipschitzVerdict::indeterminate: return "indeterminate";
  }
  return "?";
}

struct Theorem4Result {
  bool skipped = false;
  std::string skip_reason;
  SumVerdict eq28 = SumVerdict::convergent;
  SweepResult lipschitz;  // omega_p(f, h)/h over the h-ladder
  LipschitzVerdict lipschitz_verdict = LipschitzVerdict::indeterminate;
  double lip_band = 0.0;    // max/min of the ratio over the ladder
  double lip_growth = 0.0;  // ratio at smallest h over ratio at largest h
  FunctionalCurve derivative;  // L^p norms of the differentiated series
  bool consistent = false;
};

/// Dichotomy harness: coefficient condition vs Lipschitz ratio vs
/// derivative-norm growth, all three verdicts required to agree.
inline Theorem4Result verify_theorem4(const SeqFamily& family, double p,
                                      const TheoremConfig& cfg) {
  Theorem4Result out;
  if (!detail::family_nbvs_stable(family, cfg.stability_factor)) {
    out.skipped = true;
    out.skip_reason = "family is not NBVS-stable on this truncation";
    return out;
  }

  out.eq28 = coefficient_condition(detail::family_truncation(family, cfg.condition_n), p,
                                   CoeffCondition::eq28, cfg.convergence)
                 .verdict;

  const CoeffSeq a = detail::family_truncation(family, cfg.family_n);
  const Grid grid(cfg.grid_m);
  const TrigPoly f{Parity::cosine, a};

  std::vector<double> hs = cfg.effective_h_ladder();
  std::sort(hs.begin(), hs.end(), std::greater<>());  // large h first
  for (double h : hs) {
    SweepPoint pt;
    pt.scale = h;
    pt.report.lhs = modulus(f, p, h, grid, cfg.t_steps, cfg.method);
    pt.report.rhs = h;
    detail::finish_empirical(pt.report);
    out.lipschitz.points.push_back(pt);
  }
  detail::finish_sweep(out.lipschitz, cfg.trend);
  out.lipschitz.check_id = "theorem4/lipschitz";
  {
    const auto ratios = out.lipschitz.ratios();
    double lo = kInf, hi = 0.0;
    for (double rr : ratios) {
      lo = std::min(lo, rr);
      hi = std::max(hi, rr);
    }
    out.lip_band = lo > 0.0 ? hi / lo : kInf;
    out.lip_growth = ratios.front() > 0.0 ? ratios.back() / ratios.front() : kInf;
    if (hi == 0.0 || out.lip_band <= 1.0 + cfg.lip_variation_tol)
      out.lipschitz_verdict = LipschitzVerdict::bounded;  // hi == 0: f vanishes
    else if (out.lip_growth >= 1.0 + cfg.lip_growth_min)
      out.lipschitz_verdict = LipschitzVerdict::growing;
    else
      out.lipschitz_verdict = LipschitzVerdict::indeterminate;
  }

  // differentiated series sum n a_n cos(nx) of the sine-parity sum-function
  out.derivative.name = "derivative_norm";
  for (std::int64_t big_n : cfg.truncation_ladder) {
    const CoeffSeq coeffs = detail::family_truncation(family, big_n);
    const std::int64_t len = coeffs.size();
    std::vector<double> scaled_coeffs(static_cast<std::size_t>(len));
    for (std::int64_t n = 1; n <= len; ++n)
      scaled_coeffs[static_cast<std::size_t>(n - 1)] = static_cast<double>(n) * coeffs.a(n);
    const TrigPoly derivative{Parity::cosine, CoeffSeq(std::move(scaled_coeffs))};
    bool coeff_route = cfg.method == NormMethod::coefficients ||
                       (cfg.method == NormMethod::automatic && p == 2.0);
    double norm;
    if (coeff_route) {
      KahanSum e;
      for (double c : derivative.coeffs.values()) e.add(c * c);
      norm = std::sqrt(kPi * e.value());
    } else {
      norm = lp_norm(derivative, p, grid);
    }
    out.derivative.values.push_back(std::pow(norm, p));
  }
  out.derivative.verdict = detail::curve_verdict(out.derivative.values, cfg.convergence);

  const bool conv = out.eq28 == SumVerdict::convergent;
  out.consistent = (conv ? out.lipschitz_verdict == LipschitzVerdict::bounded
                         : out.lipschitz_verdict == LipschitzVerdict::growing) &&
                   (conv == (out.derivative.verdict == SumVerdict::convergent));
  return out;
}

// ---------------------------------------------------------------------------
// Theorem 5

struct Theorem5Result {
  bool skipped = false;
  std::string skip_reason;
  SweepResult zygmund;     // omega*_p(f, h)/h, the hypothesis probe
  SweepResult log_ratio;   // omega_p(f, h) / (h |log h|^{1/p})
  double log_ratio_band = 0.0;
  SweepResult lower_45;    // omega*_p(f, 1/n) vs n^{1-1/p} a_n, bounded below
  SweepResult coeff_decay; // a_n vs n^{-2+1/p}
};

inline Theorem5Result verify_theorem5(const SeqFamily& family, double p,
                                      const TheoremConfig& cfg) {
  Theorem5Result out;
  if (!detail::family_nbvs_stable(family, cfg.stability_factor)) {
    out.skipped = true;
    out.skip_reason = "family is not NBVS-stable on this truncation";
    return out;
  }

  const CoeffSeq a = detail::family_truncation(family, cfg.family_n);
  const Grid grid(cfg.grid_m);
  const TrigPoly f{Parity::cosine, a};

  std::vector<double> hs = cfg.effective_h_ladder();
  std::sort(hs.begin(), hs.end(), std::greater<>());
  for (double h : hs) {
    SweepPoint pt;
    pt.scale = h;
    pt.report.lhs = modulus_star(f, p, h, grid, cfg.t_steps, cfg.method);
    pt.report.rhs = h;
    detail::finish_empirical(pt.report);
    out.zygmund.points.push_back(pt);
  }
  detail::finish_sweep(out.zygmund, cfg.trend);
  out.zygmund.check_id = "theorem5/zygmund";
  if (out.zygmund.trend == Trend::growing) {
    out.skipped = true;
    out.skip_reason = "omega*_p(f,h)/h grows: sum-function is not in the Zygmund class";
    return out;
  }

  for (double h : hs) {
    SweepPoint pt;
    pt.scale = h;
    pt.report.lhs = modulus(f, p, h, grid, cfg.t_steps, cfg.method);
    pt.report.rhs = h * std::pow(std::abs(std::log(h)), 1.0 / p);
    detail::finish_empirical(pt.report);
    out.log_ratio.points.push_back(pt);
  }
  detail::finish_sweep(out.log_ratio, cfg.trend);
  out.log_ratio.check_id = "theorem5/log_ratio";
  {
    double lo = kInf, hi = 0.0;
    for (double rr : out.log_ratio.ratios()) {
      lo = std::min(lo, rr);
      hi = std::max(hi, rr);
    }
    out.log_ratio_band = lo > 0.0 ? hi / lo : kInf;
  }

  for (std::int64_t n : cfg.n_ladder) {
    SweepPoint pt;
    pt.scale = static_cast<double>(n);
    pt.report.lhs =
        modulus_star(f, p, 1.0 / static_cast<double>(n), grid, cfg.t_steps, cfg.method);
    pt.report.rhs = std::pow(static_cast<double>(n), 1.0 - 1.0 / p) * a.a(n);
    detail::finish_empirical(pt.report);
    out.lower_45.points.push_back(pt);
  }
  detail::finish_sweep(out.lower_45, cfg.trend);
  out.lower_45.check_id = "theorem5/lower45";

  for (std::int64_t n : cfg.n_ladder) {
    SweepPoint pt;
    pt.scale = static_cast<double>(n);
    pt.report.lhs = a.a(n);
    pt.report.rhs = std::pow(static_cast<double>(n), -2.0 + 1.0 / p);
    detail::finish_empirical(pt.report);
    out.coeff_decay.points.push_back(pt);
  }
  detail::finish_sweep(out.coeff_decay, cfg.trend);
  out.coeff_decay.check_id = "theorem5/coeff_decay";
  return out;
}

// ---------------------------------------------------------------------------
// Lemma 2 dichotomy

struct Lemma2Result {
  SumVerdict eq21 = SumVerdict::convergent;
  bool cauchy_decaying = false;
  std::vector<double> cauchy_norms;  // ||S_{2N} - S_N||_p along the ladder
  bool consistent = false;
};

/// Coefficient-condition verdict against L^p-Cauchy behavior of the
/// partial sums.
inline Lemma2Result verify_lemma2_dichotomy(const SeqFamily& family, double p,
                                            const TheoremConfig& cfg) {
  Lemma2Result out;
  out.eq21 = coefficient_condition(detail::family_truncation(family, cfg.condition_n), p,
                                   CoeffCondition::eq21, cfg.convergence)
                 .verdict;

  const CoeffSeq a = detail::family_truncation(family, 2 * cfg.truncation_ladder.back());
  const bool coeff_route = cfg.method == NormMethod::coefficients ||
                           (cfg.method == NormMethod::automatic && p == 2.0);
  std::optional<Grid> grid;
  if (!coeff_route) grid.emplace(cfg.grid_m);

  for (std::int64_t big_n : cfg.truncation_ladder) {
    if (coeff_route) {
      KahanSum e;
      for (std::int64_t k = big_n + 1; k <= 2 * big_n; ++k) e.add(a.a(k) * a.a(k));
      out.cauchy_norms.push_back(std::sqrt(kPi * e.value()));
    } else {
      std::vector<double> block(static_cast<std::size_t>(2 * big_n), 0.0);
      for (std::int64_t k = big_n + 1; k <= 2 * big_n; ++k)
        block[static_cast<std::size_t>(k - 1)] = a.a(k);
      out.cauchy_norms.push_back(lp_norm(TrigPoly{Parity::cosine, CoeffSeq(block)}, p, *grid));
    }
  }
  out.cauchy_decaying = geometric_decay(out.cauchy_norms, cfg.cauchy_decay_ratio);
  out.consistent = (out.eq21 == SumVerdict::convergent) == out.cauchy_decaying;
  return out;
}

}  // namespace nbvslab
