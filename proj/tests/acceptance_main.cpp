// Acceptance gate: every primary criterion evaluated at its pinned
// tolerance, one PASS/FAIL line each, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nbvslab/theorems.hpp"

using namespace nbvslab;

namespace {

struct Criterion {
  std::string title;
  std::function<bool(std::ostringstream&)> run;
};

TrigPoly random_poly(std::mt19937_64& rng, std::int64_t max_degree) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<double> v(1 + rng() % static_cast<std::uint64_t>(max_degree));
  for (auto& x : v) x = uni(rng);
  const Parity parity = rng() % 2 == 0 ? Parity::cosine : Parity::sine;
  return TrigPoly{parity, CoeffSeq(std::move(v))};
}

// 1. unconditional Hardy pair on 1000 random draws per exponent
bool criterion_hardy(std::ostringstream& detail) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (double p : {1.5, 2.0, 3.0}) {
    for (const auto& [which, name] :
         {std::pair{LemmaId::hardy_ascending, "3.3"}, {LemmaId::hardy_tail, "3.4"}}) {
      const auto res = hardy_suite(which, 1000, p, 90210 + static_cast<std::uint64_t>(p * 10));
      detail << "    " << name << " p=" << p << ": " << res.held << "/" << res.total
             << " held, worst lhs/(p^p rhs) = " << res.worst_ratio << "\n";
      ok = ok && res.held == res.total && res.worst_ratio <= 1.0 + 1e-9;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  detail << "    runtime " << secs << " s (budget 10 s)\n";
  return ok && secs < 10.0;
}

// 2. Parseval cross-check on random polynomials
bool criterion_parseval(std::ostringstream& detail) {
  std::mt19937_64 rng(271828);
  const Grid grid(1 << 14);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const TrigPoly f = random_poly(rng, 256);
    const double n2 = lp_norm(f, 2.0, grid);
    KahanSum s;
    for (double a : f.coeffs.values()) s.add(a * a);
    const double parseval = kPi * s.value();
    worst = std::max(worst, std::abs(n2 * n2 - parseval) / parseval);
  }
  detail << "    worst relative Parseval defect " << worst << " (tolerance 1e-8)\n";
  return worst <= 1e-8;
}

// 3. closed-form moduli of cos x
bool criterion_modulus(std::ostringstream& detail) {
  const Grid grid(1 << 10);
  const TrigPoly f{Parity::cosine, CoeffSeq({1.0})};
  bool ok = true;
  for (double h : {kPi / 4.0, kPi / 16.0, kPi / 64.0}) {
    const double w = modulus(f, 2.0, h, grid, 64, NormMethod::grid);
    const double ws = modulus_star(f, 2.0, h, grid, 64, NormMethod::grid);
    const double want_w = 2.0 * std::sin(h / 2.0) * std::sqrt(kPi);
    const double want_ws = 2.0 * (1.0 - std::cos(h)) * std::sqrt(kPi);
    const double err_w = std::abs(w - want_w) / want_w;
    const double err_ws = std::abs(ws - want_ws) / want_ws;
    detail << "    h=" << h << ": omega err " << err_w << ", omega* err " << err_ws << "\n";
    ok = ok && err_w <= 1e-6 && err_ws <= 1e-6;
  }
  return ok;
}

// 4. block-kernel identity on random polynomials
bool criterion_identity(std::ostringstream& detail) {
  std::mt19937_64 rng(424242);
  const Grid grid(1 << 10);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const TrigPoly f = random_poly(rng, 64);
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 32);
    const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % (2 * n));
    for (double t : {kPi / 2.0, kPi / 8.0, kPi / 32.0})
      worst = std::max(worst, dirichlet_identity(f, m, n, t, grid).rel_err);
  }
  detail << "    worst relative identity defect " << worst << " (tolerance 1e-7)\n";
  return worst <= 1e-7;
}

// 5. embedding audit and the two designed families
bool criterion_embedding(std::ostringstream& detail) {
  bool ok = true;
  int chains = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto a = generate_family({.kind = FamilyKind::monotone_custom,
                                    .n = 4 + static_cast<std::int64_t>(seed % 125),
                                    .seed = seed});
    if (embedding_audit(a).chain_ok) ++chains;
  }
  detail << "    embedding chain held on " << chains << "/200 nonincreasing sequences\n";
  ok = ok && chains == 200;

  const auto blocks = classify_family({.kind = FamilyKind::block_witness, .n = 256, .rho = 0.5});
  detail << "    block witness: NBVS k=" << blocks.base.nbvs.k_min
         << (nbvs_stable(blocks) ? " stable" : " UNSTABLE") << ", GBVS k="
         << blocks.base.gbvs.k_min << "\n";
  ok = ok && nbvs_stable(blocks) && std::isinf(blocks.base.gbvs.k_min);

  const auto alt = classify_family({.kind = FamilyKind::alternating, .n = 32});
  const double growth = alt.doubled.nbvs.k_min / alt.base.nbvs.k_min;
  detail << "    alternating: NBVS k(32)=" << alt.base.nbvs.k_min
         << " k(64)=" << alt.doubled.nbvs.k_min << " growth x" << growth << "\n";
  ok = ok && !nbvs_stable(alt) && growth >= 1.8;
  return ok;
}

// 6. lemma and block-mean sweeps across the three families
bool criterion_lemma_sweeps(std::ostringstream& detail) {
  TheoremConfig cfg;
  cfg.n_ladder = {8, 16, 32, 64, 128, 256};
  const struct {
    const char* name;
    SeqFamily fam;
  } families[] = {
      {"n^-1", {.kind = FamilyKind::power, .n = 1024, .beta = 1.0}},
      {"n^-1.5", {.kind = FamilyKind::power, .n = 1024, .beta = 1.5}},
      {"block_witness", {.kind = FamilyKind::block_witness, .n = 1024, .rho = 0.5}},
  };
  const struct {
    const char* name;
    LemmaId id;
  } checks[] = {
      {"lemma4", LemmaId::tail_variation}, {"lemma5", LemmaId::weighted5},
      {"lemma6", LemmaId::weighted6},      {"eq3.8", LemmaId::mean38},
      {"eq4.2", LemmaId::mean42},
  };
  bool ok = true;
  for (const auto& fam : families) {
    const CoeffSeq a = generate_family(fam.fam);
    for (const auto& chk : checks) {
      const SweepResult sw = lemma_sweep(chk.id, a, 2.0, cfg);
      const bool cell_ok = sw.trend != Trend::growing;
      if (!cell_ok) {
        detail << "    " << chk.name << " on " << fam.name << ": verdict "
               << to_string(sw.trend) << " (ratios";
        for (const auto& pt : sw.points) detail << " " << pt.report.ratio;
        detail << ")\n";
        // supplementary: the same cell on a deep ladder, where the
        // log-critical transient has decayed
        TheoremConfig deep = cfg;
        deep.n_ladder = {1 << 11, 1 << 12, 1 << 13, 1 << 14};
        SeqFamily wide = fam.fam;
        wide.n = 1 << 16;
        const SweepResult dsw = lemma_sweep(chk.id, generate_family(wide), 2.0, deep);
        detail << "      [info] deep ladder n in {2^11..2^14}: verdict " << to_string(dsw.trend)
               << ", k_sup " << dsw.k_sup << "\n";
      }
      ok = ok && cell_ok;
    }
  }
  if (ok) detail << "    all 15 family/check cells bounded\n";
  return ok;
}

// 7. first-modulus bound, both parities, two grid resolutions
bool criterion_theorem1(std::ostringstream& detail) {
  bool ok = true;
  for (double beta : {1.0, 1.5}) {
    double k_at[2] = {0, 0};
    int idx = 0;
    for (std::int64_t m : {1 << 13, 1 << 14}) {
      TheoremConfig cfg;
      cfg.family_n = 1024;
      cfg.grid_m = m;
      cfg.method = NormMethod::grid;
      const auto res =
          verify_theorem1({.kind = FamilyKind::power, .n = 1024, .beta = beta}, 2.0, cfg);
      if (res.skipped) {
        detail << "    beta=" << beta << ": unexpectedly skipped (" << res.skip_reason << ")\n";
        return false;
      }
      ok = ok && res.cosine.trend != Trend::growing && res.sine.trend != Trend::growing;
      k_at[idx++] = std::max(res.cosine.k_sup, res.sine.k_sup);
      detail << "    beta=" << beta << " M=2^" << (m == (1 << 13) ? 13 : 14)
             << ": cos " << to_string(res.cosine.trend) << " k=" << res.cosine.k_sup
             << ", sin " << to_string(res.sine.trend) << " k=" << res.sine.k_sup << "\n";
    }
    const double drift = std::abs(k_at[1] / k_at[0] - 1.0);
    detail << "    beta=" << beta << ": constant drift between resolutions " << drift << "\n";
    ok = ok && drift <= 0.10;
  }
  return ok;
}

// 8. Lipschitz dichotomy at beta = 1.8 vs 1.4
bool criterion_theorem4(std::ostringstream& detail) {
  TheoremConfig cfg;
  cfg.family_n = 2048;
  cfg.grid_m = 1 << 14;
  cfg.h_ladder = {1.0 / 8, 1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128, 1.0 / 256};
  cfg.truncation_ladder = {128, 256, 512, 1024, 2048};
  bool ok = true;

  const auto smooth = verify_theorem4({.kind = FamilyKind::power, .n = 2048, .beta = 1.8}, 2.0, cfg);
  detail << "    beta=1.8: eq28 " << to_string(smooth.eq28) << ", lipschitz "
         << to_string(smooth.lipschitz_verdict) << " (band x" << smooth.lip_band
         << "), derivative " << to_string(smooth.derivative.verdict) << "\n";
  ok = ok && !smooth.skipped && smooth.eq28 == SumVerdict::convergent &&
       smooth.lipschitz_verdict == LipschitzVerdict::bounded &&
       smooth.lip_band <= 1.20 && smooth.consistent;

  const auto rough = verify_theorem4({.kind = FamilyKind::power, .n = 2048, .beta = 1.4}, 2.0, cfg);
  detail << "    beta=1.4: eq28 " << to_string(rough.eq28) << ", lipschitz "
         << to_string(rough.lipschitz_verdict) << " (growth x" << rough.lip_growth
         << "), derivative " << to_string(rough.derivative.verdict) << "\n";
  ok = ok && !rough.skipped && rough.eq28 == SumVerdict::divergent &&
       rough.lipschitz_verdict == LipschitzVerdict::growing && rough.lip_growth >= 1.30 &&
       rough.consistent;
  return ok;
}

// 9. the log factor in the Zygmund-class modulus bound is real
bool criterion_theorem5(std::ostringstream& detail) {
  TheoremConfig cfg;
  cfg.family_n = 2048;
  cfg.grid_m = 1 << 14;
  cfg.h_ladder = {1.0 / 8,  1.0 / 16, 1.0 / 32, 1.0 / 64,
                  1.0 / 128, 1.0 / 256, 1.0 / 512};
  const auto res = verify_theorem5({.kind = FamilyKind::power, .n = 2048, .beta = 1.5}, 2.0, cfg);
  if (res.skipped) {
    detail << "    unexpectedly skipped: " << res.skip_reason << "\n";
    return false;
  }
  double plain_lo = kInf, plain_hi = 0.0;
  for (const auto& pt : res.log_ratio.points) {
    const double plain = pt.report.lhs / pt.scale;
    plain_lo = std::min(plain_lo, plain);
    plain_hi = std::max(plain_hi, plain);
  }
  const double plain_growth = plain_hi / plain_lo;
  detail << "    log-normalized band x" << res.log_ratio_band << " (limit 2), plain omega/h"
         << " growth x" << plain_growth << " (needs >= 1.25)\n";
  return res.log_ratio_band <= 2.0 && plain_growth >= 1.25;
}

// 10. two-sided weighted comparison with the sqrt weight
bool criterion_theorem2(std::ostringstream& detail) {
  TheoremConfig cfg;
  cfg.grid_m = 1 << 13;
  const WeightFn lam{1.0, 0.5, 0.0};
  const auto res =
      verify_theorem2({.kind = FamilyKind::power, .n = 1024, .beta = 1.5}, lam, 2.0, 2.0, cfg);
  detail << "    cond(2.5) " << (res.cond25_ok ? "pass" : "fail") << ", cond(2.6) "
         << (res.cond26_ok ? "pass" : "fail") << ", forward " << to_string(res.forward.trend)
         << ", reverse " << to_string(res.reverse.trend)
         << (res.reverse.skipped ? " (skipped)" : "") << "\n";
  bool ok = res.cond25_ok && res.cond26_ok && !res.reverse.skipped &&
            res.forward.trend != Trend::growing && res.reverse.trend != Trend::growing;

  // self-convergence of the weighted integral under node doubling
  const TrigPoly f{Parity::cosine,
                   generate_family({.kind = FamilyKind::power, .n = 1024, .beta = 1.5})};
  IntegralOptions coarse, fine;
  coarse.t_steps = 64;
  fine.t_steps = 128;
  const auto a = smoothness_integral(f, lam, 2.0, 2.0, coarse);
  const auto b = smoothness_integral(f, lam, 2.0, 2.0, fine);
  const double drift = std::abs(a.value - b.value) / std::abs(b.value);
  detail << "    I(f,lambda,2,2) = " << a.value << ", node-doubling drift " << drift
         << " (tolerance 1e-6)\n";
  return ok && !a.divergent && !b.divergent && drift <= 1e-6;
}

// 11. nine-way equivalence classification agreement
bool criterion_theorem3(std::ostringstream& detail) {
  TheoremConfig cfg;
  cfg.grid_m = 1 << 13;
  cfg.truncation_ladder = {64, 128, 256, 512, 1024};
  const struct {
    double beta, p, r, phi_s;
  } configs[] = {{1.5, 2, 3, 0.0}, {0.9, 2, 3, 0.0}, {1.5, 2, 3, 1.0}};
  bool ok = true;
  for (const auto& c : configs) {
    const auto res = theorem3_functionals({.kind = FamilyKind::power, .n = 1024, .beta = c.beta},
                                          PhiWeight{c.phi_s}, c.r, c.p, cfg);
    if (res.skipped) {
      detail << "    beta=" << c.beta << ": unexpectedly skipped (" << res.skip_reason << ")\n";
      ok = false;
      continue;
    }
    int convergent = 0;
    for (const auto& f : res.functionals)
      if (f.verdict == SumVerdict::convergent) ++convergent;
    detail << "    beta=" << c.beta << " phi_s=" << c.phi_s << ": " << convergent
           << "/9 convergent, " << (res.consistent ? "consistent" : "DISAGREE") << "\n";
    ok = ok && res.consistent;
  }
  return ok;
}

// 12. coefficient condition vs L^p-Cauchy dichotomy across the threshold
bool criterion_lemma2(std::ostringstream& detail) {
  TheoremConfig cfg;
  bool ok = true;
  for (double beta : {0.4, 0.6, 1.0, 1.5}) {
    const auto res =
        verify_lemma2_dichotomy({.kind = FamilyKind::power, .n = 1024, .beta = beta}, 2.0, cfg);
    detail << "    beta=" << beta << ": eq21 " << to_string(res.eq21) << ", Cauchy "
           << (res.cauchy_decaying ? "decaying" : "non-decaying")
           << (res.consistent ? "" : "  MISMATCH") << "\n";
    ok = ok && res.consistent;
  }
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"Hardy pair holds with constant p^p on 1000 random draws, p in {1.5,2,3}",
       criterion_hardy},
      {"Parseval cross-check, 100 random polynomials, degree <= 256, M = 2^14",
       criterion_parseval},
      {"analytic moduli of cos x at h in {pi/4, pi/16, pi/64}", criterion_modulus},
      {"block-kernel identity on 50 random polynomials to 1e-7", criterion_identity},
      {"embedding chain, block witness and alternating classifications", criterion_embedding},
      {"lemma 4/5/6 and block-mean sweeps bounded on the three families",
       criterion_lemma_sweeps},
      {"first-modulus bound: bounded ratios, constants stable across resolutions",
       criterion_theorem1},
      {"Lipschitz dichotomy at beta = 1.8 vs 1.4", criterion_theorem4},
      {"Zygmund-class log factor: tight band, real growth", criterion_theorem5},
      {"two-sided weighted comparison with the sqrt weight", criterion_theorem2},
      {"nine-functional classification agreement", criterion_theorem3},
      {"coefficient condition vs L^p-Cauchy dichotomy", criterion_lemma2},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::ostringstream detail;
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail << "    exception: " << e.what() << "\n";
    }
    std::printf("[%2zu/%zu] %s  criterion %zu: %s\n", i + 1, criteria.size(),
                ok ? "PASS" : "FAIL", i + 1, criteria[i].title.c_str());
    std::fputs(detail.str().c_str(), stdout);
    if (!ok) ++failures;
  }
  if (failures == 0)
    std::printf("all %zu criteria passed\n", criteria.size());
  else
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
