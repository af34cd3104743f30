// Command-line harness: classify coefficient sequences, evaluate the
// discrete inequality sweeps, run the theorem verification harnesses, and
// emit machine-readable reports.
//
// Exit codes: 0 all verdicts pass, 1 a falsified verdict, 2 invalid input.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "nbvslab/config.hpp"
#include "nbvslab/report_io.hpp"
#include "nbvslab/theorems.hpp"

namespace {

using namespace nbvslab;

constexpr int kExitPass = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitInvalid = 2;

int thread_budget() {
  if (const char* env = std::getenv("NBVSLAB_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

// run independent tasks with bounded concurrency; results land in
// caller-owned slots so report order never depends on scheduling
void parallel_tasks(std::vector<std::function<void()>> tasks) {
  const int budget = std::min<int>(thread_budget(), static_cast<int>(tasks.size()));
  if (budget <= 1) {
    for (auto& t : tasks) t();
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(budget));
  for (int w = 0; w < budget; ++w)
    workers.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        tasks[i]();
      }
    });
  for (auto& t : workers) t.join();
}

struct RunOptions {
  std::string config_path;
  std::string out = "-";
  std::string format = "csv";

  std::string family = "power";
  std::int64_t n = 1024;
  double beta = 1.0;
  double log_exp = 0.0;
  double rho = 0.5;
  double level = 1.0;
  std::uint64_t seed = 1;
  std::vector<double> values;

  double p = 2.0;
  double r = 2.0;
  double lambda_scale = 1.0;
  double lambda_power = 0.0;
  double lambda_log_power = 0.0;
  double phi_s = 0.0;

  std::vector<std::int64_t> n_ladder{8, 16, 32, 64, 128, 256};
  std::vector<double> h_ladder;
  std::vector<std::int64_t> truncation_ladder{64, 128, 256, 512, 1024};
  std::int64_t family_n = 1024;
  std::int64_t condition_n = 1 << 14;
  std::int64_t grid_m = 1 << 13;
  int t_steps = 64;
  double trend_growth = 1.15;
  double conv_ratio = 0.9;
  double cauchy_ratio = 0.95;
  double stability = 1.1;
  double s_offset = 0.25;
  double lip_variation = 0.20;
  double lip_growth = 0.30;
  double hardy_tol = 1e-9;
  int random_count = 1000;

  std::string lemma_id;
  std::string theorem_id;
};

// registers one option under both a CLI flag and a config key
class KeyedOptions {
 public:
  template <typename T>
  void bind(CLI::App* cmd, const std::string& flag, const std::string& key, T& target,
            const std::string& desc, bool comma_list = false) {
    auto* opt = cmd->add_option(flag, target, desc);
    if (comma_list) opt->delimiter(',');
    bindings_[key] = Binding{opt, [&target](const nlohmann::json& j) { target = j.get<T>(); }};
  }

  void apply(const FlatConfig& cfg) const {
    for (const auto& [key, entry] : cfg.entries()) {
      const auto it = bindings_.find(key);
      if (it == bindings_.end())
        throw std::runtime_error(cfg.name() + ":" + std::to_string(entry.line) +
                                 ": unknown key '" + key + "'");
      if (it->second.opt->count() > 0) continue;  // command line wins
      try {
        it->second.apply(entry.value);
      } catch (const nlohmann::json::exception&) {
        throw std::runtime_error(cfg.name() + ":" + std::to_string(entry.line) +
                                 ": wrong value type for key '" + key + "'");
      }
    }
  }

 private:
  struct Binding {
    CLI::Option* opt = nullptr;
    std::function<void(const nlohmann::json&)> apply;
  };
  std::map<std::string, Binding> bindings_;
};

SeqFamily make_family(const RunOptions& o) {
  SeqFamily f;
  f.n = o.n;
  f.beta = o.beta;
  f.log_exponent = o.log_exp;
  f.rho = o.rho;
  f.level = o.level;
  f.seed = o.seed;
  f.values = o.values;
  if (o.family == "power") f.kind = FamilyKind::power;
  else if (o.family == "power_log") f.kind = FamilyKind::power_log;
  else if (o.family == "block_witness") f.kind = FamilyKind::block_witness;
  else if (o.family == "alternating") f.kind = FamilyKind::alternating;
  else if (o.family == "monotone_custom") f.kind = FamilyKind::monotone_custom;
  else if (o.family == "explicit") {
    f.kind = FamilyKind::explicit_values;
    if (f.values.empty()) throw std::runtime_error("explicit family requires --values");
    f.n = static_cast<std::int64_t>(f.values.size());
  } else {
    throw std::runtime_error("unknown family '" + o.family + "'");
  }
  return f;
}

TheoremConfig make_theorem_config(const RunOptions& o) {
  TheoremConfig cfg;
  cfg.n_ladder = o.n_ladder;
  cfg.h_ladder = o.h_ladder;
  cfg.truncation_ladder = o.truncation_ladder;
  cfg.family_n = o.family_n;
  cfg.condition_n = o.condition_n;
  cfg.grid_m = o.grid_m;
  cfg.t_steps = o.t_steps;
  cfg.trend.growth_factor = o.trend_growth;
  cfg.convergence.increment_ratio = o.conv_ratio;
  cfg.cauchy_decay_ratio = o.cauchy_ratio;
  cfg.stability_factor = o.stability;
  cfg.s_offset = o.s_offset;
  cfg.lip_variation_tol = o.lip_variation;
  cfg.lip_growth_min = o.lip_growth;
  return cfg;
}

std::string family_params(const RunOptions& o) {
  std::ostringstream ss;
  if (o.family == "power" || o.family == "power_log") ss << "beta=" << format_number(o.beta);
  if (o.family == "power_log") ss << ";log_exp=" << format_number(o.log_exp);
  if (o.family == "block_witness") ss << "rho=" << format_number(o.rho);
  if (o.family == "alternating") ss << "level=" << format_number(o.level);
  if (o.family == "monotone_custom") ss << "seed=" << o.seed;
  if (o.family == "explicit") ss << "len=" << o.values.size();
  return ss.str();
}

void emit(const RunOptions& o, const std::vector<ReportRow>& rows) {
  const auto write = [&](std::ostream& os) {
    if (o.format == "csv") write_csv(os, rows);
    else if (o.format == "json") write_json(os, rows);
    else throw std::runtime_error("unknown format '" + o.format + "'");
  };
  if (o.out == "-") {
    write(std::cout);
    return;
  }
  std::ofstream os(o.out, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output path '" + o.out + "'");
  write(os);
  if (!os.good()) throw std::runtime_error("failed writing output path '" + o.out + "'");
}

void append_sweep_rows(std::vector<ReportRow>& rows, const SweepResult& sw,
                       const std::string& check_id, const std::string& family,
                       const std::string& params) {
  if (sw.skipped) {
    rows.push_back({check_id, family, params + (params.empty() ? "" : ";") + "reason=" +
                                          sw.skip_reason,
                    0, 0, 0, 0, "skipped"});
    return;
  }
  for (const auto& pt : sw.points)
    rows.push_back({check_id, family, params, pt.scale, pt.report.lhs, pt.report.rhs,
                    pt.report.ratio,
                    pt.report.status == IneqStatus::skipped ? "skipped" : "evaluated"});
  rows.push_back({check_id + "/trend", family, params, static_cast<double>(sw.points.size()), 0,
                  0, sw.k_sup, to_string(sw.trend)});
}

// ---------------------------------------------------------------------------

int run_classify(const RunOptions& o, std::vector<ReportRow>& rows) {
  const SeqFamily fam = make_family(o);
  const std::string params = family_params(o);
  const auto class_row = [&](const char* name, const ClassStat& at_n, const ClassStat& at_2n,
                             bool stable) {
    const double growth = detail::ineq_ratio(at_2n.k_min, at_n.k_min);
    rows.push_back({std::string("classify/") + name, o.family,
                    params + (params.empty() ? "" : ";") + "witness=" + std::to_string(at_n.witness),
                    static_cast<double>(fam.n), at_n.k_min, at_2n.k_min, growth,
                    stable ? "stable" : "unstable"});
  };
  if (fam.kind == FamilyKind::explicit_values) {
    const ClassReport rep = classify(generate_family(fam));
    class_row("rbvs", rep.rbvs, rep.rbvs, true);
    class_row("cqms", rep.cqms, rep.cqms, true);
    class_row("gbvs", rep.gbvs, rep.gbvs, true);
    class_row("nbvs", rep.nbvs, rep.nbvs, true);
  } else {
    const FamilyClassification fc = classify_family(fam, o.stability);
    class_row("rbvs", fc.base.rbvs, fc.doubled.rbvs, fc.base.rbvs.stable);
    class_row("cqms", fc.base.cqms, fc.doubled.cqms, fc.base.cqms.stable);
    class_row("gbvs", fc.base.gbvs, fc.doubled.gbvs, fc.base.gbvs.stable);
    class_row("nbvs", fc.base.nbvs, fc.doubled.nbvs, fc.base.nbvs.stable);
  }
  return kExitPass;
}

void validate_exponents(const RunOptions& o) {
  AnalysisParams params;
  params.p = o.p;
  params.r = o.r;
  params.n = 1;
  params.h = kPi;
  params.validate();
}

int run_lemma(const RunOptions& o, std::vector<ReportRow>& rows) {
  validate_exponents(o);
  const TheoremConfig cfg = make_theorem_config(o);
  if (o.lemma_id == "3a" || o.lemma_id == "3b") {
    const LemmaId which = o.lemma_id == "3a" ? LemmaId::hardy_ascending : LemmaId::hardy_tail;
    // fixed 16-way chunking keeps results identical for any thread budget
    constexpr int kChunks = 16;
    std::vector<HardySuiteResult> parts(kChunks);
    std::vector<std::function<void()>> tasks;
    const int base = o.random_count / kChunks;
    const int extra = o.random_count % kChunks;
    for (int c = 0; c < kChunks; ++c)
      tasks.push_back([&, c] {
        const int count = base + (c < extra ? 1 : 0);
        parts[static_cast<std::size_t>(c)] =
            hardy_suite(which, count, o.p, o.seed * 1000003ULL + static_cast<std::uint64_t>(c),
                        64, o.hardy_tol);
      });
    parallel_tasks(std::move(tasks));
    HardySuiteResult total;
    for (const auto& part : parts) {
      total.total += part.total;
      total.held += part.held;
      total.worst_ratio = std::max(total.worst_ratio, part.worst_ratio);
    }
    std::ostringstream params;
    params << "held=" << total.held << ";total=" << total.total << ";p=" << format_number(o.p)
           << ";seed=" << o.seed;
    rows.push_back({std::string("lemma") + o.lemma_id, "random", params.str(),
                    static_cast<double>(total.total), total.worst_ratio, 1.0, total.worst_ratio,
                    total.held == total.total ? "pass" : "fail"});
    return total.held == total.total ? kExitPass : kExitFalsified;
  }

  const SeqFamily fam = make_family(o);
  const CoeffSeq a = generate_family(fam);
  const std::string params = family_params(o) + ";p=" + format_number(o.p);
  LemmaId id;
  if (o.lemma_id == "4") id = LemmaId::tail_variation;
  else if (o.lemma_id == "5") id = LemmaId::weighted5;
  else if (o.lemma_id == "6") id = LemmaId::weighted6;
  else if (o.lemma_id == "38") id = LemmaId::mean38;
  else if (o.lemma_id == "42") id = LemmaId::mean42;
  else throw std::runtime_error("unknown lemma id '" + o.lemma_id + "' (expect 3a,3b,4,5,6,38,42)");

  const SweepResult sw = lemma_sweep(id, a, o.p, cfg);
  append_sweep_rows(rows, sw, "lemma" + o.lemma_id, o.family, params);
  return sw.trend == Trend::growing ? kExitFalsified : kExitPass;
}

int run_theorem(const RunOptions& o, std::vector<ReportRow>& rows) {
  validate_exponents(o);
  const TheoremConfig cfg = make_theorem_config(o);
  const SeqFamily fam = make_family(o);
  const std::string params = family_params(o) + ";p=" + format_number(o.p);

  if (o.theorem_id == "1") {
    const auto res = verify_theorem1(fam, o.p, cfg);
    if (res.skipped) {
      rows.push_back({"theorem1", o.family, params + ";reason=" + res.skip_reason, 0, 0, 0, 0,
                      "skipped"});
      return kExitPass;
    }
    append_sweep_rows(rows, res.cosine, "theorem1/cosine", o.family, params);
    append_sweep_rows(rows, res.sine, "theorem1/sine", o.family, params);
    const bool bad =
        res.cosine.trend == Trend::growing || res.sine.trend == Trend::growing;
    return bad ? kExitFalsified : kExitPass;
  }

  if (o.theorem_id == "2") {
    const WeightFn lam{o.lambda_scale, o.lambda_power, o.lambda_log_power};
    const std::string wparams = params + ";lambda=" + format_number(o.lambda_scale) + "*x^" +
                                format_number(o.lambda_power) + "*log^" +
                                format_number(o.lambda_log_power) + ";r=" + format_number(o.r);
    const auto res = verify_theorem2(fam, lam, o.r, o.p, cfg);
    if (res.skipped) {
      rows.push_back({"theorem2", o.family, wparams + ";reason=" + res.skip_reason, 0, 0, 0, 0,
                      "skipped"});
      return kExitPass;
    }
    rows.push_back({"theorem2/doubling", o.family, wparams, 0, res.doubling.k1, res.doubling.k2,
                    0, res.doubling.monotone ? "pass" : "fail"});
    append_sweep_rows(rows, res.cond25, "theorem2/cond25", o.family, wparams);
    append_sweep_rows(rows, res.cond26, "theorem2/cond26", o.family, wparams);
    append_sweep_rows(rows, res.forward, "theorem2/forward24", o.family, wparams);
    append_sweep_rows(rows, res.reverse, "theorem2/reverse27", o.family, wparams);
    const bool bad = res.forward.trend == Trend::growing ||
                     (!res.reverse.skipped && res.reverse.trend == Trend::growing);
    return bad ? kExitFalsified : kExitPass;
  }

  if (o.theorem_id == "3") {
    const PhiWeight phi{o.phi_s};
    const std::string pparams =
        params + ";r=" + format_number(o.r) + ";phi_s=" + format_number(o.phi_s);
    const auto res = theorem3_functionals(fam, phi, o.r, o.p, cfg);
    if (res.skipped) {
      rows.push_back({"theorem3", o.family, pparams + ";reason=" + res.skip_reason, 0, 0, 0, 0,
                      "skipped"});
      return kExitPass;
    }
    for (const auto& f : res.functionals)
      for (std::size_t i = 0; i < f.values.size(); ++i)
        rows.push_back({"theorem3/" + f.name, o.family, pparams,
                        static_cast<double>(cfg.truncation_ladder[i]), f.values[i], 0, 0,
                        to_string(f.verdict)});
    rows.push_back({"theorem3/consistency", o.family, pparams,
                    static_cast<double>(res.functionals.size()), res.phi_square_ratio, 0, 0,
                    res.consistent ? "pass" : "fail"});
    return res.consistent ? kExitPass : kExitFalsified;
  }

  if (o.theorem_id == "4") {
    const auto res = verify_theorem4(fam, o.p, cfg);
    if (res.skipped) {
      rows.push_back({"theorem4", o.family, params + ";reason=" + res.skip_reason, 0, 0, 0, 0,
                      "skipped"});
      return kExitPass;
    }
    rows.push_back({"theorem4/eq28", o.family, params, static_cast<double>(cfg.condition_n), 0,
                    0, 0, to_string(res.eq28)});
    append_sweep_rows(rows, res.lipschitz, "theorem4/lipschitz", o.family, params);
    rows.push_back({"theorem4/lipschitz_verdict", o.family, params, 0, res.lip_band,
                    res.lip_growth, 0, to_string(res.lipschitz_verdict)});
    for (std::size_t i = 0; i < res.derivative.values.size(); ++i)
      rows.push_back({"theorem4/derivative", o.family, params,
                      static_cast<double>(cfg.truncation_ladder[i]), res.derivative.values[i],
                      0, 0, to_string(res.derivative.verdict)});
    rows.push_back({"theorem4/consistency", o.family, params, 0, 0, 0, 0,
                    res.consistent ? "pass" : "fail"});
    return res.consistent ? kExitPass : kExitFalsified;
  }

  if (o.theorem_id == "5") {
    const auto res = verify_theorem5(fam, o.p, cfg);
    if (res.skipped) {
      rows.push_back({"theorem5", o.family, params + ";reason=" + res.skip_reason, 0, 0, 0, 0,
                      "skipped"});
      return kExitPass;
    }
    append_sweep_rows(rows, res.zygmund, "theorem5/zygmund", o.family, params);
    append_sweep_rows(rows, res.log_ratio, "theorem5/log_ratio", o.family, params);
    rows.push_back({"theorem5/log_band", o.family, params, 0, res.log_ratio_band, 0, 0,
                    res.log_ratio.trend == Trend::growing ? "fail" : "pass"});
    append_sweep_rows(rows, res.lower_45, "theorem5/lower45", o.family, params);
    append_sweep_rows(rows, res.coeff_decay, "theorem5/coeff_decay", o.family, params);
    return res.log_ratio.trend == Trend::growing ? kExitFalsified : kExitPass;
  }

  if (o.theorem_id == "L2") {
    const auto res = verify_lemma2_dichotomy(fam, o.p, cfg);
    rows.push_back({"lemmaL2/eq21", o.family, params, static_cast<double>(cfg.condition_n), 0, 0,
                    0, to_string(res.eq21)});
    for (std::size_t i = 0; i < res.cauchy_norms.size(); ++i)
      rows.push_back({"lemmaL2/cauchy", o.family, params,
                      static_cast<double>(cfg.truncation_ladder[i]), res.cauchy_norms[i], 0, 0,
                      res.cauchy_decaying ? "decaying" : "non-decaying"});
    rows.push_back({"lemmaL2/consistency", o.family, params, 0, 0, 0, 0,
                    res.consistent ? "pass" : "fail"});
    return res.consistent ? kExitPass : kExitFalsified;
  }

  throw std::runtime_error("unknown theorem id '" + o.theorem_id + "' (expect 1,2,3,4,5,L2)");
}

int run_sweep(const RunOptions& o, std::vector<ReportRow>& rows) {
  validate_exponents(o);
  const TheoremConfig cfg = make_theorem_config(o);
  const SeqFamily fam = make_family(o);
  const CoeffSeq a = generate_family(fam);
  const std::string params = family_params(o) + ";p=" + format_number(o.p);

  std::vector<ReportRow> classify_rows;
  run_classify(o, classify_rows);

  const std::vector<std::pair<LemmaId, std::string>> battery{
      {LemmaId::tail_variation, "lemma4"},
      {LemmaId::weighted5, "lemma5"},
      {LemmaId::weighted6, "lemma6"},
      {LemmaId::mean38, "lemma38"},
      {LemmaId::mean42, "lemma42"},
  };
  std::vector<SweepResult> sweeps(battery.size());
  SmoothnessProfile profile;
  {
    std::vector<std::function<void()>> tasks;
    for (std::size_t i = 0; i < battery.size(); ++i)
      tasks.push_back([&, i] { sweeps[i] = lemma_sweep(battery[i].first, a, o.p, cfg); });
    tasks.push_back([&] {
      SeqFamily trunc = fam;
      if (fam.kind != FamilyKind::explicit_values) trunc.n = cfg.family_n;
      const TrigPoly f{Parity::cosine, generate_family(trunc)};
      const Grid grid(cfg.grid_m);
      profile = smoothness_profile(f, o.p, cfg.n_ladder, grid, cfg.t_steps, cfg.method);
    });
    parallel_tasks(std::move(tasks));
  }

  rows.insert(rows.end(), classify_rows.begin(), classify_rows.end());
  bool falsified = false;
  for (std::size_t i = 0; i < battery.size(); ++i) {
    append_sweep_rows(rows, sweeps[i], battery[i].second, o.family, params);
    falsified = falsified || sweeps[i].trend == Trend::growing;
  }
  for (std::size_t i = 0; i < profile.schedule.size(); ++i) {
    const double n = static_cast<double>(profile.schedule[i]);
    rows.push_back({"profile/omega", o.family, params, n, profile.omega[i], 0, 0, "evaluated"});
    rows.push_back(
        {"profile/omega_star", o.family, params, n, profile.omega_star[i], 0, 0, "evaluated"});
    rows.push_back({"profile/best_approx", o.family, params, n, profile.best_approx[i], 0, 0,
                    profile.best_exact ? "exact" : "upper_bound"});
  }
  return falsified ? kExitFalsified : kExitPass;
}

int run_selftest(const RunOptions& o, std::vector<ReportRow>& rows) {
  bool all_ok = true;
  const auto check = [&](const std::string& name, bool ok, double got, double want) {
    rows.push_back({"selftest/" + name, "", "", 0, got, want, detail::ineq_ratio(got, want),
                    ok ? "pass" : "fail"});
    all_ok = all_ok && ok;
  };

  for (const auto& [which, name] :
       {std::pair{LemmaId::hardy_ascending, "hardy33"}, {LemmaId::hardy_tail, "hardy34"}}) {
    const auto res = hardy_suite(which, 200, 2.0, 20240901);
    check(name, res.held == res.total && res.worst_ratio <= 1.0 + 1e-9,
          static_cast<double>(res.held), static_cast<double>(res.total));
  }
  {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const Grid grid(1 << 10);
    bool ok = true;
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<double> v(64);
      for (auto& x : v) x = uni(rng);
      const TrigPoly f{Parity::cosine, CoeffSeq(v)};
      KahanSum s;
      for (double c : v) s.add(c * c);
      const double n2 = lp_norm(f, 2.0, grid);
      const double err = std::abs(n2 * n2 - kPi * s.value()) / (kPi * s.value());
      worst = std::max(worst, err);
      ok = ok && err <= 1e-8;
    }
    check("parseval", ok, worst, 1e-8);
  }
  {
    const Grid grid(1 << 9);
    const TrigPoly f{Parity::cosine, CoeffSeq({1.0})};
    const double h = kPi / 16.0;
    const double got = modulus(f, 2.0, h, grid);
    const double want = 2.0 * std::sin(h / 2.0) * std::sqrt(kPi);
    check("modulus_closed_form", std::abs(got - want) <= 1e-6 * want, got, want);
  }
  {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const Grid grid(1 << 9);
    bool ok = true;
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<double> v(1 + rng() % 32);
      for (auto& x : v) x = uni(rng);
      const TrigPoly f{rng() % 2 ? Parity::sine : Parity::cosine, CoeffSeq(v)};
      const auto res = dirichlet_identity(f, 1, 16, kPi / 8.0, grid);
      worst = std::max(worst, res.rel_err);
      ok = ok && res.rel_err <= 1e-7;
    }
    check("block_kernel_identity", ok, worst, 1e-7);
  }
  {
    bool ok = true;
    for (int s = 0; s < 50; ++s) {
      const auto a = generate_family(
          {.kind = FamilyKind::monotone_custom, .n = 48, .seed = static_cast<std::uint64_t>(s)});
      ok = ok && embedding_audit(a).chain_ok;
    }
    check("embedding_chain", ok, ok ? 50 : 0, 50);
  }
  {
    TheoremConfig cfg = make_theorem_config(o);
    const auto a = generate_family({.kind = FamilyKind::power, .n = 1024, .beta = 1.0});
    bool ok = true;
    for (LemmaId id : {LemmaId::tail_variation, LemmaId::mean38, LemmaId::mean42})
      ok = ok && lemma_sweep(id, a, 2.0, cfg).trend != Trend::growing;
    check("lemma_sweeps_bounded", ok, ok ? 1 : 0, 1);
  }
  return all_ok ? kExitPass : kExitFalsified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bounded-variation coefficient classes and trigonometric series checks"};
  app.require_subcommand(1);

  RunOptions o;
  std::map<CLI::App*, KeyedOptions> keyed;

  const auto add_common = [&](CLI::App* cmd) -> KeyedOptions& {
    KeyedOptions& k = keyed[cmd];
    cmd->add_option("--config", o.config_path, "flat key = value config file");
    k.bind(cmd, "--out", "out", o.out, "output path, '-' for stdout");
    k.bind(cmd, "--format", "format", o.format, "csv or json");
    k.bind(cmd, "--family", "family", o.family,
           "power, power_log, block_witness, alternating, monotone_custom, explicit");
    k.bind(cmd, "--n", "n", o.n, "family truncation length");
    k.bind(cmd, "--beta", "beta", o.beta, "power decay exponent");
    k.bind(cmd, "--log-exp", "log_exp", o.log_exp, "power_log log exponent");
    k.bind(cmd, "--rho", "rho", o.rho, "block witness level decay");
    k.bind(cmd, "--level", "level", o.level, "alternating level");
    k.bind(cmd, "--seed", "seed", o.seed, "random seed");
    k.bind(cmd, "--values", "values", o.values, "explicit coefficients", true);
    k.bind(cmd, "--p", "p", o.p, "Lebesgue exponent p");
    k.bind(cmd, "--r", "r", o.r, "secondary exponent r");
    k.bind(cmd, "--lambda-scale", "lambda_scale", o.lambda_scale, "weight scale c");
    k.bind(cmd, "--lambda-power", "lambda_power", o.lambda_power, "weight power gamma");
    k.bind(cmd, "--lambda-log-power", "lambda_log_power", o.lambda_log_power,
           "weight log power delta");
    k.bind(cmd, "--phi-s", "phi_s", o.phi_s, "phi weight exponent s");
    k.bind(cmd, "--n-ladder", "n_ladder", o.n_ladder, "scale ladder", true);
    k.bind(cmd, "--h-ladder", "h_ladder", o.h_ladder, "shift ladder (defaults to 1/n)", true);
    k.bind(cmd, "--truncation-ladder", "truncation_ladder", o.truncation_ladder,
           "truncation ladder", true);
    k.bind(cmd, "--family-n", "family_n", o.family_n, "sum-function truncation degree");
    k.bind(cmd, "--condition-n", "condition_n", o.condition_n,
           "coefficient-condition truncation");
    k.bind(cmd, "--grid-m", "grid_m", o.grid_m, "quadrature grid size (power of two)");
    k.bind(cmd, "--t-steps", "t_steps", o.t_steps, "shift-scan steps per modulus");
    k.bind(cmd, "--trend-growth", "trend_growth", o.trend_growth,
           "per-doubling growth factor that counts as growing");
    k.bind(cmd, "--conv-ratio", "conv_ratio", o.conv_ratio,
           "increment decay bound for convergence verdicts");
    k.bind(cmd, "--cauchy-ratio", "cauchy_ratio", o.cauchy_ratio,
           "decay bound for Cauchy-norm verdicts");
    k.bind(cmd, "--stability-factor", "stability_factor", o.stability,
           "class-constant doubling tolerance");
    k.bind(cmd, "--s-offset", "s_offset", o.s_offset, "offset above 1/p - 1/r");
    k.bind(cmd, "--lip-variation", "lip_variation", o.lip_variation,
           "Lipschitz band width for the bounded verdict");
    k.bind(cmd, "--lip-growth", "lip_growth", o.lip_growth,
           "required end-to-end Lipschitz growth for the growing verdict");
    k.bind(cmd, "--hardy-tol", "hardy_tol", o.hardy_tol, "relative tolerance for the Hardy pair");
    k.bind(cmd, "--random", "random", o.random_count, "random trial count");
    return k;
  };

  CLI::App* classify_cmd = app.add_subcommand("classify", "variation-class constants of a family");
  add_common(classify_cmd);
  CLI::App* lemma_cmd = app.add_subcommand("lemma", "discrete inequality suites and sweeps");
  {
    KeyedOptions& k = add_common(lemma_cmd);
    k.bind(lemma_cmd, "--id", "id", o.lemma_id, "3a, 3b, 4, 5, 6, 38 or 42");
    lemma_cmd->get_option("--id")->required();
  }
  CLI::App* theorem_cmd = app.add_subcommand("theorem", "theorem verification harnesses");
  {
    KeyedOptions& k = add_common(theorem_cmd);
    k.bind(theorem_cmd, "--id", "id", o.theorem_id, "1, 2, 3, 4, 5 or L2");
    theorem_cmd->get_option("--id")->required();
  }
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "classification, lemma battery and profile");
  add_common(sweep_cmd);
  CLI::App* selftest_cmd = app.add_subcommand("selftest", "condensed internal battery");
  add_common(selftest_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    CLI::App* active = app.get_subcommands().front();
    if (!o.config_path.empty()) keyed.at(active).apply(FlatConfig::parse_file(o.config_path));

    std::vector<ReportRow> rows;
    int code = kExitInvalid;
    if (active == classify_cmd) code = run_classify(o, rows);
    else if (active == lemma_cmd) code = run_lemma(o, rows);
    else if (active == theorem_cmd) code = run_theorem(o, rows);
    else if (active == sweep_cmd) code = run_sweep(o, rows);
    else if (active == selftest_cmd) code = run_selftest(o, rows);
    emit(o, rows);
    return code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}
