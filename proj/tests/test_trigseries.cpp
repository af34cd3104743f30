#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "nbvslab/trigseries.hpp"
#include "oracles.hpp"

using namespace nbvslab;

namespace {

TrigPoly random_poly(std::mt19937_64& rng, std::int64_t max_degree, bool random_parity = true) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<double> v(1 + rng() % static_cast<std::uint64_t>(max_degree));
  for (auto& x : v) x = uni(rng);
  const Parity parity =
      (!random_parity || rng() % 2 == 0) ? Parity::cosine : Parity::sine;
  return TrigPoly{parity, CoeffSeq(std::move(v))};
}

TrigPoly cos_x() { return TrigPoly{Parity::cosine, CoeffSeq({1.0})}; }

}  // namespace

TEST_CASE("grid validation and geometry") {
  REQUIRE_THROWS_AS(Grid(6), std::invalid_argument);
  REQUIRE_THROWS_AS(Grid(100), std::invalid_argument);
  const Grid g(64);
  REQUIRE(g.size() == 64);
  REQUIRE(g.point(32) == Catch::Approx(kPi));
  REQUIRE(g.weight() == Catch::Approx(2.0 * kPi / 64.0));
  REQUIRE(g.resolves(15));
  REQUIRE_FALSE(g.resolves(16));
}

TEST_CASE("evaluate: pointwise trivial values") {
  const Grid g(64);
  const auto unit = evaluate(cos_x(), g);
  REQUIRE(unit[0] == Catch::Approx(1.0));

  const TrigPoly sine{Parity::sine, CoeffSeq({0.3, 0.7, 0.1})};
  REQUIRE(evaluate(sine, g)[0] == Catch::Approx(0.0).margin(1e-14));

  const TrigPoly two{Parity::cosine, CoeffSeq({1.0, 1.0})};
  REQUIRE(evaluate(two, g)[32] == Catch::Approx(0.0).margin(1e-13));  // cos pi + cos 2pi
}

TEST_CASE("evaluate agrees with naive summation to 1e-12 of scale") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 8; ++trial) {
    const auto f = random_poly(rng, 256);
    const Grid g(2048);
    const auto fast = evaluate(f, g);
    double scale = 1.0;
    for (double v : fast) scale = std::max(scale, std::abs(v));
    for (std::int64_t j = 0; j < g.size(); j += 37) {
      const double ref = oracle::naive_eval(f, g.point(j));
      REQUIRE(std::abs(fast[static_cast<std::size_t>(j)] - ref) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("evaluate rejects an unresolving grid") {
  std::vector<double> v(16, 1.0);
  const TrigPoly f{Parity::cosine, CoeffSeq(v)};
  REQUIRE_THROWS_AS(evaluate(f, Grid(64)), std::invalid_argument);  // needs 4*16+4 > 64
}

TEST_CASE("phase-shifted coefficients reproduce shifted samples exactly") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 6; ++trial) {
    const auto f = random_poly(rng, 64);
    const Grid g(1024);
    const double t = 0.1234567 + 0.1 * trial;
    auto shifted = shift_difference(f, t);  // f(.+t) - f(.)
    const auto diff = evaluate(shifted, g);
    const auto base = evaluate(f, g);
    double scale = 1.0;
    for (double v : base) scale = std::max(scale, std::abs(v));
    for (std::int64_t j = 0; j < g.size(); j += 101) {
      const double want = oracle::naive_eval(f, g.point(j) + t) - oracle::naive_eval(f, g.point(j));
      REQUIRE(std::abs(diff[static_cast<std::size_t>(j)] - want) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("lp_norm: Parseval identities") {
  const Grid g(1 << 12);
  REQUIRE(lp_norm(cos_x(), 2.0, g) == Catch::Approx(std::sqrt(kPi)).epsilon(1e-12));

  const TrigPoly zero{Parity::cosine, CoeffSeq({0.0, 0.0})};
  REQUIRE(lp_norm(zero, 2.0, g) == 0.0);

  const TrigPoly two{Parity::cosine, CoeffSeq({1.0, 1.0})};
  REQUIRE(lp_norm(two, 2.0, g) == Catch::Approx(std::sqrt(2.0 * kPi)).epsilon(1e-12));
}

TEST_CASE("lp_norm: random polynomials satisfy Parseval to 1e-8") {
  std::mt19937_64 rng(2711);
  const Grid g(1 << 14);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_poly(rng, 256);
    const double n2 = lp_norm(f, 2.0, g);
    KahanSum s;
    for (double a : f.coeffs.values()) s.add(a * a);
    const double parseval = kPi * s.value();
    REQUIRE(std::abs(n2 * n2 - parseval) <= 1e-8 * parseval + 1e-14);
  }
}

TEST_CASE("lp_norm for p != 2 matches the naive quadrature oracle") {
  std::mt19937_64 rng(5);
  const auto f = random_poly(rng, 24);
  const Grid g(512);
  for (double p : {1.0, 1.5, 3.0}) {
    const double want = oracle::naive_lp_norm(f, p, g.size());
    REQUIRE(lp_norm(f, p, g) == Catch::Approx(want).epsilon(1e-10));
  }
}

TEST_CASE("modulus: closed forms for cos x") {
  const Grid g(1 << 10);
  for (double h : {kPi / 4.0, kPi / 16.0, kPi / 64.0}) {
    const double want = 2.0 * std::sin(h / 2.0) * std::sqrt(kPi);
    REQUIRE(modulus(cos_x(), 2.0, h, g) == Catch::Approx(want).epsilon(1e-9));
    const double want_star = 2.0 * (1.0 - std::cos(h)) * std::sqrt(kPi);
    REQUIRE(modulus_star(cos_x(), 2.0, h, g) == Catch::Approx(want_star).epsilon(1e-9));
  }
}

TEST_CASE("modulus: grid route and coefficient route agree at p = 2") {
  std::mt19937_64 rng(303);
  const Grid g(1 << 12);
  for (int trial = 0; trial < 4; ++trial) {
    const auto f = random_poly(rng, 96);
    const double h = 0.05 + 0.3 * trial;
    const double via_grid = modulus(f, 2.0, h, g, 64, NormMethod::grid);
    const double via_coeff = modulus(f, 2.0, h, g, 64, NormMethod::coefficients);
    REQUIRE(via_grid == Catch::Approx(via_coeff).epsilon(1e-10));
    const double star_grid = modulus_star(f, 2.0, h, g, 64, NormMethod::grid);
    const double star_coeff = modulus_star(f, 2.0, h, g, 64, NormMethod::coefficients);
    REQUIRE(star_grid == Catch::Approx(star_coeff).epsilon(1e-10));
  }
}

TEST_CASE("modulus: sandwiched by coarse and dense shift scans") {
  std::mt19937_64 rng(99);
  const Grid g(1 << 11);
  for (double p : {1.5, 2.0}) {
    const auto f = random_poly(rng, 32);
    const double h = 0.8;
    const double got = modulus(f, p, h, g, 64);
    const double coarse = oracle::naive_modulus(f, p, h, 64, 512);
    const double dense = oracle::naive_modulus(f, p, h, 256, 512);
    REQUIRE(got >= coarse * (1.0 - 1e-9));
    REQUIRE(got <= dense * (1.0 + 1e-3) + 1e-12);
  }
}

TEST_CASE("modulus: zero polynomial and monotonicity in h") {
  const Grid g(512);
  const TrigPoly zero{Parity::sine, CoeffSeq({0.0, 0.0, 0.0})};
  REQUIRE(modulus(zero, 2.0, 0.5, g) == 0.0);
  REQUIRE(modulus_star(zero, 2.0, 0.5, g) == 0.0);

  std::mt19937_64 rng(17);
  const auto f = random_poly(rng, 16);
  double prev = 0.0;
  for (double h : {0.1, 0.2, 0.4, 0.8, 1.6}) {
    const double cur = modulus(f, 2.0, h, g);
    REQUIRE(cur >= prev - 1e-10);
    prev = cur;
  }
}

TEST_CASE("modulus properties: second difference vs first, subadditivity") {
  std::mt19937_64 rng(23);
  const Grid g(1 << 11);
  for (int trial = 0; trial < 5; ++trial) {
    const auto f = random_poly(rng, 48);
    const double h1 = 0.07 + 0.11 * trial;
    const double h2 = 0.19 + 0.05 * trial;
    const double w1 = modulus(f, 2.0, h1, g);
    const double w2 = modulus(f, 2.0, h2, g);
    const double w12 = modulus(f, 2.0, h1 + h2, g);
    REQUIRE(w12 <= w1 + w2 + 1e-9);
    const double star = modulus_star(f, 2.0, h1, g);
    REQUIRE(star <= 2.0 * w1 + 1e-9);
  }
}

TEST_CASE("modulus rejects bad parameters") {
  const Grid g(512);
  REQUIRE_THROWS_AS(modulus(cos_x(), 2.0, 0.0, g), std::invalid_argument);
  REQUIRE_THROWS_AS(modulus(cos_x(), 2.0, 4.0, g), std::invalid_argument);
  REQUIRE_THROWS_AS(modulus(cos_x(), 2.0, 0.5, g, 32), std::invalid_argument);
}

TEST_CASE("best approximation: Parseval tails") {
  const Grid g(512);
  const TrigPoly two{Parity::cosine, CoeffSeq({1.0, 1.0})};
  const auto e1 = best_approx(two, 1, 2.0, g);
  REQUIRE(e1.value == Catch::Approx(std::sqrt(kPi)).epsilon(1e-13));
  REQUIRE(e1.exact);

  REQUIRE(best_approx(cos_x(), 1, 2.0, g).value == 0.0);

  const auto fam = generate_family({.kind = FamilyKind::power, .n = 256, .beta = 1.5});
  const TrigPoly f{Parity::cosine, fam};
  const auto e16 = best_approx(f, 16, 2.0, g);
  const double want = std::sqrt(kPi * zeta_tail(3.0, 17));  // analytic tail continues past N
  REQUIRE(e16.value == Catch::Approx(want).epsilon(1e-11));

  double prev = kInf;
  for (std::int64_t n = 1; n <= 64; n *= 2) {
    const double cur = best_approx(f, n, 2.0, g).value;
    REQUIRE(cur <= prev + 1e-15);
    prev = cur;
  }
}

TEST_CASE("best approximation: p != 2 partial-sum tail is an upper bound") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<double> coeffs(24);
  for (auto& x : coeffs) x = uni(rng);
  const TrigPoly f{Parity::cosine, CoeffSeq(coeffs)};
  const Grid g(512);
  const auto ub = best_approx(f, 8, 3.0, g);
  REQUIRE_FALSE(ub.exact);
  // the tail polynomial norm, computed naively
  std::vector<double> tail(f.coeffs.values());
  for (std::size_t i = 0; i < 8; ++i) tail[i] = 0.0;
  const TrigPoly ft{f.parity, CoeffSeq(tail)};
  REQUIRE(ub.value == Catch::Approx(oracle::naive_lp_norm(ft, 3.0, g.size())).epsilon(1e-10));
}

TEST_CASE("dirichlet block kernel values") {
  const Grid g(512);
  const auto t12 = dirichlet_block(1, 1, g);  // cos x + cos 2x
  REQUIRE(t12[0] == Catch::Approx(2.0));
  REQUIRE_THROWS_AS(dirichlet_block(5, 2, g), std::invalid_argument);
  REQUIRE_THROWS_AS(dirichlet_block(1, 200, g), std::invalid_argument);
}

TEST_CASE("block kernel identity: closed-form case") {
  const Grid g(512);
  const auto res = dirichlet_identity(cos_x(), 1, 1, kPi / 2.0, g);
  const double want = 2.0 * kPi;  // 4 pi sin^2(pi/4)
  REQUIRE(res.explicit_side == Catch::Approx(want).epsilon(1e-13));
  REQUIRE(res.integral_side == Catch::Approx(want).epsilon(1e-12));
  REQUIRE(res.rel_err <= 1e-12);
}

TEST_CASE("block kernel identity: zero function") {
  const Grid g(512);
  const TrigPoly zero{Parity::cosine, CoeffSeq({0.0, 0.0})};
  const auto res = dirichlet_identity(zero, 1, 2, kPi / 8.0, g);
  REQUIRE(res.integral_side == Catch::Approx(0.0).margin(1e-14));
  REQUIRE(res.rel_err == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("block kernel identity holds on random polynomials of both parities") {
  std::mt19937_64 rng(4242);
  const Grid g(1 << 10);
  for (int trial = 0; trial < 25; ++trial) {
    const auto f = random_poly(rng, 64);
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 32);
    const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % (2 * n));
    for (double t : {kPi / 2.0, kPi / 8.0, kPi / 32.0}) {
      const auto res = dirichlet_identity(f, m, n, t, g);
      REQUIRE(res.rel_err <= 1e-7);
    }
  }
}

TEST_CASE("smoothness profile collects the three gauges") {
  const auto fam = generate_family({.kind = FamilyKind::power, .n = 64, .beta = 1.5});
  const TrigPoly f{Parity::cosine, fam};
  const Grid g(512);
  const std::vector<std::int64_t> sched{4, 8, 16};
  const auto prof = smoothness_profile(f, 2.0, sched, g);
  REQUIRE(prof.schedule == sched);
  REQUIRE(prof.best_exact);
  for (std::size_t i = 1; i < prof.omega.size(); ++i) {
    REQUIRE(prof.omega[i] <= prof.omega[i - 1] + 1e-10);      // omega(1/n) shrinks
    REQUIRE(prof.best_approx[i] <= prof.best_approx[i - 1]);  // E_n shrinks
  }
  for (std::size_t i = 0; i < prof.omega.size(); ++i)
    REQUIRE(prof.omega_star[i] <= 2.0 * prof.omega[i] + 1e-9);
}
