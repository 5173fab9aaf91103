#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "padc/error_models.hpp"
#include "padc/noise.hpp"

using namespace padc;

TEST_SUITE_BEGIN("error_models");

TEST_CASE("closed-loop gain of the switched-capacitor amplifier") {
  CHECK(closed_loop_gain(kInf, 1.0) == 2.0);

  const double a55 = std::pow(10.0, 55.0 / 20.0);
  CHECK(a55 == doctest::Approx(562.34).epsilon(1e-5));
  CHECK(closed_loop_gain(55.0, 1.0) == 2.0 / (1.0 + 2.0 / a55));
  CHECK(closed_loop_gain(55.0, 1.0) == doctest::Approx(1.992913).epsilon(1e-6));

  // A equal to the ideal interstage gain halves the loop: G = 1.
  CHECK(closed_loop_gain(6.0206, 1.0) == doctest::Approx(1.0).epsilon(1e-6));

  CHECK_THROWS_AS(closed_loop_gain(55.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(closed_loop_gain(-kInf, 1.0), std::domain_error);
}

TEST_CASE("closed-loop gain bound and monotonicity in A") {
  double prev = 0.0;
  for (double db = 10.0; db <= 140.0; db += 5.0) {
    const double a = std::pow(10.0, db / 20.0);
    const double g = closed_loop_gain(db, 1.0);
    CHECK(g > prev);
    CHECK(std::abs(g - 2.0) <= 4.0 / a);
    prev = g;
  }
  CHECK(finite_gain_error(kInf, 1.0) == 1.0);
  CHECK(closed_loop_gain(55.0, 1.0) ==
        doctest::Approx(2.0 * finite_gain_error(55.0, 1.0)).epsilon(1e-15));
}

TEST_CASE("first-order settling") {
  CHECK(settling_factor(800e6, 0.5, kInf) == 1.0);
  CHECK(settling_factor(kInf, 0.5, 1e-9) == 1.0);

  // One time constant at beta = 1/2, GBW 800 MHz: tau = 0.39789 ns.
  const double tau = 1.0 / (2.0 * M_PI * 0.5 * 800e6);
  CHECK(tau == doctest::Approx(0.39789e-9).epsilon(1e-4));
  CHECK(settling_factor(800e6, 0.5, tau) ==
        doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-12));

  // Half a period at 80 Msamples/s: settling error about 1.5e-7.
  const double err = 1.0 - settling_factor(800e6, 0.5, 6.25e-9);
  CHECK(err == doctest::Approx(std::exp(-6.25e-9 / tau)).epsilon(1e-12));
  CHECK(err > 1.4e-7);
  CHECK(err < 1.6e-7);

  CHECK_THROWS_AS(settling_factor(0.0, 0.5, 1e-9), std::domain_error);
  CHECK_THROWS_AS(settling_factor(800e6, 0.0, 1e-9), std::domain_error);
  CHECK_THROWS_AS(settling_factor(800e6, 1.5, 1e-9), std::domain_error);
  CHECK_THROWS_AS(settling_factor(800e6, 0.5, 0.0), std::domain_error);
}

TEST_CASE("settling factor is monotone in settle time and within (0,1]") {
  double prev = 0.0;
  for (double t = 0.05e-9; t < 10e-9; t += 0.05e-9) {
    const double f = settling_factor(800e6, 0.5, t);
    CHECK(f > 0.0);
    CHECK(f <= 1.0);
    CHECK(f > prev);
    prev = f;
  }
}

TEST_CASE("kT/C noise sigma") {
  CHECK(ktc_noise_sigma(0.1e-12, 300.0) ==
        doctest::Approx(2.035e-4).epsilon(1e-3));
  // Four times the capacitance halves the sigma.
  CHECK(ktc_noise_sigma(0.4e-12, 300.0) / ktc_noise_sigma(0.1e-12, 300.0) ==
        doctest::Approx(0.5).epsilon(1e-12));
  // Noiseless toward zero temperature.
  CHECK(ktc_noise_sigma(0.1e-12, 1e-300) < 1e-140);
  CHECK_THROWS_AS(ktc_noise_sigma(0.0, 300.0), std::domain_error);
  CHECK_THROWS_AS(ktc_noise_sigma(0.1e-12, 0.0), std::domain_error);
}

TEST_CASE("rail saturation") {
  const Rails r{5.0, -5.0};
  CHECK(saturate(0.3, r) == 0.3);
  CHECK(saturate(7.2, r) == 5.0);
  CHECK(saturate(-9.0, r) == -5.0);
  CHECK_THROWS_AS(saturate(0.0, Rails{-1.0, 1.0}), std::domain_error);

  const NoiseSource gen(5);
  for (int k = 0; k < 1000; ++k) {
    const double v = -20.0 + 40.0 * gen.uniform(k);
    CHECK(saturate(saturate(v, r), r) == saturate(v, r));
  }
}

TEST_CASE("residue with capacitor mismatch") {
  const ReferencePair refs{1.0, -1.0};
  CHECK(residue_mismatch(0.5, 1, refs, 0.0) == 0.0);
  CHECK(residue_mismatch(0.5, 1, refs, 0.01) ==
        doctest::Approx(-0.005).epsilon(1e-9));
  CHECK(residue_mismatch(0.0, 0, refs, 0.01) ==
        doctest::Approx(1.01).epsilon(1e-12));
  CHECK_THROWS_AS(residue_mismatch(0.0, 0, refs, -1.0), std::domain_error);
}

TEST_CASE("noise draws are reproducible and seeds decorrelate") {
  const NoiseSource a(42), b(42), c(43);
  for (int k = 0; k < 1000; ++k) {
    CHECK(a.unit_normal(k, 3) == b.unit_normal(k, 3));
  }
  const int n = 100000;
  double sa = 0, sc = 0, saa = 0, scc = 0, sac = 0;
  for (int k = 0; k < n; ++k) {
    const double x = a.unit_normal(k, 0);
    const double y = c.unit_normal(k, 0);
    sa += x;
    sc += y;
    saa += x * x;
    scc += y * y;
    sac += x * y;
  }
  const double cov = sac / n - (sa / n) * (sc / n);
  const double var_a = saa / n - (sa / n) * (sa / n);
  const double var_c = scc / n - (sc / n) * (sc / n);
  const double corr = cov / std::sqrt(var_a * var_c);
  CHECK(std::abs(corr) < 0.01);
  // Sane first two moments while at it.
  CHECK(std::abs(sa / n) < 0.02);
  CHECK(var_a == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("stage parameter validation names the field") {
  StageParams p;
  p.load_cap_f = 0.0;
  CHECK_THROWS_WITH_AS(p.validate("stages[2]."),
                       "stages[2].load_cap_f must be > 0",
                       std::invalid_argument);
}

TEST_SUITE_END();
