#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "padc/metrology.hpp"
#include "padc/signal_gen.hpp"

using namespace padc;

TEST_SUITE_BEGIN("signal_gen");

TEST_CASE("ramp endpoints and spacing") {
  const Stimulus s3 = gen_ramp(3, -1.0, 1.0);
  REQUIRE(s3.samples.size() == 3);
  CHECK(s3.samples[0] == -1.0);
  CHECK(s3.samples[1] == 0.0);
  CHECK(s3.samples[2] == 1.0);

  const Stimulus s2 = gen_ramp(2, 0.0, 1.0);
  CHECK(s2.samples.front() == 0.0);
  CHECK(s2.samples.back() == 1.0);

  const Stimulus big = gen_ramp(65536, -1.0, 1.0);
  CHECK(big.samples.front() == -1.0);
  CHECK(big.samples.back() == 1.0);
  const double step = 2.0 / 65535.0;
  for (std::size_t k = 1; k < big.samples.size(); ++k) {
    CHECK(big.samples[k] - big.samples[k - 1] ==
          doctest::Approx(step).epsilon(1e-9));
  }

  CHECK_THROWS_AS(gen_ramp(1, 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(gen_ramp(16, 1.0, 1.0), std::domain_error);
}

TEST_CASE("coherent sine at bin 1 of 8") {
  const Stimulus s = gen_coherent_sine(8, 1, 1.0, 0.0);
  REQUIRE(s.samples.size() == 8);
  const double r = std::sqrt(2.0) / 2.0;
  const double expect[8] = {0.0, r, 1.0, r, 0.0, -r, -1.0, -r};
  for (int k = 0; k < 8; ++k) {
    CHECK(s.samples[static_cast<std::size_t>(k)] ==
          doctest::Approx(expect[k]).epsilon(1e-12));
  }
}

TEST_CASE("coherent sine bin checks") {
  CHECK_THROWS_AS(gen_coherent_sine(1024, 512, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(gen_coherent_sine(1024, 0, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(gen_coherent_sine(1000, 3, 1.0, 0.0), std::domain_error);
  CHECK(gen_coherent_sine(1024, 479, 1.0, 0.0).warnings.empty());
  CHECK_FALSE(gen_coherent_sine(1024, 2, 1.0, 0.0).warnings.empty());
}

TEST_CASE("bin-479 record is full scale and leakage-free") {
  const Stimulus s = gen_coherent_sine(1024, 479, 1.0, 0.0);
  double peak = 0.0;
  for (double v : s.samples) peak = std::max(peak, std::abs(v));
  CHECK(peak == doctest::Approx(1.0).epsilon(1e-12));

  const auto p = power_spectrum(s.samples, 1024);
  double leak = 0.0;
  for (std::size_t m = 0; m < p.size(); ++m) {
    if (m != 479) leak += p[m];
  }
  CHECK(leak / p[479] < 1e-10);
}

TEST_CASE("dc level sequences") {
  const double one[] = {0.5};
  const Stimulus a = gen_dc_levels(one, 3);
  CHECK(a.samples == std::vector<double>{0.5, 0.5, 0.5});

  const double two[] = {0.0, 1.0};
  const Stimulus b = gen_dc_levels(two, 2);
  CHECK(b.samples == std::vector<double>{0.0, 0.0, 1.0, 1.0});

  const double three[] = {-1.0, 0.0, 1.0};
  const Stimulus c = gen_dc_levels(three, 1);
  CHECK(c.samples == std::vector<double>{-1.0, 0.0, 1.0});

  CHECK_THROWS_AS(gen_dc_levels({}, 1), std::domain_error);
  CHECK_THROWS_AS(gen_dc_levels(one, 0), std::domain_error);
}

TEST_CASE("stimulus CSV export") {
  const double levels[] = {0.25, -0.5};
  std::ostringstream out;
  write_stimulus_csv(gen_dc_levels(levels, 1), out);
  CHECK(out.str() == "index,voltage\n0,0.25\n1,-0.5\n");
}

TEST_SUITE_END();
