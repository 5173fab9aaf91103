#include "padc/signal_gen.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "padc/io_util.hpp"

namespace padc {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

Stimulus gen_ramp(std::size_t n, double vlo, double vhi) {
  if (n < 2) throw std::domain_error("gen_ramp: need at least 2 points");
  if (!(vhi > vlo)) throw std::domain_error("gen_ramp: vhi must be > vlo");
  Stimulus s;
  s.kind = "ramp";
  s.params = {{"n", static_cast<double>(n)}, {"vlo", vlo}, {"vhi", vhi}};
  s.samples.resize(n);
  const double step = (vhi - vlo) / static_cast<double>(n - 1);
  for (std::size_t k = 0; k < n; ++k) {
    s.samples[k] = vlo + static_cast<double>(k) * step;
  }
  s.samples.front() = vlo;
  s.samples.back() = vhi;
  return s;
}

Stimulus gen_coherent_sine(std::size_t nfft, int j_bin, double amplitude,
                           double offset) {
  if (!is_power_of_two(nfft)) {
    throw std::domain_error("gen_coherent_sine: nfft must be a power of two");
  }
  if (j_bin < 1 || static_cast<std::size_t>(j_bin) >= nfft / 2) {
    throw std::domain_error(
        "gen_coherent_sine: j_bin must satisfy 1 <= j_bin < nfft/2");
  }
  Stimulus s;
  s.kind = "coherent_sine";
  s.params = {{"nfft", static_cast<double>(nfft)},
              {"j_bin", static_cast<double>(j_bin)},
              {"amplitude", amplitude},
              {"offset", offset}};
  if (std::gcd(static_cast<std::size_t>(j_bin), nfft) != 1) {
    s.warnings.push_back(
        "j_bin shares a factor with nfft; repeated phases reduce the "
        "distinct sample set (choose an odd bin)");
  }
  s.samples.resize(nfft);
  for (std::size_t k = 0; k < nfft; ++k) {
    // Reduce the phase index first so the sin argument stays in [0, 2*pi).
    const std::size_t m = (k * static_cast<std::size_t>(j_bin)) % nfft;
    s.samples[k] =
        offset + amplitude * std::sin(kTwoPi * static_cast<double>(m) /
                                      static_cast<double>(nfft));
  }
  return s;
}

Stimulus gen_dc_levels(std::span<const double> levels, std::size_t repeats) {
  if (levels.empty()) throw std::domain_error("gen_dc_levels: empty levels");
  if (repeats < 1) throw std::domain_error("gen_dc_levels: repeats must be >= 1");
  Stimulus s;
  s.kind = "dc_levels";
  s.params = {{"levels", static_cast<double>(levels.size())},
              {"repeats", static_cast<double>(repeats)}};
  s.samples.reserve(levels.size() * repeats);
  for (double v : levels) {
    for (std::size_t r = 0; r < repeats; ++r) s.samples.push_back(v);
  }
  return s;
}

void write_stimulus_csv(const Stimulus& stim, std::ostream& out) {
  out << "index,voltage\n";
  for (std::size_t k = 0; k < stim.samples.size(); ++k) {
    out << k << ',' << fmt_double(stim.samples[k]) << '\n';
  }
}

}  // namespace padc
