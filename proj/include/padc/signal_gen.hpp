#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace padc {

// A deterministic test stimulus plus a self-description usable in manifests.
struct Stimulus {
  std::vector<double> samples;
  std::string kind;
  std::map<std::string, double> params;
  std::vector<std::string> warnings;
};

// n equally spaced points from vlo to vhi inclusive; endpoints exact.
Stimulus gen_ramp(std::size_t n, double vlo, double vhi);

// Coherent sine for an nfft-point record: exactly j_bin periods fit, so a
// rectangular-window transform has no leakage. nfft must be a power of two
// and 1 <= j_bin < nfft/2. A j_bin sharing a factor with nfft only warns.
Stimulus gen_coherent_sine(std::size_t nfft, int j_bin, double amplitude,
                           double offset);

// Each level repeated `repeats` times, in order.
Stimulus gen_dc_levels(std::span<const double> levels, std::size_t repeats);

// CSV export, columns: index,voltage.
void write_stimulus_csv(const Stimulus& stim, std::ostream& out);

}  // namespace padc
