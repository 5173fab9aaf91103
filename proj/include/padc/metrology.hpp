#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "padc/pipeline.hpp"

namespace padc {

// Static-linearity result over the interior codes 1 .. 2^N-2 (the end codes
// have half-open bins and are excluded). INL is endpoint-anchored: the
// reference line runs through the first and last transition, so INL at both
// ends is zero by construction.
struct LinearityReport {
  std::vector<double> dnl;  // LSB units, codes 1 .. 2^N-2
  std::vector<double> inl;  // LSB units, codes 1 .. 2^N-2
  double worst_dnl = 0.0;   // max |dnl|
  double worst_inl = 0.0;   // max |inl|
  std::string method;       // "histogram" | "transitions"
  int codes_tested = 0;
  int resolution = 0;
  std::string inl_convention = "endpoint";
  std::vector<std::string> warnings;
};

// Code-density linearity from a full-scale ramp capture. A missing interior
// code records DNL = -1 (no error); a constant capture is a domain error.
LinearityReport histogram_linearity(const CodeStream& codes, int n_bits);

// Transition levels T(1..2^N-1) located by scan + bisection on a
// deterministic converter; accurate to tol. Non-monotone converters are
// reported via the flag and offending-code list rather than an error.
struct TransitionScan {
  std::vector<double> levels;       // T(k), k = 1 .. 2^N-1
  bool monotone = true;
  std::vector<int> offending_codes;
};
TransitionScan transition_levels(const std::function<int(double)>& adc,
                                 int n_bits, const ReferencePair& refs,
                                 double tol);

// DNL/INL from measured transition levels (strictly increasing required).
LinearityReport linearity_from_transitions(std::span<const double> levels);

// One-sided power spectrum (nfft/2 + 1 bins) of the mean-removed sequence,
// rectangular window, scaled so the bin powers sum to the time-domain mean
// power (Parseval).
std::vector<double> power_spectrum(std::span<const double> x, std::size_t nfft);
std::vector<double> power_spectrum(const CodeStream& codes, std::size_t nfft);

struct SndrResult {
  double sndr_db = 0.0;
  double sfdr_db = 0.0;
  double enob_bits = 0.0;
};

// SNDR over all non-signal, non-DC bins; SFDR against the largest single
// spur; ENOB = (SNDR - 1.76)/6.02.
SndrResult sndr_enob(std::span<const double> power, std::size_t signal_bin);

struct SpectrumReport {
  std::vector<double> power_db;  // per bin, relative to signal power
  std::size_t signal_bin = 0;
  double sndr_db = 0.0;
  double sfdr_db = 0.0;
  double enob_bits = 0.0;
  std::size_t nfft = 0;
};

// Spectrum + SNDR/SFDR/ENOB in one report; power_db is normalized to the
// signal bin.
SpectrumReport analyze_spectrum(std::span<const double> x, std::size_t nfft,
                                std::size_t signal_bin);

}  // namespace padc
