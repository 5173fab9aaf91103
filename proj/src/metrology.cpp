#include "padc/metrology.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

#include "padc/io_util.hpp"

namespace padc {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// DNL over interior codes from estimated bin widths; INL is the cumulative
// sum, which lands back at zero because the widths are normalized to their
// own mean (endpoint anchoring).
void fill_dnl_inl(LinearityReport& rep, std::span<const double> widths,
                  double mean_width) {
  const std::size_t n = widths.size();
  rep.dnl.resize(n);
  rep.inl.resize(n);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    rep.dnl[i] = widths[i] / mean_width - 1.0;
    rep.inl[i] = acc;  // INL(code k) = sum of DNL over codes < k
    acc += rep.dnl[i];
  }
  rep.worst_dnl = max_abs(rep.dnl);
  rep.worst_inl = max_abs(rep.inl);
  rep.codes_tested = static_cast<int>(n);
}

// Iterative radix-2 FFT, in place. Sizes are validated power-of-two by the
// callers.
void fft_radix2(std::vector<std::complex<double>>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = -kTwoPi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

}  // namespace

LinearityReport histogram_linearity(const CodeStream& codes, int n_bits) {
  const int n_codes = 1 << n_bits;
  if (codes.codes.empty()) {
    throw std::domain_error("histogram_linearity: empty code stream");
  }
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(n_codes), 0);
  int lo = n_codes, hi = -1;
  for (int c : codes.codes) {
    if (c < 0 || c >= n_codes) {
      throw std::domain_error("histogram_linearity: code out of range");
    }
    ++hist[static_cast<std::size_t>(c)];
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  if (lo == hi) {
    throw std::domain_error(
        "histogram_linearity: degenerate capture (single code)");
  }

  LinearityReport rep;
  rep.method = "histogram";
  rep.resolution = n_bits;

  const std::size_t interior = static_cast<std::size_t>(n_codes - 2);
  std::uint64_t total = 0;
  for (std::size_t k = 1; k + 1 < static_cast<std::size_t>(n_codes); ++k) {
    total += hist[k];
  }
  if (total == 0) {
    throw std::domain_error("histogram_linearity: no interior-code hits");
  }
  const double mean = static_cast<double>(total) / static_cast<double>(interior);
  if (mean < 32.0) {
    rep.warnings.push_back("mean interior count " + fmt_double(mean) +
                           " is below 32 samples/code; estimates are coarse");
  }
  if (hist.front() == 0 || hist.back() == 0) {
    rep.warnings.push_back(
        "capture does not reach both end codes; endpoint anchoring is "
        "unreliable");
  }

  std::vector<double> widths(interior);
  for (std::size_t k = 0; k < interior; ++k) {
    widths[k] = static_cast<double>(hist[k + 1]);
  }
  fill_dnl_inl(rep, widths, mean);
  return rep;
}

TransitionScan transition_levels(const std::function<int(double)>& adc,
                                 int n_bits, const ReferencePair& refs,
                                 double tol) {
  refs.validate();
  if (!(tol > 0.0)) {
    throw std::domain_error("transition_levels: tol must be > 0");
  }
  const int n_codes = 1 << n_bits;
  const double fs = refs.full_scale();
  const double lo = refs.vrefn - fs / 64.0;
  const double hi = refs.vrefp + fs / 64.0;

  // Coarse scan to bracket each first-crossing, then bisection.
  const std::size_t scan_n = static_cast<std::size_t>(n_codes) * 64 + 1;
  std::vector<double> xs(scan_n);
  std::vector<int> ys(scan_n);
  const double step = (hi - lo) / static_cast<double>(scan_n - 1);
  for (std::size_t i = 0; i < scan_n; ++i) {
    xs[i] = lo + static_cast<double>(i) * step;
    ys[i] = adc(xs[i]);
  }

  TransitionScan out;
  for (std::size_t i = 1; i < scan_n; ++i) {
    if (ys[i] < ys[i - 1]) {
      out.monotone = false;
      if (out.offending_codes.empty() ||
          out.offending_codes.back() != ys[i - 1]) {
        out.offending_codes.push_back(ys[i - 1]);
      }
    }
  }

  out.levels.resize(static_cast<std::size_t>(n_codes - 1));
  for (int k = 1; k < n_codes; ++k) {
    // First scan interval where the output reaches code k. Restarting per
    // code keeps the first-reach semantics exact for non-monotone inputs.
    std::size_t scan_pos = 1;
    while (scan_pos < scan_n && ys[scan_pos] < k) ++scan_pos;
    if (scan_pos >= scan_n) {
      // Never reached: report the top of the scan range.
      out.levels[static_cast<std::size_t>(k - 1)] = hi;
      out.monotone = false;
      out.offending_codes.push_back(k);
      continue;
    }
    double a = xs[scan_pos - 1];
    double b = xs[scan_pos];
    while (b - a > tol) {
      const double mid = 0.5 * (a + b);
      if (adc(mid) >= k) {
        b = mid;
      } else {
        a = mid;
      }
    }
    out.levels[static_cast<std::size_t>(k - 1)] = b;
  }

  for (std::size_t k = 1; k < out.levels.size(); ++k) {
    if (!(out.levels[k] > out.levels[k - 1])) {
      out.monotone = false;
      out.offending_codes.push_back(static_cast<int>(k + 1));
    }
  }
  return out;
}

LinearityReport linearity_from_transitions(std::span<const double> levels) {
  if (levels.size() < 3) {
    throw std::domain_error("linearity_from_transitions: need at least 3 levels");
  }
  if (!is_power_of_two(levels.size() + 1)) {
    throw std::domain_error(
        "linearity_from_transitions: level count must be 2^N - 1");
  }
  for (std::size_t k = 1; k < levels.size(); ++k) {
    if (!(levels[k] > levels[k - 1])) {
      throw std::domain_error(
          "linearity_from_transitions: levels must be strictly increasing");
    }
  }
  LinearityReport rep;
  rep.method = "transitions";
  rep.resolution = 0;
  for (std::size_t n = levels.size() + 1; n > 1; n >>= 1) ++rep.resolution;

  const std::size_t interior = levels.size() - 1;  // widths of codes 1..2^N-2
  const double lsb_ref =
      (levels.back() - levels.front()) / static_cast<double>(interior);
  std::vector<double> widths(interior);
  for (std::size_t k = 0; k < interior; ++k) {
    widths[k] = levels[k + 1] - levels[k];
  }
  fill_dnl_inl(rep, widths, lsb_ref);
  return rep;
}

std::vector<double> power_spectrum(std::span<const double> x,
                                   std::size_t nfft) {
  if (!is_power_of_two(nfft)) {
    throw std::domain_error("power_spectrum: nfft must be a power of two");
  }
  if (x.size() < nfft) {
    throw std::domain_error("power_spectrum: need at least nfft samples");
  }
  double mean = 0.0;
  for (std::size_t k = 0; k < nfft; ++k) mean += x[k];
  mean /= static_cast<double>(nfft);

  std::vector<std::complex<double>> buf(nfft);
  for (std::size_t k = 0; k < nfft; ++k) buf[k] = x[k] - mean;
  fft_radix2(buf);

  // One-sided mean power per bin; DC and Nyquist are unique, the rest fold.
  std::vector<double> p(nfft / 2 + 1);
  const double scale = 1.0 / (static_cast<double>(nfft) * static_cast<double>(nfft));
  p[0] = std::norm(buf[0]) * scale;
  p[nfft / 2] = std::norm(buf[nfft / 2]) * scale;
  for (std::size_t m = 1; m < nfft / 2; ++m) {
    p[m] = 2.0 * std::norm(buf[m]) * scale;
  }
  return p;
}

std::vector<double> power_spectrum(const CodeStream& codes, std::size_t nfft) {
  std::vector<double> x(codes.codes.begin(), codes.codes.end());
  return power_spectrum(x, nfft);
}

SndrResult sndr_enob(std::span<const double> power, std::size_t signal_bin) {
  if (signal_bin >= power.size()) {
    throw std::domain_error("sndr_enob: signal_bin out of range");
  }
  const double p_sig = power[signal_bin];
  if (!(p_sig > 0.0)) {
    throw std::domain_error("sndr_enob: zero signal power");
  }
  double p_rest = 0.0;
  double p_spur = 0.0;
  for (std::size_t m = 1; m < power.size(); ++m) {  // DC excluded
    if (m == signal_bin) continue;
    p_rest += power[m];
    p_spur = std::max(p_spur, power[m]);
  }
  SndrResult r;
  // A numerically silent remainder caps the ratios instead of overflowing.
  r.sndr_db = p_rest > 0.0 ? 10.0 * std::log10(p_sig / p_rest) : 400.0;
  r.sfdr_db = p_spur > 0.0 ? 10.0 * std::log10(p_sig / p_spur) : 400.0;
  r.enob_bits = (r.sndr_db - 1.76) / 6.02;
  return r;
}

SpectrumReport analyze_spectrum(std::span<const double> x, std::size_t nfft,
                                std::size_t signal_bin) {
  SpectrumReport rep;
  rep.nfft = nfft;
  rep.signal_bin = signal_bin;
  const std::vector<double> p = power_spectrum(x, nfft);
  const SndrResult r = sndr_enob(p, signal_bin);
  rep.sndr_db = r.sndr_db;
  rep.sfdr_db = r.sfdr_db;
  rep.enob_bits = r.enob_bits;
  const double p_sig = p[signal_bin];
  rep.power_db.resize(p.size());
  for (std::size_t m = 0; m < p.size(); ++m) {
    rep.power_db[m] =
        p[m] > 0.0 ? 10.0 * std::log10(p[m] / p_sig) : -400.0;
  }
  return rep;
}

}  // namespace padc
