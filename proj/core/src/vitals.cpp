#include "paracom/vitals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "paracom/rng.hpp"

namespace paracom::vitals {

namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return (n % 2 == 1) ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

VitalsReading make_reading(double bpm, double temp_c, std::int64_t t_ms) {
  VitalsReading r;
  r.bpm = bpm;
  r.temp_c = temp_c;
  r.t_ms = t_ms;
  r.valid = bpm > 20.0 && bpm < 250.0 && temp_c > 30.0 && temp_c < 45.0;
  return r;
}

std::string_view to_string(AnomalyKind kind) {
  switch (kind) {
    case AnomalyKind::BpmLow:
      return "BpmLow";
    case AnomalyKind::BpmHigh:
      return "BpmHigh";
    case AnomalyKind::TempHigh:
      return "TempHigh";
  }
  return "?";
}

std::vector<PpgSample> synth_ppg(double bpm, std::int64_t duration_ms, double rate_hz,
                                 double noise_amp, std::uint64_t seed) {
  if (bpm < 30.0 || bpm > 220.0) {
    throw std::invalid_argument("synth_ppg: bpm outside [30, 220]");
  }
  if (rate_hz < 4.0 * bpm / 60.0 || rate_hz > 1000.0) {
    throw std::invalid_argument("synth_ppg: sampling rate outside [4*bpm/60, 1000] Hz");
  }
  const double period_ms = 60000.0 / bpm;
  const double pulse_ms = std::min(300.0, 0.6 * period_ms);
  const double step_ms = 1000.0 / rate_hz;

  Xorshift64Star rng(seed);
  std::vector<PpgSample> out;
  out.reserve(static_cast<std::size_t>(duration_ms / step_ms) + 1);
  for (std::int64_t i = 0;; ++i) {
    const double t = i * step_ms;
    if (t >= static_cast<double>(duration_ms)) {
      break;
    }
    const double phase = std::fmod(t, period_ms);
    const double pulse =
        phase < pulse_ms ? 0.5 * (1.0 - std::cos(kTwoPi * phase / pulse_ms)) : 0.0;
    const double noise = noise_amp * rng.next_double();
    out.push_back(PpgSample{(1.0 - noise_amp) * pulse + noise,
                            static_cast<std::int64_t>(std::llround(t))});
  }
  return out;
}

std::vector<std::int64_t> detect_ppg_peaks(std::span<const PpgSample> window,
                                           std::int64_t min_peak_distance_ms) {
  std::vector<std::int64_t> peaks;
  if (window.size() < 3) {
    return peaks;
  }

  double mean = 0.0;
  for (const auto& s : window) mean += s.value;
  mean /= static_cast<double>(window.size());
  double var = 0.0;
  for (const auto& s : window) var += (s.value - mean) * (s.value - mean);
  var /= static_cast<double>(window.size());
  const double threshold = mean + 0.5 * std::sqrt(var);

  std::int64_t last_accepted = 0;
  for (std::size_t i = 1; i + 1 < window.size(); ++i) {
    const double v = window[i].value;
    if (v <= threshold || v <= window[i - 1].value || v < window[i + 1].value) {
      continue;
    }
    if (!peaks.empty() && window[i].t_ms - last_accepted < min_peak_distance_ms) {
      continue;
    }
    peaks.push_back(window[i].t_ms);
    last_accepted = window[i].t_ms;
  }
  return peaks;
}

std::optional<double> estimate_bpm(std::span<const PpgSample> window,
                                   std::int64_t min_peak_distance_ms) {
  if (window.size() < 2 || window.back().t_ms - window.front().t_ms < 3000) {
    return std::nullopt;
  }
  const auto peaks = detect_ppg_peaks(window, min_peak_distance_ms);
  if (peaks.size() < 2) {
    return std::nullopt;
  }
  std::vector<double> intervals;
  intervals.reserve(peaks.size() - 1);
  for (std::size_t i = 1; i < peaks.size(); ++i) {
    intervals.push_back(static_cast<double>(peaks[i] - peaks[i - 1]));
  }
  return 60000.0 / median(std::move(intervals));
}

std::optional<AnomalyKind> check_anomaly(const VitalsReading& reading, const AnomalyBand& band) {
  if (reading.bpm < band.bpm_lo) return AnomalyKind::BpmLow;
  if (reading.bpm > band.bpm_hi) return AnomalyKind::BpmHigh;
  if (reading.temp_c > band.temp_hi_c) return AnomalyKind::TempHigh;
  return std::nullopt;
}

}  // namespace paracom::vitals
