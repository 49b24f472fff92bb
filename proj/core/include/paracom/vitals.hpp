#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace paracom::vitals {

/// One photoplethysmogram sample, value normalized to [0, 1].
struct PpgSample {
  double value = 0.0;
  std::int64_t t_ms = 0;
};

struct VitalsReading {
  double bpm = 0.0;     // 0.1 BPM resolution on the wire
  double temp_c = 0.0;  // 0.01 degC resolution on the wire
  std::int64_t t_ms = 0;
  bool valid = false;   // bpm in (20,250) and temp_c in (30,45)
};

/// Marks a reading valid iff both values are inside the plausible ranges.
VitalsReading make_reading(double bpm, double temp_c, std::int64_t t_ms);

struct AnomalyBand {
  double bpm_lo = 50.0;
  double bpm_hi = 120.0;
  double temp_hi_c = 38.5;

  bool valid() const { return bpm_lo < bpm_hi; }
};

enum class AnomalyKind : std::uint8_t { BpmLow, BpmHigh, TempHigh };

std::string_view to_string(AnomalyKind kind);

/// Deterministic PPG test signal: one raised-cosine pulse per beat (beat
/// period 60000/bpm ms, pulse width min(300 ms, 0.6 period)) scaled by
/// (1 - noise_amp), plus seeded uniform noise in [0, noise_amp]. One noise
/// draw is consumed per sample, so identical seeds give bit-identical
/// streams. Throws std::invalid_argument unless bpm is in [30, 220] and
/// rate_hz in [4 * bpm / 60, 1000].
std::vector<PpgSample> synth_ppg(double bpm, std::int64_t duration_ms, double rate_hz,
                                 double noise_amp, std::uint64_t seed);

/// Peak picking used by estimate_bpm: local maxima above
/// (mean + 0.5 * stddev) of the window, thinned front-to-back so no two
/// accepted peaks are closer than min_peak_distance_ms. Returns accepted
/// peak times.
std::vector<std::int64_t> detect_ppg_peaks(std::span<const PpgSample> window,
                                           std::int64_t min_peak_distance_ms = 250);

/// Heart rate as 60000 / median inter-peak interval. Returns nullopt when
/// the window spans less than 3000 ms or fewer than 2 peaks are accepted.
std::optional<double> estimate_bpm(std::span<const PpgSample> window,
                                   std::int64_t min_peak_distance_ms = 250);

/// Band check on a valid reading. BPM anomalies take precedence over
/// temperature when both fire; nullopt iff bpm in [bpm_lo, bpm_hi] and
/// temp_c <= temp_hi_c.
std::optional<AnomalyKind> check_anomaly(const VitalsReading& reading, const AnomalyBand& band);

}  // namespace paracom::vitals
