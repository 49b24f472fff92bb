#include "paracom/gesture.hpp"

#include <cmath>
#include <stdexcept>

namespace paracom::gesture {

namespace {

constexpr double kRadToDeg = 180.0 / 3.14159265358979323846;
constexpr double kDegToRad = 3.14159265358979323846 / 180.0;

bool is_pitch_axis(GestureClass cls) {
  return cls == GestureClass::Forward || cls == GestureClass::Backward;
}

// Signed angle pushing toward the class: positive while the class is held.
double driving_angle(const TiltAngles& tilt, GestureClass cls) {
  switch (cls) {
    case GestureClass::Forward:
      return tilt.pitch_deg;
    case GestureClass::Backward:
      return -tilt.pitch_deg;
    case GestureClass::Right:
      return tilt.roll_deg;
    case GestureClass::Left:
      return -tilt.roll_deg;
    case GestureClass::Neutral:
      break;
  }
  return 0.0;
}

GestureClass enter_class(const TiltAngles& tilt, const ClassifierConfig& cfg) {
  const double ap = std::fabs(tilt.pitch_deg);
  const double ar = std::fabs(tilt.roll_deg);
  const bool pitch_hit = ap > cfg.threshold_deg;
  const bool roll_hit = ar > cfg.threshold_deg;
  if (!pitch_hit && !roll_hit) {
    return GestureClass::Neutral;
  }
  // Both over: larger magnitude wins, exact tie goes to pitch.
  const bool use_pitch = pitch_hit && (!roll_hit || ap >= ar);
  if (use_pitch) {
    return tilt.pitch_deg > 0 ? GestureClass::Forward : GestureClass::Backward;
  }
  return tilt.roll_deg > 0 ? GestureClass::Right : GestureClass::Left;
}

}  // namespace

std::string_view to_string(GestureClass cls) {
  switch (cls) {
    case GestureClass::Neutral:
      return "Neutral";
    case GestureClass::Forward:
      return "Forward";
    case GestureClass::Backward:
      return "Backward";
    case GestureClass::Left:
      return "Left";
    case GestureClass::Right:
      return "Right";
  }
  return "?";
}

std::optional<TiltAngles> tilt_from_accel(const AccelSample& sample) {
  const double mag =
      std::sqrt(sample.ax * sample.ax + sample.ay * sample.ay + sample.az * sample.az);
  if (!std::isfinite(mag) || mag < kMinTiltMagnitudeG) {
    return std::nullopt;
  }
  TiltAngles tilt;
  tilt.pitch_deg =
      std::atan2(sample.ax, std::sqrt(sample.ay * sample.ay + sample.az * sample.az)) * kRadToDeg;
  tilt.roll_deg =
      std::atan2(sample.ay, std::sqrt(sample.ax * sample.ax + sample.az * sample.az)) * kRadToDeg;
  return tilt;
}

AccelSample accel_from_tilt(double pitch_deg, double roll_deg, std::int64_t t_ms) {
  const double sp = std::sin(pitch_deg * kDegToRad);
  const double sr = std::sin(roll_deg * kDegToRad);
  const double rest = 1.0 - sp * sp - sr * sr;
  if (rest < 0.0) {
    throw std::invalid_argument("tilt angles not representable by a unit gravity vector");
  }
  return AccelSample{sp, sr, std::sqrt(rest), t_ms};
}

GestureClass classify(const TiltAngles& tilt, const ClassifierConfig& cfg, GestureClass prev) {
  if (prev != GestureClass::Neutral) {
    if (driving_angle(tilt, prev) >= cfg.threshold_deg - cfg.hysteresis_deg) {
      return prev;
    }
    // Released; fall through so a strong opposite tilt can enter directly.
  }
  return enter_class(tilt, cfg);
}

GestureDetector::GestureDetector(const ClassifierConfig& cfg) : cfg_(cfg) {
  if (!cfg_.valid()) {
    throw std::invalid_argument("invalid classifier config");
  }
}

std::vector<GestureEvent> GestureDetector::feed(const AccelSample& sample) {
  std::vector<GestureEvent> events;

  const auto tilt = tilt_from_accel(sample);
  const GestureClass cls =
      tilt ? classify(*tilt, cfg_, held_) : GestureClass::Neutral;

  if (cls != held_) {
    held_ = cls;
    onset_ms_ = sample.t_ms;
    run_samples_ = 0;
    dwell_fired_ = false;
    escalate_fired_ = false;
  }
  if (held_ == GestureClass::Neutral) {
    return events;
  }

  ++run_samples_;
  const std::int64_t held_ms = run_samples_ * cfg_.sample_period_ms();
  if (!dwell_fired_ && held_ms >= cfg_.dwell_ms) {
    dwell_fired_ = true;
    events.push_back(GestureEvent{held_, onset_ms_, false});
  }
  if (dwell_fired_ && !escalate_fired_ && held_ms >= cfg_.escalate_ms) {
    escalate_fired_ = true;
    events.push_back(GestureEvent{held_, onset_ms_, true});
  }
  return events;
}

std::vector<GestureEvent> detect_gestures(std::span<const AccelSample> samples,
                                          const ClassifierConfig& cfg) {
  GestureDetector detector(cfg);
  std::vector<GestureEvent> events;
  for (const auto& sample : samples) {
    auto batch = detector.feed(sample);
    events.insert(events.end(), batch.begin(), batch.end());
  }
  return events;
}

}  // namespace paracom::gesture
