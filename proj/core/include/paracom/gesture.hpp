#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace paracom::gesture {

/// One accelerometer reading in units of g (standard gravity).
struct AccelSample {
  double ax = 0.0;
  double ay = 0.0;
  double az = 1.0;
  std::int64_t t_ms = 0;
};

/// Gravity-referenced inclination, both angles in [-90, +90] degrees.
struct TiltAngles {
  double pitch_deg = 0.0;
  double roll_deg = 0.0;
};

enum class GestureClass : std::uint8_t { Neutral, Forward, Backward, Left, Right };

std::string_view to_string(GestureClass cls);

/// A dwell-qualified tilt gesture. cls is never Neutral. At most one
/// escalate=true event is emitted per continuous hold.
struct GestureEvent {
  GestureClass cls = GestureClass::Neutral;
  std::int64_t onset_ms = 0;  // time the class was first entered
  bool escalate = false;

  bool operator==(const GestureEvent&) const = default;
};

struct ClassifierConfig {
  double threshold_deg = 30.0;
  double hysteresis_deg = 5.0;
  std::int64_t dwell_ms = 500;
  std::int64_t escalate_ms = 3000;
  double sample_rate_hz = 50.0;

  bool valid() const {
    return threshold_deg > hysteresis_deg && hysteresis_deg > 0.0 &&
           escalate_ms > dwell_ms && dwell_ms > 0 && sample_rate_hz > 0.0;
  }
  std::int64_t sample_period_ms() const {
    return static_cast<std::int64_t>(1000.0 / sample_rate_hz + 0.5);
  }
};

/// Below this magnitude there is no usable gravity reference (near free
/// fall) and tilt is indeterminate.
inline constexpr double kMinTiltMagnitudeG = 0.2;

/// Static inclination from the gravity vector:
///   pitch = atan2(ax, sqrt(ay^2 + az^2)), roll = atan2(ay, sqrt(ax^2 + az^2)).
/// Scale-invariant in the sample magnitude. Returns nullopt when the
/// magnitude is below kMinTiltMagnitudeG.
std::optional<TiltAngles> tilt_from_accel(const AccelSample& sample);

/// Inverse of tilt_from_accel for simulation fixtures: builds the unit
/// gravity vector showing the given angles. Requires
/// sin^2(pitch) + sin^2(roll) <= 1; throws std::invalid_argument otherwise.
AccelSample accel_from_tilt(double pitch_deg, double roll_deg, std::int64_t t_ms);

/// One classification step with hysteresis.
///
/// Entry (prev Neutral, or after the held class released): Forward/Backward
/// when |pitch| > threshold, Left/Right when |roll| > threshold; when both
/// exceed, the larger absolute angle wins and an exact tie goes to the
/// pitch axis. A held non-Neutral class is kept until its driving angle
/// falls below threshold - hysteresis.
GestureClass classify(const TiltAngles& tilt, const ClassifierConfig& cfg, GestureClass prev);

/// Streaming dwell/escalation detector. Feed one sample per nominal sample
/// period (timestamps strictly increasing). A hold of n samples counts as
/// n * sample_period of sustained class. Samples with indeterminate tilt
/// reset the detector to Neutral.
///
/// Pure state machine: no shared mutable state, thread-confined by value.
class GestureDetector {
 public:
  explicit GestureDetector(const ClassifierConfig& cfg = {});

  /// Returns 0, 1 or 2 events (dwell and escalate can coincide only on
  /// separate samples, so in practice 0 or 1).
  std::vector<GestureEvent> feed(const AccelSample& sample);

  GestureClass current() const { return held_; }
  const ClassifierConfig& config() const { return cfg_; }

 private:
  ClassifierConfig cfg_;
  GestureClass held_ = GestureClass::Neutral;
  std::int64_t onset_ms_ = 0;
  std::int64_t run_samples_ = 0;
  bool dwell_fired_ = false;
  bool escalate_fired_ = false;
};

/// Batch convenience over GestureDetector::feed.
std::vector<GestureEvent> detect_gestures(std::span<const AccelSample> samples,
                                          const ClassifierConfig& cfg);

}  // namespace paracom::gesture
