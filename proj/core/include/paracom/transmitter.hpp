#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "paracom/frame.hpp"
#include "paracom/gesture.hpp"
#include "paracom/vitals.hpp"

namespace paracom::tx {

/// Gesture-to-message assignment. The default matches the four pre-coded
/// needs; any class may be remapped (or unmapped) by configuration as long
/// as the mapped codes stay distinct.
struct GestureMap {
  std::optional<wire::MessageCode> forward = wire::MessageCode::Emergency;
  std::optional<wire::MessageCode> backward = wire::MessageCode::WashRoom;
  std::optional<wire::MessageCode> left = wire::MessageCode::NeedWater;
  std::optional<wire::MessageCode> right = wire::MessageCode::NeedFood;
};

/// Mapped codes are pairwise distinct (a bijection onto its image).
bool is_valid_mapping(const GestureMap& map);

/// nullopt when the configured mapping omits the class. cls must not be
/// Neutral; throws std::invalid_argument if it is.
std::optional<wire::MessageCode> gesture_to_message(gesture::GestureClass cls,
                                                    const GestureMap& map);

struct TransmitterConfig {
  std::uint16_t device_id = 1;
  std::uint8_t room_no = 1;
  std::int64_t vitals_period_ms = 1000;
  int message_repeat = 3;
  std::int64_t repeat_spacing_ms = 50;
  GestureMap mapping{};
  gesture::ClassifierConfig classifier{};

  bool valid() const {
    return vitals_period_ms > 0 && message_repeat >= 1 && repeat_spacing_ms >= 0 &&
           classifier.valid() && is_valid_mapping(mapping);
  }
};

/// Patient-side firmware loop on the virtual clock. Feeds accelerometer
/// samples to the gesture detector, emits each gesture as a message frame
/// repeated message_repeat times (byte-identical retransmissions sharing
/// one seq so the receiver can dedupe), and emits one vitals frame per
/// vitals period when a reading is available.
///
/// seq advances by 1 mod 256 per logical frame.
class Transmitter {
 public:
  explicit Transmitter(const TransmitterConfig& cfg);

  /// One step at now_ms (monotonically non-decreasing). Returns frames due
  /// now, in emission order.
  std::vector<wire::Frame> step(std::int64_t now_ms,
                                const std::optional<gesture::AccelSample>& accel,
                                const std::optional<vitals::VitalsReading>& vitals);

  std::uint8_t seq() const { return seq_; }
  const TransmitterConfig& config() const { return cfg_; }

 private:
  wire::Frame next_frame(std::uint8_t kind, std::uint8_t flags,
                         std::vector<std::uint8_t> payload);

  TransmitterConfig cfg_;
  gesture::GestureDetector detector_;
  std::uint8_t seq_ = 0;
  std::int64_t next_vitals_deadline_ms_ = 0;
  std::deque<std::pair<std::int64_t, wire::Frame>> repeat_queue_;  // (due_ms, frame)
};

}  // namespace paracom::tx
