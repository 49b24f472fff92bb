#include "paracom/transmitter.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace paracom::tx {

bool is_valid_mapping(const GestureMap& map) {
  std::vector<wire::MessageCode> codes;
  for (const auto& entry : {map.forward, map.backward, map.left, map.right}) {
    if (entry) {
      codes.push_back(*entry);
    }
  }
  std::sort(codes.begin(), codes.end());
  return std::adjacent_find(codes.begin(), codes.end()) == codes.end();
}

std::optional<wire::MessageCode> gesture_to_message(gesture::GestureClass cls,
                                                    const GestureMap& map) {
  switch (cls) {
    case gesture::GestureClass::Forward:
      return map.forward;
    case gesture::GestureClass::Backward:
      return map.backward;
    case gesture::GestureClass::Left:
      return map.left;
    case gesture::GestureClass::Right:
      return map.right;
    case gesture::GestureClass::Neutral:
      break;
  }
  throw std::invalid_argument("gesture_to_message: Neutral has no message");
}

Transmitter::Transmitter(const TransmitterConfig& cfg)
    : cfg_(cfg), detector_(cfg.classifier) {
  if (!cfg_.valid()) {
    throw std::invalid_argument("invalid transmitter config");
  }
}

wire::Frame Transmitter::next_frame(std::uint8_t kind, std::uint8_t flags,
                                    std::vector<std::uint8_t> payload) {
  wire::Frame frame;
  frame.device_id = cfg_.device_id;
  frame.room_no = cfg_.room_no;
  frame.seq = seq_;
  frame.kind = kind;
  frame.flags = flags;
  frame.payload = std::move(payload);
  seq_ = static_cast<std::uint8_t>(seq_ + 1);
  return frame;
}

std::vector<wire::Frame> Transmitter::step(std::int64_t now_ms,
                                           const std::optional<gesture::AccelSample>& accel,
                                           const std::optional<vitals::VitalsReading>& vitals) {
  std::vector<wire::Frame> out;

  if (accel) {
    for (const auto& event : detector_.feed(*accel)) {
      const auto code = gesture_to_message(event.cls, cfg_.mapping);
      if (!code) {
        continue;  // unmapped gesture, nothing to say
      }
      const auto frame =
          next_frame(wire::kKindMessage, event.escalate ? wire::kFlagEscalate : 0,
                     {static_cast<std::uint8_t>(*code)});
      for (int i = 0; i < cfg_.message_repeat; ++i) {
        repeat_queue_.emplace_back(now_ms + i * cfg_.repeat_spacing_ms, frame);
      }
    }
  }

  if (vitals && now_ms >= next_vitals_deadline_ms_) {
    wire::VitalsPayload payload;
    payload.bpm_x10 = static_cast<std::uint16_t>(
        std::clamp<long>(std::lround(vitals->bpm * 10.0), 0, 0xFFFF));
    payload.temp_cx100 = static_cast<std::uint16_t>(
        std::clamp<long>(std::lround(vitals->temp_c * 100.0), 0, 0xFFFF));
    const auto bytes = wire::encode_vitals_payload(payload);
    out.push_back(next_frame(wire::kKindVitals, 0, {bytes.begin(), bytes.end()}));
    // Deadline advances from the emission instant, so a late first reading
    // does not trigger a catch-up burst.
    next_vitals_deadline_ms_ = now_ms + cfg_.vitals_period_ms;
  }

  for (auto it = repeat_queue_.begin(); it != repeat_queue_.end();) {
    if (it->first <= now_ms) {
      out.push_back(std::move(it->second));
      it = repeat_queue_.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

}  // namespace paracom::tx
