#include "paracom/frame.hpp"

#include <stdexcept>

#include "paracom/crc16.hpp"

namespace paracom::wire {

std::optional<MessageCode> message_code_from_byte(std::uint8_t b) {
  if (b >= 0x01 && b <= 0x05) {
    return static_cast<MessageCode>(b);
  }
  return std::nullopt;
}

std::string_view to_string(MessageCode code) {
  switch (code) {
    case MessageCode::Emergency:
      return "Emergency";
    case MessageCode::WashRoom:
      return "WashRoom";
    case MessageCode::NeedWater:
      return "NeedWater";
    case MessageCode::NeedFood:
      return "NeedFood";
    case MessageCode::ContactPhysician:
      return "ContactPhysician";
  }
  return "?";
}

std::string_view to_string(DecodeError err) {
  switch (err) {
    case DecodeError::Ok:
      return "Ok";
    case DecodeError::BadSync:
      return "BadSync";
    case DecodeError::BadVersion:
      return "BadVersion";
    case DecodeError::Truncated:
      return "Truncated";
    case DecodeError::BadCrc:
      return "BadCrc";
  }
  return "?";
}

std::vector<std::uint8_t> encode_frame(const Frame& frame) {
  if (frame.payload.size() > kMaxPayload) {
    throw std::length_error("frame payload exceeds 32 bytes");
  }
  std::vector<std::uint8_t> out;
  out.reserve(kFrameOverhead + frame.payload.size());
  out.push_back(kSync0);
  out.push_back(kSync1);
  out.push_back(frame.version);
  out.push_back(static_cast<std::uint8_t>(frame.device_id >> 8));
  out.push_back(static_cast<std::uint8_t>(frame.device_id & 0xFF));
  out.push_back(frame.room_no);
  out.push_back(frame.seq);
  out.push_back(frame.kind);
  out.push_back(frame.flags);
  out.push_back(static_cast<std::uint8_t>(frame.payload.size()));
  out.insert(out.end(), frame.payload.begin(), frame.payload.end());
  const std::uint16_t crc =
      crc16(std::span<const std::uint8_t>(out.data() + 2, out.size() - 2));
  out.push_back(static_cast<std::uint8_t>(crc >> 8));
  out.push_back(static_cast<std::uint8_t>(crc & 0xFF));
  return out;
}

DecodeError decode_frame(std::span<const std::uint8_t> bytes, Frame* out) {
  if (bytes.size() >= 1 && bytes[0] != kSync0) return DecodeError::BadSync;
  if (bytes.size() >= 2 && bytes[1] != kSync1) return DecodeError::BadSync;
  if (bytes.size() < 3) return DecodeError::Truncated;
  if (bytes[2] != kProtocolVersion) return DecodeError::BadVersion;
  if (bytes.size() < kFrameOverhead) return DecodeError::Truncated;
  const std::size_t payload_len = bytes[9];
  // The length check is strict both ways: a frame is exactly 12 + len bytes.
  if (payload_len > kMaxPayload) return DecodeError::Truncated;
  if (bytes.size() != kFrameOverhead + payload_len) return DecodeError::Truncated;

  const std::size_t crc_offset = 10 + payload_len;
  const std::uint16_t expected =
      crc16(bytes.subspan(2, crc_offset - 2));
  const std::uint16_t got = static_cast<std::uint16_t>(
      (static_cast<std::uint16_t>(bytes[crc_offset]) << 8) | bytes[crc_offset + 1]);
  if (expected != got) return DecodeError::BadCrc;

  if (out != nullptr) {
    out->version = bytes[2];
    out->device_id =
        static_cast<std::uint16_t>((static_cast<std::uint16_t>(bytes[3]) << 8) | bytes[4]);
    out->room_no = bytes[5];
    out->seq = bytes[6];
    out->kind = bytes[7];
    out->flags = bytes[8];
    out->payload.assign(bytes.begin() + 10, bytes.begin() + 10 + payload_len);
  }
  return DecodeError::Ok;
}

std::array<std::uint8_t, 4> encode_vitals_payload(const VitalsPayload& vp) {
  return {
      static_cast<std::uint8_t>(vp.bpm_x10 >> 8),
      static_cast<std::uint8_t>(vp.bpm_x10 & 0xFF),
      static_cast<std::uint8_t>(vp.temp_cx100 >> 8),
      static_cast<std::uint8_t>(vp.temp_cx100 & 0xFF),
  };
}

std::optional<VitalsPayload> decode_vitals_payload(std::span<const std::uint8_t> payload) {
  if (payload.size() != 4) {
    return std::nullopt;
  }
  VitalsPayload vp;
  vp.bpm_x10 = static_cast<std::uint16_t>((static_cast<std::uint16_t>(payload[0]) << 8) | payload[1]);
  vp.temp_cx100 = static_cast<std::uint16_t>((static_cast<std::uint16_t>(payload[2]) << 8) | payload[3]);
  return vp;
}

}  // namespace paracom::wire
