#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace paracom::wire {

// Wire format (byte-exact, see docs/protocol.md):
//
//   offset  size  field
//   0       2     sync        0xAA 0x55
//   2       1     version     currently 1
//   3       2     device_id   unsigned big-endian
//   5       1     room_no
//   6       1     seq         wrapping 8-bit counter
//   7       1     kind        0 = vitals, 1 = message
//   8       1     flags       bit0 = escalate, other bits zero
//   9       1     payload_len 0..32
//   10      n     payload
//   10+n    2     crc         CRC-16/CCITT-FALSE over version..payload,
//                             big-endian
//
// Total frame size is 12 + payload_len bytes.

inline constexpr std::uint8_t kSync0 = 0xAA;
inline constexpr std::uint8_t kSync1 = 0x55;
inline constexpr std::uint8_t kProtocolVersion = 1;
inline constexpr std::size_t kMaxPayload = 32;
inline constexpr std::size_t kFrameOverhead = 12;

inline constexpr std::uint8_t kKindVitals = 0;
inline constexpr std::uint8_t kKindMessage = 1;
inline constexpr std::uint8_t kFlagEscalate = 0x01;

/// Pre-coded patient messages carried in a 1-byte message payload.
enum class MessageCode : std::uint8_t {
  Emergency = 0x01,
  WashRoom = 0x02,
  NeedWater = 0x03,
  NeedFood = 0x04,
  ContactPhysician = 0x05,
};

std::optional<MessageCode> message_code_from_byte(std::uint8_t b);
std::string_view to_string(MessageCode code);

struct Frame {
  std::uint8_t version = kProtocolVersion;
  std::uint16_t device_id = 0;
  std::uint8_t room_no = 0;
  std::uint8_t seq = 0;
  std::uint8_t kind = kKindVitals;
  std::uint8_t flags = 0;
  std::vector<std::uint8_t> payload;

  bool operator==(const Frame&) const = default;
};

/// Encodes a frame into wire bytes. Throws std::length_error when the
/// payload exceeds kMaxPayload.
std::vector<std::uint8_t> encode_frame(const Frame& frame);

enum class DecodeError : std::uint8_t {
  Ok = 0,
  BadSync,     // sync bytes wrong
  BadVersion,  // version byte not kProtocolVersion
  Truncated,   // buffer length inconsistent with the header, or len > 32
  BadCrc,      // integrity check failed
};

std::string_view to_string(DecodeError err);

/// Decodes exactly one frame. Checks run in order: sync, version, length,
/// CRC; the error names the first failed check. A buffer too short to
/// carry the field under inspection fails the length check.
DecodeError decode_frame(std::span<const std::uint8_t> bytes, Frame* out);

/// Fixed 4-byte vitals payload: BPM x 10 and degrees C x 100, both
/// unsigned big-endian.
struct VitalsPayload {
  std::uint16_t bpm_x10 = 0;
  std::uint16_t temp_cx100 = 0;

  bool operator==(const VitalsPayload&) const = default;
};

std::array<std::uint8_t, 4> encode_vitals_payload(const VitalsPayload& vp);
std::optional<VitalsPayload> decode_vitals_payload(std::span<const std::uint8_t> payload);

}  // namespace paracom::wire
