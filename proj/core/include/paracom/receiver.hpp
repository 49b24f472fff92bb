#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "paracom/frame.hpp"
#include "paracom/telemetry_record.hpp"
#include "paracom/vitals.hpp"

namespace paracom::rx {

inline constexpr int kLcdRows = 2;
inline constexpr int kLcdCols = 16;
inline constexpr std::size_t kDedupeWindow = 8;

struct Doctor {
  std::string name;
  std::string phone;
};

struct ReceiverConfig {
  std::string caregiver_number = "+15550100";
  std::vector<Doctor> doctors;
  std::int64_t attend_timeout_ms = 30000;
  vitals::AnomalyBand band{};
};

/// Space-pads (or truncates) to exactly kLcdCols characters.
std::string lcd_pad(std::string_view text);

/// Display text for each message code, at most 16 characters.
std::string_view lcd_text(wire::MessageCode code);

/// "ROOM NN" with a zero-padded 2-digit room number.
std::string room_label(int room_no);

/// "ROOM NN: <CAUSE>". Throws std::out_of_range unless room_no is in
/// [0, 99].
std::string format_sms(int room_no, std::string_view cause);

/// Cause text for SMS bodies and alert records: "BPM LOW 40.0",
/// "BPM HIGH 130.0", "TEMP HIGH 39.50".
std::string anomaly_cause(vitals::AnomalyKind kind, const vitals::VitalsReading& reading);

// Externally observable receiver actions. Inert values; the harness (or a
// caller) executes them against the modem and the gateway client.
struct LcdUpdate {
  int row = 0;
  std::string text;  // exactly kLcdCols characters
};
struct BuzzerOn {};
struct BuzzerOff {};
struct SmsRequest {
  std::string to;
  std::string body;
};
struct AlertBroadcast {
  int room_no = 0;
  std::string body;
  std::vector<std::string> recipients;  // full registered-doctor list
};
struct RecordTelemetry {
  gateway::TelemetryRecord record;
};

struct Effect {
  std::int64_t t_ms = 0;
  std::variant<LcdUpdate, BuzzerOn, BuzzerOff, SmsRequest, AlertBroadcast, RecordTelemetry>
      action;
};

std::string describe(const Effect& effect);

/// Ward-unit state machine: decodes frames, deduplicates retransmissions,
/// drives the display buffer and buzzer, runs the attendance timeout, and
/// emits SMS/broadcast/telemetry effects. It never throws on input bytes;
/// undecodable or semantically invalid frames are counted and dropped.
///
/// Single-threaded by contract: callers serialize rx_bytes/tick/acknowledge
/// on the virtual clock.
class Receiver {
 public:
  explicit Receiver(ReceiverConfig cfg = {});

  /// Feeds one received datagram. Duplicate (device_id, seq) pairs within
  /// the dedupe window produce no effects.
  std::vector<Effect> rx_bytes(std::span<const std::uint8_t> bytes, std::int64_t now_ms);

  /// Advances the attendance timer: a request left unacknowledged for
  /// attend_timeout_ms gets one caregiver SMS (unless an escalate-flag SMS
  /// already went out for the same request).
  std::vector<Effect> tick(std::int64_t now_ms);

  /// A caregiver attended: clears the pending request and any anomaly
  /// alarm, silences the buzzer, and restores the idle screen. No-op when
  /// nothing is pending.
  std::vector<Effect> acknowledge(std::int64_t now_ms);

  const std::array<std::string, kLcdRows>& lcd() const { return lcd_; }
  bool buzzer_on() const { return buzzer_; }
  bool has_pending() const { return pending_.has_value(); }
  std::uint64_t rejected_frames() const { return rejected_; }
  const ReceiverConfig& config() const { return cfg_; }

  /// Buzzer is on iff a request is pending or an anomaly alarm is
  /// unacknowledged; LCD rows are exactly 16 characters.
  bool invariants_hold() const;

 private:
  struct Pending {
    wire::MessageCode code;
    int room_no;
    std::int64_t since_ms;
    bool sms_sent;  // escalate-flag or timeout SMS already out
  };

  bool is_duplicate(std::uint16_t device_id, std::uint8_t seq);
  std::vector<Effect> on_message(const wire::Frame& frame, std::int64_t now_ms);
  std::vector<Effect> on_vitals(const wire::Frame& frame, std::int64_t now_ms);

  ReceiverConfig cfg_;
  std::array<std::string, kLcdRows> lcd_;
  bool buzzer_ = false;
  bool anomaly_alarm_ = false;
  std::optional<Pending> pending_;
  std::unordered_map<std::uint16_t, std::deque<std::uint8_t>> seen_seq_;
  std::uint64_t rejected_ = 0;
};

}  // namespace paracom::rx
