#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace paracom::gsm {

inline constexpr std::size_t kMaxSmsBody = 160;
inline constexpr char kCtrlZ = '\x1A';

struct SmsRecord {
  int index = 0;
  std::string to;
  std::string body;
  std::int64_t t_ms = 0;

  bool operator==(const SmsRecord&) const = default;
};

/// Emulated GSM modem speaking the text-mode AT dialog:
///
///   AT                  -> OK
///   AT+CMGF=1           -> OK            (enters text mode)
///   AT+CMGS="<number>"  -> ">"           (text mode only; awaits body)
///   <body> 0x1A         -> +CMGS: <n> / OK
///
/// Anything out of sequence answers ERROR and leaves the state unchanged.
/// The outbox log stands in for the cellular network: append-only,
/// indexed 1..n with no gaps.
class Modem {
 public:
  enum class Mode { Idle, TextModeSet, AwaitingBody };

  /// Executes one command line (trailing CR/LF tolerated) or, while
  /// awaiting a body, consumes body bytes until the 0x1A terminator.
  /// Body chunks without the terminator accumulate and answer "".
  /// Never throws; failures are the "ERROR" response.
  std::string exec(std::string_view input, std::int64_t now_ms);

  /// Drives the full dialog above and returns the assigned outbox index.
  /// Returns nullopt (outbox unchanged) when the body exceeds
  /// kMaxSmsBody, contains the 0x1A terminator, or the modem is mid-body.
  std::optional<int> send_sms(std::string_view to, std::string_view body, std::int64_t now_ms);

  Mode mode() const { return mode_; }
  const std::vector<SmsRecord>& outbox() const { return outbox_; }

  /// Line-delimited outbox records (one JSON object per SMS) so scenario
  /// assertions can read the persisted log back.
  void write_outbox(std::ostream& os) const;
  static std::optional<std::vector<SmsRecord>> read_outbox(std::istream& is);

 private:
  Mode mode_ = Mode::Idle;
  std::string pending_to_;
  std::string body_buffer_;
  std::vector<SmsRecord> outbox_;
  int next_index_ = 1;
};

std::string_view to_string(Modem::Mode mode);

}  // namespace paracom::gsm
