#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace paracom::gateway {

enum class RecordKind : std::uint8_t { Vitals, Message, Alert };

std::string_view to_string(RecordKind kind);
std::optional<RecordKind> record_kind_from_string(std::string_view s);

/// The persisted unit in the gateway service. Exactly the optional fields
/// implied by kind are present: vitals -> bpm + temp_c, message ->
/// message_text, alert -> anomaly. id is assigned by the store in arrival
/// order.
struct TelemetryRecord {
  std::int64_t id = 0;
  std::uint16_t device_id = 0;
  int room_no = 0;
  std::int64_t t_ms = 0;
  RecordKind kind = RecordKind::Vitals;
  std::optional<double> bpm;
  std::optional<double> temp_c;
  std::optional<std::string> message_text;
  std::optional<std::string> anomaly;

  bool operator==(const TelemetryRecord&) const = default;
};

/// Returns an error naming the offending field, or nullopt when the record
/// satisfies the kind/field rules.
std::optional<std::string> validate_record(const TelemetryRecord& rec);

/// One self-describing JSON object per record; the unit of the append-only
/// store log.
std::string to_json_line(const TelemetryRecord& rec);

/// Parses one log/body line. Returns nullopt on malformed input.
std::optional<TelemetryRecord> record_from_json(std::string_view line);

class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string field, const std::string& what)
      : std::runtime_error(what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class StorageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace paracom::gateway
