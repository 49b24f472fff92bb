#include "paracom/telemetry_record.hpp"

#include <nlohmann/json.hpp>

namespace paracom::gateway {

using nlohmann::json;

std::string_view to_string(RecordKind kind) {
  switch (kind) {
    case RecordKind::Vitals:
      return "vitals";
    case RecordKind::Message:
      return "message";
    case RecordKind::Alert:
      return "alert";
  }
  return "?";
}

std::optional<RecordKind> record_kind_from_string(std::string_view s) {
  if (s == "vitals") return RecordKind::Vitals;
  if (s == "message") return RecordKind::Message;
  if (s == "alert") return RecordKind::Alert;
  return std::nullopt;
}

std::optional<std::string> validate_record(const TelemetryRecord& rec) {
  if (rec.room_no < 0 || rec.room_no > 99) {
    return "room_no: must be in [0, 99]";
  }
  if (rec.t_ms < 0) {
    return "t_ms: must be non-negative";
  }
  const bool want_vitals = rec.kind == RecordKind::Vitals;
  const bool want_message = rec.kind == RecordKind::Message;
  const bool want_alert = rec.kind == RecordKind::Alert;
  if (rec.bpm.has_value() != want_vitals) {
    return want_vitals ? "bpm: required for kind=vitals" : "bpm: only allowed for kind=vitals";
  }
  if (rec.temp_c.has_value() != want_vitals) {
    return want_vitals ? "temp_c: required for kind=vitals"
                       : "temp_c: only allowed for kind=vitals";
  }
  if (rec.message_text.has_value() != want_message) {
    return want_message ? "message_text: required for kind=message"
                        : "message_text: only allowed for kind=message";
  }
  if (rec.anomaly.has_value() != want_alert) {
    return want_alert ? "anomaly: required for kind=alert"
                      : "anomaly: only allowed for kind=alert";
  }
  return std::nullopt;
}

std::string to_json_line(const TelemetryRecord& rec) {
  json j;
  j["id"] = rec.id;
  j["device_id"] = rec.device_id;
  j["room_no"] = rec.room_no;
  j["t_ms"] = rec.t_ms;
  j["kind"] = std::string(to_string(rec.kind));
  if (rec.bpm) j["bpm"] = *rec.bpm;
  if (rec.temp_c) j["temp_c"] = *rec.temp_c;
  if (rec.message_text) j["message_text"] = *rec.message_text;
  if (rec.anomaly) j["anomaly"] = *rec.anomaly;
  return j.dump();
}

std::optional<TelemetryRecord> record_from_json(std::string_view line) {
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    return std::nullopt;
  }
  TelemetryRecord rec;
  try {
    if (j.contains("id")) rec.id = j.at("id").get<std::int64_t>();
    rec.device_id = j.at("device_id").get<std::uint16_t>();
    rec.room_no = j.at("room_no").get<int>();
    rec.t_ms = j.at("t_ms").get<std::int64_t>();
    const auto kind = record_kind_from_string(j.at("kind").get<std::string>());
    if (!kind) {
      return std::nullopt;
    }
    rec.kind = *kind;
    if (j.contains("bpm")) rec.bpm = j.at("bpm").get<double>();
    if (j.contains("temp_c")) rec.temp_c = j.at("temp_c").get<double>();
    if (j.contains("message_text")) rec.message_text = j.at("message_text").get<std::string>();
    if (j.contains("anomaly")) rec.anomaly = j.at("anomaly").get<std::string>();
  } catch (const json::exception&) {
    return std::nullopt;
  }
  return rec;
}

}  // namespace paracom::gateway
