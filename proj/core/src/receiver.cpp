#include "paracom/receiver.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace paracom::rx {

namespace {

std::string format_fixed(double value, int decimals) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

}  // namespace

std::string lcd_pad(std::string_view text) {
  std::string row(text.substr(0, kLcdCols));
  row.resize(kLcdCols, ' ');
  return row;
}

std::string_view lcd_text(wire::MessageCode code) {
  switch (code) {
    case wire::MessageCode::Emergency:
      return "EMERGENCY";
    case wire::MessageCode::WashRoom:
      return "WASH ROOM";
    case wire::MessageCode::NeedWater:
      return "NEED WATER";
    case wire::MessageCode::NeedFood:
      return "NEED FOOD";
    case wire::MessageCode::ContactPhysician:
      return "CALL DOCTOR";
  }
  return "?";
}

std::string room_label(int room_no) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "ROOM %02d", room_no);
  return buf;
}

std::string format_sms(int room_no, std::string_view cause) {
  if (room_no < 0 || room_no > 99) {
    throw std::out_of_range("room number must be in [0, 99]");
  }
  return room_label(room_no) + ": " + std::string(cause);
}

std::string anomaly_cause(vitals::AnomalyKind kind, const vitals::VitalsReading& reading) {
  switch (kind) {
    case vitals::AnomalyKind::BpmLow:
      return "BPM LOW " + format_fixed(reading.bpm, 1);
    case vitals::AnomalyKind::BpmHigh:
      return "BPM HIGH " + format_fixed(reading.bpm, 1);
    case vitals::AnomalyKind::TempHigh:
      return "TEMP HIGH " + format_fixed(reading.temp_c, 2);
  }
  return "?";
}

std::string describe(const Effect& effect) {
  struct Visitor {
    std::string operator()(const LcdUpdate& e) const {
      return "lcd" + std::to_string(e.row) + " '" + e.text + "'";
    }
    std::string operator()(const BuzzerOn&) const { return "buzzer on"; }
    std::string operator()(const BuzzerOff&) const { return "buzzer off"; }
    std::string operator()(const SmsRequest& e) const {
      return "sms to " + e.to + " '" + e.body + "'";
    }
    std::string operator()(const AlertBroadcast& e) const {
      return "alert broadcast '" + e.body + "' to " + std::to_string(e.recipients.size()) +
             " doctors";
    }
    std::string operator()(const RecordTelemetry& e) const {
      return "telemetry " + std::string(gateway::to_string(e.record.kind));
    }
  };
  return std::visit(Visitor{}, effect.action);
}

Receiver::Receiver(ReceiverConfig cfg) : cfg_(std::move(cfg)) {
  lcd_[0] = lcd_pad("READY");
  lcd_[1] = lcd_pad("");
}

bool Receiver::is_duplicate(std::uint16_t device_id, std::uint8_t seq) {
  auto& window = seen_seq_[device_id];
  if (std::find(window.begin(), window.end(), seq) != window.end()) {
    return true;
  }
  window.push_back(seq);
  if (window.size() > kDedupeWindow) {
    window.pop_front();
  }
  return false;
}

std::vector<Effect> Receiver::rx_bytes(std::span<const std::uint8_t> bytes,
                                       std::int64_t now_ms) {
  wire::Frame frame;
  if (wire::decode_frame(bytes, &frame) != wire::DecodeError::Ok) {
    ++rejected_;
    return {};
  }
  // Semantic validation beyond the wire checks; anything off is counted,
  // never thrown — the receiver must not halt.
  const bool kind_ok = frame.kind == wire::kKindVitals || frame.kind == wire::kKindMessage;
  const bool flags_ok = (frame.flags & ~wire::kFlagEscalate) == 0;
  const bool room_ok = frame.room_no <= 99;
  if (!kind_ok || !flags_ok || !room_ok) {
    ++rejected_;
    return {};
  }
  if (frame.kind == wire::kKindMessage &&
      (frame.payload.size() != 1 || !wire::message_code_from_byte(frame.payload[0]))) {
    ++rejected_;
    return {};
  }
  if (frame.kind == wire::kKindVitals && frame.payload.size() != 4) {
    ++rejected_;
    return {};
  }

  if (is_duplicate(frame.device_id, frame.seq)) {
    return {};
  }
  return frame.kind == wire::kKindMessage ? on_message(frame, now_ms)
                                          : on_vitals(frame, now_ms);
}

std::vector<Effect> Receiver::on_message(const wire::Frame& frame, std::int64_t now_ms) {
  std::vector<Effect> effects;
  const auto code = *wire::message_code_from_byte(frame.payload[0]);
  const auto text = lcd_text(code);

  lcd_[0] = lcd_pad(text);
  lcd_[1] = lcd_pad(room_label(frame.room_no));
  effects.push_back(Effect{now_ms, LcdUpdate{0, lcd_[0]}});
  effects.push_back(Effect{now_ms, LcdUpdate{1, lcd_[1]}});
  buzzer_ = true;
  effects.push_back(Effect{now_ms, BuzzerOn{}});

  // A repeat of the same cause keeps the original request (and its timers);
  // a different cause starts a fresh one.
  if (!pending_ || pending_->code != code) {
    pending_ = Pending{code, frame.room_no, now_ms, false};
  }

  gateway::TelemetryRecord rec;
  rec.device_id = frame.device_id;
  rec.room_no = frame.room_no;
  rec.t_ms = now_ms;
  rec.kind = gateway::RecordKind::Message;
  rec.message_text = std::string(text);
  effects.push_back(Effect{now_ms, RecordTelemetry{std::move(rec)}});

  if ((frame.flags & wire::kFlagEscalate) != 0 && !pending_->sms_sent) {
    pending_->sms_sent = true;
    effects.push_back(
        Effect{now_ms, SmsRequest{cfg_.caregiver_number, format_sms(frame.room_no, text)}});
  }
  return effects;
}

std::vector<Effect> Receiver::on_vitals(const wire::Frame& frame, std::int64_t now_ms) {
  std::vector<Effect> effects;
  const auto payload = *wire::decode_vitals_payload(frame.payload);
  const auto reading = vitals::make_reading(payload.bpm_x10 / 10.0,
                                            payload.temp_cx100 / 100.0, now_ms);

  gateway::TelemetryRecord rec;
  rec.device_id = frame.device_id;
  rec.room_no = frame.room_no;
  rec.t_ms = now_ms;
  rec.kind = gateway::RecordKind::Vitals;
  rec.bpm = reading.bpm;
  rec.temp_c = reading.temp_c;
  effects.push_back(Effect{now_ms, RecordTelemetry{std::move(rec)}});

  if (!reading.valid) {
    return effects;  // recorded, but implausible values trigger no alarm
  }
  const auto anomaly = vitals::check_anomaly(reading, cfg_.band);
  if (!anomaly) {
    return effects;
  }

  const std::string cause = anomaly_cause(*anomaly, reading);
  gateway::TelemetryRecord alert;
  alert.device_id = frame.device_id;
  alert.room_no = frame.room_no;
  alert.t_ms = now_ms;
  alert.kind = gateway::RecordKind::Alert;
  alert.anomaly = cause;
  effects.push_back(Effect{now_ms, RecordTelemetry{std::move(alert)}});

  std::vector<std::string> recipients;
  recipients.reserve(cfg_.doctors.size());
  for (const auto& doc : cfg_.doctors) {
    recipients.push_back(doc.phone);
  }
  effects.push_back(Effect{
      now_ms, AlertBroadcast{frame.room_no, format_sms(frame.room_no, cause), recipients}});

  anomaly_alarm_ = true;
  buzzer_ = true;
  effects.push_back(Effect{now_ms, BuzzerOn{}});
  return effects;
}

std::vector<Effect> Receiver::tick(std::int64_t now_ms) {
  std::vector<Effect> effects;
  if (pending_ && !pending_->sms_sent &&
      now_ms - pending_->since_ms >= cfg_.attend_timeout_ms) {
    pending_->sms_sent = true;
    effects.push_back(Effect{
        now_ms,
        SmsRequest{cfg_.caregiver_number,
                   format_sms(pending_->room_no, lcd_text(pending_->code))}});
  }
  return effects;
}

std::vector<Effect> Receiver::acknowledge(std::int64_t now_ms) {
  if (!pending_ && !anomaly_alarm_) {
    return {};
  }
  pending_.reset();
  anomaly_alarm_ = false;
  buzzer_ = false;
  lcd_[0] = lcd_pad("READY");
  lcd_[1] = lcd_pad("");
  std::vector<Effect> effects;
  effects.push_back(Effect{now_ms, BuzzerOff{}});
  effects.push_back(Effect{now_ms, LcdUpdate{0, lcd_[0]}});
  effects.push_back(Effect{now_ms, LcdUpdate{1, lcd_[1]}});
  return effects;
}

bool Receiver::invariants_hold() const {
  const bool lcd_ok = lcd_[0].size() == kLcdCols && lcd_[1].size() == kLcdCols;
  const bool buzzer_ok = buzzer_ == (pending_.has_value() || anomaly_alarm_);
  return lcd_ok && buzzer_ok;
}

}  // namespace paracom::rx
