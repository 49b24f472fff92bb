#include "paracom/gsm_modem.hpp"

#include <istream>
#include <ostream>

#include <nlohmann/json.hpp>

namespace paracom::gsm {

namespace {

constexpr std::string_view kCmgsPrefix = "AT+CMGS=\"";

std::string_view trim_crlf(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::string_view to_string(Modem::Mode mode) {
  switch (mode) {
    case Modem::Mode::Idle:
      return "Idle";
    case Modem::Mode::TextModeSet:
      return "TextModeSet";
    case Modem::Mode::AwaitingBody:
      return "AwaitingBody";
  }
  return "?";
}

std::string Modem::exec(std::string_view input, std::int64_t now_ms) {
  if (mode_ == Mode::AwaitingBody) {
    const auto term = input.find(kCtrlZ);
    if (term == std::string_view::npos) {
      body_buffer_.append(input);
      return "";
    }
    body_buffer_.append(input.substr(0, term));
    std::string body = std::move(body_buffer_);
    body_buffer_.clear();
    mode_ = Mode::TextModeSet;
    if (body.size() > kMaxSmsBody) {
      return "ERROR";
    }
    const int index = next_index_++;
    outbox_.push_back(SmsRecord{index, std::move(pending_to_), std::move(body), now_ms});
    pending_to_.clear();
    return "+CMGS: " + std::to_string(index) + "\nOK";
  }

  const std::string_view line = trim_crlf(input);
  if (line == "AT") {
    return "OK";
  }
  if (line == "AT+CMGF=1") {
    mode_ = Mode::TextModeSet;
    return "OK";
  }
  if (line.starts_with(kCmgsPrefix) && line.size() > kCmgsPrefix.size() && line.back() == '"') {
    if (mode_ != Mode::TextModeSet) {
      return "ERROR";
    }
    const auto number = line.substr(kCmgsPrefix.size(), line.size() - kCmgsPrefix.size() - 1);
    if (number.empty() || number.find('"') != std::string_view::npos) {
      return "ERROR";
    }
    pending_to_ = std::string(number);
    mode_ = Mode::AwaitingBody;
    return "> ";
  }
  return "ERROR";
}

std::optional<int> Modem::send_sms(std::string_view to, std::string_view body,
                                   std::int64_t now_ms) {
  if (mode_ == Mode::AwaitingBody || body.size() > kMaxSmsBody ||
      body.find(kCtrlZ) != std::string_view::npos) {
    return std::nullopt;
  }
  if (mode_ == Mode::Idle) {
    if (exec("AT+CMGF=1", now_ms) != "OK") {
      return std::nullopt;
    }
  }
  if (exec("AT+CMGS=\"" + std::string(to) + "\"", now_ms) != "> ") {
    return std::nullopt;
  }
  exec(std::string(body) + kCtrlZ, now_ms);
  return outbox_.back().index;
}

void Modem::write_outbox(std::ostream& os) const {
  for (const auto& rec : outbox_) {
    nlohmann::json j;
    j["index"] = rec.index;
    j["to"] = rec.to;
    j["body"] = rec.body;
    j["t_ms"] = rec.t_ms;
    os << j.dump() << '\n';
  }
}

std::optional<std::vector<SmsRecord>> Modem::read_outbox(std::istream& is) {
  std::vector<SmsRecord> records;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) {
      continue;
    }
    auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      return std::nullopt;
    }
    try {
      records.push_back(SmsRecord{j.at("index").get<int>(), j.at("to").get<std::string>(),
                                  j.at("body").get<std::string>(),
                                  j.at("t_ms").get<std::int64_t>()});
    } catch (const nlohmann::json::exception&) {
      return std::nullopt;
    }
  }
  return records;
}

}  // namespace paracom::gsm
