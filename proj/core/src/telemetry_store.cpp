#include "paracom/telemetry_store.hpp"

#include <algorithm>
#include <cstdio>

namespace paracom::gateway {

namespace {

std::string format_fixed(double value, int decimals) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

}  // namespace

TelemetryStore::TelemetryStore(const std::filesystem::path& log_path) : persistent_(true) {
  if (std::filesystem::exists(log_path)) {
    std::ifstream in(log_path);
    if (!in) {
      throw StorageError("cannot open telemetry log for replay: " + log_path.string());
    }
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) {
        continue;
      }
      auto rec = record_from_json(line);
      if (!rec) {
        throw StorageError("malformed telemetry log line " + std::to_string(line_no));
      }
      records_.push_back(std::move(*rec));
      index_record(records_.back());
    }
  }
  log_out_.open(log_path, std::ios::app);
  if (!log_out_) {
    throw StorageError("cannot open telemetry log for append: " + log_path.string());
  }
}

void TelemetryStore::index_record(const TelemetryRecord& rec) {
  const std::size_t pos = records_.size() - 1;
  by_device_[rec.device_id].push_back(pos);
  if (rec.kind == RecordKind::Alert) {
    alert_index_.push_back(pos);
  }
}

std::int64_t TelemetryStore::ingest(TelemetryRecord rec) {
  if (auto err = validate_record(rec)) {
    const auto colon = err->find(':');
    throw ValidationError(err->substr(0, colon), *err);
  }
  std::lock_guard<std::mutex> lock(mutex_);
  rec.id = static_cast<std::int64_t>(records_.size()) + 1;
  if (persistent_) {
    log_out_ << to_json_line(rec) << '\n';
    log_out_.flush();
    if (!log_out_) {
      throw StorageError("telemetry log append failed");
    }
  }
  records_.push_back(std::move(rec));
  index_record(records_.back());
  return records_.back().id;
}

std::optional<TelemetryRecord> TelemetryStore::latest(std::uint16_t device_id) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = by_device_.find(device_id);
  if (it == by_device_.end()) {
    return std::nullopt;
  }
  const TelemetryRecord* best = nullptr;
  for (std::size_t pos : it->second) {
    const auto& rec = records_[pos];
    if (best == nullptr || rec.t_ms > best->t_ms ||
        (rec.t_ms == best->t_ms && rec.id > best->id)) {
      best = &rec;
    }
  }
  return *best;
}

std::optional<std::vector<TelemetryRecord>> TelemetryStore::history(std::uint16_t device_id,
                                                                    std::int64_t since_ms,
                                                                    std::size_t limit) const {
  if (limit < 1) {
    throw std::invalid_argument("history limit must be >= 1");
  }
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = by_device_.find(device_id);
  if (it == by_device_.end()) {
    return std::nullopt;
  }
  std::vector<TelemetryRecord> out;
  for (std::size_t pos : it->second) {
    if (records_[pos].t_ms >= since_ms) {
      out.push_back(records_[pos]);
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.t_ms != b.t_ms ? a.t_ms < b.t_ms : a.id < b.id;
  });
  if (out.size() > limit) {
    out.resize(limit);
  }
  return out;
}

std::vector<TelemetryRecord> TelemetryStore::alerts(std::int64_t since_ms) const {
  std::lock_guard<std::mutex> lock(mutex_);
  std::vector<TelemetryRecord> out;
  for (std::size_t pos : alert_index_) {
    if (records_[pos].t_ms >= since_ms) {
      out.push_back(records_[pos]);
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.t_ms != b.t_ms ? a.t_ms < b.t_ms : a.id < b.id;
  });
  return out;
}

std::vector<std::uint16_t> TelemetryStore::devices() const {
  std::lock_guard<std::mutex> lock(mutex_);
  std::vector<std::uint16_t> ids;
  ids.reserve(by_device_.size());
  for (const auto& [id, _] : by_device_) {
    ids.push_back(id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::size_t TelemetryStore::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return records_.size();
}

std::string TelemetryStore::status_page() const {
  const auto ids = devices();  // takes and releases the lock
  std::lock_guard<std::mutex> lock(mutex_);

  std::string page = "paracom gateway: " + std::to_string(ids.size()) + " devices, " +
                     std::to_string(alert_index_.size()) + " alerts\n";
  for (std::uint16_t id : ids) {
    const TelemetryRecord* newest = nullptr;
    const TelemetryRecord* last_msg = nullptr;
    const TelemetryRecord* last_vitals = nullptr;
    for (std::size_t pos : by_device_.at(id)) {
      const auto& rec = records_[pos];
      auto newer = [](const TelemetryRecord* cur, const TelemetryRecord& cand) {
        return cur == nullptr || cand.t_ms > cur->t_ms ||
               (cand.t_ms == cur->t_ms && cand.id > cur->id);
      };
      if (newer(newest, rec)) newest = &rec;
      if (rec.kind == RecordKind::Message && newer(last_msg, rec)) last_msg = &rec;
      if (rec.kind == RecordKind::Vitals && newer(last_vitals, rec)) last_vitals = &rec;
    }
    char room[8];
    std::snprintf(room, sizeof(room), "%02d", newest->room_no);
    page += "device " + std::to_string(id) + " room " + room +
            " last_seen " + std::to_string(newest->t_ms) + " ms" +
            " msg " + (last_msg ? *last_msg->message_text : "-") +
            " bpm " + (last_vitals ? format_fixed(*last_vitals->bpm, 1) : "-") +
            " temp " + (last_vitals ? format_fixed(*last_vitals->temp_c, 2) : "-") + "\n";
  }
  return page;
}

}  // namespace paracom::gateway
