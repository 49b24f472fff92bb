#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "paracom/telemetry_record.hpp"

namespace paracom::gateway {

/// Append-only telemetry store with per-device and alert indexes.
///
/// Persistence is a line-delimited log (one JSON record per line). On
/// ingest the record is appended and flushed to the log before the call
/// returns; the in-memory index is rebuildable from the log alone, so a
/// restarted store answers queries identically.
///
/// Mutations are serialized; concurrent reads are allowed.
class TelemetryStore {
 public:
  /// In-memory store (no persistence).
  TelemetryStore() = default;

  /// Persistent store; replays an existing log, then appends to it.
  /// Throws StorageError when the log cannot be opened or contains a
  /// malformed line.
  explicit TelemetryStore(const std::filesystem::path& log_path);

  /// Assigns the next id (arrival order, 1-based), appends, and returns
  /// the id. The record's id field is ignored on input. Throws
  /// ValidationError (names the field) or StorageError.
  std::int64_t ingest(TelemetryRecord rec);

  /// Record with maximum t_ms for the device, ties broken by larger id.
  /// nullopt for an unknown device.
  std::optional<TelemetryRecord> latest(std::uint16_t device_id) const;

  /// Records with t_ms >= since_ms, ascending (t_ms, id), truncated to
  /// limit. nullopt for an unknown device; throws std::invalid_argument
  /// when limit < 1.
  std::optional<std::vector<TelemetryRecord>> history(std::uint16_t device_id,
                                                      std::int64_t since_ms,
                                                      std::size_t limit = 100) const;

  /// All alert records with t_ms >= since_ms, ascending (t_ms, id).
  std::vector<TelemetryRecord> alerts(std::int64_t since_ms = 0) const;

  /// Plain-text summary: header plus one line per known device.
  std::string status_page() const;

  std::vector<std::uint16_t> devices() const;
  std::size_t size() const;

 private:
  void index_record(const TelemetryRecord& rec);

  mutable std::mutex mutex_;
  std::vector<TelemetryRecord> records_;
  std::unordered_map<std::uint16_t, std::vector<std::size_t>> by_device_;
  std::vector<std::size_t> alert_index_;
  std::ofstream log_out_;
  bool persistent_ = false;
};

}  // namespace paracom::gateway
