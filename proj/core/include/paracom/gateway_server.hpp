#pragma once

#include <memory>
#include <optional>
#include <string>

#include "paracom/telemetry_store.hpp"

namespace paracom::gateway {

/// Effective service port: an explicit CLI value wins, then the
/// PARACOM_PORT environment variable, then 8080. env_value may be null.
int resolve_port(std::optional<int> cli_port, const char* env_value);

/// HTTP front end for a TelemetryStore:
///
///   POST /api/v1/telemetry                        ingest one JSON record
///   GET  /api/v1/patients/{device_id}/latest
///   GET  /api/v1/patients/{device_id}/history?since_ms=N&limit=N
///   GET  /api/v1/alerts?since_ms=N
///   GET  /status                                  plain-text summary
///
/// Request/response bodies carry TelemetryRecord fields verbatim
/// (docs/protocol.md). Reads may run concurrently; the store serializes
/// ingests and appends to its log before the response goes out.
class GatewayServer {
 public:
  explicit GatewayServer(TelemetryStore& store);
  ~GatewayServer();

  GatewayServer(const GatewayServer&) = delete;
  GatewayServer& operator=(const GatewayServer&) = delete;

  /// Blocks serving requests. Returns false when the port cannot be bound.
  bool listen(const std::string& host, int port);

  /// Binds an ephemeral port (for tests); returns it, or -1 on failure.
  /// Follow with listen_after_bind() on a worker thread.
  int bind_any_port(const std::string& host);
  bool listen_after_bind();

  void stop();
  bool is_running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace paracom::gateway
