#include "paracom/gateway_server.hpp"

#include <cstdlib>
#include <string>

#include <httplib.h>
#include <nlohmann/json.hpp>

namespace paracom::gateway {

using nlohmann::json;

int resolve_port(std::optional<int> cli_port, const char* env_value) {
  if (cli_port) {
    return *cli_port;
  }
  if (env_value != nullptr && *env_value != '\0') {
    char* end = nullptr;
    const long parsed = std::strtol(env_value, &end, 10);
    if (end != env_value && *end == '\0' && parsed > 0 && parsed <= 65535) {
      return static_cast<int>(parsed);
    }
  }
  return 8080;
}

namespace {

void reply_error(httplib::Response& res, int status, const std::string& message,
                 const std::string& field = "") {
  json j;
  j["error"] = message;
  if (!field.empty()) {
    j["field"] = field;
  }
  res.status = status;
  res.set_content(j.dump(), "application/json");
}

std::optional<std::uint16_t> parse_device_id(const std::string& s) {
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (end == s.c_str() || *end != '\0' || v < 0 || v > 0xFFFF) {
    return std::nullopt;
  }
  return static_cast<std::uint16_t>(v);
}

std::int64_t query_int(const httplib::Request& req, const char* key, std::int64_t fallback) {
  if (!req.has_param(key)) {
    return fallback;
  }
  return std::strtoll(req.get_param_value(key).c_str(), nullptr, 10);
}

json record_to_json(const TelemetryRecord& rec) {
  return json::parse(to_json_line(rec));
}

}  // namespace

struct GatewayServer::Impl {
  explicit Impl(TelemetryStore& s) : store(s) { install_routes(); }

  void install_routes() {
    server.Post("/api/v1/telemetry", [this](const httplib::Request& req, httplib::Response& res) {
      auto rec = record_from_json(req.body);
      if (!rec) {
        reply_error(res, 400, "malformed telemetry record");
        return;
      }
      try {
        const auto id = store.ingest(*rec);
        json j;
        j["id"] = id;
        res.set_content(j.dump(), "application/json");
      } catch (const ValidationError& e) {
        reply_error(res, 400, e.what(), e.field());
      } catch (const StorageError& e) {
        reply_error(res, 500, e.what());
      }
    });

    server.Get(R"(/api/v1/patients/(\d+)/latest)",
               [this](const httplib::Request& req, httplib::Response& res) {
                 const auto device = parse_device_id(req.matches[1]);
                 if (!device) {
                   reply_error(res, 400, "bad device id");
                   return;
                 }
                 const auto rec = store.latest(*device);
                 if (!rec) {
                   reply_error(res, 404, "unknown device");
                   return;
                 }
                 res.set_content(record_to_json(*rec).dump(), "application/json");
               });

    server.Get(R"(/api/v1/patients/(\d+)/history)",
               [this](const httplib::Request& req, httplib::Response& res) {
                 const auto device = parse_device_id(req.matches[1]);
                 if (!device) {
                   reply_error(res, 400, "bad device id");
                   return;
                 }
                 const auto limit = query_int(req, "limit", 100);
                 if (limit < 1) {
                   reply_error(res, 400, "limit must be >= 1");
                   return;
                 }
                 const auto recs = store.history(*device, query_int(req, "since_ms", 0),
                                                 static_cast<std::size_t>(limit));
                 if (!recs) {
                   reply_error(res, 404, "unknown device");
                   return;
                 }
                 json j = json::array();
                 for (const auto& rec : *recs) {
                   j.push_back(record_to_json(rec));
                 }
                 res.set_content(j.dump(), "application/json");
               });

    server.Get("/api/v1/alerts", [this](const httplib::Request& req, httplib::Response& res) {
      json j = json::array();
      for (const auto& rec : store.alerts(query_int(req, "since_ms", 0))) {
        j.push_back(record_to_json(rec));
      }
      res.set_content(j.dump(), "application/json");
    });

    server.Get("/status", [this](const httplib::Request&, httplib::Response& res) {
      res.set_content(store.status_page(), "text/plain");
    });
  }

  TelemetryStore& store;
  httplib::Server server;
};

GatewayServer::GatewayServer(TelemetryStore& store) : impl_(std::make_unique<Impl>(store)) {}
GatewayServer::~GatewayServer() { stop(); }

bool GatewayServer::listen(const std::string& host, int port) {
  return impl_->server.listen(host, port);
}

int GatewayServer::bind_any_port(const std::string& host) {
  return impl_->server.bind_to_any_port(host);
}

bool GatewayServer::listen_after_bind() { return impl_->server.listen_after_bind(); }

void GatewayServer::stop() {
  if (impl_ && impl_->server.is_running()) {
    impl_->server.stop();
  }
}

bool GatewayServer::is_running() const { return impl_->server.is_running(); }

}  // namespace paracom::gateway
