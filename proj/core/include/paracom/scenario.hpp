#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "paracom/channel.hpp"
#include "paracom/gsm_modem.hpp"
#include "paracom/receiver.hpp"
#include "paracom/telemetry_store.hpp"
#include "paracom/transmitter.hpp"

namespace paracom::scenario {

// Scenario scripts are line-oriented: `at <t_ms> <directive> <args...>`,
// `#` starts a comment, strings may be double-quoted. Directives must be
// sorted by time; at most one channel directive is allowed and it must
// precede all traffic (tilt/vitals). Grammar reference: docs/protocol.md.

struct TiltDirective {
  double pitch_deg = 0.0;
  double roll_deg = 0.0;
  std::int64_t hold_ms = 0;
};
struct VitalsDirective {
  double bpm = 0.0;
  double temp_c = 0.0;
};
struct AckDirective {};
struct ChannelDirective {
  wire::ChannelConfig cfg;
};
struct ExpectLcd {
  std::string text;  // compared against LCD row 0, space-padded to 16
  std::int64_t by_ms = 0;
};
struct ExpectSms {
  std::string substring;
  std::int64_t by_ms = 0;
};
struct ExpectAlert {
  std::string substring;
  std::int64_t by_ms = 0;
};
struct ExpectNoSms {
  std::int64_t until_ms = 0;
};

using Action = std::variant<TiltDirective, VitalsDirective, AckDirective, ChannelDirective,
                            ExpectLcd, ExpectSms, ExpectAlert, ExpectNoSms>;

struct Directive {
  std::int64_t t_ms = 0;
  int line = 0;
  Action action;
};

struct Scenario {
  std::vector<Directive> directives;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Scenario parse_scenario(std::string_view text);

/// Module defaults wired together; everything here is overridable from a
/// JSON config file.
struct SimConfig {
  tx::TransmitterConfig transmitter;
  rx::ReceiverConfig receiver;
};

SimConfig default_sim_config();

/// Applies a JSON config on top of default_sim_config(). Unknown keys and
/// invalid values throw ConfigError.
SimConfig load_sim_config(std::string_view json_text);

struct LogEntry {
  std::int64_t t_ms = 0;
  std::string source;  // directive | tx | channel | rx | modem | gateway
  std::string text;
};

struct LcdHistoryEntry {
  std::int64_t t_ms = 0;
  int row = 0;
  std::string text;
};

struct BroadcastEntry {
  std::int64_t t_ms = 0;
  std::string body;
  std::size_t recipients = 0;
};

struct ExpectationResult {
  int line = 0;
  std::string label;
  bool passed = false;
  std::string detail;
};

struct RunResult {
  std::vector<LogEntry> log;
  std::vector<ExpectationResult> expectations;
  bool all_passed = true;
  std::array<std::string, rx::kLcdRows> lcd;
  std::vector<LcdHistoryEntry> lcd_history;
  std::vector<BroadcastEntry> broadcasts;
  std::vector<gsm::SmsRecord> outbox;
  wire::LossyChannel::Stats channel_stats;
  std::uint64_t rejected_frames = 0;
};

/// Executes the scenario on a 1 ms virtual clock: transmitter -> channel ->
/// receiver -> modem/gateway, all in-process. Accelerometer samples are
/// generated from the active tilt directive at the configured sample rate.
/// The run seed is added (mod 2^64) to the channel directive's seed so one
/// script can be replayed under many fault patterns; (scenario, config,
/// seed) fully determines the result. When store is null an in-memory
/// store is used.
RunResult run(const Scenario& scenario, const SimConfig& cfg, std::uint64_t seed = 0,
              gateway::TelemetryStore* store = nullptr);

std::string render_log_text(std::span<const LogEntry> log);
std::string render_log_lines(std::span<const LogEntry> log);

/// The built-in demonstration: the four pre-coded messages in sequence
/// over a lossless link, acknowledged each time.
std::string_view demo_scenario_text();

}  // namespace paracom::scenario
