#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "paracom/rng.hpp"

namespace paracom::wire {

struct ChannelConfig {
  double drop_p = 0.0;
  double bitflip_p = 0.0;
  double dup_p = 0.0;
  std::uint64_t seed = 0;

  bool valid() const {
    auto in01 = [](double p) { return p >= 0.0 && p <= 1.0; };
    return in01(drop_p) && in01(bitflip_p) && in01(dup_p);
  }
};

/// Desk-scale stand-in for the RF link: drops, bit-flips and duplicates
/// datagrams under a seeded generator.
///
/// The randomness consumption order is normative so that logs are
/// comparable across implementations (docs/protocol.md):
///   1. one draw for drop (drop consumes nothing further),
///   2. one draw per bit, bytes in order, bit 0 (LSB) through bit 7,
///   3. one draw for duplication.
/// The duplicate is byte-identical to the (possibly corrupted) delivery.
///
/// Each channel instance owns its generator and is single-threaded by
/// contract.
class LossyChannel {
 public:
  explicit LossyChannel(const ChannelConfig& cfg);

  /// Returns 0, 1 or 2 delivered datagrams.
  std::vector<std::vector<std::uint8_t>> transmit(std::span<const std::uint8_t> bytes);

  struct Stats {
    std::uint64_t offered = 0;
    std::uint64_t dropped = 0;
    std::uint64_t delivered = 0;    // deliveries, duplicates included
    std::uint64_t duplicated = 0;
    std::uint64_t bits_flipped = 0;
  };

  const Stats& stats() const { return stats_; }
  const ChannelConfig& config() const { return cfg_; }

 private:
  ChannelConfig cfg_;
  Xorshift64Star rng_;
  Stats stats_;
};

}  // namespace paracom::wire
