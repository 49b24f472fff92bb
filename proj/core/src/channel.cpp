#include "paracom/channel.hpp"

#include <stdexcept>

namespace paracom::wire {

LossyChannel::LossyChannel(const ChannelConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {
  if (!cfg.valid()) {
    throw std::invalid_argument("channel probabilities must be in [0,1]");
  }
}

std::vector<std::vector<std::uint8_t>> LossyChannel::transmit(
    std::span<const std::uint8_t> bytes) {
  ++stats_.offered;
  std::vector<std::vector<std::uint8_t>> delivered;

  if (rng_.next_double() < cfg_.drop_p) {
    ++stats_.dropped;
    return delivered;
  }

  std::vector<std::uint8_t> copy(bytes.begin(), bytes.end());
  for (auto& byte : copy) {
    for (int bit = 0; bit < 8; ++bit) {
      if (rng_.next_double() < cfg_.bitflip_p) {
        byte = static_cast<std::uint8_t>(byte ^ (1u << bit));
        ++stats_.bits_flipped;
      }
    }
  }

  const bool dup = rng_.next_double() < cfg_.dup_p;
  delivered.push_back(copy);
  ++stats_.delivered;
  if (dup) {
    delivered.push_back(std::move(copy));
    ++stats_.delivered;
    ++stats_.duplicated;
  }
  return delivered;
}

}  // namespace paracom::wire
