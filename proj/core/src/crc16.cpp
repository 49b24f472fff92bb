#include "paracom/crc16.hpp"

#include <array>

namespace paracom::wire {

namespace {

constexpr std::uint16_t kPoly = 0x1021;

constexpr std::array<std::uint16_t, 256> make_table() {
  std::array<std::uint16_t, 256> table{};
  for (unsigned byte = 0; byte < 256; ++byte) {
    std::uint16_t reg = static_cast<std::uint16_t>(byte << 8);
    for (int bit = 0; bit < 8; ++bit) {
      reg = (reg & 0x8000) ? static_cast<std::uint16_t>((reg << 1) ^ kPoly)
                           : static_cast<std::uint16_t>(reg << 1);
    }
    table[byte] = reg;
  }
  return table;
}

constexpr auto kTable = make_table();

}  // namespace

std::uint16_t crc16(std::span<const std::uint8_t> data) {
  std::uint16_t reg = 0xFFFF;
  for (std::uint8_t b : data) {
    reg = static_cast<std::uint16_t>((reg << 8) ^ kTable[((reg >> 8) ^ b) & 0xFF]);
  }
  return reg;
}

}  // namespace paracom::wire
