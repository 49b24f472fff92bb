#pragma once

#include <cstdint>
#include <span>

namespace paracom::wire {

/// CRC-16/CCITT-FALSE: polynomial 0x1021, initial register 0xFFFF,
/// no input/output reflection, no final xor. Check value: crc16 of the
/// ASCII string "123456789" is 0x29B1. Table-driven; tests compare it
/// against an independent bitwise long-division oracle.
std::uint16_t crc16(std::span<const std::uint8_t> data);

}  // namespace paracom::wire
