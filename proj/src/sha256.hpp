#pragma once

#include <array>

#include "common.hpp"

namespace eticket {

std::array<uint8_t, 32> sha256(const uint8_t* data, size_t len);

inline std::array<uint8_t, 32> sha256(const Bytes& b) {
    return sha256(b.data(), b.size());
}

}  // namespace eticket
