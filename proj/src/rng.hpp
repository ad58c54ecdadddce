#pragma once

#include <array>
#include <gmpxx.h>

#include "common.hpp"

namespace eticket {

// Deterministic byte stream: block(i) = SHA-256(key || be64(i)).  A fixed
// seed reproduces every draw; derive() forks an independent stream so each
// protocol actor can be replayed in isolation.
class Rng {
  public:
    explicit Rng(const Bytes& seed);
    static Rng from_u64(uint64_t seed);
    static Rng from_entropy();

    Rng derive(const std::string& label) const;

    void fill(uint8_t* out, size_t n);
    uint64_t next_u64();

    // Uniform integer in [0, bound), bound >= 1, by masked rejection.
    mpz_class below(const mpz_class& bound);

  private:
    Rng() = default;
    void refill();

    std::array<uint8_t, 32> key_{};
    uint64_t counter_ = 0;
    std::array<uint8_t, 32> block_{};
    size_t used_ = 32;
};

}  // namespace eticket
