#include "rng.hpp"

#include <cstring>
#include <random>

#include "sha256.hpp"

namespace eticket {

Rng::Rng(const Bytes& seed) {
    Bytes material;
    const char* tag = "eticket-drbg-v1";
    material.insert(material.end(), tag, tag + std::strlen(tag));
    material.insert(material.end(), seed.begin(), seed.end());
    key_ = sha256(material);
}

Rng Rng::from_u64(uint64_t seed) {
    Bytes b;
    append_u64be(b, seed);
    return Rng(b);
}

Rng Rng::from_entropy() {
    std::random_device rd;
    Bytes b;
    for (int i = 0; i < 8; ++i) append_u32be(b, rd());
    return Rng(b);
}

Rng Rng::derive(const std::string& label) const {
    Bytes material(key_.begin(), key_.end());
    material.push_back(0x00);
    material.insert(material.end(), label.begin(), label.end());
    Rng child;
    child.key_ = sha256(material);
    return child;
}

void Rng::refill() {
    Bytes material(key_.begin(), key_.end());
    append_u64be(material, counter_++);
    block_ = sha256(material);
    used_ = 0;
}

void Rng::fill(uint8_t* out, size_t n) {
    while (n > 0) {
        if (used_ == block_.size()) refill();
        size_t take = std::min(n, block_.size() - used_);
        std::memcpy(out, block_.data() + used_, take);
        used_ += take;
        out += take;
        n -= take;
    }
}

uint64_t Rng::next_u64() {
    uint8_t b[8];
    fill(b, 8);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | b[i];
    return v;
}

mpz_class Rng::below(const mpz_class& bound) {
    if (bound <= 0) throw Error(Err::invalid_arg, "rng bound must be positive");
    size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    size_t nbytes = (bits + 7) / 8;
    unsigned topmask = bits % 8 ? (1u << (bits % 8)) - 1 : 0xff;
    Bytes buf(nbytes);
    while (true) {
        fill(buf.data(), nbytes);
        buf[0] &= uint8_t(topmask);
        mpz_class v;
        mpz_import(v.get_mpz_t(), nbytes, 1, 1, 1, 0, buf.data());
        if (v < bound) return v;
    }
}

}  // namespace eticket
