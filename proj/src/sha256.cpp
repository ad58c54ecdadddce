#include "sha256.hpp"

#include <openssl/evp.h>

namespace eticket {

std::array<uint8_t, 32> sha256(const uint8_t* data, size_t len) {
    std::array<uint8_t, 32> out{};
    unsigned int outlen = 0;
    if (!EVP_Digest(data, len, out.data(), &outlen, EVP_sha256(), nullptr) ||
        outlen != 32)
        throw Error(Err::invalid_arg, "sha256 failed");
    return out;
}

}  // namespace eticket
