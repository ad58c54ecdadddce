#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace eticket {

using Bytes = std::vector<uint8_t>;

// Error conditions surfaced by the library.  Verification of a well-formed
// proof or signature returns false instead of throwing; exceptions are for
// precondition violations, malformed inputs and protocol aborts.
enum class Err {
    ok = 0,
    invalid_arg,
    parse,            // malformed encoding / message / config text
    io,               // file system failure
    state,            // operation not valid in the current actor state
    pole_collision,   // exponent denominator hit zero and retries ran out
    range_too_wide,   // group order too small for the configured digit width
    unknown_policy,   // referenced policy not present in the universe
    not_satisfied,    // attribute outside a requested policy
    proof_failed,     // received proof rejected
    ticket_check,     // ticket verification equation rejected by the holder
    vp_window,        // ticket validity would outlive the credential
    repeat_verifier,  // holder already answered this verifier
    expired_ticket,
    duplicate_nonce,
    corrupt_record,   // table log damaged mid-file
    degenerate,       // double-spend pair unusable (equal nonces / verifiers)
};

struct Error : std::runtime_error {
    Err code;
    Error(Err c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

struct ParseError : Error {
    size_t offset;       // byte offset into the input, when known
    std::string field;   // field being decoded, when known
    ParseError(const std::string& msg, size_t off = 0, std::string fld = {})
        : Error(Err::parse, msg + (fld.empty() ? "" : " (field '" + fld + "')") +
                                " at offset " + std::to_string(off)),
          offset(off), field(std::move(fld)) {}
};

inline std::string to_hex(const Bytes& b) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(b.size() * 2);
    for (uint8_t v : b) {
        s.push_back(digits[v >> 4]);
        s.push_back(digits[v & 15]);
    }
    return s;
}

inline void append_u32be(Bytes& out, uint32_t v) {
    out.push_back(uint8_t(v >> 24));
    out.push_back(uint8_t(v >> 16));
    out.push_back(uint8_t(v >> 8));
    out.push_back(uint8_t(v));
}

inline void append_u64be(Bytes& out, uint64_t v) {
    for (int i = 7; i >= 0; --i) out.push_back(uint8_t(v >> (8 * i)));
}

}  // namespace eticket
