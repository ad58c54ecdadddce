#pragma once

#include <gmpxx.h>
#include <memory>

#include "common.hpp"

namespace eticket {

class Rng;

// Scalars are integers modulo the (prime) group order, always stored reduced.
struct Scalar {
    mpz_class v;
};

// Source-group element.  Pairing backend: affine point (x, y) or the point at
// infinity.  Exponent test backend: x holds the discrete log of the element
// with respect to a nominal generator, y stays 0 and inf stays false (its
// identity is x = 0); this makes every protocol equation checkable by plain
// modular integer arithmetic.
struct GElem {
    mpz_class x, y;
    bool inf = false;
};

// Target-group element.  Pairing backend: (a, b) = a + b*i in F_{q^2}.
// Exponent test backend: a holds the discrete log, b stays 0.
struct GTElem {
    mpz_class a, b;
};

enum class Backend : uint8_t {
    pairing = 1,   // supersingular curve with a symmetric pairing
    exponent = 2,  // discrete-log mirror group for algebra testing
};

struct GroupConfig {
    Backend backend = Backend::pairing;
    unsigned rbits = 160;  // subgroup order size (pairing backend)
    unsigned qbits = 512;  // base field size (pairing backend)
    mpz_class test_prime = 101;  // group order (exponent backend)
};

// Canonical encoding tags.  Every element encoding is
//   tag byte || 4-byte big-endian payload length || payload
// which keeps concatenations of encodings injective.
constexpr uint8_t TAG_G = 0x01;
constexpr uint8_t TAG_GT = 0x02;
constexpr uint8_t TAG_SCALAR = 0x03;
constexpr uint8_t TAG_STRING = 0x04;

class Group {
  public:
    virtual ~Group() = default;

    // Builds a group.  The pairing backend derives fresh curve parameters
    // from rng (deterministic under a fixed seed); the exponent backend
    // validates test_prime (>= 101, prime).
    static std::shared_ptr<const Group> create(const GroupConfig& cfg, Rng& rng);

    // Restores a pairing group from stored primes without re-running the
    // parameter search (wire format support).
    static std::shared_ptr<const Group> restore_pairing(const GroupConfig& cfg,
                                                        const mpz_class& q,
                                                        const mpz_class& r);

    Backend backend() const { return cfg_.backend; }
    const GroupConfig& config() const { return cfg_; }
    const mpz_class& order() const { return p_; }

    // ----- scalar arithmetic mod order -----
    Scalar s_zero() const { return {0}; }
    Scalar s_one() const { return {1}; }
    Scalar s_from_u64(uint64_t v) const;
    Scalar s_from_mpz(const mpz_class& v) const;
    Scalar s_add(const Scalar& a, const Scalar& b) const;
    Scalar s_sub(const Scalar& a, const Scalar& b) const;
    Scalar s_mul(const Scalar& a, const Scalar& b) const;
    Scalar s_neg(const Scalar& a) const;
    Scalar s_inv(const Scalar& a) const;  // throws on zero
    bool s_is_zero(const Scalar& a) const { return a.v == 0; }
    bool s_eq(const Scalar& a, const Scalar& b) const { return a.v == b.v; }

    // SHA-256 of the input interpreted as a big-endian integer, reduced mod
    // the group order.
    Scalar hash_to_scalar(const Bytes& data) const;

    // Uniform scalar in [1, order): zero is excluded so secrets, blindings
    // and nonces are always usable as exponents and denominators.
    Scalar random_scalar(Rng& rng) const;

    // ----- source group -----
    virtual GElem identity() const = 0;
    virtual bool is_identity(const GElem& a) const = 0;
    virtual GElem mul(const GElem& a, const GElem& b) const = 0;
    virtual GElem pow(const GElem& a, const Scalar& e) const = 0;
    virtual GElem inv(const GElem& a) const = 0;
    virtual bool g_eq(const GElem& a, const GElem& b) const = 0;
    virtual bool g_valid(const GElem& a) const = 0;
    virtual GElem random_element(Rng& rng) const = 0;  // never identity
    virtual GElem hash_to_group(const Bytes& data) const = 0;

    GElem div(const GElem& a, const GElem& b) const { return mul(a, inv(b)); }

    // ----- target group -----
    virtual GTElem gt_identity() const = 0;
    virtual GTElem gt_mul(const GTElem& a, const GTElem& b) const = 0;
    virtual GTElem gt_pow(const GTElem& a, const Scalar& e) const = 0;
    virtual GTElem gt_inv(const GTElem& a) const = 0;
    virtual bool gt_eq(const GTElem& a, const GTElem& b) const = 0;
    virtual bool gt_valid(const GTElem& a) const = 0;

    GTElem gt_div(const GTElem& a, const GTElem& b) const {
        return gt_mul(a, gt_inv(b));
    }

    // ----- pairing -----
    virtual GTElem pair(const GElem& a, const GElem& b) const = 0;

    // ----- canonical encodings -----
    Bytes enc_scalar(const Scalar& s) const;
    Bytes enc_g(const GElem& a) const;
    Bytes enc_gt(const GTElem& a) const;

    // Stream decoders: consume one tagged encoding starting at *pos, advance
    // *pos, throw ParseError (bad tag / length / non-canonical payload).
    Scalar dec_scalar(const Bytes& in, size_t& pos, const char* field = "") const;
    GElem dec_g(const Bytes& in, size_t& pos, const char* field = "") const;
    GTElem dec_gt(const Bytes& in, size_t& pos, const char* field = "") const;

    // Fixed payload widths in bytes (no tag/length header).
    size_t scalar_width() const { return scalar_width_; }
    virtual size_t g_width() const = 0;
    virtual size_t gt_width() const = 0;

    // Pairing backend exposes its primes for serialization; exponent backend
    // returns order() for both.
    virtual const mpz_class& field_prime() const = 0;

  protected:
    explicit Group(const GroupConfig& cfg) : cfg_(cfg) {}
    void set_order(const mpz_class& p);

    virtual Bytes g_payload(const GElem& a) const = 0;
    virtual GElem g_from_payload(const uint8_t* data, size_t len,
                                 size_t offset, const char* field) const = 0;
    virtual Bytes gt_payload(const GTElem& a) const = 0;
    virtual GTElem gt_from_payload(const uint8_t* data, size_t len,
                                   size_t offset, const char* field) const = 0;

    GroupConfig cfg_;
    mpz_class p_;  // prime group order
    size_t scalar_width_ = 0;
};

// Fixed-width big-endian integer helpers shared by the backends.
Bytes mpz_to_fixed(const mpz_class& v, size_t width);
mpz_class mpz_from_bytes(const uint8_t* data, size_t len);

}  // namespace eticket
