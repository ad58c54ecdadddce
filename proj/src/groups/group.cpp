#include "groups/group.hpp"

#include "rng.hpp"
#include "sha256.hpp"

namespace eticket {

Bytes mpz_to_fixed(const mpz_class& v, size_t width) {
    if (v < 0) throw Error(Err::invalid_arg, "negative value in encoding");
    Bytes out(width, 0);
    size_t count = 0;
    mpz_export(nullptr, &count, 1, 1, 1, 0, v.get_mpz_t());
    if (count > width) throw Error(Err::invalid_arg, "value too wide to encode");
    if (v != 0)
        mpz_export(out.data() + (width - count), &count, 1, 1, 1, 0,
                   v.get_mpz_t());
    return out;
}

mpz_class mpz_from_bytes(const uint8_t* data, size_t len) {
    mpz_class v;
    if (len) mpz_import(v.get_mpz_t(), len, 1, 1, 1, 0, data);
    return v;
}

void Group::set_order(const mpz_class& p) {
    p_ = p;
    scalar_width_ = (mpz_sizeinbase(p.get_mpz_t(), 2) + 7) / 8;
}

Scalar Group::s_from_u64(uint64_t v) const {
    mpz_class m;
    mpz_import(m.get_mpz_t(), 1, 1, sizeof v, 0, 0, &v);  // host endianness
    return s_from_mpz(m);
}

Scalar Group::s_from_mpz(const mpz_class& v) const {
    mpz_class r = v % p_;
    if (r < 0) r += p_;
    return {r};
}

Scalar Group::s_add(const Scalar& a, const Scalar& b) const {
    mpz_class r = a.v + b.v;
    if (r >= p_) r -= p_;
    return {r};
}

Scalar Group::s_sub(const Scalar& a, const Scalar& b) const {
    mpz_class r = a.v - b.v;
    if (r < 0) r += p_;
    return {r};
}

Scalar Group::s_mul(const Scalar& a, const Scalar& b) const {
    mpz_class r = (a.v * b.v) % p_;
    return {r};
}

Scalar Group::s_neg(const Scalar& a) const {
    if (a.v == 0) return {0};
    return {p_ - a.v};
}

Scalar Group::s_inv(const Scalar& a) const {
    if (a.v == 0) throw Error(Err::pole_collision, "inverse of zero scalar");
    mpz_class r;
    if (!mpz_invert(r.get_mpz_t(), a.v.get_mpz_t(), p_.get_mpz_t()))
        throw Error(Err::pole_collision, "scalar not invertible");
    return {r};
}

Scalar Group::hash_to_scalar(const Bytes& data) const {
    auto digest = sha256(data);
    mpz_class v = mpz_from_bytes(digest.data(), digest.size());
    // Single-reduction mapping; the modulo bias is negligible for the
    // pairing profile and irrelevant for algebra testing.
    return s_from_mpz(v);
}

Scalar Group::random_scalar(Rng& rng) const {
    while (true) {
        mpz_class v = rng.below(p_);
        if (v != 0) return {v};
    }
}

namespace {

void put_header(Bytes& out, uint8_t tag, size_t len) {
    out.push_back(tag);
    append_u32be(out, uint32_t(len));
}

// Reads a "tag || u32 length || payload" header, returns payload pointer.
const uint8_t* take_header(const Bytes& in, size_t& pos, uint8_t want_tag,
                           size_t want_len, const char* field) {
    if (pos >= in.size() || in.size() - pos < 5)
        throw ParseError("truncated element header", pos, field);
    if (in[pos] != want_tag)
        throw ParseError("unexpected element tag", pos, field);
    uint32_t len = (uint32_t(in[pos + 1]) << 24) | (uint32_t(in[pos + 2]) << 16) |
                   (uint32_t(in[pos + 3]) << 8) | uint32_t(in[pos + 4]);
    if (len != want_len)
        throw ParseError("unexpected element length", pos, field);
    if (in.size() - pos - 5 < len)
        throw ParseError("truncated element payload", pos, field);
    const uint8_t* payload = in.data() + pos + 5;
    pos += 5 + len;
    return payload;
}

}  // namespace

Bytes Group::enc_scalar(const Scalar& s) const {
    Bytes out;
    put_header(out, TAG_SCALAR, scalar_width_);
    Bytes payload = mpz_to_fixed(s.v, scalar_width_);
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

Bytes Group::enc_g(const GElem& a) const {
    Bytes payload = g_payload(a);
    Bytes out;
    put_header(out, TAG_G, payload.size());
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

Bytes Group::enc_gt(const GTElem& a) const {
    Bytes payload = gt_payload(a);
    Bytes out;
    put_header(out, TAG_GT, payload.size());
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

Scalar Group::dec_scalar(const Bytes& in, size_t& pos, const char* field) const {
    size_t start = pos;
    const uint8_t* payload = take_header(in, pos, TAG_SCALAR, scalar_width_, field);
    mpz_class v = mpz_from_bytes(payload, scalar_width_);
    if (v >= p_) throw ParseError("scalar not reduced", start, field);
    return {v};
}

GElem Group::dec_g(const Bytes& in, size_t& pos, const char* field) const {
    size_t start = pos;
    const uint8_t* payload = take_header(in, pos, TAG_G, g_width(), field);
    return g_from_payload(payload, g_width(), start, field);
}

GTElem Group::dec_gt(const Bytes& in, size_t& pos, const char* field) const {
    size_t start = pos;
    const uint8_t* payload = take_header(in, pos, TAG_GT, gt_width(), field);
    return gt_from_payload(payload, gt_width(), start, field);
}

}  // namespace eticket
