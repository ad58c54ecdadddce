#pragma once

#include <string_view>

#include "scheme/actors.hpp"

// Binary wire format.  Every protocol message is
//   version byte (1) || kind byte || body
// and every body field uses the canonical tagged encodings of the group
// (elements, scalars, strings) or raw big-endian integers (counts).  Decoders
// throw ParseError on any malformed, truncated or trailing input.

namespace eticket::wire {

enum class MsgKind : uint8_t {
    params_publish = 1,
    seller_reg_request = 2,
    seller_reg_response = 3,
    user_reg_request = 4,
    user_reg_response = 5,
    buy_request = 6,
    seller_offer = 7,
    purchase_request = 8,
    ticket_grant = 9,
    validate_challenge = 10,
    ticket_transcript = 11,
    validate_result = 12,
    abort_note = 13,
};

constexpr uint8_t kWireVersion = 1;

const char* msg_kind_name(MsgKind k);

// Plain request/result bodies with no cryptographic payload.
struct BuyRequest {
    std::string service;
};
struct ValidateResult {
    bool ok = false;
    std::string reason;
};
struct AbortNote {
    std::string reason;
};

// ----- field-level writer / reader ------------------------------------------

class Writer {
  public:
    explicit Writer(const Group& g) : g_(g) {}

    Writer& u8(uint8_t v);
    Writer& u32(uint32_t v);
    Writer& u64(uint64_t v);
    Writer& scalar(const Scalar& s);
    Writer& g(const GElem& e);
    Writer& gt(const GTElem& e);
    Writer& str(std::string_view s);
    Writer& mpz(const mpz_class& v);  // sign byte + length + magnitude

    const Bytes& bytes() const { return out_; }
    Bytes take() { return std::move(out_); }

  private:
    const Group& g_;
    Bytes out_;
};

class Reader {
  public:
    Reader(const Group& g, const Bytes& in, size_t pos = 0)
        : g_(g), in_(in), pos_(pos) {}

    uint8_t u8(const char* field = "");
    uint32_t u32(const char* field = "");
    uint64_t u64(const char* field = "");
    // Item count: rejects values that cannot fit in the remaining input
    // (at least min_item_bytes each), so a corrupted count fails parsing
    // instead of driving a huge allocation or a long decode loop.
    uint32_t count(const char* field, size_t min_item_bytes = 1);
    // Boolean byte: only 0 and 1 are valid encodings.
    bool boolean(const char* field = "");
    Scalar scalar(const char* field = "");
    GElem g(const char* field = "");
    GTElem gt(const char* field = "");
    std::string str(const char* field = "");
    mpz_class mpz(const char* field = "");

    size_t pos() const { return pos_; }
    bool at_end() const { return pos_ == in_.size(); }
    void done() const;  // throws ParseError unless fully consumed

  private:
    void need(size_t n, const char* field) const;

    const Group& g_;
    const Bytes& in_;
    size_t pos_;
};

// ----- envelope ---------------------------------------------------------------

Bytes seal(MsgKind kind, Bytes body);
// Returns the kind byte of a sealed message without parsing the body.
MsgKind peek_kind(const Bytes& msg);
// Strips the envelope, checking version and (when expected != 0) the kind.
Bytes open(const Bytes& msg, MsgKind expected);

// ----- parameter + key material blobs ----------------------------------------

Bytes encode_params(const Params& pp);
std::shared_ptr<Params> decode_params(const Bytes& in);

Bytes encode_authority(const CentralAuthority& ca);
CentralAuthority decode_authority(const Bytes& in);

Bytes encode_seller(const Seller& s);
Seller decode_seller(const Bytes& in, std::shared_ptr<const Params> pp);

Bytes encode_user(const User& u);
User decode_user(const Bytes& in, std::shared_ptr<const Params> pp);

Bytes encode_ticket(const Group& G, const Ticket& t);
Ticket decode_ticket(const Group& G, const Bytes& in);

// ----- protocol messages (sealed) ---------------------------------------------

Bytes encode_msg(const Params& pp);  // params_publish
Bytes encode_msg(const Group& G, const SellerRegRequest& m);
Bytes encode_msg(const Group& G, const SellerRegResponse& m);
Bytes encode_msg(const Group& G, const UserRegRequest& m);
Bytes encode_msg(const Group& G, const UserRegResponse& m);
Bytes encode_msg(const Group& G, const BuyRequest& m);
Bytes encode_msg(const Group& G, const SellerOffer& m);
Bytes encode_msg(const Group& G, const PurchaseRequest& m);
Bytes encode_msg(const Group& G, const TicketGrant& m);
Bytes encode_msg(const Group& G, const ValidateChallenge& m);
Bytes encode_msg(const Group& G, const TicketTranscript& m);
Bytes encode_msg(const Group& G, const ValidateResult& m);
Bytes encode_msg(const Group& G, const AbortNote& m);

std::shared_ptr<Params> decode_msg_params(const Bytes& in);
SellerRegRequest decode_msg_seller_reg_request(const Group& G, const Bytes& in);
SellerRegResponse decode_msg_seller_reg_response(const Group& G, const Bytes& in);
UserRegRequest decode_msg_user_reg_request(const Group& G, const Bytes& in);
UserRegResponse decode_msg_user_reg_response(const Group& G, const Bytes& in);
BuyRequest decode_msg_buy_request(const Group& G, const Bytes& in);
SellerOffer decode_msg_seller_offer(const Group& G, const Bytes& in);
PurchaseRequest decode_msg_purchase_request(const Group& G, const Bytes& in);
TicketGrant decode_msg_ticket_grant(const Group& G, const Bytes& in);
ValidateChallenge decode_msg_validate_challenge(const Group& G, const Bytes& in);
TicketTranscript decode_msg_ticket_transcript(const Group& G, const Bytes& in);
ValidateResult decode_msg_validate_result(const Group& G, const Bytes& in);
AbortNote decode_msg_abort_note(const Group& G, const Bytes& in);

}  // namespace eticket::wire
