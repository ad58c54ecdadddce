#pragma once

#include <string_view>

#include "groups/group.hpp"

namespace eticket {

// Accumulates canonical encodings in the exact order the protocol prints the
// hash arguments; challenge() maps the concatenation through SHA-256 into a
// scalar.  Tagged, length-prefixed encodings keep the mapping injective.
class Transcript {
  public:
    explicit Transcript(const Group& g) : g_(g) {}

    Transcript& put_g(const GElem& e) {
        append(g_.enc_g(e));
        return *this;
    }
    Transcript& put_gt(const GTElem& e) {
        append(g_.enc_gt(e));
        return *this;
    }
    Transcript& put_scalar(const Scalar& s) {
        append(g_.enc_scalar(s));
        return *this;
    }
    Transcript& put_str(std::string_view s) {
        buf_.push_back(TAG_STRING);
        append_u32be(buf_, uint32_t(s.size()));
        buf_.insert(buf_.end(), s.begin(), s.end());
        return *this;
    }

    Scalar challenge() const { return g_.hash_to_scalar(buf_); }
    const Bytes& bytes() const { return buf_; }

  private:
    void append(const Bytes& b) { buf_.insert(buf_.end(), b.begin(), b.end()); }

    const Group& g_;
    Bytes buf_;
};

// Single-item hashes used throughout the protocol.
inline Scalar hash_str_to_scalar(const Group& g, std::string_view s) {
    return Transcript(g).put_str(s).challenge();
}

inline GElem hash_str_to_group(const Group& g, std::string_view s) {
    Transcript t(g);
    t.put_str(s);
    return g.hash_to_group(t.bytes());
}

}  // namespace eticket
