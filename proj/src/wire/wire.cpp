#include "wire/wire.hpp"

#include "rng.hpp"

namespace eticket::wire {

const char* msg_kind_name(MsgKind k) {
    switch (k) {
        case MsgKind::params_publish: return "params_publish";
        case MsgKind::seller_reg_request: return "seller_reg_request";
        case MsgKind::seller_reg_response: return "seller_reg_response";
        case MsgKind::user_reg_request: return "user_reg_request";
        case MsgKind::user_reg_response: return "user_reg_response";
        case MsgKind::buy_request: return "buy_request";
        case MsgKind::seller_offer: return "seller_offer";
        case MsgKind::purchase_request: return "purchase_request";
        case MsgKind::ticket_grant: return "ticket_grant";
        case MsgKind::validate_challenge: return "validate_challenge";
        case MsgKind::ticket_transcript: return "ticket_transcript";
        case MsgKind::validate_result: return "validate_result";
        case MsgKind::abort_note: return "abort_note";
    }
    return "unknown";
}

// ----- Writer / Reader -------------------------------------------------------

Writer& Writer::u8(uint8_t v) {
    out_.push_back(v);
    return *this;
}
Writer& Writer::u32(uint32_t v) {
    append_u32be(out_, v);
    return *this;
}
Writer& Writer::u64(uint64_t v) {
    append_u64be(out_, v);
    return *this;
}
Writer& Writer::scalar(const Scalar& s) {
    Bytes b = g_.enc_scalar(s);
    out_.insert(out_.end(), b.begin(), b.end());
    return *this;
}
Writer& Writer::g(const GElem& e) {
    Bytes b = g_.enc_g(e);
    out_.insert(out_.end(), b.begin(), b.end());
    return *this;
}
Writer& Writer::gt(const GTElem& e) {
    Bytes b = g_.enc_gt(e);
    out_.insert(out_.end(), b.begin(), b.end());
    return *this;
}
Writer& Writer::str(std::string_view s) {
    out_.push_back(TAG_STRING);
    append_u32be(out_, uint32_t(s.size()));
    out_.insert(out_.end(), s.begin(), s.end());
    return *this;
}
Writer& Writer::mpz(const mpz_class& v) {
    u8(sgn(v) < 0 ? 1 : 0);
    mpz_class mag = abs(v);
    size_t bits = mpz_sizeinbase(mag.get_mpz_t(), 2);
    size_t width = mag == 0 ? 0 : (bits + 7) / 8;
    u32(uint32_t(width));
    Bytes b = mpz_to_fixed(mag, width);
    out_.insert(out_.end(), b.begin(), b.end());
    return *this;
}

void Reader::need(size_t n, const char* field) const {
    if (in_.size() - pos_ < n)
        throw ParseError("truncated input", pos_, field);
}
uint8_t Reader::u8(const char* field) {
    need(1, field);
    return in_[pos_++];
}
uint32_t Reader::u32(const char* field) {
    need(4, field);
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v = (v << 8) | in_[pos_ + i];
    pos_ += 4;
    return v;
}
uint64_t Reader::u64(const char* field) {
    need(8, field);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | in_[pos_ + i];
    pos_ += 8;
    return v;
}
uint32_t Reader::count(const char* field, size_t min_item_bytes) {
    uint32_t n = u32(field);
    if (min_item_bytes == 0) min_item_bytes = 1;
    if (size_t(n) > (in_.size() - pos_) / min_item_bytes)
        throw ParseError("impossible item count", pos_ - 4, field);
    return n;
}

bool Reader::boolean(const char* field) {
    uint8_t b = u8(field);
    if (b > 1) throw ParseError("non-canonical boolean byte", pos_ - 1, field);
    return b == 1;
}
Scalar Reader::scalar(const char* field) { return g_.dec_scalar(in_, pos_, field); }
GElem Reader::g(const char* field) { return g_.dec_g(in_, pos_, field); }
GTElem Reader::gt(const char* field) { return g_.dec_gt(in_, pos_, field); }
std::string Reader::str(const char* field) {
    need(5, field);
    if (in_[pos_] != TAG_STRING)
        throw ParseError("expected string tag", pos_, field);
    uint32_t len = 0;
    for (int i = 0; i < 4; ++i) len = (len << 8) | in_[pos_ + 1 + i];
    pos_ += 5;
    need(len, field);
    std::string s(in_.begin() + ptrdiff_t(pos_), in_.begin() + ptrdiff_t(pos_ + len));
    pos_ += len;
    return s;
}
mpz_class Reader::mpz(const char* field) {
    uint8_t sign = u8(field);
    if (sign > 1) throw ParseError("bad integer sign byte", pos_ - 1, field);
    uint32_t len = u32(field);
    need(len, field);
    mpz_class v = mpz_from_bytes(in_.data() + pos_, len);
    pos_ += len;
    return sign ? -v : v;
}
void Reader::done() const {
    if (!at_end())
        throw ParseError("trailing bytes after message", pos_, "");
}

// ----- envelope ----------------------------------------------------------------

Bytes seal(MsgKind kind, Bytes body) {
    Bytes out;
    out.reserve(body.size() + 2);
    out.push_back(kWireVersion);
    out.push_back(uint8_t(kind));
    out.insert(out.end(), body.begin(), body.end());
    return out;
}

MsgKind peek_kind(const Bytes& msg) {
    if (msg.size() < 2) throw ParseError("message too short", 0, "envelope");
    if (msg[0] != kWireVersion)
        throw ParseError("unsupported wire version", 0, "envelope");
    uint8_t k = msg[1];
    if (k < 1 || k > uint8_t(MsgKind::abort_note))
        throw ParseError("unknown message kind", 1, "envelope");
    return MsgKind(k);
}

Bytes open(const Bytes& msg, MsgKind expected) {
    MsgKind k = peek_kind(msg);
    if (k != expected)
        throw ParseError(std::string("expected ") + msg_kind_name(expected) +
                             ", got " + msg_kind_name(k),
                         1, "envelope");
    return Bytes(msg.begin() + 2, msg.end());
}

// ----- shared sub-codecs ---------------------------------------------------------

namespace {

void put_sel(Writer& w, const PolicySelection& sel) {
    w.u32(uint32_t(sel.names.size()));
    for (const std::string& n : sel.names) w.str(n);
}
PolicySelection get_sel(Reader& r) {
    uint32_t n = r.count("selection count", 5);
    std::vector<std::string> names;
    names.reserve(n);
    for (uint32_t i = 0; i < n; ++i) names.push_back(r.str("selection name"));
    return PolicySelection::make(std::move(names));
}

void put_attrs(Writer& w, const UserAttributes& a) {
    w.u32(uint32_t(a.range_values.size()));
    for (const auto& [name, v] : a.range_values) {
        w.str(name);
        w.mpz(v);
    }
    w.u32(uint32_t(a.set_items.size()));
    for (const auto& [name, item] : a.set_items) {
        w.str(name);
        w.str(item);
    }
}
UserAttributes get_attrs(Reader& r) {
    UserAttributes a;
    uint32_t n = r.count("range value count", 10);
    for (uint32_t i = 0; i < n; ++i) {
        std::string name = r.str("range name");
        a.range_values[name] = r.mpz("range value");
    }
    n = r.count("set item count", 10);
    for (uint32_t i = 0; i < n; ++i) {
        std::string name = r.str("set name");
        a.set_items[name] = r.str("set item");
    }
    return a;
}

void put_cred(Writer& w, const Credential& c) {
    w.scalar(c.c).scalar(c.r).g(c.sigma);
}
Credential get_cred(Reader& r) {
    Credential c;
    c.c = r.scalar("credential tag");
    c.r = r.scalar("credential blinding");
    c.sigma = r.g("credential signature");
    return c;
}

void put_s1(Writer& w, const ProofS1& p) {
    w.g(p.M).g(p.Y).scalar(p.c).scalar(p.s);
}
ProofS1 get_s1(Reader& r) {
    ProofS1 p;
    p.M = r.g("M");
    p.Y = r.g("Y");
    p.c = r.scalar("c");
    p.s = r.scalar("s");
    return p;
}

void put_u1(Writer& w, const ProofU1& p) {
    w.g(p.M).g(p.Y).g(p.R).scalar(p.c1).scalar(p.c2).scalar(p.s1).scalar(p.s2);
}
ProofU1 get_u1(Reader& r) {
    ProofU1 p;
    p.M = r.g("M");
    p.Y = r.g("Y");
    p.R = r.g("R");
    p.c1 = r.scalar("c1");
    p.c2 = r.scalar("c2");
    p.s1 = r.scalar("s1");
    p.s2 = r.scalar("s2");
    return p;
}

void put_s2(Writer& w, const ProofS2& p) {
    w.g(p.M).g(p.Q).g(p.Z).g(p.Gamma).gt(p.Omega);
    w.scalar(p.c1).scalar(p.s1).scalar(p.s2);
    w.scalar(p.c2).scalar(p.sh1).scalar(p.sh2);
    w.scalar(p.c3).scalar(p.r1).scalar(p.r2).scalar(p.r3).scalar(p.r4).scalar(p.r5);
    w.str(p.vp);
}
ProofS2 get_s2(Reader& r) {
    ProofS2 p;
    p.M = r.g("M");
    p.Q = r.g("Q");
    p.Z = r.g("Z");
    p.Gamma = r.g("Gamma");
    p.Omega = r.gt("Omega");
    p.c1 = r.scalar("c1");
    p.s1 = r.scalar("s1");
    p.s2 = r.scalar("s2");
    p.c2 = r.scalar("c2");
    p.sh1 = r.scalar("sh1");
    p.sh2 = r.scalar("sh2");
    p.c3 = r.scalar("c3");
    p.r1 = r.scalar("r1");
    p.r2 = r.scalar("r2");
    p.r3 = r.scalar("r3");
    p.r4 = r.scalar("r4");
    p.r5 = r.scalar("r5");
    p.vp = r.str("vp");
    return p;
}

void put_u2(Writer& w, const ProofU2& p) {
    w.g(p.M).g(p.C).g(p.D).g(p.Phi).g(p.Y).gt(p.R);
    w.scalar(p.c);
    w.scalar(p.x_bar).scalar(p.d_bar).scalar(p.r_bar).scalar(p.cu_bar);
    w.scalar(p.alpha_bar).scalar(p.beta_bar).scalar(p.alphap_bar).scalar(p.betap_bar);
    w.u32(uint32_t(p.a_bar.size()));
    for (const Scalar& s : p.a_bar) w.scalar(s);
    w.u32(uint32_t(p.e_check.size()));
    for (const Scalar& s : p.e_check) w.scalar(s);
    w.u32(uint32_t(p.ranges.size()));
    for (const RangeBlockU2& rb : p.ranges) {
        w.u32(uint32_t(rb.range_index));
        w.g(rb.Z);
        w.scalar(rb.ch).scalar(rb.gamma_bar).scalar(rb.gamma_check);
        w.scalar(rb.a_check).scalar(rb.ap_check);
        w.u32(uint32_t(rb.digits.size()));
        for (const DigitBlockU2& db : rb.digits) {
            w.g(db.A).g(db.Ap);
            w.gt(db.V).gt(db.Vt).gt(db.Vp).gt(db.Vpt);
            w.scalar(db.ch);
            w.scalar(db.t_bar).scalar(db.tp_bar);
            w.scalar(db.w_hat).scalar(db.wp_hat);
            w.scalar(db.w_bar).scalar(db.wp_bar);
        }
    }
    w.u32(uint32_t(p.sets.size()));
    for (const SetBlockU2& sb : p.sets) {
        w.u32(uint32_t(sb.set_index));
        w.g(sb.B);
        w.gt(sb.W);
        w.scalar(sb.e_hat).scalar(sb.e_hat2);
    }
    w.str(p.vp);
    put_sel(w, p.sel);
}
ProofU2 get_u2(Reader& r) {
    ProofU2 p;
    p.M = r.g("M");
    p.C = r.g("C");
    p.D = r.g("D");
    p.Phi = r.g("Phi");
    p.Y = r.g("Y");
    p.R = r.gt("R");
    p.c = r.scalar("c");
    p.x_bar = r.scalar("x_bar");
    p.d_bar = r.scalar("d_bar");
    p.r_bar = r.scalar("r_bar");
    p.cu_bar = r.scalar("cu_bar");
    p.alpha_bar = r.scalar("alpha_bar");
    p.beta_bar = r.scalar("beta_bar");
    p.alphap_bar = r.scalar("alphap_bar");
    p.betap_bar = r.scalar("betap_bar");
    uint32_t n = r.count("a_bar count", 2);
    for (uint32_t i = 0; i < n; ++i) p.a_bar.push_back(r.scalar("a_bar"));
    n = r.count("e_check count", 2);
    for (uint32_t i = 0; i < n; ++i) p.e_check.push_back(r.scalar("e_check"));
    n = r.count("range count", 8);
    for (uint32_t i = 0; i < n; ++i) {
        RangeBlockU2 rb;
        rb.range_index = r.u32("range index");
        rb.Z = r.g("Z");
        rb.ch = r.scalar("range challenge");
        rb.gamma_bar = r.scalar("gamma_bar");
        rb.gamma_check = r.scalar("gamma_check");
        rb.a_check = r.scalar("a_check");
        rb.ap_check = r.scalar("ap_check");
        uint32_t nd = r.count("digit count", 13);
        for (uint32_t j = 0; j < nd; ++j) {
            DigitBlockU2 db;
            db.A = r.g("A");
            db.Ap = r.g("Ap");
            db.V = r.gt("V");
            db.Vt = r.gt("Vt");
            db.Vp = r.gt("Vp");
            db.Vpt = r.gt("Vpt");
            db.ch = r.scalar("digit challenge");
            db.t_bar = r.scalar("t_bar");
            db.tp_bar = r.scalar("tp_bar");
            db.w_hat = r.scalar("w_hat");
            db.wp_hat = r.scalar("wp_hat");
            db.w_bar = r.scalar("w_bar");
            db.wp_bar = r.scalar("wp_bar");
            rb.digits.push_back(std::move(db));
        }
        p.ranges.push_back(std::move(rb));
    }
    n = r.count("set count", 8);
    for (uint32_t i = 0; i < n; ++i) {
        SetBlockU2 sb;
        sb.set_index = r.u32("set index");
        sb.B = r.g("B");
        sb.W = r.gt("W");
        sb.e_hat = r.scalar("e_hat");
        sb.e_hat2 = r.scalar("e_hat2");
        p.sets.push_back(std::move(sb));
    }
    p.vp = r.str("vp");
    p.sel = get_sel(r);
    return p;
}

void put_u3(Writer& w, const ProofU3& p) {
    w.g(p.M).g(p.D).g(p.E).g(p.F).g(p.J).g(p.W).gt(p.R);
    w.scalar(p.c).scalar(p.s_bar).scalar(p.x_bar).scalar(p.s_hat);
    w.scalar(p.pi_bar).scalar(p.la_bar).scalar(p.om_bar).scalar(p.pip_bar);
    w.scalar(p.d_bar);
}
ProofU3 get_u3(Reader& r) {
    ProofU3 p;
    p.M = r.g("M");
    p.D = r.g("D");
    p.E = r.g("E");
    p.F = r.g("F");
    p.J = r.g("J");
    p.W = r.g("W");
    p.R = r.gt("R");
    p.c = r.scalar("c");
    p.s_bar = r.scalar("s_bar");
    p.x_bar = r.scalar("x_bar");
    p.s_hat = r.scalar("s_hat");
    p.pi_bar = r.scalar("pi_bar");
    p.la_bar = r.scalar("la_bar");
    p.om_bar = r.scalar("om_bar");
    p.pip_bar = r.scalar("pip_bar");
    p.d_bar = r.scalar("d_bar");
    return p;
}

}  // namespace

// ----- parameter + key material blobs --------------------------------------------

Bytes encode_params(const Params& pp) {
    const Group& G = pp.G();
    Writer w(G);
    w.u8(kWireVersion);
    w.u8(uint8_t(G.backend()));
    w.u32(G.config().rbits).u32(G.config().qbits);
    w.mpz(G.config().test_prime);
    if (G.backend() == Backend::pairing) {
        w.mpz(G.field_prime());
        w.mpz(G.order());
    }
    const PolicyUniverse& u = pp.universe;
    w.u32(u.base);
    w.u32(uint32_t(u.ranges.size()));
    for (const RangePolicy& rp : u.ranges) {
        w.str(rp.name);
        w.mpz(rp.lo);
        w.mpz(rp.hi);
    }
    w.u32(uint32_t(u.sets.size()));
    for (const SetPolicy& sp : u.sets) {
        w.str(sp.name);
        w.u32(uint32_t(sp.items.size()));
        for (const std::string& it : sp.items) w.str(it);
    }
    w.u32(pp.k);
    w.g(pp.g).g(pp.g0).g(pp.g1).g(pp.g2).g(pp.g3).g(pp.gs);
    w.g(pp.h).g(pp.eta).g(pp.xi).g(pp.rho).g(pp.vt);
    for (const GElem& e : pp.ghat) w.g(e);
    for (const GElem& e : pp.eta_i) w.g(e);
    w.g(pp.g_tilde).g(pp.h_tilde);
    for (const GElem& e : pp.h_digit) w.g(e);
    for (const GElem& e : pp.h_power) w.g(e);
    for (const GElem& e : pp.eta_tilde) w.g(e);
    for (const auto& tags : pp.item_tags)
        for (const GElem& e : tags) w.g(e);
    w.u32(uint32_t(pp.seller_keys.size()));
    for (const auto& [id, Y] : pp.seller_keys) {
        w.str(id);
        w.g(Y);
    }
    return w.take();
}

std::shared_ptr<Params> decode_params(const Bytes& in) {
    // The group config prefix must be parsed before any element can be
    // decoded, so the reader starts without a group.
    size_t pos = 0;
    auto need = [&](size_t n) {
        if (in.size() - pos < n) throw ParseError("truncated input", pos, "params");
    };
    need(2);
    if (in[pos++] != kWireVersion)
        throw ParseError("unsupported blob version", 0, "params");
    uint8_t backend = in[pos++];
    if (backend != uint8_t(Backend::pairing) &&
        backend != uint8_t(Backend::exponent))
        throw ParseError("unknown group backend", 1, "params");

    GroupConfig cfg;
    cfg.backend = Backend(backend);
    auto rd_u32 = [&]() {
        need(4);
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v = (v << 8) | in[pos + i];
        pos += 4;
        return v;
    };
    auto rd_mpz = [&]() {
        need(5);
        uint8_t sign = in[pos++];
        if (sign > 1) throw ParseError("bad integer sign byte", pos - 1, "params");
        uint32_t len = 0;
        for (int i = 0; i < 4; ++i) len = (len << 8) | in[pos + i];
        pos += 4;
        need(len);
        mpz_class v = mpz_from_bytes(in.data() + pos, len);
        pos += len;
        return sign ? mpz_class(-v) : v;
    };
    cfg.rbits = rd_u32();
    cfg.qbits = rd_u32();
    cfg.test_prime = rd_mpz();

    std::shared_ptr<const Group> group;
    if (cfg.backend == Backend::pairing) {
        mpz_class q = rd_mpz();
        mpz_class r = rd_mpz();
        group = Group::restore_pairing(cfg, q, r);
    } else {
        Rng dummy = Rng::from_u64(0);
        group = Group::create(cfg, dummy);
    }

    auto pp = std::make_shared<Params>();
    pp->group = group;
    Reader r(*group, in, pos);
    PolicyUniverse& u = pp->universe;
    u.base = r.u32("base");
    uint32_t n1 = r.count("range count", 15);
    for (uint32_t i = 0; i < n1; ++i) {
        RangePolicy rp;
        rp.name = r.str("range name");
        rp.lo = r.mpz("range low");
        rp.hi = r.mpz("range high");
        u.ranges.push_back(std::move(rp));
    }
    uint32_t n2 = r.count("set count", 10);
    for (uint32_t i = 0; i < n2; ++i) {
        SetPolicy sp;
        sp.name = r.str("set name");
        uint32_t ni = r.count("item count", 5);
        for (uint32_t j = 0; j < ni; ++j) sp.items.push_back(r.str("item"));
        u.sets.push_back(std::move(sp));
    }
    u.validate();
    pp->k = r.u32("digit count");
    if (pp->k == 0 || pp->k > 4096)
        throw ParseError("unreasonable digit count", 0, "params");
    pp->g = r.g("g");
    pp->g0 = r.g("g0");
    pp->g1 = r.g("g1");
    pp->g2 = r.g("g2");
    pp->g3 = r.g("g3");
    pp->gs = r.g("gs");
    pp->h = r.g("h");
    pp->eta = r.g("eta");
    pp->xi = r.g("xi");
    pp->rho = r.g("rho");
    pp->vt = r.g("vt");
    for (uint32_t i = 0; i < n1; ++i) pp->ghat.push_back(r.g("ghat"));
    for (uint32_t i = 0; i < n2; ++i) pp->eta_i.push_back(r.g("eta_i"));
    pp->g_tilde = r.g("g_tilde");
    pp->h_tilde = r.g("h_tilde");
    for (uint32_t d = 0; d < u.base; ++d) pp->h_digit.push_back(r.g("h_digit"));
    for (uint32_t i = 0; i < pp->k; ++i) pp->h_power.push_back(r.g("h_power"));
    for (uint32_t i = 0; i < n2; ++i) pp->eta_tilde.push_back(r.g("eta_tilde"));
    for (uint32_t i = 0; i < n2; ++i) {
        std::vector<GElem> tags;
        for (size_t j = 0; j < u.sets[i].items.size(); ++j)
            tags.push_back(r.g("item_tag"));
        pp->item_tags.push_back(std::move(tags));
    }
    uint32_t ns = r.count("seller key count", 7);
    for (uint32_t i = 0; i < ns; ++i) {
        std::string id = r.str("seller id");
        pp->seller_keys[id] = r.g("seller key");
    }
    r.done();
    pp->build_pair_cache();
    return pp;
}

Bytes encode_authority(const CentralAuthority& ca) {
    const Params& pp = *ca.public_params();
    const Group& G = pp.G();
    Writer w(G);
    w.u8(kWireVersion);
    Bytes blob = encode_params(pp);
    w.u32(uint32_t(blob.size()));
    Bytes out = w.take();
    out.insert(out.end(), blob.begin(), blob.end());
    Writer w2(G);
    const MasterSecret& msk = ca.master_secret();
    w2.scalar(msk.x).scalar(msk.y);
    w2.u32(uint32_t(msk.mu.size()));
    for (const Scalar& m : msk.mu) w2.scalar(m);
    Bytes tail = w2.take();
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

CentralAuthority decode_authority(const Bytes& in) {
    size_t pos = 0;
    if (in.size() < 5 || in[pos++] != kWireVersion)
        throw ParseError("unsupported blob version", 0, "authority");
    uint32_t blen = 0;
    for (int i = 0; i < 4; ++i) blen = (blen << 8) | in[pos + i];
    pos += 4;
    if (in.size() - pos < blen)
        throw ParseError("truncated parameter blob", pos, "authority");
    Bytes blob(in.begin() + ptrdiff_t(pos), in.begin() + ptrdiff_t(pos + blen));
    std::shared_ptr<Params> pp = decode_params(blob);
    pos += blen;
    Reader r(pp->G(), in, pos);
    MasterSecret msk;
    msk.x = r.scalar("msk x");
    msk.y = r.scalar("msk y");
    uint32_t n = r.u32("mu count");
    if (n != pp->universe.sets.size())
        throw ParseError("set secret count mismatch", r.pos(), "authority");
    for (uint32_t i = 0; i < n; ++i) msk.mu.push_back(r.scalar("mu"));
    r.done();
    return CentralAuthority(std::move(pp), std::move(msk));
}

Bytes encode_seller(const Seller& s) {
    const Group& G = s.params->G();
    Writer w(G);
    w.u8(kWireVersion);
    w.str(s.id_);
    w.scalar(s.x_).g(s.Y_);
    w.str(s.vp_);
    w.u8(s.cred_ ? 1 : 0);
    if (s.cred_) put_cred(w, *s.cred_);
    w.u8(s.sale_configured_ ? 1 : 0);
    if (s.sale_configured_) {
        w.str(s.service_).str(s.price_).str(s.vp_ticket_);
        put_sel(w, s.required_);
    }
    return w.take();
}

Seller decode_seller(const Bytes& in, std::shared_ptr<const Params> pp) {
    const Group& G = pp->G();
    Seller s(std::move(pp));
    Reader r(G, in);
    if (r.u8("version") != kWireVersion)
        throw ParseError("unsupported blob version", 0, "seller");
    s.id_ = r.str("id");
    s.x_ = r.scalar("x");
    s.Y_ = r.g("Y");
    s.vp_ = r.str("vp");
    if (r.boolean("has credential")) s.cred_ = get_cred(r);
    if (r.boolean("sale configured")) {
        s.sale_configured_ = true;
        s.service_ = r.str("service");
        s.price_ = r.str("price");
        s.vp_ticket_ = r.str("vp_ticket");
        s.required_ = get_sel(r);
    }
    r.done();
    return s;
}

Bytes encode_user(const User& u) {
    const Group& G = u.params->G();
    Writer w(G);
    w.u8(kWireVersion);
    w.scalar(u.x_).g(u.Y_).scalar(u.r_);
    w.str(u.vp_);
    put_attrs(w, u.attrs_);
    w.u8(u.cred_ ? 1 : 0);
    if (u.cred_) put_cred(w, *u.cred_);
    w.u32(uint32_t(u.table_.size()));
    for (const auto& [key, nonce] : u.table_) {
        w.str(key);
        w.scalar(nonce);
    }
    return w.take();
}

User decode_user(const Bytes& in, std::shared_ptr<const Params> pp) {
    const Group& G = pp->G();
    User u(std::move(pp));
    Reader r(G, in);
    if (r.u8("version") != kWireVersion)
        throw ParseError("unsupported blob version", 0, "user");
    u.x_ = r.scalar("x");
    u.Y_ = r.g("Y");
    u.r_ = r.scalar("r");
    u.vp_ = r.str("vp");
    u.attrs_ = get_attrs(r);
    if (r.boolean("has credential")) u.cred_ = get_cred(r);
    uint32_t n = r.count("table size", 7);
    for (uint32_t i = 0; i < n; ++i) {
        std::string key = r.str("table key");
        u.table_[key] = r.scalar("table nonce");
    }
    r.done();
    return u;
}

Bytes encode_ticket(const Group& G, const Ticket& t) {
    Writer w(G);
    w.u8(kWireVersion);
    w.scalar(t.core.d_u).scalar(t.core.s_u).scalar(t.core.psi).scalar(t.core.omega);
    w.g(t.core.T).g(t.Ps);
    w.str(t.seller_id).str(t.service).str(t.price).str(t.vp_ticket);
    put_sel(w, t.sel);
    return w.take();
}

Ticket decode_ticket(const Group& G, const Bytes& in) {
    Reader r(G, in);
    if (r.u8("version") != kWireVersion)
        throw ParseError("unsupported blob version", 0, "ticket");
    Ticket t;
    t.core.d_u = r.scalar("d_u");
    t.core.s_u = r.scalar("s_u");
    t.core.psi = r.scalar("psi");
    t.core.omega = r.scalar("omega");
    t.core.T = r.g("T");
    t.Ps = r.g("Ps");
    t.seller_id = r.str("seller_id");
    t.service = r.str("service");
    t.price = r.str("price");
    t.vp_ticket = r.str("vp_ticket");
    t.sel = get_sel(r);
    r.done();
    return t;
}

// ----- protocol messages -----------------------------------------------------------

Bytes encode_msg(const Params& pp) {
    return seal(MsgKind::params_publish, encode_params(pp));
}
std::shared_ptr<Params> decode_msg_params(const Bytes& in) {
    return decode_params(open(in, MsgKind::params_publish));
}

Bytes encode_msg(const Group& G, const SellerRegRequest& m) {
    Writer w(G);
    put_s1(w, m.proof);
    w.str(m.seller_id).str(m.vp);
    return seal(MsgKind::seller_reg_request, w.take());
}
SellerRegRequest decode_msg_seller_reg_request(const Group& G, const Bytes& in) {
    Bytes body = open(in, MsgKind::seller_reg_request);
    Reader r(G, body);
    SellerRegRequest m;
    m.proof = get_s1(r);
    m.seller_id = r.str("seller_id");
    m.vp = r.str("vp");
    r.done();
    return m;
}

Bytes encode_msg(const Group& G, const SellerRegResponse& m) {
    Writer w(G);
    put_cred(w, m.cred);
    return seal(MsgKind::seller_reg_response, w.take());
}
SellerRegResponse decode_msg_seller_reg_response(const Group& G, const Bytes& in) {
    Bytes body = open(in, MsgKind::seller_reg_response);
    Reader r(G, body);
    SellerRegResponse m;
    m.cred = get_cred(r);
    r.done();
    return m;
}

Bytes encode_msg(const Group& G, const UserRegRequest& m) {
    Writer w(G);
    put_u1(w, m.proof);
    put_attrs(w, m.attrs);
    w.str(m.vp);
    return seal(MsgKind::user_reg_request, w.take());
}
UserRegRequest decode_msg_user_reg_request(const Group& G, const Bytes& in) {
    Bytes body = open(in, MsgKind::user_reg_request);
    Reader r(G, body);
    UserRegRequest m;
    m.proof = get_u1(r);
    m.attrs = get_attrs(r);
    m.vp = r.str("vp");
    r.done();
    return m;
}

Bytes encode_msg(const Group& G, const UserRegResponse& m) {
    Writer w(G);
    w.g(m.sigma).scalar(m.c).scalar(m.rp);
    return seal(MsgKind::user_reg_response, w.take());
}
UserRegResponse decode_msg_user_reg_response(const Group& G, const Bytes& in) {
    Bytes body = open(in, MsgKind::user_reg_response);
    Reader r(G, body);
    UserRegResponse m;
    m.sigma = r.g("sigma");
    m.c = r.scalar("c");
    m.rp = r.scalar("rp");
    r.done();
    return m;
}

Bytes encode_msg(const Group& G, const BuyRequest& m) {
    Writer w(G);
    w.str(m.service);
    return seal(MsgKind::buy_request, w.take());
}
BuyRequest decode_msg_buy_request(const Group& G, const Bytes& in) {
    Bytes body = open(in, MsgKind::buy_request);
    Reader r(G, body);
    BuyRequest m;
    m.service = r.str("service");
    r.done();
    return m;
}

Bytes encode_msg(const Group& G, const SellerOffer& m) {
    Writer w(G);
    put_s2(w, m.proof);
    w.str(m.seller_id).str(m.service).str(m.price).str(m.vp_ticket);
    put_sel(w, m.required);
    return seal(MsgKind::seller_offer, w.take());
}
SellerOffer decode_msg_seller_offer(const Group& G, const Bytes& in) {
    Bytes body = open(in, MsgKind::seller_offer);
    Reader r(G, body);
    SellerOffer m;
    m.proof = get_s2(r);
    m.seller_id = r.str("seller_id");
    m.service = r.str("service");
    m.price = r.str("price");
    m.vp_ticket = r.str("vp_ticket");
    m.required = get_sel(r);
    r.done();
    return m;
}

Bytes encode_msg(const Group& G, const PurchaseRequest& m) {
    Writer w(G);
    put_u2(w, m.proof);
    return seal(MsgKind::purchase_request, w.take());
}
PurchaseRequest decode_msg_purchase_request(const Group& G, const Bytes& in) {
    Bytes body = open(in, MsgKind::purchase_request);
    Reader r(G, body);
    PurchaseRequest m;
    m.proof = get_u2(r);
    r.done();
    return m;
}

Bytes encode_msg(const Group& G, const TicketGrant& m) {
    Writer w(G);
    w.g(m.T).scalar(m.dp).scalar(m.s_u).scalar(m.omega).scalar(m.psi);
    w.str(m.service).str(m.price).str(m.vp_ticket);
    return seal(MsgKind::ticket_grant, w.take());
}
TicketGrant decode_msg_ticket_grant(const Group& G, const Bytes& in) {
    Bytes body = open(in, MsgKind::ticket_grant);
    Reader r(G, body);
    TicketGrant m;
    m.T = r.g("T");
    m.dp = r.scalar("dp");
    m.s_u = r.scalar("s_u");
    m.omega = r.scalar("omega");
    m.psi = r.scalar("psi");
    m.service = r.str("service");
    m.price = r.str("price");
    m.vp_ticket = r.str("vp_ticket");
    r.done();
    return m;
}

Bytes encode_msg(const Group& G, const ValidateChallenge& m) {
    Writer w(G);
    w.str(m.verifier_id).scalar(m.r);
    return seal(MsgKind::validate_challenge, w.take());
}
ValidateChallenge decode_msg_validate_challenge(const Group& G, const Bytes& in) {
    Bytes body = open(in, MsgKind::validate_challenge);
    Reader r(G, body);
    ValidateChallenge m;
    m.verifier_id = r.str("verifier_id");
    m.r = r.scalar("r");
    r.done();
    return m;
}

Bytes encode_msg(const Group& G, const TicketTranscript& m) {
    Writer w(G);
    put_u3(w, m.proof);
    w.g(m.Ps).scalar(m.psi);
    w.str(m.seller_id).str(m.service).str(m.price).str(m.vp_ticket);
    put_sel(w, m.sel);
    return seal(MsgKind::ticket_transcript, w.take());
}
TicketTranscript decode_msg_ticket_transcript(const Group& G, const Bytes& in) {
    Bytes body = open(in, MsgKind::ticket_transcript);
    Reader r(G, body);
    TicketTranscript m;
    m.proof = get_u3(r);
    m.Ps = r.g("Ps");
    m.psi = r.scalar("psi");
    m.seller_id = r.str("seller_id");
    m.service = r.str("service");
    m.price = r.str("price");
    m.vp_ticket = r.str("vp_ticket");
    m.sel = get_sel(r);
    r.done();
    return m;
}

Bytes encode_msg(const Group& G, const ValidateResult& m) {
    Writer w(G);
    w.u8(m.ok ? 1 : 0).str(m.reason);
    return seal(MsgKind::validate_result, w.take());
}
ValidateResult decode_msg_validate_result(const Group& G, const Bytes& in) {
    Bytes body = open(in, MsgKind::validate_result);
    Reader r(G, body);
    ValidateResult m;
    m.ok = r.boolean("ok");
    m.reason = r.str("reason");
    r.done();
    return m;
}

Bytes encode_msg(const Group& G, const AbortNote& m) {
    Writer w(G);
    w.str(m.reason);
    return seal(MsgKind::abort_note, w.take());
}
AbortNote decode_msg_abort_note(const Group& G, const Bytes& in) {
    Bytes body = open(in, MsgKind::abort_note);
    Reader r(G, body);
    AbortNote m;
    m.reason = r.str("reason");
    r.done();
    return m;
}

}  // namespace eticket::wire
