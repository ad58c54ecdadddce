#include "scheme/actors.hpp"

#include "groups/transcript.hpp"
#include "isotime.hpp"
#include "rng.hpp"
#include "sha256.hpp"

namespace eticket {

namespace {

constexpr int kPoleRetries = 16;

// Digest binding a sale's terms: H(policies || price || service || expiry).
Scalar sale_digest(const Group& G, const PolicySelection& sel,
                   const std::string& price, const std::string& service,
                   const std::string& vp_ticket) {
    Transcript tr(G);
    tr.put_str(sel.joined()).put_str(price).put_str(service).put_str(vp_ticket);
    return tr.challenge();
}

// Issues sigma = base_product^{1/(x + c)}, resampling c on a pole.
GElem issue_credential_sig(const Group& G, const GElem& prod, const Scalar& x,
                           Scalar& c, Rng& rng) {
    for (int i = 0; i < kPoleRetries; ++i) {
        Scalar den = G.s_add(x, c);
        if (!G.s_is_zero(den)) return G.pow(prod, G.s_inv(den));
        c = G.random_scalar(rng);
    }
    throw Error(Err::pole_collision, "could not find a usable credential tag");
}

// Credential check: e(sigma, g~ g^c) == e(prod, g).
bool credential_ok(const Params& pp, const GElem& sigma, const Scalar& c,
                   const GElem& prod) {
    const Group& G = pp.G();
    GTElem lhs = G.pair(sigma, G.mul(pp.g_tilde, G.pow(pp.g, c)));
    return G.gt_eq(lhs, G.pair(prod, pp.g));
}

std::string verifier_key(const std::string& verifier_id) {
    auto d = sha256(reinterpret_cast<const uint8_t*>(verifier_id.data()),
                    verifier_id.size());
    return to_hex(Bytes(d.begin(), d.end()));
}

// A ticket must not outlive the credential it is sold against.
void check_vp_window(const std::string& vp_ticket, const std::string& vp_cred) {
    auto t = parse_iso8601(vp_ticket);
    auto c = parse_iso8601(vp_cred);
    if (t && c && *t > *c)
        throw Error(Err::vp_window, "ticket validity " + vp_ticket +
                                        " outlives the credential " + vp_cred);
}

}  // namespace

void check_vp(const std::string& vp, int64_t now, Err code) {
    auto expiry = parse_iso8601(vp);
    if (!expiry)
        throw ParseError("invalid validity period: " + vp, 0, "vp");
    if (now > *expiry)
        throw Error(code, "validity period " + vp + " exceeded");
}

// ----- CentralAuthority -----------------------------------------------------

CentralAuthority::CentralAuthority(std::shared_ptr<const Group> group,
                                   PolicyUniverse u, Rng& rng) {
    SetupResult sr = setup(std::move(group), std::move(u), rng);
    params_ = std::move(sr.params);
    msk_ = std::move(sr.msk);
}

CentralAuthority::CentralAuthority(std::shared_ptr<Params> params,
                                   MasterSecret msk)
    : params_(std::move(params)), msk_(std::move(msk)) {}

SellerRegResponse CentralAuthority::register_seller(const SellerRegRequest& req,
                                                    Rng& rng) {
    const Group& G = params_->G();
    if (req.seller_id.empty())
        throw Error(Err::invalid_arg, "empty seller id");
    // Re-registration under an existing id replaces the published key.
    if (!parse_iso8601(req.vp))
        throw ParseError("invalid validity period: " + req.vp, 0, "vp");
    if (!zkp::verify_s1(*params_, req.proof))
        throw Error(Err::proof_failed, "seller key proof rejected");

    SellerRegResponse resp;
    resp.cred.c = G.random_scalar(rng);
    resp.cred.r = G.random_scalar(rng);
    Scalar hvp = hash_str_to_scalar(G, req.vp);
    GElem prod = G.mul(G.mul(params_->g0, G.pow(params_->g1, hvp)),
                       G.mul(req.proof.Y, G.pow(params_->gs, resp.cred.r)));
    resp.cred.sigma = issue_credential_sig(G, prod, msk_.x, resp.cred.c, rng);
    params_->seller_keys[req.seller_id] = req.proof.Y;
    return resp;
}

UserRegResponse CentralAuthority::register_user(const UserRegRequest& req,
                                                Rng& rng) {
    const Group& G = params_->G();
    req.attrs.validate_against(params_->universe);
    if (!parse_iso8601(req.vp))
        throw ParseError("invalid validity period: " + req.vp, 0, "vp");
    if (!zkp::verify_u1(*params_, req.proof))
        throw Error(Err::proof_failed, "holder key proof rejected");

    UserRegResponse resp;
    resp.c = G.random_scalar(rng);
    resp.rp = G.random_scalar(rng);
    Scalar hvp = hash_str_to_scalar(G, req.vp);
    GElem prod = G.mul(G.mul(params_->g0, G.pow(params_->g1, hvp)),
                       G.mul(req.proof.Y, req.proof.R));
    prod = G.mul(prod, G.pow(params_->gs, resp.rp));
    const PolicyUniverse& u = params_->universe;
    for (size_t l = 0; l < u.ranges.size(); ++l) {
        Scalar a = G.s_from_mpz(req.attrs.range_values.at(u.ranges[l].name));
        prod = G.mul(prod, G.pow(params_->ghat[l], a));
    }
    for (size_t i = 0; i < u.sets.size(); ++i) {
        Scalar hi = hash_str_to_scalar(G, req.attrs.set_items.at(u.sets[i].name));
        prod = G.mul(prod, G.pow(params_->eta_i[i], hi));
    }
    resp.sigma = issue_credential_sig(G, prod, msk_.x, resp.c, rng);
    return resp;
}

// ----- Seller ----------------------------------------------------------------

Seller::Seller(std::shared_ptr<const Params> pp, std::string id, Rng& rng)
    : params(std::move(pp)), id_(std::move(id)) {
    x_ = params->G().random_scalar(rng);
    Y_ = params->G().pow(params->rho, x_);
}

SellerRegRequest Seller::make_reg_request(const std::string& vp, Rng& rng) {
    vp_ = vp;
    SellerRegRequest req;
    req.proof = zkp::prove_s1(*params, x_, rng);
    req.seller_id = id_;
    req.vp = vp;
    return req;
}

void Seller::finish_registration(const SellerRegResponse& resp) {
    const Group& G = params->G();
    Scalar hvp = hash_str_to_scalar(G, vp_);
    GElem prod = G.mul(G.mul(params->g0, G.pow(params->g1, hvp)),
                       G.mul(Y_, G.pow(params->gs, resp.cred.r)));
    if (!credential_ok(*params, resp.cred.sigma, resp.cred.c, prod))
        throw Error(Err::proof_failed, "issued seller credential invalid");
    cred_ = resp.cred;
}

void Seller::configure_sale(std::string service, std::string price,
                            std::string vp_ticket, PolicySelection required) {
    if (!parse_iso8601(vp_ticket))
        throw ParseError("invalid validity period: " + vp_ticket, 0, "vp");
    for (const std::string& name : required.names)
        if (!params->universe.range_index(name) &&
            !params->universe.set_index(name))
            throw Error(Err::unknown_policy, "unknown policy: " + name);
    service_ = std::move(service);
    price_ = std::move(price);
    vp_ticket_ = std::move(vp_ticket);
    required_ = std::move(required);
    sale_configured_ = true;
}

SellerOffer Seller::make_offer(Rng& rng) const {
    if (!cred_ || !sale_configured_)
        throw Error(Err::state, "seller not registered or sale not configured");
    SellerOffer offer;
    offer.proof = zkp::prove_s2(*params, *cred_, x_, vp_, rng);
    offer.seller_id = id_;
    offer.service = service_;
    offer.price = price_;
    offer.vp_ticket = vp_ticket_;
    offer.required = required_;
    return offer;
}

TicketGrant Seller::issue(const PurchaseRequest& req, int64_t now, Rng& rng) {
    if (!cred_ || !sale_configured_)
        throw Error(Err::state, "seller not registered or sale not configured");
    const Group& G = params->G();
    if (req.proof.sel.names != required_.names)
        throw Error(Err::not_satisfied,
                    "purchase request does not prove the required policies");
    check_vp(req.proof.vp, now, Err::vp_window);
    check_vp_window(vp_ticket_, req.proof.vp);
    if (!zkp::verify_u2(*params, req.proof))
        throw Error(Err::proof_failed, "purchase proof rejected");

    TicketGrant grant;
    grant.dp = G.random_scalar(rng);
    grant.s_u = G.random_scalar(rng);
    grant.psi = sale_digest(G, required_, price_, service_, vp_ticket_);
    grant.service = service_;
    grant.price = price_;
    grant.vp_ticket = vp_ticket_;

    GElem Ps = G.mul(req.proof.Y, G.pow(params->g1, grant.dp));
    GElem prod = G.mul(G.mul(params->g0, Ps),
                       G.mul(G.pow(params->g2, grant.s_u),
                             G.pow(params->g3, grant.psi)));
    grant.omega = G.random_scalar(rng);
    grant.T = issue_credential_sig(G, prod, x_, grant.omega, rng);
    return grant;
}

// ----- User ------------------------------------------------------------------

User::User(std::shared_ptr<const Params> pp, Rng& rng)
    : params(std::move(pp)) {
    const Group& G = params->G();
    x_ = G.random_scalar(rng);
    Y_ = G.pow(params->xi, x_);
    r_ = G.random_scalar(rng);
}

UserRegRequest User::make_reg_request(const UserAttributes& attrs,
                                      const std::string& vp, Rng& rng) {
    attrs.validate_against(params->universe);
    attrs_ = attrs;
    vp_ = vp;
    UserRegRequest req;
    req.proof = zkp::prove_u1(*params, x_, r_, rng);
    req.attrs = attrs;
    req.vp = vp;
    return req;
}

void User::finish_registration(const UserRegResponse& resp) {
    const Group& G = params->G();
    Scalar r_u = G.s_add(r_, resp.rp);
    Scalar hvp = hash_str_to_scalar(G, vp_);
    GElem prod = G.mul(G.mul(params->g0, G.pow(params->g1, hvp)),
                       G.mul(Y_, G.pow(params->gs, r_u)));
    const PolicyUniverse& u = params->universe;
    for (size_t l = 0; l < u.ranges.size(); ++l) {
        Scalar a = G.s_from_mpz(attrs_.range_values.at(u.ranges[l].name));
        prod = G.mul(prod, G.pow(params->ghat[l], a));
    }
    for (size_t i = 0; i < u.sets.size(); ++i) {
        Scalar hi = hash_str_to_scalar(G, attrs_.set_items.at(u.sets[i].name));
        prod = G.mul(prod, G.pow(params->eta_i[i], hi));
    }
    if (!credential_ok(*params, resp.sigma, resp.c, prod))
        throw Error(Err::proof_failed, "issued holder credential invalid");
    cred_ = Credential{resp.c, r_u, resp.sigma};
}

PurchaseRequest User::request_purchase(const SellerOffer& offer, int64_t now,
                                       Rng& rng) {
    if (!cred_) throw Error(Err::state, "holder not registered");
    if (!params->seller_keys.count(offer.seller_id))
        throw Error(Err::invalid_arg, "unknown seller: " + offer.seller_id);
    check_vp(offer.proof.vp, now, Err::vp_window);
    check_vp_window(offer.vp_ticket, vp_);
    if (!zkp::verify_s2(*params, offer.proof))
        throw Error(Err::proof_failed, "seller credential proof rejected");

    zkp::ProveU2Result pr =
        zkp::prove_u2(*params, *cred_, x_, attrs_, offer.required, vp_, rng);
    pending_ = PendingPurchase{pr.d, pr.proof.Y, offer.seller_id,
                               offer.service, offer.price, offer.vp_ticket,
                               offer.required};
    return PurchaseRequest{std::move(pr.proof)};
}

Ticket User::finish_purchase(const TicketGrant& grant) {
    if (!pending_) throw Error(Err::state, "no purchase in progress");
    const Group& G = params->G();
    PendingPurchase p = *pending_;
    if (grant.service != p.service || grant.price != p.price ||
        grant.vp_ticket != p.vp_ticket)
        throw Error(Err::invalid_arg, "ticket terms differ from the offer");
    Scalar psi = sale_digest(G, p.sel, p.price, p.service, p.vp_ticket);
    if (!G.s_eq(psi, grant.psi))
        throw Error(Err::ticket_check, "sale digest mismatch");

    Ticket tk;
    tk.core.d_u = G.s_add(p.d, grant.dp);
    tk.core.s_u = grant.s_u;
    tk.core.psi = grant.psi;
    tk.core.omega = grant.omega;
    tk.core.T = grant.T;
    tk.Ps = G.mul(G.pow(params->xi, x_), G.pow(params->g1, tk.core.d_u));
    tk.seller_id = p.seller_id;
    tk.service = p.service;
    tk.price = p.price;
    tk.vp_ticket = p.vp_ticket;
    tk.sel = p.sel;

    // Blind-signature check: e(T, Y_S rho^omega) == e(g0 Ps g2^s g3^psi, rho).
    const GElem& Ys = params->seller_keys.at(p.seller_id);
    GElem prod = G.mul(G.mul(params->g0, tk.Ps),
                       G.mul(G.pow(params->g2, tk.core.s_u),
                             G.pow(params->g3, tk.core.psi)));
    GTElem lhs = G.pair(tk.core.T, G.mul(Ys, G.pow(params->rho, tk.core.omega)));
    if (!G.gt_eq(lhs, G.pair(prod, params->rho)))
        throw Error(Err::ticket_check, "issued ticket fails its check equation");
    pending_.reset();
    return tk;
}

TicketTranscript User::present(const Ticket& ticket,
                               const ValidateChallenge& ch, int64_t now,
                               Rng& rng) {
    check_vp(ticket.vp_ticket, now, Err::expired_ticket);
    std::string key = verifier_key(ch.verifier_id);
    if (!bypass_table_ && table_.count(key))
        throw Error(Err::repeat_verifier,
                    "ticket already shown at verifier " + ch.verifier_id);
    auto it = params->seller_keys.find(ticket.seller_id);
    if (it == params->seller_keys.end())
        throw Error(Err::invalid_arg, "unknown seller: " + ticket.seller_id);

    zkp::ProveU3Result pr = zkp::prove_u3(*params, ticket.core, x_, it->second,
                                          ch.verifier_id, ch.r, rng);
    if (!bypass_table_) table_[key] = ch.r;

    TicketTranscript t;
    t.proof = std::move(pr.proof);
    t.Ps = pr.Ps;
    t.psi = ticket.core.psi;
    t.seller_id = ticket.seller_id;
    t.service = ticket.service;
    t.price = ticket.price;
    t.vp_ticket = ticket.vp_ticket;
    t.sel = ticket.sel;
    return t;
}

// ----- Verifier ----------------------------------------------------------------

Verifier::Verifier(std::shared_ptr<const Params> pp, std::string id)
    : params(std::move(pp)), id_(std::move(id)) {}

ValidateChallenge Verifier::challenge(Rng& rng) {
    outstanding_ = params->G().random_scalar(rng);
    return ValidateChallenge{id_, *outstanding_};
}

void Verifier::accept(const TicketTranscript& t, int64_t now) {
    const Group& G = params->G();
    if (!outstanding_)
        throw Error(Err::state, "no outstanding challenge");
    check_vp(t.vp_ticket, now, Err::expired_ticket);
    for (const std::string& name : t.sel.names)
        if (!params->universe.range_index(name) &&
            !params->universe.set_index(name))
            throw Error(Err::unknown_policy, "unknown policy: " + name);
    Scalar psi = sale_digest(G, t.sel, t.price, t.service, t.vp_ticket);
    if (!G.s_eq(psi, t.psi))
        throw Error(Err::ticket_check, "sale digest mismatch");
    auto it = params->seller_keys.find(t.seller_id);
    if (it == params->seller_keys.end())
        throw Error(Err::invalid_arg, "unknown seller: " + t.seller_id);
    for (const TableEntry& e : table_)
        if (G.s_eq(e.r, *outstanding_) && G.g_eq(e.D, t.proof.D) &&
            G.g_eq(e.E, t.proof.E))
            throw Error(Err::duplicate_nonce, "transcript already logged");
    if (!zkp::verify_u3(*params, t.proof, t.Ps, t.psi, it->second, id_,
                        *outstanding_))
        throw Error(Err::proof_failed, "ticket proof rejected");

    table_.push_back(TableEntry{id_, *outstanding_, t.proof.D, t.proof.E,
                                t.proof.F, t.proof.J, t.psi});
    outstanding_.reset();
}

}  // namespace eticket
