#pragma once

#include <optional>
#include <set>

#include "scheme/params.hpp"
#include "zkp/zkp.hpp"

namespace eticket {

// ----- protocol messages ---------------------------------------------------

struct SellerRegRequest {
    ProofS1 proof;          // carries the seller public key Y
    std::string seller_id;
    std::string vp;         // requested credential expiry (ISO-8601)
};

struct SellerRegResponse {
    Credential cred;
};

struct UserRegRequest {
    ProofU1 proof;          // carries Y = xi^{x_u} and R = gs^{r}
    UserAttributes attrs;   // certified by the authority, whole universe
    std::string vp;
};

struct UserRegResponse {
    GElem sigma;
    Scalar c;
    Scalar rp;              // authority's blinding share r'
};

// Seller -> holder: credential proof plus the terms of sale.
struct SellerOffer {
    ProofS2 proof;
    std::string seller_id;
    std::string service;
    std::string price;
    std::string vp_ticket;   // expiry of tickets sold under this offer
    PolicySelection required;  // policies the buyer must prove
};

// Holder -> seller: credential + policy satisfaction proof (pseudonym part
// Y and the proven selection travel inside the proof).
struct PurchaseRequest {
    ProofU2 proof;
};

// Seller -> holder: the blind signature making up the ticket.
struct TicketGrant {
    GElem T;
    Scalar dp;      // seller's pseudonym blinding share d'
    Scalar s_u;     // ticket serial
    Scalar omega;   // signing tag
    Scalar psi;     // sale digest H(policies || price || service || vp_ticket)
    std::string service, price, vp_ticket;
};

// What the holder stores per purchased ticket.
struct Ticket {
    TicketCore core;
    GElem Ps;       // pseudonym xi^{x_u} g1^{d_u}
    std::string seller_id;
    std::string service, price, vp_ticket;
    PolicySelection sel;
};

struct ValidateChallenge {
    std::string verifier_id;
    Scalar r;
};

// Holder -> verifier: everything the verifier needs to check a ticket.
struct TicketTranscript {
    ProofU3 proof;
    GElem Ps;
    Scalar psi;
    std::string seller_id;
    std::string service, price, vp_ticket;
    PolicySelection sel;
};

// One row of a verifier's acceptance log; the double-spend scan runs over
// collections of these.
struct TableEntry {
    std::string verifier_id;
    Scalar r;
    GElem D, E, F, J;
    Scalar psi;
};

// ----- validity periods ----------------------------------------------------

// A validity period is an ISO-8601 expiry instant; checks pass while
// now <= expiry.  Throws Err::vp_window (credentials) /
// Err::expired_ticket (tickets) when exceeded, Err::parse when malformed.
void check_vp(const std::string& vp, int64_t now, Err code);

// ----- actors ---------------------------------------------------------------

class CentralAuthority {
  public:
    // Runs system setup: derives parameters and the master secret.
    CentralAuthority(std::shared_ptr<const Group> group, PolicyUniverse u,
                     Rng& rng);
    // Restores a previously saved authority (wire support).
    CentralAuthority(std::shared_ptr<Params> params, MasterSecret msk);

    const std::shared_ptr<Params>& params() { return params_; }
    std::shared_ptr<const Params> public_params() const { return params_; }
    const MasterSecret& master_secret() const { return msk_; }

    // Verifies the registrant's proof and issues a credential.  Registering
    // a seller also publishes its public key in the parameters.
    SellerRegResponse register_seller(const SellerRegRequest& req, Rng& rng);
    UserRegResponse register_user(const UserRegRequest& req, Rng& rng);

  private:
    std::shared_ptr<Params> params_;
    MasterSecret msk_;
};

class Seller {
  public:
    Seller(std::shared_ptr<const Params> params, std::string id, Rng& rng);
    // Uninitialized shell; the wire decoder fills the state fields.
    explicit Seller(std::shared_ptr<const Params> pp) : params(std::move(pp)) {}

    const std::string& id() const { return id_; }
    const GElem& public_key() const { return Y_; }

    SellerRegRequest make_reg_request(const std::string& vp, Rng& rng);
    // Checks the issued credential against the registration relation.
    void finish_registration(const SellerRegResponse& resp);

    void configure_sale(std::string service, std::string price,
                        std::string vp_ticket, PolicySelection required);
    SellerOffer make_offer(Rng& rng) const;
    // Checks the buyer's proof and terms, then signs a ticket.
    TicketGrant issue(const PurchaseRequest& req, int64_t now, Rng& rng);

    // State (wire support).
    std::shared_ptr<const Params> params;
    std::string id_;
    Scalar x_;              // secret key
    GElem Y_;               // rho^{x}
    std::string vp_;
    std::optional<Credential> cred_;
    std::string service_, price_, vp_ticket_;
    PolicySelection required_;
    bool sale_configured_ = false;
};

class User {
  public:
    User(std::shared_ptr<const Params> params, Rng& rng);
    // Uninitialized shell; the wire decoder fills the state fields.
    explicit User(std::shared_ptr<const Params> pp) : params(std::move(pp)) {}

    const GElem& public_key() const { return Y_; }

    UserRegRequest make_reg_request(const UserAttributes& attrs,
                                    const std::string& vp, Rng& rng);
    void finish_registration(const UserRegResponse& resp);

    // Issuing round: verify the seller's offer, prove policy satisfaction.
    PurchaseRequest request_purchase(const SellerOffer& offer, int64_t now,
                                     Rng& rng);
    Ticket finish_purchase(const TicketGrant& grant);

    // Validation round.  Aborts with Err::repeat_verifier before producing
    // anything if this verifier has been visited before (unless the
    // double-spend bypass below is enabled).
    TicketTranscript present(const Ticket& ticket,
                             const ValidateChallenge& ch, int64_t now,
                             Rng& rng);

    // Test/demo hook simulating a cloned device that ignores (and does not
    // update) the visited-verifier table.
    void set_table_bypass(bool on) { bypass_table_ = on; }

    // State (wire support).
    std::shared_ptr<const Params> params;
    Scalar x_;              // secret key
    GElem Y_;               // xi^{x}
    Scalar r_;              // credential blinding share chosen at registration
    std::string vp_;
    UserAttributes attrs_;
    std::optional<Credential> cred_;
    std::map<std::string, Scalar> table_;  // H(verifier id) hex -> nonce used
    bool bypass_table_ = false;

    struct PendingPurchase {
        Scalar d;
        GElem Y;  // pseudonym part sent in the proof
        std::string seller_id, service, price, vp_ticket;
        PolicySelection sel;
    };
    std::optional<PendingPurchase> pending_;
};

class Verifier {
  public:
    Verifier(std::shared_ptr<const Params> params, std::string id);

    const std::string& id() const { return id_; }

    // Draws a fresh single-use nonce for one validation session.
    ValidateChallenge challenge(Rng& rng);
    // Verifies a transcript against the outstanding challenge, then logs it.
    // Throws (Err::state / expired_ticket / ticket_check / duplicate_nonce /
    // proof_failed / unknown_policy) on rejection.
    void accept(const TicketTranscript& t, int64_t now);

    const std::vector<TableEntry>& table() const { return table_; }

    // State (wire support).
    std::shared_ptr<const Params> params;
    std::string id_;
    std::optional<Scalar> outstanding_;
    std::vector<TableEntry> table_;
};

}  // namespace eticket
