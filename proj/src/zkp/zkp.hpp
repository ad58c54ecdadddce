#pragma once

#include "scheme/params.hpp"
#include "zkp/proofs.hpp"

// Schnorr-style non-interactive proofs used by the protocol.  All challenges
// are Fiat-Shamir hashes over canonical encodings; all responses are of the
// form nonce - challenge * witness (mod group order).  Every prove_* draws
// its randomness from the supplied Rng only, so proofs are deterministic
// under a fixed seed.  Every verify_* returns false (never throws) on any
// mismatch, including structural ones.

namespace eticket::zkp {

// Seller key possession: Y = rho^{x_s}.
ProofS1 prove_s1(const Params& pp, const Scalar& x_s, Rng& rng);
bool verify_s1(const Params& pp, const ProofS1& pf);

// Holder key and blinding possession: Y = xi^{x_u}, R = gs^{r}.
ProofU1 prove_u1(const Params& pp, const Scalar& x_u, const Scalar& r, Rng& rng);
bool verify_u1(const Params& pp, const ProofU1& pf);

// Seller credential possession, with the seller public key hidden inside
// the credential relation.
ProofS2 prove_s2(const Params& pp, const Credential& cred, const Scalar& x_s,
                 const std::string& vp, Rng& rng);
bool verify_s2(const Params& pp, const ProofS2& pf);

// Holder credential possession plus satisfaction of the selected policies.
// Returns the proof together with the fresh pseudonym blinding d that the
// holder must keep for the issuing round.
struct ProveU2Result {
    ProofU2 proof;
    Scalar d;
};
ProveU2Result prove_u2(const Params& pp, const Credential& cred,
                       const Scalar& x_u, const UserAttributes& attrs,
                       const PolicySelection& sel, const std::string& vp,
                       Rng& rng);
bool verify_u2(const Params& pp, const ProofU2& pf);

// Ticket possession and well-formedness of the double-spend tag under the
// verifier nonce r.  Returns the proof plus the pseudonym Ps it opens.
struct ProveU3Result {
    ProofU3 proof;
    GElem Ps;
};
ProveU3Result prove_u3(const Params& pp, const TicketCore& tk,
                       const Scalar& x_u, const GElem& seller_pk,
                       const std::string& verifier_id, const Scalar& r,
                       Rng& rng);
bool verify_u3(const Params& pp, const ProofU3& pf, const GElem& Ps,
               const Scalar& psi, const GElem& seller_pk,
               const std::string& verifier_id, const Scalar& r);

}  // namespace eticket::zkp
