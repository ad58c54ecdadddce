#pragma once

#include "groups/group.hpp"
#include "policy/policy.hpp"

namespace eticket {

// Membership credential issued by the authority: blind signature component
// sigma with tag c and accumulated blinding r.
struct Credential {
    Scalar c, r;
    GElem sigma;
};

// Cryptographic core of a ticket: blind signature T by the seller over the
// holder pseudonym, serial s_u, pseudonym blinding d_u and sale digest psi,
// under signing tag omega.
struct TicketCore {
    Scalar d_u, s_u, psi, omega;
    GElem T;
};

// Seller key-possession proof (registration).
struct ProofS1 {
    GElem M;   // transcript randomizer
    GElem Y;   // seller public key rho^{x_s}
    Scalar c, s;
};

// Holder key + blinding possession proof (registration).
struct ProofU1 {
    GElem M;
    GElem Y;   // holder public key xi^{x_u}
    GElem R;   // blinding commitment gs^{r}
    Scalar c1, c2, s1, s2;
};

// Seller credential proof (issuing, seller -> holder).
struct ProofS2 {
    GElem M;
    GElem Q;      // blinded credential sigma * vt^z
    GElem Z;      // g^z vt^v
    GElem Gamma;  // g^{z c_s} vt^{v c_s}
    GTElem Omega; // credential pairing ratio
    Scalar c1, s1, s2;       // Z opening
    Scalar c2, sh1, sh2;     // Gamma opening
    Scalar c3, r1, r2, r3, r4, r5;  // Omega relation
    std::string vp;          // seller credential validity period
};

// One digit of a range argument: A tags the digit value under blinding t,
// V carries the tag relation e(A, h_tilde) into the target group, and the
// *_bar / *_hat responses answer the per-range and per-digit challenges.
struct DigitBlockU2 {
    GElem A, Ap;             // tags for the low-shift / high-shift digit
    GTElem V, Vt, Vp, Vpt;   // relation values and their commitments
    Scalar ch;               // per-digit challenge
    Scalar t_bar, tp_bar;    // blinding responses
    Scalar w_hat, wp_hat;    // digit responses (per-digit challenge)
    Scalar w_bar, wp_bar;    // digit responses (per-range challenge)
};

// Range argument for one selected range policy: Z commits to the attribute,
// the digit blocks prove each digit is in [0, base) and the recomposition
// responses tie the digits to both shifted commitments.
struct RangeBlockU2 {
    size_t range_index = 0;  // position in the policy universe
    GElem Z;
    Scalar ch;               // per-range challenge
    Scalar gamma_bar;        // Z opening response (master challenge)
    Scalar gamma_check;      // Z opening response (per-range challenge)
    Scalar a_check;          // low-shift value response
    Scalar ap_check;         // high-shift value response
    std::vector<DigitBlockU2> digits;
};

// Membership argument for one selected set policy: B blinds the holder's
// item tag, W carries its pairing relation, e_hat/e_hat2 answer the master
// challenge for the blinding and the (shifted) item hash.
struct SetBlockU2 {
    size_t set_index = 0;
    GElem B;
    GTElem W;
    Scalar e_hat, e_hat2;
};

// Holder credential + policy satisfaction proof (issuing, holder -> seller).
struct ProofU2 {
    GElem M;
    GElem C;    // blinded credential sigma * vt^alpha
    GElem D;    // g^alpha vt^beta
    GElem Phi;  // D^{c_u}
    GElem Y;    // pseudonym part xi^{x_u} g1^d
    GTElem R;   // credential pairing ratio
    Scalar c;   // master challenge
    Scalar x_bar, d_bar, r_bar, cu_bar;
    Scalar alpha_bar, beta_bar, alphap_bar, betap_bar;
    std::vector<Scalar> a_bar;    // one per universe range policy
    std::vector<Scalar> e_check;  // one per universe set policy
    std::vector<RangeBlockU2> ranges;  // selected ranges, universe order
    std::vector<SetBlockU2> sets;      // selected sets, universe order
    std::string vp;          // holder credential validity period
    PolicySelection sel;     // policies being proven
};

// Ticket presentation proof (validation, holder -> verifier).
struct ProofU3 {
    GElem M;
    GElem D;   // serial commitment g^{s_u}
    GElem E;   // double-spend tag xi^{x_u} H'(ID_V)^{r s_u}
    GElem F;   // blinded ticket T * vt^{pi}
    GElem J;   // g^{pi} vt^{lambda}
    GElem W;   // J^{omega}
    GTElem R;  // ticket pairing ratio
    Scalar c;
    Scalar s_bar, x_bar, s_hat;
    Scalar pi_bar, la_bar, om_bar, pip_bar, d_bar;
};

}  // namespace eticket
