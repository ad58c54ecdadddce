#pragma once

#include <map>
#include <memory>

#include "groups/group.hpp"
#include "policy/policy.hpp"

namespace eticket {

class Rng;

// Public system parameters.  Generator naming follows the issuing algebra:
//  - g, g0..g3, gs (the credential blinding base), xi (holder key base),
//    rho (provider key base), vt (the commitment base used to blind
//    signatures inside proofs), h (range tag base), eta (set tag base),
//    ghat[l] (one per range policy), eta_i[i] (one per set policy).
//  - g_tilde = g^x and h_tilde = h^y publish the authority keys.
//  - h_digit[d] = h^{1/(y+d)} tags each digit value 0..base-1.
//  - h_power[i] = h^{base^i} recomposes digit commitments.
//  - eta_tilde[i] = eta_i^{mu_i} and item_tags[i][j] = eta^{1/(mu_i+H(item))}
//    tag set membership.
// seller_keys is the published directory of registered ticket sellers.
struct Params {
    std::shared_ptr<const Group> group;
    PolicyUniverse universe;
    unsigned k = 1;  // digits per range decomposition

    GElem g, g0, g1, g2, g3, gs, h, eta, xi, rho, vt;
    std::vector<GElem> ghat;
    std::vector<GElem> eta_i;
    GElem g_tilde, h_tilde;
    std::vector<GElem> h_digit;
    std::vector<GElem> h_power;
    std::vector<GElem> eta_tilde;
    std::vector<std::vector<GElem>> item_tags;

    std::map<std::string, GElem> seller_keys;

    // Pairings of fixed parameter bases, precomputed once: proofs over these
    // parameters use them in every transcript, and recomputing them would
    // dominate the constant cost of proving and verifying.
    struct PairCache {
        GTElem g0_g, g1_g, xi_g, gs_g, vt_g, vt_gt, rho_g, h_h;
        GTElem g0_rho, g2_rho, g3_rho, vt_rho;
        std::vector<GTElem> ghat_g;     // e(ghat[l], g) per range policy
        std::vector<GTElem> eta_i_g;    // e(eta_i[i], g) per set policy
        std::vector<GTElem> eta_eta_i;  // e(eta, eta_i[i]) per set policy
    };
    PairCache pc;
    void build_pair_cache();

    const Group& G() const { return *group; }
    mpz_class digit_window() const { return pow_u(universe.base, k); }

    // Every published tag satisfies its defining pairing identity:
    //   e(h_digit[d], h_tilde * h^d) == e(h, h)
    //   e(item_tags[i][j], eta_tilde[i] * eta_i^{H(item)}) == e(eta, eta_i)
    void check_tags() const;  // throws on mismatch
};

// Authority signing state: x signs credentials, y signs digit tags, mu[i]
// signs the items of set policy i.
struct MasterSecret {
    Scalar x, y;
    std::vector<Scalar> mu;
};

struct SetupResult {
    std::shared_ptr<Params> params;
    MasterSecret msk;
};

// Draws generators and secrets, publishes tags.  Enforces
// order > 2 * base^k + 1 (digit window must fit the exponent space) and
// resamples secrets on pole collisions.
SetupResult setup(std::shared_ptr<const Group> group, PolicyUniverse universe,
                  Rng& rng);

}  // namespace eticket
