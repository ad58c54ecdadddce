#include "scheme/params.hpp"

#include "groups/transcript.hpp"
#include "rng.hpp"
#include "sigs/sigs.hpp"

namespace eticket {

void Params::build_pair_cache() {
    const Group& g = G();
    pc.g0_g = g.pair(g0, this->g);
    pc.g1_g = g.pair(g1, this->g);
    pc.xi_g = g.pair(xi, this->g);
    pc.gs_g = g.pair(gs, this->g);
    pc.vt_g = g.pair(vt, this->g);
    pc.vt_gt = g.pair(vt, g_tilde);
    pc.rho_g = g.pair(rho, this->g);
    pc.h_h = g.pair(h, h);
    pc.g0_rho = g.pair(g0, rho);
    pc.g2_rho = g.pair(g2, rho);
    pc.g3_rho = g.pair(g3, rho);
    pc.vt_rho = g.pair(vt, rho);
    pc.ghat_g.clear();
    for (const GElem& e : ghat) pc.ghat_g.push_back(g.pair(e, this->g));
    pc.eta_i_g.clear();
    pc.eta_eta_i.clear();
    for (const GElem& e : eta_i) {
        pc.eta_i_g.push_back(g.pair(e, this->g));
        pc.eta_eta_i.push_back(g.pair(eta, e));
    }
}

void Params::check_tags() const {
    const Group& g = G();
    for (unsigned d = 0; d < universe.base; ++d) {
        if (!sigs::bb_verify(g, h, h, h_tilde, g.s_from_u64(d), h_digit[d]))
            throw Error(Err::invalid_arg, "digit tag fails verification");
    }
    for (size_t i = 0; i < universe.sets.size(); ++i) {
        for (size_t j = 0; j < universe.sets[i].items.size(); ++j) {
            Scalar m = hash_str_to_scalar(g, universe.sets[i].items[j]);
            if (!sigs::bb_verify(g, eta, eta_i[i], eta_tilde[i], m,
                                 item_tags[i][j]))
                throw Error(Err::invalid_arg, "item tag fails verification");
        }
    }
}

SetupResult setup(std::shared_ptr<const Group> group, PolicyUniverse universe,
                  Rng& rng) {
    universe.validate();
    const Group& g = *group;

    auto params = std::make_shared<Params>();
    params->group = group;
    params->universe = universe;
    params->k = choose_digit_count(universe);

    // The double-shift range argument needs the shifted values and the
    // digit window to coexist injectively inside the exponent space.
    mpz_class window = pow_u(universe.base, params->k);
    if (g.order() <= 2 * window + 1)
        throw Error(Err::range_too_wide,
                    "group order too small for the digit window");

    params->g = g.random_element(rng);
    params->g0 = g.random_element(rng);
    params->g1 = g.random_element(rng);
    params->g2 = g.random_element(rng);
    params->g3 = g.random_element(rng);
    params->gs = g.random_element(rng);
    params->h = g.random_element(rng);
    params->eta = g.random_element(rng);
    params->xi = g.random_element(rng);
    params->rho = g.random_element(rng);
    params->vt = g.random_element(rng);
    for (size_t l = 0; l < universe.ranges.size(); ++l)
        params->ghat.push_back(g.random_element(rng));
    for (size_t i = 0; i < universe.sets.size(); ++i)
        params->eta_i.push_back(g.random_element(rng));

    MasterSecret msk;
    msk.x = g.random_scalar(rng);
    params->g_tilde = g.pow(params->g, msk.x);

    // Digit-tag key: y must avoid poles at every digit value 0..base-1.
    for (int attempt = 0;; ++attempt) {
        if (attempt >= 64)
            throw Error(Err::pole_collision, "digit tag key resampling exhausted");
        msk.y = g.random_scalar(rng);
        bool ok = true;
        for (unsigned d = 0; d < universe.base && ok; ++d)
            if (g.s_is_zero(g.s_add(msk.y, g.s_from_u64(d)))) ok = false;
        if (ok) break;
    }
    params->h_tilde = g.pow(params->h, msk.y);
    for (unsigned d = 0; d < universe.base; ++d)
        params->h_digit.push_back(
            sigs::bb_sign(g, params->h, msk.y, g.s_from_u64(d)));
    for (unsigned i = 0; i < params->k; ++i)
        params->h_power.push_back(
            g.pow(params->h, g.s_from_mpz(pow_u(universe.base, i))));

    // Per-set item-tag keys: mu_i must avoid poles at every item hash.
    for (size_t i = 0; i < universe.sets.size(); ++i) {
        const SetPolicy& sp = universe.sets[i];
        Scalar mu;
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 64)
                throw Error(Err::pole_collision,
                            "item tag key resampling exhausted");
            mu = g.random_scalar(rng);
            bool ok = true;
            for (const auto& item : sp.items)
                if (g.s_is_zero(g.s_add(mu, hash_str_to_scalar(g, item)))) {
                    ok = false;
                    break;
                }
            if (ok) break;
        }
        msk.mu.push_back(mu);
        params->eta_tilde.push_back(g.pow(params->eta_i[i], mu));
        std::vector<GElem> tags;
        for (const auto& item : sp.items)
            tags.push_back(sigs::bb_sign(g, params->eta, mu,
                                         hash_str_to_scalar(g, item)));
        params->item_tags.push_back(std::move(tags));
    }

    params->check_tags();
    params->build_pair_cache();
    return {params, msk};
}

}  // namespace eticket
