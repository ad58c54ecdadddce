#include "sigs/sigs.hpp"

#include "rng.hpp"

namespace eticket::sigs {

BBKeyPair bb_keygen(const Group& g, const GElem& g2, Rng& rng) {
    Scalar sk = g.random_scalar(rng);
    return {sk, g.pow(g2, sk)};
}

GElem bb_sign(const Group& g, const GElem& g1, const Scalar& sk,
              const Scalar& m) {
    Scalar denom = g.s_add(sk, m);
    if (g.s_is_zero(denom))
        throw Error(Err::pole_collision, "signing key plus message is zero");
    return g.pow(g1, g.s_inv(denom));
}

bool bb_verify(const Group& g, const GElem& g1, const GElem& g2,
               const GElem& pk, const Scalar& m, const GElem& sigma) {
    GTElem lhs = g.pair(sigma, g.mul(pk, g.pow(g2, m)));
    GTElem rhs = g.pair(g1, g2);
    return g.gt_eq(lhs, rhs);
}

BBSPlusKeyPair bbsplus_keygen(const Group& g, const GElem& h, Rng& rng) {
    Scalar sk = g.random_scalar(rng);
    return {sk, g.pow(h, sk)};
}

static GElem message_commitment(const Group& g, const GElem& g0,
                                const GElem& g1,
                                const std::vector<GElem>& bases,
                                const Scalar& s,
                                const std::vector<Scalar>& msgs) {
    GElem acc = g.mul(g0, g.pow(g1, s));
    for (size_t i = 0; i < msgs.size(); ++i)
        acc = g.mul(acc, g.pow(bases[i], msgs[i]));
    return acc;
}

BBSPlusSig bbsplus_sign(const Group& g, const GElem& g0, const GElem& g1,
                        const std::vector<GElem>& bases, const Scalar& sk,
                        const std::vector<Scalar>& msgs, Rng& rng) {
    if (bases.size() < msgs.size())
        throw Error(Err::invalid_arg, "not enough message bases");
    Scalar s = g.random_scalar(rng);
    for (int attempt = 0; attempt < 16; ++attempt) {
        Scalar w = g.random_scalar(rng);
        Scalar denom = g.s_add(sk, w);
        if (g.s_is_zero(denom)) continue;
        GElem base = message_commitment(g, g0, g1, bases, s, msgs);
        return {g.pow(base, g.s_inv(denom)), s, w};
    }
    throw Error(Err::pole_collision, "tag resampling exhausted");
}

bool bbsplus_verify(const Group& g, const GElem& g0, const GElem& g1,
                    const std::vector<GElem>& bases, const GElem& h,
                    const GElem& pk, const std::vector<Scalar>& msgs,
                    const BBSPlusSig& sig) {
    if (bases.size() < msgs.size()) return false;
    GTElem lhs = g.pair(sig.sigma, g.mul(pk, g.pow(h, sig.w)));
    GTElem rhs =
        g.pair(message_commitment(g, g0, g1, bases, sig.s, msgs), h);
    return g.gt_eq(lhs, rhs);
}

}  // namespace eticket::sigs
