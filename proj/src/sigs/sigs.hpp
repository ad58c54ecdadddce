#pragma once

#include "groups/group.hpp"

namespace eticket {
class Rng;
}

namespace eticket::sigs {

// Short signature on a scalar message under pairing verification; also the
// shape of the per-value membership tags published in the system parameters.
//   sign:   sigma = g1^{1/(x+m)}
//   verify: e(sigma, Y * g2^m) == e(g1, g2),  Y = g2^x
struct BBKeyPair {
    Scalar sk;
    GElem pk;
};

BBKeyPair bb_keygen(const Group& g, const GElem& g2, Rng& rng);

// Throws Err::pole_collision when x + m = 0 (caller resamples or rejects).
GElem bb_sign(const Group& g, const GElem& g1, const Scalar& sk,
              const Scalar& m);

bool bb_verify(const Group& g, const GElem& g1, const GElem& g2,
               const GElem& pk, const Scalar& m, const GElem& sigma);

// Block signature over a message vector with a fresh blinding s and tag w:
//   sign:   sigma = (g0 * g1^s * prod_i bases[i]^{m_i})^{1/(x+w)}
//   verify: e(sigma, Y * h^w) == e(g0 * g1^s * prod_i bases[i]^{m_i}, h)
struct BBSPlusSig {
    GElem sigma;
    Scalar s, w;
};

struct BBSPlusKeyPair {
    Scalar sk;
    GElem pk;
};

BBSPlusKeyPair bbsplus_keygen(const Group& g, const GElem& h, Rng& rng);

// Resamples w up to 16 times if x + w hits zero, then throws.
BBSPlusSig bbsplus_sign(const Group& g, const GElem& g0, const GElem& g1,
                        const std::vector<GElem>& bases, const Scalar& sk,
                        const std::vector<Scalar>& msgs, Rng& rng);

bool bbsplus_verify(const Group& g, const GElem& g0, const GElem& g1,
                    const std::vector<GElem>& bases, const GElem& h,
                    const GElem& pk, const std::vector<Scalar>& msgs,
                    const BBSPlusSig& sig);

}  // namespace eticket::sigs
