#include "zkp/zkp.hpp"

#include "groups/transcript.hpp"

namespace eticket::zkp {

namespace {

// response = nonce - challenge * witness  (mod order)
Scalar resp(const Group& G, const Scalar& nonce, const Scalar& ch, const Scalar& wit) {
    return G.s_sub(nonce, G.s_mul(ch, wit));
}

}  // namespace

// --------------------------------------------------------------------------
// Seller key possession
// --------------------------------------------------------------------------

ProofS1 prove_s1(const Params& pp, const Scalar& x_s, Rng& rng) {
    const Group& G = pp.G();
    ProofS1 pf;
    pf.M = G.random_element(rng);
    pf.Y = G.pow(pp.rho, x_s);
    Scalar t = G.random_scalar(rng);
    GElem T = G.pow(pp.rho, t);
    Transcript tr(G);
    tr.put_g(pf.M).put_g(pf.Y).put_g(T);
    pf.c = tr.challenge();
    pf.s = resp(G, t, pf.c, x_s);
    return pf;
}

bool verify_s1(const Params& pp, const ProofS1& pf) {
    const Group& G = pp.G();
    // T' = rho^s Y^c ; accept iff c = H(M || Y || T')
    GElem T = G.mul(G.pow(pp.rho, pf.s), G.pow(pf.Y, pf.c));
    Transcript tr(G);
    tr.put_g(pf.M).put_g(pf.Y).put_g(T);
    return G.s_eq(pf.c, tr.challenge());
}

// --------------------------------------------------------------------------
// Holder key + blinding possession
// --------------------------------------------------------------------------

ProofU1 prove_u1(const Params& pp, const Scalar& x_u, const Scalar& r, Rng& rng) {
    const Group& G = pp.G();
    ProofU1 pf;
    pf.M = G.random_element(rng);
    pf.Y = G.pow(pp.xi, x_u);
    pf.R = G.pow(pp.gs, r);
    Scalar xt = G.random_scalar(rng);
    Scalar rt = G.random_scalar(rng);
    GElem Yt = G.pow(pp.xi, xt);
    GElem Rt = G.pow(pp.gs, rt);
    {
        Transcript tr(G);
        tr.put_g(pf.M).put_g(pf.Y).put_g(Yt);
        pf.c1 = tr.challenge();
    }
    {
        Transcript tr(G);
        tr.put_g(pf.M).put_g(pf.R).put_g(Rt);
        pf.c2 = tr.challenge();
    }
    pf.s1 = resp(G, xt, pf.c1, x_u);
    pf.s2 = resp(G, rt, pf.c2, r);
    return pf;
}

bool verify_u1(const Params& pp, const ProofU1& pf) {
    const Group& G = pp.G();
    GElem Yt = G.mul(G.pow(pp.xi, pf.s1), G.pow(pf.Y, pf.c1));
    GElem Rt = G.mul(G.pow(pp.gs, pf.s2), G.pow(pf.R, pf.c2));
    {
        Transcript tr(G);
        tr.put_g(pf.M).put_g(pf.Y).put_g(Yt);
        if (!G.s_eq(pf.c1, tr.challenge())) return false;
    }
    {
        Transcript tr(G);
        tr.put_g(pf.M).put_g(pf.R).put_g(Rt);
        if (!G.s_eq(pf.c2, tr.challenge())) return false;
    }
    return true;
}

// --------------------------------------------------------------------------
// Seller credential possession
// --------------------------------------------------------------------------
//
// Credential relation: e(sigma, g~ g^{c_s}) = e(g0,g) e(g1,g)^{H(vp)}
//                      e(rho,g)^{x_s} e(gs,g)^{r_s}.
// With Q = sigma vt^z the proven relation becomes
//   Omega := e(Q,g~) / (e(g0,g) e(g1,g)^{H(vp)})
//          = e(rho,g)^{x_s} e(gs,g)^{r_s} e(Q,g)^{-c_s} e(vt,g)^{z c_s} e(vt,g~)^{z}
// and Z, Gamma prove consistency of z and z' = z c_s.

ProofS2 prove_s2(const Params& pp, const Credential& cred, const Scalar& x_s,
                 const std::string& vp, Rng& rng) {
    const Group& G = pp.G();
    ProofS2 pf;
    pf.vp = vp;
    pf.M = G.random_element(rng);

    Scalar z = G.random_scalar(rng);
    Scalar v = G.random_scalar(rng);
    Scalar zp = G.s_mul(z, cred.c);  // z' = z c_s
    Scalar vp_ = G.s_mul(v, cred.c); // v' = v c_s

    Scalar zt = G.random_scalar(rng);
    Scalar vt_ = G.random_scalar(rng);
    Scalar zh = G.random_scalar(rng);
    Scalar vh = G.random_scalar(rng);
    Scalar xt = G.random_scalar(rng);
    Scalar rt = G.random_scalar(rng);
    Scalar ct = G.random_scalar(rng);

    pf.Q = G.mul(cred.sigma, G.pow(pp.vt, z));
    pf.Z = G.mul(G.pow(pp.g, z), G.pow(pp.vt, v));
    pf.Gamma = G.mul(G.pow(pp.g, zp), G.pow(pp.vt, vp_));
    GElem Zt = G.mul(G.pow(pp.g, zt), G.pow(pp.vt, vt_));
    GElem Gt = G.mul(G.pow(pp.g, zh), G.pow(pp.vt, vh));

    Scalar hvp = hash_str_to_scalar(G, vp);
    pf.Omega = G.gt_div(G.pair(pf.Q, pp.g_tilde),
                        G.gt_mul(pp.pc.g0_g,
                                 G.gt_pow(pp.pc.g1_g, hvp)));
    GTElem Ot = G.gt_mul(
        G.gt_mul(G.gt_mul(G.gt_pow(pp.pc.rho_g, xt),
                          G.gt_pow(pp.pc.gs_g, rt)),
                 G.gt_pow(G.pair(pf.Q, pp.g), G.s_neg(ct))),
        G.gt_mul(G.gt_pow(pp.pc.vt_g, zh),
                 G.gt_pow(pp.pc.vt_gt, zt)));

    {
        Transcript tr(G);
        tr.put_g(pf.M).put_g(pf.Z).put_g(Zt);
        pf.c1 = tr.challenge();
    }
    pf.s1 = resp(G, zt, pf.c1, z);
    pf.s2 = resp(G, vt_, pf.c1, v);
    {
        Transcript tr(G);
        tr.put_g(pf.M).put_g(pf.Gamma).put_g(Gt);
        pf.c2 = tr.challenge();
    }
    pf.sh1 = resp(G, zh, pf.c2, zp);
    pf.sh2 = resp(G, vh, pf.c2, vp_);
    {
        Transcript tr(G);
        tr.put_g(pf.M).put_gt(pf.Omega).put_gt(Ot);
        pf.c3 = tr.challenge();
    }
    pf.r1 = resp(G, xt, pf.c3, x_s);
    pf.r2 = resp(G, rt, pf.c3, cred.r);
    pf.r3 = resp(G, ct, pf.c3, cred.c);
    pf.r4 = resp(G, zh, pf.c3, zp);
    pf.r5 = resp(G, zt, pf.c3, z);
    return pf;
}

bool verify_s2(const Params& pp, const ProofS2& pf) {
    const Group& G = pp.G();
    Scalar hvp = hash_str_to_scalar(G, pf.vp);
    GTElem omega = G.gt_div(G.pair(pf.Q, pp.g_tilde),
                            G.gt_mul(pp.pc.g0_g,
                                     G.gt_pow(pp.pc.g1_g, hvp)));
    if (!G.gt_eq(omega, pf.Omega)) return false;

    GElem Zt = G.mul(G.mul(G.pow(pp.g, pf.s1), G.pow(pp.vt, pf.s2)),
                     G.pow(pf.Z, pf.c1));
    {
        Transcript tr(G);
        tr.put_g(pf.M).put_g(pf.Z).put_g(Zt);
        if (!G.s_eq(pf.c1, tr.challenge())) return false;
    }
    GElem Gt = G.mul(G.mul(G.pow(pp.g, pf.sh1), G.pow(pp.vt, pf.sh2)),
                     G.pow(pf.Gamma, pf.c2));
    {
        Transcript tr(G);
        tr.put_g(pf.M).put_g(pf.Gamma).put_g(Gt);
        if (!G.s_eq(pf.c2, tr.challenge())) return false;
    }
    GTElem Ot = G.gt_mul(
        G.gt_mul(G.gt_mul(G.gt_pow(pp.pc.rho_g, pf.r1),
                          G.gt_pow(pp.pc.gs_g, pf.r2)),
                 G.gt_pow(G.pair(pf.Q, pp.g), G.s_neg(pf.r3))),
        G.gt_mul(G.gt_mul(G.gt_pow(pp.pc.vt_g, pf.r4),
                          G.gt_pow(pp.pc.vt_gt, pf.r5)),
                 G.gt_pow(pf.Omega, pf.c3)));
    {
        Transcript tr(G);
        tr.put_g(pf.M).put_gt(pf.Omega).put_gt(Ot);
        if (!G.s_eq(pf.c3, tr.challenge())) return false;
    }
    return true;
}

// --------------------------------------------------------------------------
// Ticket presentation
// --------------------------------------------------------------------------
//
// Ticket relation: e(T, Y_S rho^{omega}) = e(g0,rho) e(Ps,rho) e(g2,rho)^{s_u}
//                  e(g3,rho)^{psi}  with  Ps = xi^{x_u} g1^{d_u}.
// With F = T vt^{pi} the proven relation becomes
//   R := e(F,Y_S) / (e(g0,rho) e(Ps,rho) e(g3,rho)^{psi})
//      = e(g2,rho)^{s_u} e(F,rho)^{-omega} e(vt,rho)^{pi omega} e(vt,Y_S)^{pi}
// The double-spend tag E = xi^{x_u} H'(ID_V)^{r s_u} shares x_u with Ps and
// its exponent response s_hat must equal r * s_bar, binding the verifier
// nonce r into the tag.

ProveU3Result prove_u3(const Params& pp, const TicketCore& tk,
                       const Scalar& x_u, const GElem& seller_pk,
                       const std::string& verifier_id, const Scalar& r,
                       Rng& rng) {
    const Group& G = pp.G();
    ProveU3Result out;
    ProofU3& pf = out.proof;
    GElem Hv = hash_str_to_group(G, verifier_id);

    Scalar pi = G.random_scalar(rng);
    Scalar la = G.random_scalar(rng);
    Scalar xt = G.random_scalar(rng);
    Scalar st = G.random_scalar(rng);
    Scalar dt = G.random_scalar(rng);
    Scalar pit = G.random_scalar(rng);
    Scalar lat = G.random_scalar(rng);
    Scalar omt = G.random_scalar(rng);
    Scalar ppt = G.random_scalar(rng);

    pf.M = G.random_element(rng);
    pf.D = G.pow(pp.g, tk.s_u);
    GElem Dt = G.pow(pp.g, st);
    out.Ps = G.mul(G.pow(pp.xi, x_u), G.pow(pp.g1, tk.d_u));
    GElem Pst = G.mul(G.pow(pp.xi, xt), G.pow(pp.g1, dt));
    Scalar rs = G.s_mul(r, tk.s_u);
    pf.E = G.mul(G.pow(pp.xi, x_u), G.pow(Hv, rs));
    GElem Et = G.mul(G.pow(pp.xi, xt), G.pow(Hv, G.s_mul(r, st)));
    pf.F = G.mul(tk.T, G.pow(pp.vt, pi));
    pf.J = G.mul(G.pow(pp.g, pi), G.pow(pp.vt, la));
    GElem Jt = G.mul(G.pow(pp.g, pit), G.pow(pp.vt, lat));
    pf.W = G.pow(pf.J, tk.omega);
    GElem Wt = G.pow(pf.J, omt);

    pf.R = G.gt_div(G.pair(pf.F, seller_pk),
                    G.gt_mul(G.gt_mul(pp.pc.g0_rho,
                                      G.pair(out.Ps, pp.rho)),
                             G.gt_pow(pp.pc.g3_rho, tk.psi)));
    GTElem Rt = G.gt_mul(
        G.gt_mul(G.gt_pow(pp.pc.g2_rho, st),
                 G.gt_pow(G.pair(pf.F, pp.rho), G.s_neg(omt))),
        G.gt_mul(G.gt_pow(pp.pc.vt_rho, ppt),
                 G.gt_pow(G.pair(pp.vt, seller_pk), pit)));

    Transcript tr(G);
    tr.put_g(pf.M).put_g(pf.D).put_g(out.Ps).put_g(pf.E).put_g(pf.J)
      .put_g(pf.W).put_gt(pf.R)
      .put_g(Dt).put_g(Pst).put_g(Et).put_g(Jt).put_g(Wt).put_gt(Rt);
    pf.c = tr.challenge();

    pf.s_bar = resp(G, st, pf.c, tk.s_u);
    pf.x_bar = resp(G, xt, pf.c, x_u);
    pf.s_hat = G.s_mul(r, pf.s_bar);
    pf.pi_bar = resp(G, pit, pf.c, pi);
    pf.la_bar = resp(G, lat, pf.c, la);
    pf.om_bar = resp(G, omt, pf.c, tk.omega);
    pf.pip_bar = resp(G, ppt, pf.c, G.s_mul(pi, tk.omega));
    pf.d_bar = resp(G, dt, pf.c, tk.d_u);
    return out;
}

bool verify_u3(const Params& pp, const ProofU3& pf, const GElem& Ps,
               const Scalar& psi, const GElem& seller_pk,
               const std::string& verifier_id, const Scalar& r) {
    const Group& G = pp.G();
    GElem Hv = hash_str_to_group(G, verifier_id);

    GTElem R = G.gt_div(G.pair(pf.F, seller_pk),
                        G.gt_mul(G.gt_mul(pp.pc.g0_rho,
                                          G.pair(Ps, pp.rho)),
                                 G.gt_pow(pp.pc.g3_rho, psi)));
    if (!G.gt_eq(R, pf.R)) return false;

    // The tag exponent response must be the serial response scaled by the
    // verifier's own nonce; otherwise a transcript for nonce r can be
    // replayed under nonce r'.
    if (!G.s_eq(pf.s_hat, G.s_mul(r, pf.s_bar))) return false;

    GElem Dt = G.mul(G.pow(pp.g, pf.s_bar), G.pow(pf.D, pf.c));
    GElem Pst = G.mul(G.mul(G.pow(pp.xi, pf.x_bar), G.pow(pp.g1, pf.d_bar)),
                      G.pow(Ps, pf.c));
    GElem Et = G.mul(G.mul(G.pow(pp.xi, pf.x_bar), G.pow(Hv, pf.s_hat)),
                     G.pow(pf.E, pf.c));
    GElem Jt = G.mul(G.mul(G.pow(pp.g, pf.pi_bar), G.pow(pp.vt, pf.la_bar)),
                     G.pow(pf.J, pf.c));
    GElem Wt = G.mul(G.pow(pf.J, pf.om_bar), G.pow(pf.W, pf.c));
    GTElem Rt = G.gt_mul(
        G.gt_mul(G.gt_mul(G.gt_pow(pp.pc.g2_rho, pf.s_bar),
                          G.gt_pow(G.pair(pf.F, pp.rho), G.s_neg(pf.om_bar))),
                 G.gt_mul(G.gt_pow(pp.pc.vt_rho, pf.pip_bar),
                          G.gt_pow(G.pair(pp.vt, seller_pk), pf.pi_bar))),
        G.gt_pow(pf.R, pf.c));

    Transcript tr(G);
    tr.put_g(pf.M).put_g(pf.D).put_g(Ps).put_g(pf.E).put_g(pf.J)
      .put_g(pf.W).put_gt(pf.R)
      .put_g(Dt).put_g(Pst).put_g(Et).put_g(Jt).put_g(Wt).put_gt(Rt);
    return G.s_eq(pf.c, tr.challenge());
}

}  // namespace eticket::zkp
