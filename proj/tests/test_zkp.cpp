#include <functional>

#include "doctest.h"
#include "oracle.hpp"
#include "test_util.hpp"
#include "zkp/zkp.hpp"

using namespace eticket;
using testutil::Session;

namespace {

// A named single-field perturbation of a proof.
template <class Proof>
struct Mutation {
    std::string name;
    std::function<void(Proof&)> apply;
};

// Perturbation helpers: nudge one transmitted value, leaving a well-formed
// but wrong message.
void bump(const Params& pp, GElem& e) { e = pp.G().mul(e, pp.g); }
void bump(const Params& pp, GTElem& e) {
    e = pp.G().gt_mul(e, pp.G().pair(pp.g, pp.g));
}
void bump(const Params& pp, Scalar& s) {
    s = pp.G().s_add(s, pp.G().s_one());
}

template <class Proof, class Verify>
void run_mutations(const Proof& good, Verify verify,
                   std::vector<Mutation<Proof>> muts) {
    REQUIRE(verify(good));
    for (auto& m : muts) {
        Proof bad = good;
        m.apply(bad);
        CHECK_MESSAGE(!verify(bad), "mutation not rejected: ", m.name);
    }
}

#define MUT(field)                                        \
    Mutation<P> {                                         \
        #field, [&](P& pf) { bump(pp, pf.field); }        \
    }

}  // namespace

// ---------------------------------------------------------------------------
// Seller key-possession proof
// ---------------------------------------------------------------------------

TEST_CASE("seller key proof: completeness and mutations") {
    Session s = testutil::make_session(testutil::exp64(),
                                       testutil::tiny_universe(),
                                       testutil::tiny_attrs());
    const Group& G = s.G();
    const Params& pp = *s.pp;

    for (int i = 0; i < 50; ++i) {
        Scalar x = G.random_scalar(s.rng);
        ProofS1 pf = zkp::prove_s1(pp, x, s.rng);
        CHECK(zkp::verify_s1(pp, pf));
    }

    using P = ProofS1;
    P good = zkp::prove_s1(pp, s.seller.x_, s.rng);
    run_mutations(good, [&](const P& pf) { return zkp::verify_s1(pp, pf); },
                  {MUT(M), MUT(Y), MUT(c), MUT(s)});
}

TEST_CASE("seller key proofs are randomized") {
    Session s = testutil::make_session(testutil::exp64(),
                                       testutil::tiny_universe(),
                                       testutil::tiny_attrs());
    ProofS1 a = zkp::prove_s1(*s.pp, s.seller.x_, s.rng);
    ProofS1 b = zkp::prove_s1(*s.pp, s.seller.x_, s.rng);
    CHECK_FALSE(s.G().g_eq(a.M, b.M));  // fresh commitment nonce each run
    CHECK(s.G().g_eq(a.Y, b.Y));        // same public key
}

// ---------------------------------------------------------------------------
// Holder key-possession proof
// ---------------------------------------------------------------------------

TEST_CASE("holder key proof: completeness and mutations") {
    Session s = testutil::make_session(testutil::exp64(),
                                       testutil::tiny_universe(),
                                       testutil::tiny_attrs());
    const Group& G = s.G();
    const Params& pp = *s.pp;

    for (int i = 0; i < 50; ++i) {
        Scalar x = G.random_scalar(s.rng);
        Scalar r = G.random_scalar(s.rng);
        ProofU1 pf = zkp::prove_u1(pp, x, r, s.rng);
        CHECK(zkp::verify_u1(pp, pf));
    }

    using P = ProofU1;
    P good = zkp::prove_u1(pp, s.user.x_, s.user.r_, s.rng);
    run_mutations(good, [&](const P& pf) { return zkp::verify_u1(pp, pf); },
                  {MUT(M), MUT(Y), MUT(R), MUT(c1), MUT(c2), MUT(s1),
                   MUT(s2)});
}

// ---------------------------------------------------------------------------
// Seller credential proof (offer)
// ---------------------------------------------------------------------------

TEST_CASE("seller credential proof: completeness, oracle, mutations") {
    Session s = testutil::make_session(testutil::exp64(),
                                       testutil::tiny_universe(),
                                       testutil::tiny_attrs());
    const Params& pp = *s.pp;
    REQUIRE(s.seller.cred_.has_value());

    for (int i = 0; i < 50; ++i) {
        ProofS2 pf = zkp::prove_s2(pp, *s.seller.cred_, s.seller.x_,
                                   s.seller.vp_, s.rng);
        CHECK(zkp::verify_s2(pp, pf));
        // The blinded-credential ratio must satisfy the published relation.
        CHECK(oracle::check_offer_relation(pp, pf));
    }

    using P = ProofS2;
    P good = zkp::prove_s2(pp, *s.seller.cred_, s.seller.x_, s.seller.vp_,
                           s.rng);
    run_mutations(
        good, [&](const P& pf) { return zkp::verify_s2(pp, pf); },
        {MUT(M), MUT(Q), MUT(Z), MUT(Gamma), MUT(Omega), MUT(c1), MUT(s1),
         MUT(s2), MUT(c2), MUT(sh1), MUT(sh2), MUT(c3), MUT(r1), MUT(r2),
         MUT(r3), MUT(r4), MUT(r5),
         {"vp", [](P& pf) { pf.vp += "x"; }}});
}

TEST_CASE("seller credential proofs are randomized") {
    Session s = testutil::make_session(testutil::exp64(),
                                       testutil::tiny_universe(),
                                       testutil::tiny_attrs());
    ProofS2 a = zkp::prove_s2(*s.pp, *s.seller.cred_, s.seller.x_,
                              s.seller.vp_, s.rng);
    ProofS2 b = zkp::prove_s2(*s.pp, *s.seller.cred_, s.seller.x_,
                              s.seller.vp_, s.rng);
    // Fresh blinding each time: the same credential is unlinkable across
    // offers.
    CHECK_FALSE(s.G().g_eq(a.Q, b.Q));
    CHECK_FALSE(s.G().g_eq(a.M, b.M));
}

// ---------------------------------------------------------------------------
// Holder credential + policy proof (purchase)
// ---------------------------------------------------------------------------

namespace {

// Every transmitted field of a purchase proof, including each vector entry.
std::vector<Mutation<ProofU2>> purchase_mutations(const Params& pp,
                                                  const ProofU2& shape) {
    using P = ProofU2;
    std::vector<Mutation<P>> muts = {
        MUT(M), MUT(C), MUT(D), MUT(Phi), MUT(Y), MUT(R), MUT(c), MUT(x_bar),
        MUT(d_bar), MUT(r_bar), MUT(cu_bar), MUT(alpha_bar), MUT(beta_bar),
        MUT(alphap_bar), MUT(betap_bar),
        {"vp", [](P& pf) { pf.vp += "x"; }},
        {"sel.drop", [](P& pf) { pf.sel.names.pop_back(); }},
        {"sel.rename", [](P& pf) { pf.sel.names[0] += "x"; }},
    };
    for (size_t i = 0; i < shape.a_bar.size(); ++i)
        muts.push_back({"a_bar[" + std::to_string(i) + "]",
                        [&pp, i](P& pf) { bump(pp, pf.a_bar[i]); }});
    for (size_t i = 0; i < shape.e_check.size(); ++i)
        muts.push_back({"e_check[" + std::to_string(i) + "]",
                        [&pp, i](P& pf) { bump(pp, pf.e_check[i]); }});
    for (size_t r = 0; r < shape.ranges.size(); ++r) {
        auto rm = [&muts, &pp, r](const char* n, auto field) {
            muts.push_back({"ranges[" + std::to_string(r) + "]." + n,
                            [&pp, r, field](P& pf) {
                                bump(pp, pf.ranges[r].*field);
                            }});
        };
        rm("Z", &RangeBlockU2::Z);
        rm("ch", &RangeBlockU2::ch);
        rm("gamma_bar", &RangeBlockU2::gamma_bar);
        rm("gamma_check", &RangeBlockU2::gamma_check);
        rm("a_check", &RangeBlockU2::a_check);
        rm("ap_check", &RangeBlockU2::ap_check);
        for (size_t d = 0; d < shape.ranges[r].digits.size(); ++d) {
            auto dm = [&muts, &pp, r, d](const char* n, auto field) {
                muts.push_back(
                    {"ranges[" + std::to_string(r) + "].digits[" +
                         std::to_string(d) + "]." + n,
                     [&pp, r, d, field](P& pf) {
                         bump(pp, pf.ranges[r].digits[d].*field);
                     }});
            };
            dm("A", &DigitBlockU2::A);
            dm("Ap", &DigitBlockU2::Ap);
            dm("V", &DigitBlockU2::V);
            dm("Vt", &DigitBlockU2::Vt);
            dm("Vp", &DigitBlockU2::Vp);
            dm("Vpt", &DigitBlockU2::Vpt);
            dm("ch", &DigitBlockU2::ch);
            dm("t_bar", &DigitBlockU2::t_bar);
            dm("tp_bar", &DigitBlockU2::tp_bar);
            dm("w_hat", &DigitBlockU2::w_hat);
            dm("wp_hat", &DigitBlockU2::wp_hat);
            dm("w_bar", &DigitBlockU2::w_bar);
            dm("wp_bar", &DigitBlockU2::wp_bar);
        }
    }
    for (size_t i = 0; i < shape.sets.size(); ++i) {
        auto sm = [&muts, &pp, i](const char* n, auto field) {
            muts.push_back({"sets[" + std::to_string(i) + "]." + n,
                            [&pp, i, field](P& pf) {
                                bump(pp, pf.sets[i].*field);
                            }});
        };
        sm("B", &SetBlockU2::B);
        sm("W", &SetBlockU2::W);
        sm("e_hat", &SetBlockU2::e_hat);
        sm("e_hat2", &SetBlockU2::e_hat2);
    }
    return muts;
}

}  // namespace

TEST_CASE("purchase proof: completeness, oracle, every-field mutations") {
    Session s = testutil::make_session(testutil::exp64(),
                                       testutil::tiny_universe(),
                                       testutil::tiny_attrs());
    const Params& pp = *s.pp;
    PolicySelection sel = PolicySelection::make({"age", "tier"});

    for (int i = 0; i < 50; ++i) {
        auto res = zkp::prove_u2(pp, *s.user.cred_, s.user.x_, s.user.attrs_,
                                 sel, s.user.vp_, s.rng);
        CHECK(zkp::verify_u2(pp, res.proof));
        CHECK(oracle::check_purchase_relation(pp, res.proof));
    }

    ProofU2 good = zkp::prove_u2(pp, *s.user.cred_, s.user.x_, s.user.attrs_,
                                 sel, s.user.vp_, s.rng)
                       .proof;
    REQUIRE(good.ranges.size() == 1);
    REQUIRE(good.ranges[0].digits.size() == 3);
    REQUIRE(good.sets.size() == 1);
    auto muts = purchase_mutations(pp, good);
    CHECK(muts.size() >= 68);  // 18 + 1 + 1 + (6 + 3*13) + 4
    run_mutations(good,
                  [&](const ProofU2& pf) { return zkp::verify_u2(pp, pf); },
                  std::move(muts));
}

TEST_CASE("purchase proof with several policies and index cross-wiring") {
    Session s = testutil::make_session(testutil::exp64(),
                                       testutil::wide_universe(),
                                       testutil::wide_attrs());
    const Params& pp = *s.pp;
    PolicySelection sel = PolicySelection::make(testutil::wide_selection());
    ProofU2 good = zkp::prove_u2(pp, *s.user.cred_, s.user.x_, s.user.attrs_,
                                 sel, s.user.vp_, s.rng)
                       .proof;
    REQUIRE(zkp::verify_u2(pp, good));
    REQUIRE(good.ranges.size() == 2);
    REQUIRE(good.sets.size() == 4);

    // Claiming a block under a different policy index must fail even though
    // each block is internally consistent.
    ProofU2 bad = good;
    std::swap(bad.ranges[0].range_index, bad.ranges[1].range_index);
    CHECK_FALSE(zkp::verify_u2(pp, bad));

    bad = good;
    std::swap(bad.sets[0].set_index, bad.sets[1].set_index);
    CHECK_FALSE(zkp::verify_u2(pp, bad));

    bad = good;
    bad.sets[0].set_index = 99;  // out of universe
    CHECK_FALSE(zkp::verify_u2(pp, bad));

    // Dropping a proven block while still claiming the selection must fail.
    bad = good;
    bad.ranges.pop_back();
    CHECK_FALSE(zkp::verify_u2(pp, bad));
    bad = good;
    bad.sets.erase(bad.sets.begin());
    CHECK_FALSE(zkp::verify_u2(pp, bad));
    bad = good;
    bad.ranges[1].digits.pop_back();
    CHECK_FALSE(zkp::verify_u2(pp, bad));

    // A subset selection is a different (valid) statement: proving only two
    // policies verifies and reveals nothing about the rest.
    PolicySelection two = PolicySelection::make({"age", "region"});
    ProofU2 small = zkp::prove_u2(pp, *s.user.cred_, s.user.x_, s.user.attrs_,
                                  two, s.user.vp_, s.rng)
                        .proof;
    CHECK(zkp::verify_u2(pp, small));
    CHECK(small.ranges.size() == 1);
    CHECK(small.sets.size() == 1);
    // Masked responses still cover the whole universe, hiding which
    // attributes exist beyond the proven ones.
    CHECK(small.a_bar.size() == 2);
    CHECK(small.e_check.size() == 4);
}

TEST_CASE("purchase proofs are unlinkable across runs") {
    Session s = testutil::make_session(testutil::exp64(),
                                       testutil::tiny_universe(),
                                       testutil::tiny_attrs());
    PolicySelection sel = PolicySelection::make({"age"});
    auto a = zkp::prove_u2(*s.pp, *s.user.cred_, s.user.x_, s.user.attrs_,
                           sel, s.user.vp_, s.rng);
    auto b = zkp::prove_u2(*s.pp, *s.user.cred_, s.user.x_, s.user.attrs_,
                           sel, s.user.vp_, s.rng);
    CHECK_FALSE(s.G().g_eq(a.proof.C, b.proof.C));  // fresh blinding
    CHECK_FALSE(s.G().g_eq(a.proof.Y, b.proof.Y));  // fresh pseudonym part
    CHECK(a.d.v != b.d.v);  // fresh pseudonym blinding share
}

TEST_CASE("purchase proof digit window matches the worked shape") {
    // One range [0, 8) in base 2 gives exactly three digit blocks per range;
    // the witness digits of a = 5 are 1,0,1 (least significant first) for
    // both shifts, since a - 0 and a - 8 + 8 coincide.
    Session s = testutil::make_session(testutil::exp101(),
                                       testutil::tiny_universe(),
                                       testutil::tiny_attrs());
    REQUIRE(s.pp->k == 3);
    REQUIRE(s.pp->digit_window() == 8);

    PolicySelection sel = PolicySelection::make({"age", "tier"});
    SatisfactionWitness w =
        satisfies(s.pp->universe, s.user.attrs_, sel, s.pp->k);
    CHECK(w.ranges[0].digits_lo == std::vector<unsigned>{1, 0, 1});
    CHECK(w.ranges[0].digits_hi == std::vector<unsigned>{1, 0, 1});

    // The tiny 101-element group still carries the full proof, and the
    // independent recomputation agrees with the verifier.
    auto res = zkp::prove_u2(*s.pp, *s.user.cred_, s.user.x_, s.user.attrs_,
                             sel, s.user.vp_, s.rng);
    CHECK(zkp::verify_u2(*s.pp, res.proof));
    CHECK(oracle::check_purchase_relation(*s.pp, res.proof));
    CHECK(res.proof.ranges[0].digits.size() == 3);
}

// ---------------------------------------------------------------------------
// Ticket presentation proof (validation)
// ---------------------------------------------------------------------------

namespace {

struct PresentCtx {
    Session s;
    Ticket ticket;
    GElem seller_pk;
    std::string verifier_id = "gate-7";
    Scalar r;
};

PresentCtx make_present_ctx(const eticket::GroupConfig& cfg) {
    PresentCtx ctx{testutil::make_session(cfg, testutil::tiny_universe(),
                                          testutil::tiny_attrs()),
                   {}, {}, "gate-7", {}};
    ctx.ticket = testutil::buy(ctx.s, {"age", "tier"});
    ctx.seller_pk = ctx.s.pp->seller_keys.at(ctx.ticket.seller_id);
    ctx.r = ctx.s.G().random_scalar(ctx.s.rng);
    return ctx;
}

}  // namespace

TEST_CASE("presentation proof: completeness and context binding") {
    PresentCtx ctx = make_present_ctx(testutil::exp64());
    Session& s = ctx.s;
    const Group& G = s.G();
    const Params& pp = *s.pp;

    for (int i = 0; i < 50; ++i) {
        Scalar r = G.random_scalar(s.rng);
        auto res = zkp::prove_u3(pp, ctx.ticket.core, s.user.x_,
                                 ctx.seller_pk, ctx.verifier_id, r, s.rng);
        CHECK(zkp::verify_u3(pp, res.proof, res.Ps, ctx.ticket.core.psi,
                             ctx.seller_pk, ctx.verifier_id, r));
        CHECK(G.g_eq(res.Ps, ctx.ticket.Ps));
    }

    using P = ProofU3;
    auto good = zkp::prove_u3(pp, ctx.ticket.core, s.user.x_, ctx.seller_pk,
                              ctx.verifier_id, ctx.r, s.rng);
    auto verify = [&](const P& pf) {
        return zkp::verify_u3(pp, pf, good.Ps, ctx.ticket.core.psi,
                              ctx.seller_pk, ctx.verifier_id, ctx.r);
    };
    run_mutations(good.proof, verify,
                  {MUT(M), MUT(D), MUT(E), MUT(F), MUT(J), MUT(W), MUT(R),
                   MUT(c), MUT(s_bar), MUT(x_bar), MUT(s_hat), MUT(pi_bar),
                   MUT(la_bar), MUT(om_bar), MUT(pip_bar), MUT(d_bar)});

    // Context substitutions: the same proof must not verify against any
    // altered public input.
    const P& pf = good.proof;
    CHECK_FALSE(zkp::verify_u3(pp, pf, G.mul(good.Ps, pp.g),
                               ctx.ticket.core.psi, ctx.seller_pk,
                               ctx.verifier_id, ctx.r));
    CHECK_FALSE(zkp::verify_u3(pp, pf, good.Ps,
                               G.s_add(ctx.ticket.core.psi, G.s_one()),
                               ctx.seller_pk, ctx.verifier_id, ctx.r));
    CHECK_FALSE(zkp::verify_u3(pp, pf, good.Ps, ctx.ticket.core.psi,
                               G.mul(ctx.seller_pk, pp.g), ctx.verifier_id,
                               ctx.r));
    CHECK_FALSE(zkp::verify_u3(pp, pf, good.Ps, ctx.ticket.core.psi,
                               ctx.seller_pk, "gate-8", ctx.r));
    CHECK_FALSE(zkp::verify_u3(pp, pf, good.Ps, ctx.ticket.core.psi,
                               ctx.seller_pk, ctx.verifier_id,
                               G.s_add(ctx.r, G.s_one())));
}

TEST_CASE("presentation reuses the serial commitment but nothing else") {
    PresentCtx ctx = make_present_ctx(testutil::exp64());
    Session& s = ctx.s;
    const Group& G = s.G();

    Scalar r2 = G.random_scalar(s.rng);
    auto a = zkp::prove_u3(*s.pp, ctx.ticket.core, s.user.x_, ctx.seller_pk,
                           ctx.verifier_id, ctx.r, s.rng);
    auto b = zkp::prove_u3(*s.pp, ctx.ticket.core, s.user.x_, ctx.seller_pk,
                           "gate-8", r2, s.rng);
    // D = g^{s_u} is the deterministic serial commitment: equal across
    // presentations of one ticket, it is what links a double spend.
    CHECK(G.g_eq(a.proof.D, b.proof.D));
    // Everything else is rerandomized or verifier-bound.
    CHECK_FALSE(G.g_eq(a.proof.E, b.proof.E));
    CHECK_FALSE(G.g_eq(a.proof.F, b.proof.F));
    CHECK_FALSE(G.g_eq(a.proof.J, b.proof.J));
    CHECK_FALSE(G.g_eq(a.proof.M, b.proof.M));
}

TEST_CASE("presentation proof carries the exact tag structure") {
    PresentCtx ctx = make_present_ctx(testutil::exp101());
    Session& s = ctx.s;
    const mpz_class& p = s.G().order();

    auto res = zkp::prove_u3(*s.pp, ctx.ticket.core, s.user.x_, ctx.seller_pk,
                             ctx.verifier_id, ctx.r, s.rng);
    REQUIRE(zkp::verify_u3(*s.pp, res.proof, res.Ps, ctx.ticket.core.psi,
                           ctx.seller_pk, ctx.verifier_id, ctx.r));

    // Recompute the commitments from the secrets by plain integer
    // arithmetic: D = g^{s_u} and E = xi^{x_u} H'(id)^{r s_u}.
    const ProofU3& pf = res.proof;
    CHECK(oracle::md(oracle::dl(pf.D) -
                         ctx.ticket.core.s_u.v * oracle::dl(s.pp->g),
                     p) == 0);
    mpz_class hv = oracle::hash_group_dl(ctx.verifier_id, p);
    CHECK(oracle::md(oracle::dl(pf.E) - (s.user.x_.v * oracle::dl(s.pp->xi) +
                                         ctx.r.v * ctx.ticket.core.s_u.v * hv),
                     p) == 0);
    CHECK(oracle::check_ticket_equation(*s.pp, ctx.seller_pk, res.Ps,
                                        ctx.ticket.core));
    CHECK(oracle::check_pseudonym(*s.pp, s.user.x_.v, ctx.ticket.core.d_u.v,
                                  res.Ps));
}

// ---------------------------------------------------------------------------
// Cross-backend and robustness checks
// ---------------------------------------------------------------------------

TEST_CASE("all five proofs hold on the pairing backend") {
    Session s = testutil::make_session(testutil::pairing_small(),
                                       testutil::tiny_universe(),
                                       testutil::tiny_attrs(), 11);
    const Group& G = s.G();
    const Params& pp = *s.pp;

    ProofS1 s1 = zkp::prove_s1(pp, s.seller.x_, s.rng);
    CHECK(zkp::verify_s1(pp, s1));
    ProofU1 u1 = zkp::prove_u1(pp, s.user.x_, s.user.r_, s.rng);
    CHECK(zkp::verify_u1(pp, u1));
    ProofS2 s2 = zkp::prove_s2(pp, *s.seller.cred_, s.seller.x_, s.seller.vp_,
                               s.rng);
    CHECK(zkp::verify_s2(pp, s2));
    PolicySelection sel = PolicySelection::make({"age", "tier"});
    ProofU2 u2 = zkp::prove_u2(pp, *s.user.cred_, s.user.x_, s.user.attrs_,
                               sel, s.user.vp_, s.rng)
                     .proof;
    CHECK(zkp::verify_u2(pp, u2));

    Ticket t = testutil::buy(s, {"age", "tier"});
    GElem pk = pp.seller_keys.at(t.seller_id);
    Scalar r = G.random_scalar(s.rng);
    auto u3 = zkp::prove_u3(pp, t.core, s.user.x_, pk, "gate-1", r, s.rng);
    CHECK(zkp::verify_u3(pp, u3.proof, u3.Ps, t.core.psi, pk, "gate-1", r));

    // Spot-check rejection on the pairing backend too.
    ProofS1 bad1 = s1;
    bump(pp, bad1.s);
    CHECK_FALSE(zkp::verify_s1(pp, bad1));
    ProofU2 bad2 = u2;
    bump(pp, bad2.ranges[0].digits[0].w_hat);
    CHECK_FALSE(zkp::verify_u2(pp, bad2));
    ProofU3 bad3 = u3.proof;
    bump(pp, bad3.E);
    CHECK_FALSE(zkp::verify_u3(pp, bad3, u3.Ps, t.core.psi, pk, "gate-1", r));
}

TEST_CASE("verifiers return false on garbage instead of throwing") {
    Session s = testutil::make_session(testutil::exp64(),
                                       testutil::tiny_universe(),
                                       testutil::tiny_attrs());
    CHECK_FALSE(zkp::verify_s1(*s.pp, ProofS1{}));
    CHECK_FALSE(zkp::verify_u1(*s.pp, ProofU1{}));
    CHECK_FALSE(zkp::verify_s2(*s.pp, ProofS2{}));
    CHECK_FALSE(zkp::verify_u2(*s.pp, ProofU2{}));
    CHECK_FALSE(zkp::verify_u3(*s.pp, ProofU3{}, GElem{}, Scalar{}, GElem{},
                               "", Scalar{}));

    // Structurally inconsistent: selection claims a policy but the blocks
    // are missing or the wrong length.
    ProofU2 pf = zkp::prove_u2(*s.pp, *s.user.cred_, s.user.x_, s.user.attrs_,
                               PolicySelection::make({"age"}), s.user.vp_,
                               s.rng)
                     .proof;
    ProofU2 bad = pf;
    bad.ranges.clear();
    CHECK_FALSE(zkp::verify_u2(*s.pp, bad));
    bad = pf;
    bad.a_bar.clear();
    CHECK_FALSE(zkp::verify_u2(*s.pp, bad));
    bad = pf;
    bad.e_check.push_back(Scalar{});
    CHECK_FALSE(zkp::verify_u2(*s.pp, bad));
    bad = pf;
    bad.ranges[0].digits.resize(1);
    CHECK_FALSE(zkp::verify_u2(*s.pp, bad));
}
