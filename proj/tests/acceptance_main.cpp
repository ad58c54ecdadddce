// Acceptance harness.  Runs every top-level requirement end to end and
// prints one [PASS]/[FAIL] line per requirement; exits nonzero when any
// fails.  argv[1] must be the path of the command-line tool (used for the
// subprocess demo runs).
//
//   1. demo exits 0 on both backends, < 60 s, deterministic under a seed
//   2. double spend at one verifier: exactly one hit, bit-exact recovery
//   3. full protocol with every equation recomputed by an integer oracle
//   4. every transmitted scalar/element perturbation is rejected
//   5. proof-time scaling shape: digit-count ratio and set-size ratio
//   6. 20 issuings: fresh pseudonyms, no transmitted element repeats
//   7. replay rejected; repeat visit aborts holder-side before sending

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bench.hpp"
#include "isotime.hpp"
#include "oracle.hpp"
#include "rng.hpp"
#include "scheme/actors.hpp"
#include "scheme/detect.hpp"
#include "sigs/sigs.hpp"
#include "zkp/zkp.hpp"

using namespace eticket;

namespace {

// ----- tiny assertion kit ---------------------------------------------------

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void req(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// ----- shared fixtures -------------------------------------------------------

constexpr const char* kPrime64 = "9223372036854775783";  // 2^63 - 25

GroupConfig exp_cfg(const char* prime) {
    GroupConfig cfg;
    cfg.backend = Backend::exponent;
    cfg.test_prime = mpz_class(prime, 10);
    return cfg;
}

GroupConfig pairing_cfg(unsigned rbits = 0, unsigned qbits = 0) {
    GroupConfig cfg;
    cfg.backend = Backend::pairing;
    if (rbits) cfg.rbits = rbits;
    if (qbits) cfg.qbits = qbits;
    return cfg;
}

// Two range and four set policies: the benchmark shape used throughout.
PolicyUniverse rep_universe() {
    PolicyUniverse u;
    u.base = 2;
    u.ranges.push_back({"age", 16, 65});
    u.ranges.push_back({"level", 1, 10});
    u.sets.push_back({"region", {"north", "south", "east", "west"}});
    u.sets.push_back({"status", {"student", "senior", "regular"}});
    u.sets.push_back({"team", {"red", "blue"}});
    u.sets.push_back({"plan", {"basic", "premium", "gold"}});
    return u;
}

UserAttributes rep_attrs() {
    UserAttributes a;
    a.range_values["age"] = 30;
    a.range_values["level"] = 5;
    a.set_items["region"] = "north";
    a.set_items["status"] = "student";
    a.set_items["team"] = "red";
    a.set_items["plan"] = "basic";
    return a;
}

// A narrow universe that fits even the 7-bit test group order.
PolicyUniverse tiny_universe() {
    PolicyUniverse u;
    u.base = 2;
    u.ranges.push_back({"age", 0, 8});
    u.sets.push_back({"tier", {"basic", "plus"}});
    return u;
}

UserAttributes tiny_attrs() {
    UserAttributes a;
    a.range_values["age"] = 5;
    a.set_items["tier"] = "basic";
    return a;
}

// One authority, one registered seller, one registered holder, and a
// configured sale — the state every criterion starts from.
struct Sys {
    std::unique_ptr<CentralAuthority> ca;
    std::unique_ptr<Seller> seller;
    std::unique_ptr<User> user;
    Rng rng = Rng::from_u64(1);
    int64_t now = 0;
    UserAttributes attrs;
    PolicySelection sel;

    const Params& pp() const { return *ca->public_params(); }
    const Group& G() const { return pp().G(); }

    Ticket buy() {
        SellerOffer offer = seller->make_offer(rng);
        PurchaseRequest preq = user->request_purchase(offer, now, rng);
        TicketGrant grant = seller->issue(preq, now, rng);
        return user->finish_purchase(grant);
    }
};

Sys make_sys(const GroupConfig& cfg, PolicyUniverse u,
             const UserAttributes& attrs, std::vector<std::string> sel_names,
             uint64_t seed) {
    Sys s;
    s.rng = Rng::from_u64(seed);
    s.attrs = attrs;
    auto group = Group::create(cfg, s.rng);
    s.ca = std::make_unique<CentralAuthority>(group, std::move(u), s.rng);
    auto params = s.ca->public_params();

    s.seller = std::make_unique<Seller>(params, "box-office", s.rng);
    s.seller->finish_registration(s.ca->register_seller(
        s.seller->make_reg_request("2030-01-01", s.rng), s.rng));

    s.user = std::make_unique<User>(params, s.rng);
    s.user->finish_registration(s.ca->register_user(
        s.user->make_reg_request(attrs, "2030-01-01", s.rng), s.rng));

    s.sel = PolicySelection::make(std::move(sel_names));
    s.seller->configure_sale("evening-show", "25.00", "2029-06-30", s.sel);
    s.now = *parse_iso8601("2026-01-01T00:00:00Z");
    return s;
}

// ----- perturbation registries -----------------------------------------------
//
// One entry per transmitted field; each applies a minimal change (element
// shifted by the group generator, scalar bumped by one).  A sound verifier
// must reject every entry.

template <class P>
struct Mut {
    std::string name;
    std::function<void(P&)> apply;
};

GElem bumpg(const Params& pp, const GElem& e) { return pp.G().mul(e, pp.g); }
GTElem bumpt(const Params& pp, const GTElem& e) {
    return pp.G().gt_mul(e, pp.G().pair(pp.g, pp.g));
}
Scalar bumps(const Params& pp, const Scalar& s) {
    return pp.G().s_add(s, pp.G().s_one());
}

template <class P>
std::vector<Mut<P>> field_muts(
    const Params& pp,
    std::vector<std::pair<const char*, GElem P::*>> gs,
    std::vector<std::pair<const char*, GTElem P::*>> ts,
    std::vector<std::pair<const char*, Scalar P::*>> ss) {
    std::vector<Mut<P>> out;
    for (auto [n, m] : gs)
        out.push_back({n, [&pp, m](P& p) { p.*m = bumpg(pp, p.*m); }});
    for (auto [n, m] : ts)
        out.push_back({n, [&pp, m](P& p) { p.*m = bumpt(pp, p.*m); }});
    for (auto [n, m] : ss)
        out.push_back({n, [&pp, m](P& p) { p.*m = bumps(pp, p.*m); }});
    return out;
}

std::vector<Mut<ProofS1>> s1_muts(const Params& pp) {
    return field_muts<ProofS1>(pp, {{"M", &ProofS1::M}, {"Y", &ProofS1::Y}},
                               {},
                               {{"c", &ProofS1::c}, {"s", &ProofS1::s}});
}

std::vector<Mut<ProofU1>> u1_muts(const Params& pp) {
    return field_muts<ProofU1>(
        pp,
        {{"M", &ProofU1::M}, {"Y", &ProofU1::Y}, {"R", &ProofU1::R}},
        {},
        {{"c1", &ProofU1::c1},
         {"c2", &ProofU1::c2},
         {"s1", &ProofU1::s1},
         {"s2", &ProofU1::s2}});
}

std::vector<Mut<ProofS2>> s2_muts(const Params& pp) {
    auto out = field_muts<ProofS2>(
        pp,
        {{"M", &ProofS2::M},
         {"Q", &ProofS2::Q},
         {"Z", &ProofS2::Z},
         {"Gamma", &ProofS2::Gamma}},
        {{"Omega", &ProofS2::Omega}},
        {{"c1", &ProofS2::c1},
         {"s1", &ProofS2::s1},
         {"s2", &ProofS2::s2},
         {"c2", &ProofS2::c2},
         {"sh1", &ProofS2::sh1},
         {"sh2", &ProofS2::sh2},
         {"c3", &ProofS2::c3},
         {"r1", &ProofS2::r1},
         {"r2", &ProofS2::r2},
         {"r3", &ProofS2::r3},
         {"r4", &ProofS2::r4},
         {"r5", &ProofS2::r5}});
    out.push_back({"vp", [](ProofS2& p) { p.vp += "X"; }});
    return out;
}

std::vector<Mut<ProofU2>> u2_muts(const Params& pp, const ProofU2& shape) {
    auto out = field_muts<ProofU2>(
        pp,
        {{"M", &ProofU2::M},
         {"C", &ProofU2::C},
         {"D", &ProofU2::D},
         {"Phi", &ProofU2::Phi},
         {"Y", &ProofU2::Y}},
        {{"R", &ProofU2::R}},
        {{"c", &ProofU2::c},
         {"x_bar", &ProofU2::x_bar},
         {"d_bar", &ProofU2::d_bar},
         {"r_bar", &ProofU2::r_bar},
         {"cu_bar", &ProofU2::cu_bar},
         {"alpha_bar", &ProofU2::alpha_bar},
         {"beta_bar", &ProofU2::beta_bar},
         {"alphap_bar", &ProofU2::alphap_bar},
         {"betap_bar", &ProofU2::betap_bar}});
    out.push_back({"vp", [](ProofU2& p) { p.vp += "X"; }});
    for (size_t i = 0; i < shape.a_bar.size(); ++i)
        out.push_back({"a_bar[" + std::to_string(i) + "]",
                       [&pp, i](ProofU2& p) {
                           p.a_bar[i] = bumps(pp, p.a_bar[i]);
                       }});
    for (size_t i = 0; i < shape.e_check.size(); ++i)
        out.push_back({"e_check[" + std::to_string(i) + "]",
                       [&pp, i](ProofU2& p) {
                           p.e_check[i] = bumps(pp, p.e_check[i]);
                       }});

    std::vector<std::pair<const char*, Scalar RangeBlockU2::*>> rng_s = {
        {"ch", &RangeBlockU2::ch},
        {"gamma_bar", &RangeBlockU2::gamma_bar},
        {"gamma_check", &RangeBlockU2::gamma_check},
        {"a_check", &RangeBlockU2::a_check},
        {"ap_check", &RangeBlockU2::ap_check}};
    std::vector<std::pair<const char*, GElem DigitBlockU2::*>> dig_g = {
        {"A", &DigitBlockU2::A}, {"Ap", &DigitBlockU2::Ap}};
    std::vector<std::pair<const char*, GTElem DigitBlockU2::*>> dig_t = {
        {"V", &DigitBlockU2::V},
        {"Vt", &DigitBlockU2::Vt},
        {"Vp", &DigitBlockU2::Vp},
        {"Vpt", &DigitBlockU2::Vpt}};
    std::vector<std::pair<const char*, Scalar DigitBlockU2::*>> dig_s = {
        {"ch", &DigitBlockU2::ch},       {"t_bar", &DigitBlockU2::t_bar},
        {"tp_bar", &DigitBlockU2::tp_bar}, {"w_hat", &DigitBlockU2::w_hat},
        {"wp_hat", &DigitBlockU2::wp_hat}, {"w_bar", &DigitBlockU2::w_bar},
        {"wp_bar", &DigitBlockU2::wp_bar}};

    for (size_t i = 0; i < shape.ranges.size(); ++i) {
        std::string base = "ranges[" + std::to_string(i) + "].";
        out.push_back({base + "Z", [&pp, i](ProofU2& p) {
                           p.ranges[i].Z = bumpg(pp, p.ranges[i].Z);
                       }});
        for (auto [n, m] : rng_s)
            out.push_back({base + n, [&pp, i, m](ProofU2& p) {
                               p.ranges[i].*m = bumps(pp, p.ranges[i].*m);
                           }});
        for (size_t j = 0; j < shape.ranges[i].digits.size(); ++j) {
            std::string db = base + "digits[" + std::to_string(j) + "].";
            for (auto [n, m] : dig_g)
                out.push_back(
                    {db + n, [&pp, i, j, m](ProofU2& p) {
                         p.ranges[i].digits[j].*m =
                             bumpg(pp, p.ranges[i].digits[j].*m);
                     }});
            for (auto [n, m] : dig_t)
                out.push_back(
                    {db + n, [&pp, i, j, m](ProofU2& p) {
                         p.ranges[i].digits[j].*m =
                             bumpt(pp, p.ranges[i].digits[j].*m);
                     }});
            for (auto [n, m] : dig_s)
                out.push_back(
                    {db + n, [&pp, i, j, m](ProofU2& p) {
                         p.ranges[i].digits[j].*m =
                             bumps(pp, p.ranges[i].digits[j].*m);
                     }});
        }
    }
    for (size_t i = 0; i < shape.sets.size(); ++i) {
        std::string base = "sets[" + std::to_string(i) + "].";
        out.push_back({base + "B", [&pp, i](ProofU2& p) {
                           p.sets[i].B = bumpg(pp, p.sets[i].B);
                       }});
        out.push_back({base + "W", [&pp, i](ProofU2& p) {
                           p.sets[i].W = bumpt(pp, p.sets[i].W);
                       }});
        out.push_back({base + "e_hat", [&pp, i](ProofU2& p) {
                           p.sets[i].e_hat = bumps(pp, p.sets[i].e_hat);
                       }});
        out.push_back({base + "e_hat2", [&pp, i](ProofU2& p) {
                           p.sets[i].e_hat2 = bumps(pp, p.sets[i].e_hat2);
                       }});
    }
    return out;
}

std::vector<Mut<ProofU3>> u3_muts(const Params& pp) {
    return field_muts<ProofU3>(
        pp,
        {{"M", &ProofU3::M},
         {"D", &ProofU3::D},
         {"E", &ProofU3::E},
         {"F", &ProofU3::F},
         {"J", &ProofU3::J},
         {"W", &ProofU3::W}},
        {{"R", &ProofU3::R}},
        {{"c", &ProofU3::c},
         {"s_bar", &ProofU3::s_bar},
         {"x_bar", &ProofU3::x_bar},
         {"s_hat", &ProofU3::s_hat},
         {"pi_bar", &ProofU3::pi_bar},
         {"la_bar", &ProofU3::la_bar},
         {"om_bar", &ProofU3::om_bar},
         {"pip_bar", &ProofU3::pip_bar},
         {"d_bar", &ProofU3::d_bar}});
}

// Applies every mutation to a copy of `good`; returns the number applied and
// appends the names of any the verifier wrongly accepted.
template <class P>
size_t run_muts(const P& good, const std::function<bool(const P&)>& verify,
                const std::vector<Mut<P>>& muts,
                std::vector<std::string>& accepted) {
    for (const auto& m : muts) {
        P p = good;
        m.apply(p);
        if (verify(p)) accepted.push_back(m.name);
    }
    return muts.size();
}

// ----- criterion 1: demo subprocess runs -------------------------------------

struct RunOut {
    int code = -1;
    std::string out;
    double secs = 0;
};

RunOut run_cmd(const std::string& cmd) {
    RunOut r;
    auto t0 = std::chrono::steady_clock::now();
    FILE* f = popen((cmd + " 2>/dev/null").c_str(), "r");
    req(f != nullptr, "popen failed for: " + cmd);
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
    int st = pclose(f);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    r.secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                           t0)
                 .count();
    return r;
}

std::string criterion1(const std::string& cli) {
    std::string detail;
    for (const std::string backend : {"pairing", "exponent"}) {
        std::string cmd = cli + " demo --backend " + backend + " --seed 42";
        RunOut a = run_cmd(cmd);
        req(a.code == 0, backend + " demo exited " + std::to_string(a.code));
        req(a.secs < 60.0,
            backend + " demo took " + fmt(a.secs) + " s (limit 60)");
        req(!a.out.empty(), backend + " demo produced no output");

        RunOut b = run_cmd(cmd);
        req(b.code == 0, backend + " demo rerun exited " +
                             std::to_string(b.code));
        req(a.out == b.out,
            backend + " demo output differs between runs of the same seed");

        RunOut c = run_cmd(cli + " demo --backend " + backend + " --seed 43");
        req(c.code == 0, backend + " demo (other seed) exited " +
                             std::to_string(c.code));
        req(c.out != a.out,
            backend + " demo output identical under different seeds");

        if (!detail.empty()) detail += ", ";
        detail += backend + " " + fmt(a.secs) + "s";
    }
    return detail;
}

// ----- criterion 2: double spend reproduction ---------------------------------

std::string criterion2() {
    int runs = 0;
    for (const GroupConfig& cfg :
         {exp_cfg(kPrime64), pairing_cfg(64, 128)}) {
        Sys s = make_sys(cfg, tiny_universe(), tiny_attrs(), {"age", "tier"},
                         21 + runs);
        const Group& G = s.G();
        Ticket t = s.buy();
        s.user->set_table_bypass(true);

        Verifier v(s.ca->public_params(), "gate-1");
        ValidateChallenge ch1 = v.challenge(s.rng);
        v.accept(s.user->present(t, ch1, s.now, s.rng), s.now);
        ValidateChallenge ch2 = v.challenge(s.rng);
        v.accept(s.user->present(t, ch2, s.now, s.rng), s.now);
        req(!G.s_eq(ch1.r, ch2.r), "verifier issued the same nonce twice");

        auto hits = detect_double_spend(G, v.table());
        req(hits.size() == 1, "expected exactly one hit, got " +
                                  std::to_string(hits.size()));
        req(hits[0].same_verifier, "hit not marked same-verifier");

        GElem Y = deanonymize(G, v.table(), hits[0]);
        req(G.enc_g(Y) == G.enc_g(s.user->public_key()),
            "recovered key does not match the registered key bit-exactly");
        ++runs;
    }
    return "exponent and pairing backends, bit-exact recovery";
}

// ----- criterion 3: integer-arithmetic oracle over the full protocol ----------

std::string criterion3() {
    struct Case {
        const char* prime;
        PolicyUniverse u;
        UserAttributes a;
        std::vector<std::string> sel;
    };
    std::vector<Case> cases;
    cases.push_back({"101", tiny_universe(), tiny_attrs(), {"age", "tier"}});
    cases.push_back(
        {kPrime64, tiny_universe(), tiny_attrs(), {"age", "tier"}});
    cases.push_back({kPrime64, rep_universe(), rep_attrs(),
                     {"age", "level", "region", "status", "team", "plan"}});

    size_t equations = 0;
    for (size_t ci = 0; ci < cases.size(); ++ci) {
        Case& c = cases[ci];
        Sys s = make_sys(exp_cfg(c.prime), c.u, c.a, c.sel, 31 + ci);
        const Params& pp = s.pp();
        const Group& G = s.G();
        const MasterSecret& msk = s.ca->master_secret();
        std::string tag = std::string("p=") + c.prime + ": ";

        req(oracle::check_params_tags(pp, msk), tag + "parameter tags");
        req(oracle::check_seller_credential(pp, msk, s.seller->public_key(),
                                            *s.seller->cred_, "2030-01-01"),
            tag + "seller credential equation");
        req(oracle::check_user_credential(pp, msk, s.user->public_key(),
                                          *s.user->cred_, "2030-01-01",
                                          s.attrs),
            tag + "holder credential equation");

        SellerOffer offer = s.seller->make_offer(s.rng);
        req(oracle::check_offer_relation(pp, offer.proof),
            tag + "offer proof relations");
        PurchaseRequest preq = s.user->request_purchase(offer, s.now, s.rng);
        req(oracle::check_purchase_relation(pp, preq.proof),
            tag + "purchase proof relations");
        TicketGrant grant = s.seller->issue(preq, s.now, s.rng);
        Ticket t = s.user->finish_purchase(grant);
        req(oracle::check_ticket_equation(pp, s.seller->public_key(), t.Ps,
                                          t.core),
            tag + "ticket signing equation");
        req(oracle::check_pseudonym(pp, s.user->x_.v, t.core.d_u.v, t.Ps),
            tag + "pseudonym composition");

        s.user->set_table_bypass(true);
        Verifier v(s.ca->public_params(), "gate-1");
        ValidateChallenge ch1 = v.challenge(s.rng);
        TicketTranscript tr1 = s.user->present(t, ch1, s.now, s.rng);
        req(oracle::check_transcript(pp, tr1, "gate-1", ch1.r.v,
                                     s.seller->public_key(), s.user->x_.v,
                                     t.core),
            tag + "presentation relations");
        v.accept(tr1, s.now);

        // Redraw until the nonce differs: on the 7-bit test order an equal
        // nonce has real probability and would make an exact-duplicate row.
        ValidateChallenge ch2 = v.challenge(s.rng);
        while (G.s_eq(ch2.r, ch1.r)) ch2 = v.challenge(s.rng);
        v.accept(s.user->present(t, ch2, s.now, s.rng), s.now);
        auto hits = detect_double_spend(G, v.table());
        req(hits.size() == 1, tag + "detection miscounted");
        const TableEntry& ea = v.table()[hits[0].index_a];
        const TableEntry& eb = v.table()[hits[0].index_b];
        mpz_class rec = oracle::recover_dl(oracle::dl(ea.E), ea.r.v,
                                           oracle::dl(eb.E), eb.r.v,
                                           G.order());
        req(rec == oracle::dl(s.user->public_key()),
            tag + "closed-form recovery");
        req(G.enc_g(deanonymize(G, v.table(), hits[0])) ==
                G.enc_g(s.user->public_key()),
            tag + "library recovery");
        equations += 10;
    }
    return std::to_string(cases.size()) + " runs x 10 oracle stages, exact";
}

// ----- criterion 4: mutation soundness ----------------------------------------

std::string criterion4() {
    Sys s = make_sys(exp_cfg(kPrime64), rep_universe(), rep_attrs(),
                     {"age", "level", "region", "status", "team", "plan"},
                     41);
    const Params& pp = s.pp();
    const Group& G = s.G();
    std::vector<std::string> accepted;
    std::ostringstream counts;

    // S1: seller key possession.
    ProofS1 s1 = zkp::prove_s1(pp, s.seller->x_, s.rng);
    req(zkp::verify_s1(pp, s1), "S1 baseline proof rejected");
    counts << "S1 " << run_muts<ProofS1>(
        s1, [&](const ProofS1& p) { return zkp::verify_s1(pp, p); },
        s1_muts(pp), accepted);

    // U1: holder key + blinding possession.
    ProofU1 u1 = zkp::prove_u1(pp, s.user->x_, G.random_scalar(s.rng), s.rng);
    req(zkp::verify_u1(pp, u1), "U1 baseline proof rejected");
    counts << ", U1 " << run_muts<ProofU1>(
        u1, [&](const ProofU1& p) { return zkp::verify_u1(pp, p); },
        u1_muts(pp), accepted);

    // S2: seller credential possession.
    ProofS2 s2 = zkp::prove_s2(pp, *s.seller->cred_, s.seller->x_,
                               "2030-01-01", s.rng);
    req(zkp::verify_s2(pp, s2), "S2 baseline proof rejected");
    counts << ", S2 " << run_muts<ProofS2>(
        s2, [&](const ProofS2& p) { return zkp::verify_s2(pp, p); },
        s2_muts(pp), accepted);

    // U2: holder credential + policy satisfaction.
    zkp::ProveU2Result u2 = zkp::prove_u2(pp, *s.user->cred_, s.user->x_,
                                          s.attrs, s.sel, "2030-01-01",
                                          s.rng);
    req(zkp::verify_u2(pp, u2.proof), "U2 baseline proof rejected");
    counts << ", U2 " << run_muts<ProofU2>(
        u2.proof, [&](const ProofU2& p) { return zkp::verify_u2(pp, p); },
        u2_muts(pp, u2.proof), accepted);

    // U3: ticket possession under a verifier nonce.
    Ticket t = s.buy();
    Scalar nonce = G.random_scalar(s.rng);
    zkp::ProveU3Result u3 = zkp::prove_u3(pp, t.core, s.user->x_,
                                          s.seller->public_key(), "gate-1",
                                          nonce, s.rng);
    req(zkp::verify_u3(pp, u3.proof, u3.Ps, t.core.psi,
                       s.seller->public_key(), "gate-1", nonce),
        "U3 baseline proof rejected");
    counts << ", U3 " << run_muts<ProofU3>(
        u3.proof,
        [&](const ProofU3& p) {
            return zkp::verify_u3(pp, p, u3.Ps, t.core.psi,
                                  s.seller->public_key(), "gate-1", nonce);
        },
        u3_muts(pp), accepted);

    // Short membership-tag signature: one element, message, public key.
    {
        sigs::BBKeyPair kp = sigs::bb_keygen(G, pp.rho, s.rng);
        Scalar m = G.random_scalar(s.rng);
        GElem sg = sigs::bb_sign(G, pp.g, kp.sk, m);
        req(sigs::bb_verify(G, pp.g, pp.rho, kp.pk, m, sg),
            "tag signature baseline rejected");
        if (sigs::bb_verify(G, pp.g, pp.rho, kp.pk, m, bumpg(pp, sg)))
            accepted.push_back("tag.sigma");
        if (sigs::bb_verify(G, pp.g, pp.rho, kp.pk, bumps(pp, m), sg))
            accepted.push_back("tag.m");
        if (sigs::bb_verify(G, pp.g, pp.rho, bumpg(pp, kp.pk), m, sg))
            accepted.push_back("tag.pk");
        counts << ", tag-sig 3";
    }

    // Block signature: element, blinding, tag, each message, public key.
    {
        sigs::BBSPlusKeyPair kp = sigs::bbsplus_keygen(G, pp.rho, s.rng);
        std::vector<GElem> bases = {pp.g2, pp.g3};
        std::vector<Scalar> msgs = {G.random_scalar(s.rng),
                                    G.random_scalar(s.rng)};
        sigs::BBSPlusSig sg =
            sigs::bbsplus_sign(G, pp.g0, pp.g1, bases, kp.sk, msgs, s.rng);
        auto ok = [&](const std::vector<Scalar>& ms, const sigs::BBSPlusSig& g,
                      const GElem& pk) {
            return sigs::bbsplus_verify(G, pp.g0, pp.g1, bases, pp.rho, pk,
                                        ms, g);
        };
        req(ok(msgs, sg, kp.pk), "block signature baseline rejected");
        sigs::BBSPlusSig g1 = sg;
        g1.sigma = bumpg(pp, g1.sigma);
        if (ok(msgs, g1, kp.pk)) accepted.push_back("block.sigma");
        sigs::BBSPlusSig g2 = sg;
        g2.s = bumps(pp, g2.s);
        if (ok(msgs, g2, kp.pk)) accepted.push_back("block.s");
        sigs::BBSPlusSig g3 = sg;
        g3.w = bumps(pp, g3.w);
        if (ok(msgs, g3, kp.pk)) accepted.push_back("block.w");
        for (size_t i = 0; i < msgs.size(); ++i) {
            std::vector<Scalar> ms = msgs;
            ms[i] = bumps(pp, ms[i]);
            if (ok(ms, sg, kp.pk))
                accepted.push_back("block.m" + std::to_string(i));
        }
        if (ok(msgs, sg, bumpg(pp, kp.pk))) accepted.push_back("block.pk");
        counts << ", block-sig 6";
    }

    if (!accepted.empty()) {
        std::string names;
        for (const auto& n : accepted) names += " " + n;
        throw Failure("perturbations wrongly accepted:" + names);
    }
    return counts.str() + " perturbations, 100% rejected";
}

// ----- criterion 5: scaling shape ----------------------------------------------

std::string criterion5() {
    BenchOptions opt;
    opt.group = pairing_cfg();
    opt.seed = 5;
    opt.iters = 20;

    auto t0 = std::chrono::steady_clock::now();
    BenchResult res = run_bench(opt, nullptr, nullptr);
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    req(secs < 600.0, "bench took " + fmt(secs) + " s (limit 600)");

    auto row = [&](unsigned k, size_t set_size) {
        const BenchResult::Row* r = res.find("policy_prove", k, set_size);
        req(r != nullptr, "missing bench row k=" + std::to_string(k) +
                              " set=" + std::to_string(set_size));
        req(r->iters >= 20, "bench row measured with fewer than 20 iters");
        return r->mean_ms;
    };
    double k5 = row(5, 0), k10 = row(10, 0), k20 = row(20, 0);
    req(k5 < k10 && k10 < k20,
        "digit-count timings not monotone: " + fmt(k5) + " / " + fmt(k10) +
            " / " + fmt(k20) + " ms");
    double kratio = k20 / k5;
    req(kratio >= 2.5 && kratio <= 5.5,
        "digit-count ratio t(k=20)/t(k=5) = " + fmt(kratio) +
            " outside [2.5, 5.5]");

    double s10 = row(1, 10), s100 = row(1, 100);
    double sratio = s100 / s10;
    req(sratio >= 0.7 && sratio <= 1.4,
        "set-size ratio t(100)/t(10) = " + fmt(sratio) +
            " outside [0.7, 1.4]");

    return "k-ratio " + fmt(kratio) + ", set-ratio " + fmt(sratio) + ", " +
           fmt(secs) + "s";
}

// ----- criterion 6: freshness across issuings -----------------------------------

std::string criterion6() {
    Sys s = make_sys(exp_cfg(kPrime64), rep_universe(), rep_attrs(),
                     {"age", "level", "region", "status", "team", "plan"},
                     61);
    const Group& G = s.G();

    std::map<std::string, std::string> seen;  // encoding -> first location
    std::vector<std::string> repeats;
    auto add = [&](const Bytes& enc, const std::string& where) {
        std::string key(enc.begin(), enc.end());
        auto [it, fresh] = seen.emplace(std::move(key), where);
        if (!fresh) repeats.push_back(where + " == " + it->second);
    };
    auto addg = [&](const GElem& e, const std::string& w) { add(G.enc_g(e), w); };
    auto addt = [&](const GTElem& e, const std::string& w) {
        add(G.enc_gt(e), w);
    };

    std::set<std::string> pseudonyms;
    for (int round = 0; round < 20; ++round) {
        std::string at = "r" + std::to_string(round) + ".";

        SellerOffer offer = s.seller->make_offer(s.rng);
        const ProofS2& o = offer.proof;
        addg(o.M, at + "offer.M");
        addg(o.Q, at + "offer.Q");
        addg(o.Z, at + "offer.Z");
        addg(o.Gamma, at + "offer.Gamma");
        addt(o.Omega, at + "offer.Omega");

        PurchaseRequest preq = s.user->request_purchase(offer, s.now, s.rng);
        const ProofU2& q = preq.proof;
        addg(q.M, at + "req.M");
        addg(q.C, at + "req.C");
        addg(q.D, at + "req.D");
        addg(q.Phi, at + "req.Phi");
        addg(q.Y, at + "req.Y");
        addt(q.R, at + "req.R");
        for (size_t i = 0; i < q.ranges.size(); ++i) {
            std::string rb = at + "req.ranges[" + std::to_string(i) + "].";
            addg(q.ranges[i].Z, rb + "Z");
            for (size_t j = 0; j < q.ranges[i].digits.size(); ++j) {
                const DigitBlockU2& d = q.ranges[i].digits[j];
                std::string db = rb + "digits[" + std::to_string(j) + "].";
                addg(d.A, db + "A");
                addg(d.Ap, db + "Ap");
                addt(d.V, db + "V");
                addt(d.Vt, db + "Vt");
                addt(d.Vp, db + "Vp");
                addt(d.Vpt, db + "Vpt");
            }
        }
        for (size_t i = 0; i < q.sets.size(); ++i) {
            std::string sb = at + "req.sets[" + std::to_string(i) + "].";
            addg(q.sets[i].B, sb + "B");
            addt(q.sets[i].W, sb + "W");
        }

        TicketGrant grant = s.seller->issue(preq, s.now, s.rng);
        addg(grant.T, at + "grant.T");
        Ticket t = s.user->finish_purchase(grant);
        Bytes ps = G.enc_g(t.Ps);
        pseudonyms.insert(std::string(ps.begin(), ps.end()));
    }

    req(pseudonyms.size() == 20,
        "only " + std::to_string(pseudonyms.size()) +
            " distinct pseudonyms across 20 issuings");
    if (!repeats.empty()) {
        std::string what = "repeated transmitted elements:";
        for (size_t i = 0; i < repeats.size() && i < 4; ++i)
            what += " " + repeats[i];
        throw Failure(what);
    }
    return std::to_string(seen.size()) +
           " transmitted elements distinct, 20 fresh pseudonyms";
}

// ----- criterion 7: replay and holder-side abort --------------------------------

std::string criterion7() {
    Sys s = make_sys(exp_cfg(kPrime64), tiny_universe(), tiny_attrs(),
                     {"age", "tier"}, 71);
    Ticket t = s.buy();
    Verifier v(s.ca->public_params(), "gate-1");

    ValidateChallenge ch1 = v.challenge(s.rng);
    TicketTranscript tr1 = s.user->present(t, ch1, s.now, s.rng);
    v.accept(tr1, s.now);

    // Verbatim replay under a fresh nonce is rejected.
    ValidateChallenge ch2 = v.challenge(s.rng);
    bool replay_rejected = false;
    try {
        v.accept(tr1, s.now);
    } catch (const Error& e) {
        replay_rejected = (e.code == Err::proof_failed);
    }
    req(replay_rejected, "replayed transcript was not rejected as a failed "
                         "proof under the fresh nonce");
    req(v.table().size() == 1, "replay changed the acceptance log");

    // The holder aborts a second visit before producing any message.
    bool aborted = false;
    try {
        TicketTranscript never = s.user->present(t, ch2, s.now, s.rng);
        (void)never;
    } catch (const Error& e) {
        aborted = (e.code == Err::repeat_verifier);
    }
    req(aborted, "second presentation at the same verifier did not abort "
                 "holder-side");
    return "replay rejected, repeat visit aborted before sending";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli>\n";
        return 2;
    }
    std::string cli = argv[1];

    struct Criterion {
        std::string name;
        std::function<std::string()> run;
    };
    std::vector<Criterion> criteria = {
        {"1. lifecycle demo: both backends, < 60 s, seed-deterministic",
         [&] { return criterion1(cli); }},
        {"2. double spend at one verifier: one hit, bit-exact recovery",
         criterion2},
        {"3. integer oracle recomputes every equation at p=101 and 64-bit p",
         criterion3},
        {"4. every transmitted scalar/element perturbation rejected",
         criterion4},
        {"5. proof-time scaling: digit-count and set-size ratios in band",
         criterion5},
        {"6. 20 issuings: fresh pseudonyms, no transmitted element repeats",
         criterion6},
        {"7. replay rejected; repeat visit aborts before sending",
         criterion7},
    };

    int failures = 0;
    for (auto& c : criteria) {
        try {
            std::string detail = c.run();
            std::cout << "[PASS] " << c.name;
            if (!detail.empty()) std::cout << " (" << detail << ")";
            std::cout << "\n" << std::flush;
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "[FAIL] " << c.name << ": " << e.what() << "\n"
                      << std::flush;
        }
    }
    if (failures) {
        std::cout << failures << " of " << criteria.size()
                  << " acceptance criteria failed\n";
        return 1;
    }
    std::cout << "all " << criteria.size() << " acceptance criteria passed\n";
    return 0;
}
