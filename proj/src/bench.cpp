#include "bench.hpp"

#include <chrono>
#include <ostream>

#include "groups/transcript.hpp"
#include "rng.hpp"
#include "scheme/actors.hpp"

namespace eticket {

namespace {

const char* backend_name(Backend b) {
    return b == Backend::pairing ? "pairing" : "exponent";
}

template <class F>
double time_ms(unsigned iters, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    for (unsigned i = 0; i < iters; ++i) f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / iters;
}

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

struct Fixture {
    std::shared_ptr<Params> params;
    MasterSecret msk;
    Scalar seller_x;
    GElem seller_Y;
    Credential seller_cred;
    Scalar user_x;
    Credential user_cred;
    UserAttributes attrs;
    PolicySelection sel;
};

// Builds a ready-to-measure system state: authority set up, one seller and
// one holder registered (via the real actor flows).
Fixture make_fixture(std::shared_ptr<const Group> group, PolicyUniverse u,
                     const UserAttributes& attrs, PolicySelection sel,
                     Rng& rng) {
    Fixture fx;
    CentralAuthority ca(std::move(group), std::move(u), rng);
    fx.params = ca.params();
    fx.msk = ca.master_secret();
    Seller seller(fx.params, "bench-seller", rng);
    seller.finish_registration(
        ca.register_seller(seller.make_reg_request("2030-01-01", rng), rng));
    fx.seller_x = seller.x_;
    fx.seller_Y = seller.Y_;
    fx.seller_cred = *seller.cred_;
    User user(fx.params, rng);
    user.finish_registration(
        ca.register_user(user.make_reg_request(attrs, "2030-01-01", rng), rng));
    fx.user_x = user.x_;
    fx.user_cred = *user.cred_;
    fx.attrs = attrs;
    fx.sel = std::move(sel);
    return fx;
}

}  // namespace

const BenchResult::Row* BenchResult::find(const std::string& phase, unsigned k,
                                          size_t set_size) const {
    for (const Row& r : rows)
        if (r.phase == phase && r.k == k && r.set_size == set_size) return &r;
    return nullptr;
}

BenchResult run_bench(const BenchOptions& opt, std::ostream* csv,
                      std::ostream* log) {
    BenchResult res;
    Rng rng = Rng::from_u64(opt.seed);
    auto group = Group::create(opt.group, rng);
    volatile bool sink = false;

    if (csv) *csv << "phase,entity,backend,n1,n2,k,set_size,iters,mean_ms\n";

    auto emit = [&](const std::string& phase, const std::string& entity,
                    const Params& pp, size_t set_size, unsigned iters,
                    double ms) {
        BenchResult::Row row{phase,
                             entity,
                             pp.universe.ranges.size(),
                             pp.universe.sets.size(),
                             pp.k,
                             set_size,
                             iters,
                             ms};
        if (csv)
            *csv << row.phase << ',' << row.entity << ','
                 << backend_name(opt.group.backend) << ',' << row.n1 << ','
                 << row.n2 << ',' << row.k << ',' << row.set_size << ','
                 << row.iters << ',' << row.mean_ms << '\n';
        if (log)
            *log << "  " << row.phase << " (" << row.entity << ", k=" << row.k
                 << ", set_size=" << row.set_size << "): " << row.mean_ms
                 << " ms\n";
        res.rows.push_back(std::move(row));
    };

    // Times the policy proof phases for one system configuration.
    auto sweep_policy = [&](PolicyUniverse u, const UserAttributes& attrs,
                            PolicySelection sel, size_t set_size) {
        Fixture fx = make_fixture(group, std::move(u), attrs, std::move(sel), rng);
        const Params& pp = *fx.params;
        double ms = time_ms(opt.iters, [&] {
            sink = sink ^ (zkp::prove_u2(pp, fx.user_cred, fx.user_x, fx.attrs,
                                         fx.sel, "2030-01-01", rng)
                               .proof.ranges.size() > 0);
        });
        emit("policy_prove", "holder", pp, set_size, opt.iters, ms);
        zkp::ProveU2Result pr = zkp::prove_u2(pp, fx.user_cred, fx.user_x,
                                              fx.attrs, fx.sel, "2030-01-01", rng);
        ms = time_ms(opt.iters, [&] {
            sink = sink ^ zkp::verify_u2(pp, pr.proof);
        });
        emit("policy_verify", "seller", pp, set_size, opt.iters, ms);
    };

    if (log) *log << "representative universe:\n";
    {
        PolicySelection sel = PolicySelection::make({"age", "region"});
        Fixture fx = make_fixture(group, rep_universe(), rep_attrs(), sel, rng);
        const Params& pp = *fx.params;
        const Group& G = pp.G();

        double ms = time_ms(opt.iters, [&] {
            Rng r2 = rng.derive("setup");
            CentralAuthority ca(group, rep_universe(), r2);
            sink = sink ^ (ca.public_params()->k > 0);
        });
        emit("setup", "authority", pp, 0, opt.iters, ms);

        ms = time_ms(opt.iters, [&] {
            sink = sink ^ zkp::prove_s2(pp, fx.seller_cred, fx.seller_x,
                                        "2030-01-01", rng)
                              .vp.empty();
        });
        emit("offer_prove", "seller", pp, 0, opt.iters, ms);
        ProofS2 s2 = zkp::prove_s2(pp, fx.seller_cred, fx.seller_x,
                                   "2030-01-01", rng);
        ms = time_ms(opt.iters, [&] { sink = sink ^ zkp::verify_s2(pp, s2); });
        emit("offer_verify", "holder", pp, 0, opt.iters, ms);

        ms = time_ms(opt.iters, [&] {
            sink = sink ^ (zkp::prove_u2(pp, fx.user_cred, fx.user_x, fx.attrs,
                                         sel, "2030-01-01", rng)
                               .proof.ranges.size() > 0);
        });
        emit("policy_prove", "holder", pp, 0, opt.iters, ms);
        zkp::ProveU2Result u2 = zkp::prove_u2(pp, fx.user_cred, fx.user_x,
                                              fx.attrs, sel, "2030-01-01", rng);
        ms = time_ms(opt.iters, [&] {
            sink = sink ^ zkp::verify_u2(pp, u2.proof);
        });
        emit("policy_verify", "seller", pp, 0, opt.iters, ms);

        // Ticket signing and the holder-side check.
        Scalar psi = hash_str_to_scalar(G, "bench-sale");
        GElem Ps = G.mul(G.pow(pp.xi, fx.user_x), G.pow(pp.g1, G.s_one()));
        TicketCore tk;
        ms = time_ms(opt.iters, [&] {
            Scalar s_u = G.random_scalar(rng);
            Scalar omega = G.random_scalar(rng);
            GElem prod = G.mul(G.mul(pp.g0, Ps),
                               G.mul(G.pow(pp.g2, s_u), G.pow(pp.g3, psi)));
            GElem T = G.pow(prod, G.s_inv(G.s_add(fx.seller_x, omega)));
            tk = TicketCore{G.s_one(), s_u, psi, omega, T};
            sink = sink ^ tk.T.inf;
        });
        emit("ticket_issue", "seller", pp, 0, opt.iters, ms);
        ms = time_ms(opt.iters, [&] {
            GElem prod = G.mul(G.mul(pp.g0, Ps),
                               G.mul(G.pow(pp.g2, tk.s_u), G.pow(pp.g3, psi)));
            GTElem lhs = G.pair(tk.T, G.mul(fx.seller_Y,
                                            G.pow(pp.rho, tk.omega)));
            sink = sink ^ G.gt_eq(lhs, G.pair(prod, pp.rho));
        });
        emit("ticket_check", "holder", pp, 0, opt.iters, ms);

        Scalar nonce = G.random_scalar(rng);
        ms = time_ms(opt.iters, [&] {
            sink = sink ^ zkp::prove_u3(pp, tk, fx.user_x, fx.seller_Y,
                                        "bench-verifier", nonce, rng)
                              .proof.M.inf;
        });
        emit("present_prove", "holder", pp, 0, opt.iters, ms);
        zkp::ProveU3Result u3 = zkp::prove_u3(pp, tk, fx.user_x, fx.seller_Y,
                                              "bench-verifier", nonce, rng);
        ms = time_ms(opt.iters, [&] {
            sink = sink ^ zkp::verify_u3(pp, u3.proof, u3.Ps, psi, fx.seller_Y,
                                         "bench-verifier", nonce);
        });
        emit("present_verify", "verifier", pp, 0, opt.iters, ms);
    }

    if (log) *log << "digit-count sweep (one range policy of width 2^k):\n";
    for (unsigned k : {5u, 10u, 20u}) {
        PolicyUniverse u;
        u.base = 2;
        u.ranges.push_back({"value", 0, pow_u(2, k)});
        UserAttributes a;
        a.range_values["value"] = 1;
        sweep_policy(std::move(u), a, PolicySelection::make({"value"}), 0);
        (void)k;
    }

    if (log) *log << "set-size sweep (one set policy):\n";
    for (size_t n : {size_t(10), size_t(100)}) {
        PolicyUniverse u;
        u.base = 2;
        SetPolicy sp;
        sp.name = "member";
        for (size_t i = 0; i < n; ++i) sp.items.push_back("m" + std::to_string(i));
        u.sets.push_back(std::move(sp));
        UserAttributes a;
        a.set_items["member"] = "m0";
        sweep_policy(std::move(u), a, PolicySelection::make({"member"}), n);
    }

    (void)sink;
    return res;
}

}  // namespace eticket
