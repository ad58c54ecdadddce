#include "demo.hpp"

#include <ostream>

#include "isotime.hpp"
#include "rng.hpp"
#include "scheme/detect.hpp"
#include "sha256.hpp"
#include "wire/wire.hpp"

namespace eticket {

namespace {

// Short stable fingerprint of an element for the trace.
std::string fp(const Group& G, const GElem& e) {
    Bytes enc = G.enc_g(e);
    auto d = sha256(enc.data(), enc.size());
    return to_hex(Bytes(d.begin(), d.begin() + 6));
}

PolicyUniverse demo_universe() {
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

UserAttributes demo_attrs() {
    UserAttributes a;
    a.range_values["age"] = 30;
    a.range_values["level"] = 5;
    a.set_items["region"] = "north";
    a.set_items["status"] = "student";
    a.set_items["team"] = "red";
    a.set_items["plan"] = "basic";
    return a;
}

}  // namespace

int run_demo(const DemoOptions& opt, std::ostream& out) {
    int failures = 0;
    auto check = [&](bool ok, const std::string& what) {
        out << (ok ? "  [ok] " : "  [FAIL] ") << what << "\n";
        if (!ok) ++failures;
    };

    Rng rng = Rng::from_u64(opt.seed);
    const int64_t now = *parse_iso8601("2026-01-01T00:00:00Z");

    out << "== setup ==\n";
    auto group = Group::create(opt.group, rng);
    out << "  group order bits: "
        << mpz_sizeinbase(group->order().get_mpz_t(), 2) << "\n";
    CentralAuthority ca(group, demo_universe(), rng);
    auto params = ca.public_params();
    out << "  policy universe: " << params->universe.ranges.size()
        << " range policies, " << params->universe.sets.size()
        << " set policies, " << params->k << " digits per range\n";

    out << "== registration ==\n";
    Seller seller(params, "box-office", rng);
    {
        SellerRegRequest req = seller.make_reg_request("2030-01-01", rng);
        // Push the request through the wire codec, as a network peer would.
        Bytes msg = wire::encode_msg(params->G(), req);
        SellerRegResponse resp = ca.register_seller(
            wire::decode_msg_seller_reg_request(params->G(), msg), rng);
        seller.finish_registration(resp);
        check(true, "seller registered, key " + fp(*group, seller.public_key()));
    }
    User user(params, rng);
    {
        UserRegRequest req = user.make_reg_request(demo_attrs(), "2030-01-01", rng);
        Bytes msg = wire::encode_msg(params->G(), req);
        UserRegResponse resp = ca.register_user(
            wire::decode_msg_user_reg_request(params->G(), msg), rng);
        user.finish_registration(resp);
        check(true, "holder registered, key " + fp(*group, user.public_key()));
    }

    out << "== issuing ==\n";
    seller.configure_sale("evening-show", "25.00", "2029-06-30",
                          PolicySelection::make({"age", "region"}));
    Ticket ticket;
    {
        SellerOffer offer = wire::decode_msg_seller_offer(
            params->G(), wire::encode_msg(params->G(), seller.make_offer(rng)));
        PurchaseRequest preq = wire::decode_msg_purchase_request(
            params->G(),
            wire::encode_msg(params->G(), user.request_purchase(offer, now, rng)));
        TicketGrant grant = wire::decode_msg_ticket_grant(
            params->G(), wire::encode_msg(params->G(), seller.issue(preq, now, rng)));
        ticket = user.finish_purchase(grant);
        check(true, "ticket issued, pseudonym " + fp(*group, ticket.Ps));
    }

    out << "== validation ==\n";
    Verifier v1(params, "gate-1");
    Verifier v2(params, "gate-2");
    TicketTranscript first;
    {
        ValidateChallenge ch = v1.challenge(rng);
        first = user.present(ticket, ch, now, rng);
        Bytes msg = wire::encode_msg(params->G(), first);
        v1.accept(wire::decode_msg_ticket_transcript(params->G(), msg), now);
        check(true, "ticket accepted at gate-1, serial tag " +
                        fp(*group, first.proof.D));
    }
    {
        // An honest holder refuses to answer the same verifier twice.
        ValidateChallenge ch = v1.challenge(rng);
        bool aborted = false;
        try {
            user.present(ticket, ch, now, rng);
        } catch (const Error& e) {
            aborted = e.code == Err::repeat_verifier;
        }
        check(aborted, "holder aborts a second validation at gate-1 before "
                       "sending anything");
    }
    {
        ValidateChallenge ch = v2.challenge(rng);
        TicketTranscript t = user.present(ticket, ch, now, rng);
        v2.accept(t, now);
        check(true, "ticket accepted at gate-2 (fresh verifier)");
    }

    out << "== double spend ==\n";
    {
        // A cloned device carries the same ticket but not the visited table.
        user.set_table_bypass(true);
        ValidateChallenge ch = v1.challenge(rng);
        TicketTranscript t = user.present(ticket, ch, now, rng);
        v1.accept(t, now);
        user.set_table_bypass(false);
        check(true, "cloned device re-spends the ticket at gate-1");
    }
    {
        // The merged logs hold three uses of one serial: gate-1 honest,
        // gate-2 honest, gate-1 clone.  Every equal-serial pair is reported;
        // only the gate-1/gate-1 pair is recoverable.
        std::vector<TableEntry> merged = v1.table();
        merged.insert(merged.end(), v2.table().begin(), v2.table().end());
        std::vector<DoubleSpendHit> hits =
            detect_double_spend(params->G(), merged);
        size_t same = 0, cross = 0;
        for (const DoubleSpendHit& h : hits) (h.same_verifier ? same : cross)++;
        check(hits.size() == 3 && same == 1,
              "offline scan flags all 3 equal-serial pairs, exactly one at a "
              "single verifier (" + std::to_string(hits.size()) + " total, " +
                  std::to_string(same) + " same-verifier)");
        bool revealed = false;
        bool cross_refused = false;
        for (const DoubleSpendHit& h : hits) {
            if (h.same_verifier) {
                GElem Y = deanonymize(params->G(), merged, h);
                revealed = params->G().enc_g(Y) ==
                           params->G().enc_g(user.public_key());
                out << "  recovered key " << fp(*group, Y) << ", holder key "
                    << fp(*group, user.public_key()) << "\n";
            } else if (!cross_refused) {
                try {
                    deanonymize(params->G(), merged, h);
                } catch (const Error& e) {
                    cross_refused = e.code == Err::degenerate;
                }
            }
        }
        check(revealed, "de-anonymization recovers the spender's exact key");
        check(cross_refused,
              "cross-verifier pairs are refused by de-anonymization");
    }

    out << "== replay ==\n";
    {
        // Replaying gate-1's first accepted transcript against a fresh
        // challenge must fail: the tag response is bound to the old nonce.
        v2.challenge(rng);
        bool rejected = false;
        try {
            v2.accept(first, now);
        } catch (const Error& e) {
            rejected = e.code == Err::proof_failed;
        }
        check(rejected, "replayed transcript rejected at gate-2");
    }

    out << (failures == 0 ? "demo complete: all checks passed\n"
                          : "demo FAILED\n");
    return failures == 0 ? 0 : 1;
}

}  // namespace eticket
