// C API implementation: thin exception-to-status shims over the core types.

#include "eticket.h"

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <ctime>
#include <fstream>
#include <iostream>
#include <new>

#include "bench.hpp"
#include "common.hpp"
#include "demo.hpp"
#include "isotime.hpp"
#include "rng.hpp"
#include "scheme/actors.hpp"
#include "scheme/detect.hpp"
#include "wire/vtable.hpp"
#include "wire/wire.hpp"

using namespace eticket;

struct etk_params {
    std::shared_ptr<const Params> pp;
};
struct etk_authority {
    CentralAuthority ca;
    Rng rng;
};
struct etk_seller {
    Seller s;
    Rng rng;
};
struct etk_user {
    User u;
    Rng rng;
};
struct etk_verifier {
    Verifier v;
    Rng rng;
};

namespace {

thread_local std::string g_last_error;

int map_code(Err e) { return static_cast<int>(e); }

template <typename F>
int guard(F&& f) {
    try {
        f();
        g_last_error.clear();
        return ETK_OK;
    } catch (const ParseError& e) {
        g_last_error = e.what();
        return ETK_ERR_PARSE;
    } catch (const Error& e) {
        g_last_error = e.what();
        return map_code(e.code);
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return ETK_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return ETK_ERR_INTERNAL;
    }
}

void require(bool cond, const char* what) {
    if (!cond) throw Error(Err::invalid_arg, what);
}

void fill_buf(etk_buf* out, const Bytes& b) {
    require(out != nullptr, "null output buffer");
    out->data = static_cast<uint8_t*>(std::malloc(b.empty() ? 1 : b.size()));
    if (!out->data) throw std::bad_alloc();
    if (!b.empty()) std::memcpy(out->data, b.data(), b.size());
    out->len = b.size();
}

Bytes to_bytes(const uint8_t* data, size_t len) {
    require(data != nullptr || len == 0, "null input bytes");
    return Bytes(data, data + len);
}

Rng make_rng(uint64_t seed, int use_seed) {
    return use_seed ? Rng::from_u64(seed) : Rng::from_entropy();
}

GroupConfig make_config(int backend, unsigned rbits, unsigned qbits,
                        const char* test_prime_dec) {
    GroupConfig cfg;
    switch (backend) {
        case ETK_BACKEND_PAIRING: cfg.backend = Backend::pairing; break;
        case ETK_BACKEND_EXPONENT: cfg.backend = Backend::exponent; break;
        default: throw Error(Err::invalid_arg, "unknown backend id");
    }
    if (rbits) cfg.rbits = rbits;
    if (qbits) cfg.qbits = qbits;
    if (test_prime_dec && *test_prime_dec) {
        for (const char* p = test_prime_dec; *p; ++p)
            if (!std::isdigit(static_cast<unsigned char>(*p)))
                throw Error(Err::invalid_arg,
                            "test prime must be a decimal integer");
        cfg.test_prime = mpz_class(test_prime_dec, 10);
    }
    return cfg;
}

const Group& group_of(const etk_params* pp) {
    require(pp != nullptr && pp->pp != nullptr, "null params handle");
    return pp->pp->G();
}

}  // namespace

extern "C" {

void etk_buf_free(etk_buf* b) {
    if (!b) return;
    std::free(b->data);
    b->data = nullptr;
    b->len = 0;
}

const char* etk_last_error(void) { return g_last_error.c_str(); }

const char* etk_status_name(int status) {
    switch (status) {
        case ETK_OK: return "ok";
        case ETK_ERR_INVALID_ARG: return "invalid_arg";
        case ETK_ERR_PARSE: return "parse";
        case ETK_ERR_IO: return "io";
        case ETK_ERR_STATE: return "state";
        case ETK_ERR_POLE_COLLISION: return "pole_collision";
        case ETK_ERR_RANGE_TOO_WIDE: return "range_too_wide";
        case ETK_ERR_UNKNOWN_POLICY: return "unknown_policy";
        case ETK_ERR_NOT_SATISFIED: return "not_satisfied";
        case ETK_ERR_PROOF_FAILED: return "proof_failed";
        case ETK_ERR_TICKET_CHECK: return "ticket_check";
        case ETK_ERR_VP_WINDOW: return "vp_window";
        case ETK_ERR_REPEAT_VERIFIER: return "repeat_verifier";
        case ETK_ERR_EXPIRED_TICKET: return "expired_ticket";
        case ETK_ERR_DUPLICATE_NONCE: return "duplicate_nonce";
        case ETK_ERR_CORRUPT_RECORD: return "corrupt_record";
        case ETK_ERR_DEGENERATE: return "degenerate";
        case ETK_ERR_INTERNAL: return "internal";
        default: return "unknown";
    }
}

int etk_parse_time(const char* iso, int64_t* epoch_out) {
    return guard([&] {
        require(iso != nullptr && epoch_out != nullptr, "null argument");
        auto t = parse_iso8601(iso);
        if (!t) throw ParseError("unrecognized time format", 0, "time");
        *epoch_out = *t;
    });
}

int64_t etk_now_epoch(void) {
    return static_cast<int64_t>(std::time(nullptr));
}

/* ----- authority ----------------------------------------------------------- */

int etk_authority_setup(int backend, unsigned rbits, unsigned qbits,
                        const char* test_prime_dec, const char* policy_text,
                        uint64_t seed, int use_seed, etk_authority** out) {
    return guard([&] {
        require(policy_text != nullptr && out != nullptr, "null argument");
        GroupConfig cfg = make_config(backend, rbits, qbits, test_prime_dec);
        PolicyUniverse u = parse_policy_text(policy_text);
        Rng rng = make_rng(seed, use_seed);
        auto group = Group::create(cfg, rng);
        *out = new etk_authority{
            CentralAuthority(std::move(group), std::move(u), rng),
            std::move(rng)};
    });
}

int etk_authority_save(const etk_authority* ca, etk_buf* out) {
    return guard([&] {
        require(ca != nullptr, "null authority handle");
        fill_buf(out, wire::encode_authority(ca->ca));
    });
}

int etk_authority_load(const uint8_t* data, size_t len, uint64_t seed,
                       int use_seed, etk_authority** out) {
    return guard([&] {
        require(out != nullptr, "null output handle");
        *out = new etk_authority{wire::decode_authority(to_bytes(data, len)),
                                 make_rng(seed, use_seed)};
    });
}

int etk_authority_params(const etk_authority* ca, etk_buf* out) {
    return guard([&] {
        require(ca != nullptr, "null authority handle");
        fill_buf(out, wire::encode_msg(*ca->ca.public_params()));
    });
}

int etk_authority_register_seller(etk_authority* ca, const uint8_t* req,
                                  size_t req_len, etk_buf* resp_out) {
    return guard([&] {
        require(ca != nullptr, "null authority handle");
        const Group& G = ca->ca.public_params()->G();
        auto m = wire::decode_msg_seller_reg_request(G, to_bytes(req, req_len));
        auto resp = ca->ca.register_seller(m, ca->rng);
        fill_buf(resp_out, wire::encode_msg(G, resp));
    });
}

int etk_authority_register_user(etk_authority* ca, const uint8_t* req,
                                size_t req_len, etk_buf* resp_out) {
    return guard([&] {
        require(ca != nullptr, "null authority handle");
        const Group& G = ca->ca.public_params()->G();
        auto m = wire::decode_msg_user_reg_request(G, to_bytes(req, req_len));
        auto resp = ca->ca.register_user(m, ca->rng);
        fill_buf(resp_out, wire::encode_msg(G, resp));
    });
}

void etk_authority_free(etk_authority* ca) { delete ca; }

/* ----- public parameters ---------------------------------------------------- */

int etk_params_load(const uint8_t* msg, size_t len, etk_params** out) {
    return guard([&] {
        require(out != nullptr, "null output handle");
        *out = new etk_params{wire::decode_msg_params(to_bytes(msg, len))};
    });
}

void etk_params_free(etk_params* pp) { delete pp; }

/* ----- seller ---------------------------------------------------------------- */

int etk_seller_create(const etk_params* pp, const char* seller_id,
                      uint64_t seed, int use_seed, etk_seller** out) {
    return guard([&] {
        group_of(pp);
        require(seller_id != nullptr && out != nullptr, "null argument");
        Rng rng = make_rng(seed, use_seed);
        *out = new etk_seller{Seller(pp->pp, seller_id, rng), std::move(rng)};
    });
}

int etk_seller_save(const etk_seller* s, etk_buf* out) {
    return guard([&] {
        require(s != nullptr, "null seller handle");
        fill_buf(out, wire::encode_seller(s->s));
    });
}

int etk_seller_load(const etk_params* pp, const uint8_t* data, size_t len,
                    uint64_t seed, int use_seed, etk_seller** out) {
    return guard([&] {
        group_of(pp);
        require(out != nullptr, "null output handle");
        *out = new etk_seller{wire::decode_seller(to_bytes(data, len), pp->pp),
                              make_rng(seed, use_seed)};
    });
}

int etk_seller_reg_request(etk_seller* s, const char* vp, etk_buf* msg_out) {
    return guard([&] {
        require(s != nullptr && vp != nullptr, "null argument");
        auto req = s->s.make_reg_request(vp, s->rng);
        fill_buf(msg_out, wire::encode_msg(s->s.params->G(), req));
    });
}

int etk_seller_finish_registration(etk_seller* s, const uint8_t* resp,
                                   size_t resp_len) {
    return guard([&] {
        require(s != nullptr, "null seller handle");
        auto m = wire::decode_msg_seller_reg_response(s->s.params->G(),
                                                      to_bytes(resp, resp_len));
        s->s.finish_registration(m);
    });
}

int etk_seller_configure_sale(etk_seller* s, const char* service,
                              const char* price, const char* vp_ticket,
                              const char* const* policies, size_t n_policies) {
    return guard([&] {
        require(s != nullptr && service != nullptr && price != nullptr &&
                    vp_ticket != nullptr,
                "null argument");
        require(policies != nullptr || n_policies == 0, "null policy list");
        std::vector<std::string> names;
        names.reserve(n_policies);
        for (size_t i = 0; i < n_policies; ++i) {
            require(policies[i] != nullptr, "null policy name");
            names.emplace_back(policies[i]);
        }
        s->s.configure_sale(service, price, vp_ticket,
                            PolicySelection::make(std::move(names)));
    });
}

int etk_seller_make_offer(etk_seller* s, etk_buf* msg_out) {
    return guard([&] {
        require(s != nullptr, "null seller handle");
        auto offer = s->s.make_offer(s->rng);
        fill_buf(msg_out, wire::encode_msg(s->s.params->G(), offer));
    });
}

int etk_seller_issue(etk_seller* s, const uint8_t* purchase_req,
                     size_t req_len, int64_t now, etk_buf* grant_out) {
    return guard([&] {
        require(s != nullptr, "null seller handle");
        const Group& G = s->s.params->G();
        auto req =
            wire::decode_msg_purchase_request(G, to_bytes(purchase_req, req_len));
        auto grant = s->s.issue(req, now, s->rng);
        fill_buf(grant_out, wire::encode_msg(G, grant));
    });
}

void etk_seller_free(etk_seller* s) { delete s; }

/* ----- holder ----------------------------------------------------------------- */

int etk_user_create(const etk_params* pp, uint64_t seed, int use_seed,
                    etk_user** out) {
    return guard([&] {
        group_of(pp);
        require(out != nullptr, "null output handle");
        Rng rng = make_rng(seed, use_seed);
        *out = new etk_user{User(pp->pp, rng), std::move(rng)};
    });
}

int etk_user_save(const etk_user* u, etk_buf* out) {
    return guard([&] {
        require(u != nullptr, "null user handle");
        fill_buf(out, wire::encode_user(u->u));
    });
}

int etk_user_load(const etk_params* pp, const uint8_t* data, size_t len,
                  uint64_t seed, int use_seed, etk_user** out) {
    return guard([&] {
        group_of(pp);
        require(out != nullptr, "null output handle");
        *out = new etk_user{wire::decode_user(to_bytes(data, len), pp->pp),
                            make_rng(seed, use_seed)};
    });
}

int etk_user_reg_request(etk_user* u, const char* attrs_text, const char* vp,
                         etk_buf* msg_out) {
    return guard([&] {
        require(u != nullptr && attrs_text != nullptr && vp != nullptr,
                "null argument");
        UserAttributes attrs =
            parse_attrs_text(attrs_text, u->u.params->universe);
        auto req = u->u.make_reg_request(attrs, vp, u->rng);
        fill_buf(msg_out, wire::encode_msg(u->u.params->G(), req));
    });
}

int etk_user_finish_registration(etk_user* u, const uint8_t* resp,
                                 size_t resp_len) {
    return guard([&] {
        require(u != nullptr, "null user handle");
        auto m = wire::decode_msg_user_reg_response(u->u.params->G(),
                                                    to_bytes(resp, resp_len));
        u->u.finish_registration(m);
    });
}

int etk_user_request_purchase(etk_user* u, const uint8_t* offer,
                              size_t offer_len, int64_t now,
                              etk_buf* purchase_out) {
    return guard([&] {
        require(u != nullptr, "null user handle");
        const Group& G = u->u.params->G();
        auto m = wire::decode_msg_seller_offer(G, to_bytes(offer, offer_len));
        auto req = u->u.request_purchase(m, now, u->rng);
        fill_buf(purchase_out, wire::encode_msg(G, req));
    });
}

int etk_user_finish_purchase(etk_user* u, const uint8_t* grant,
                             size_t grant_len, etk_buf* ticket_out) {
    return guard([&] {
        require(u != nullptr, "null user handle");
        const Group& G = u->u.params->G();
        auto m = wire::decode_msg_ticket_grant(G, to_bytes(grant, grant_len));
        Ticket t = u->u.finish_purchase(m);
        fill_buf(ticket_out, wire::encode_ticket(G, t));
    });
}

int etk_user_present(etk_user* u, const uint8_t* ticket, size_t ticket_len,
                     const uint8_t* challenge, size_t challenge_len,
                     int64_t now, etk_buf* transcript_out) {
    return guard([&] {
        require(u != nullptr, "null user handle");
        const Group& G = u->u.params->G();
        Ticket t = wire::decode_ticket(G, to_bytes(ticket, ticket_len));
        auto ch = wire::decode_msg_validate_challenge(
            G, to_bytes(challenge, challenge_len));
        auto transcript = u->u.present(t, ch, now, u->rng);
        fill_buf(transcript_out, wire::encode_msg(G, transcript));
    });
}

int etk_user_set_table_bypass(etk_user* u, int on) {
    return guard([&] {
        require(u != nullptr, "null user handle");
        u->u.set_table_bypass(on != 0);
    });
}

int etk_user_public_key(const etk_user* u, etk_buf* out) {
    return guard([&] {
        require(u != nullptr, "null user handle");
        fill_buf(out, u->u.params->G().enc_g(u->u.public_key()));
    });
}

void etk_user_free(etk_user* u) { delete u; }

/* ----- verifier --------------------------------------------------------------- */

int etk_verifier_create(const etk_params* pp, const char* verifier_id,
                        uint64_t seed, int use_seed, etk_verifier** out) {
    return guard([&] {
        group_of(pp);
        require(verifier_id != nullptr && out != nullptr, "null argument");
        Rng rng = make_rng(seed, use_seed);
        *out = new etk_verifier{Verifier(pp->pp, verifier_id), std::move(rng)};
    });
}

int etk_verifier_load_table(etk_verifier* v, const char* path,
                            int* truncated_out) {
    return guard([&] {
        require(v != nullptr && path != nullptr, "null argument");
        auto loaded = wire::vtable_load(path, v->v.params->G());
        v->v.table_ = std::move(loaded.entries);
        if (truncated_out) *truncated_out = loaded.truncated_tail ? 1 : 0;
    });
}

int etk_verifier_challenge(etk_verifier* v, etk_buf* msg_out) {
    return guard([&] {
        require(v != nullptr, "null verifier handle");
        auto ch = v->v.challenge(v->rng);
        fill_buf(msg_out, wire::encode_msg(v->v.params->G(), ch));
    });
}

int etk_verifier_accept(etk_verifier* v, const uint8_t* transcript,
                        size_t transcript_len, int64_t now,
                        const char* append_path) {
    return guard([&] {
        require(v != nullptr, "null verifier handle");
        const Group& G = v->v.params->G();
        auto t = wire::decode_msg_ticket_transcript(
            G, to_bytes(transcript, transcript_len));
        v->v.accept(t, now);
        if (append_path)
            wire::vtable_append(append_path, G, v->v.table().back());
    });
}

void etk_verifier_free(etk_verifier* v) { delete v; }

/* ----- double-spend detection --------------------------------------------------- */

int etk_detect(const etk_params* pp, const char* const* vtable_paths,
               size_t n_paths, etk_buf* report_out, int* n_hits_out,
               etk_buf* key_out) {
    return guard([&] {
        const Group& G = group_of(pp);
        require(vtable_paths != nullptr || n_paths == 0, "null path list");
        std::vector<TableEntry> all;
        std::string report;
        for (size_t i = 0; i < n_paths; ++i) {
            require(vtable_paths[i] != nullptr, "null path");
            auto loaded = wire::vtable_load(vtable_paths[i], G);
            report += "log ";
            report += vtable_paths[i];
            report += ": " + std::to_string(loaded.entries.size()) + " records";
            if (loaded.truncated_tail) report += " (truncated tail dropped)";
            report += "\n";
            for (auto& e : loaded.entries) all.push_back(std::move(e));
        }
        auto hits = detect_double_spend(G, all);
        report += "total records: " + std::to_string(all.size()) + "\n";
        report += "double spends detected: " + std::to_string(hits.size()) +
                  "\n";
        Bytes key;
        for (const auto& h : hits) {
            report += "hit: records " + std::to_string(h.index_a) + " and " +
                      std::to_string(h.index_b) + " (verifier " +
                      all[h.index_a].verifier_id +
                      (h.same_verifier ? "" : " / " +
                                                  all[h.index_b].verifier_id) +
                      ")\n";
            if (h.same_verifier) {
                GElem y = deanonymize(G, all, h);
                Bytes enc = G.enc_g(y);
                report += "  recovered holder key: " + to_hex(enc) + "\n";
                if (key.empty()) key = enc;
            } else {
                report += "  recovery needs two uses at one verifier\n";
            }
        }
        if (n_hits_out) *n_hits_out = static_cast<int>(hits.size());
        if (report_out) fill_buf(report_out, Bytes(report.begin(), report.end()));
        if (key_out) fill_buf(key_out, key);
    });
}

/* ----- demo / bench --------------------------------------------------------------- */

int etk_demo(int backend, unsigned rbits, unsigned qbits,
             const char* test_prime_dec, uint64_t seed) {
    return guard([&] {
        DemoOptions opt;
        opt.group = make_config(backend, rbits, qbits, test_prime_dec);
        opt.seed = seed;
        if (run_demo(opt, std::cout) != 0)
            throw Error(Err::proof_failed, "demo self-checks failed");
    });
}

int etk_bench(int backend, unsigned rbits, unsigned qbits,
              const char* test_prime_dec, uint64_t seed, unsigned iters,
              const char* csv_path) {
    return guard([&] {
        BenchOptions opt;
        opt.group = make_config(backend, rbits, qbits, test_prime_dec);
        opt.seed = seed;
        opt.iters = iters ? iters : 20;
        if (csv_path) {
            std::ofstream csv(csv_path, std::ios::trunc);
            if (!csv) throw Error(Err::io, std::string("cannot open ") + csv_path);
            run_bench(opt, &csv, &std::cerr);
            if (!csv.good())
                throw Error(Err::io, std::string("write failed: ") + csv_path);
        } else {
            run_bench(opt, &std::cout, &std::cerr);
        }
    });
}

}  // extern "C"
