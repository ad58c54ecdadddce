// Command-line front end.  Talks to the library exclusively through the
// public C API (include/eticket.h); all state lives in files under --dir.
//
// Exit code: 0 on success, the etk_status code on library errors, 20 when
// `detect` finds double spends (so scripts can distinguish "scan clean"
// from "fraud found").

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eticket.h"

namespace fs = std::filesystem;

namespace {

// ----- small RAII shims over the C handles -----------------------------------

template <class T, void (*FreeFn)(T*)>
struct Handle {
    T* p = nullptr;
    Handle() = default;
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    Handle(Handle&& o) noexcept : p(o.p) { o.p = nullptr; }
    Handle& operator=(Handle&& o) noexcept {
        std::swap(p, o.p);
        return *this;
    }
    ~Handle() {
        if (p) FreeFn(p);
    }
    T** out() { return &p; }
    operator T*() const { return p; }
};

using AuthorityH = Handle<etk_authority, etk_authority_free>;
using ParamsH = Handle<etk_params, etk_params_free>;
using SellerH = Handle<etk_seller, etk_seller_free>;
using UserH = Handle<etk_user, etk_user_free>;
using VerifierH = Handle<etk_verifier, etk_verifier_free>;

struct Buf {
    etk_buf b{nullptr, 0};
    Buf() = default;
    Buf(const Buf&) = delete;
    Buf& operator=(const Buf&) = delete;
    ~Buf() { etk_buf_free(&b); }
    const uint8_t* data() const { return b.data; }
    size_t len() const { return b.len; }
    std::string str() const {
        return std::string(reinterpret_cast<const char*>(b.data), b.len);
    }
};

[[noreturn]] void die(int status, const std::string& context) {
    std::cerr << "error: " << context << ": " << etk_status_name(status);
    const char* detail = etk_last_error();
    if (detail && *detail) std::cerr << " (" << detail << ")";
    std::cerr << "\n";
    std::exit(status);
}

void check(int status, const std::string& context) {
    if (status != ETK_OK) die(status, context);
}

// ----- file helpers -----------------------------------------------------------

std::vector<uint8_t> read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) die(ETK_ERR_IO, "cannot open " + path.string());
    std::vector<uint8_t> data{std::istreambuf_iterator<char>(in),
                              std::istreambuf_iterator<char>()};
    if (in.bad()) die(ETK_ERR_IO, "cannot read " + path.string());
    return data;
}

std::string read_text_file(const fs::path& path) {
    auto raw = read_file(path);
    return std::string(raw.begin(), raw.end());
}

void write_file(const fs::path& path, const uint8_t* data, size_t len) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) die(ETK_ERR_IO, "cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(data), static_cast<long>(len));
    out.flush();
    if (!out.good()) die(ETK_ERR_IO, "cannot write " + path.string());
}

void write_file(const fs::path& path, const Buf& b) {
    write_file(path, b.data(), b.len());
}

// File-name-safe form of an identity string (the real id stays inside the
// stored structures; this only names the file).
std::string slug(const std::string& id) {
    std::string s;
    for (char c : id)
        s += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' ||
              c == '_')
                 ? c
                 : '_';
    return s.empty() ? std::string("x") : s;
}

// ----- shared option bundles ----------------------------------------------------

struct GroupOpts {
    std::string backend = "pairing";
    unsigned rbits = 0, qbits = 0;
    std::string test_prime = "9223372036854775783";

    int backend_id() const {
        return backend == "exponent" ? ETK_BACKEND_EXPONENT
                                     : ETK_BACKEND_PAIRING;
    }
    void add_to(CLI::App* cmd) {
        cmd->add_option("--backend", backend, "group backend")
            ->check(CLI::IsMember({"pairing", "exponent"}))
            ->capture_default_str();
        cmd->add_option("--rbits", rbits,
                        "pairing group order bits (0 = default 160)");
        cmd->add_option("--qbits", qbits,
                        "pairing base field bits (0 = default 512)");
        cmd->add_option("--test-prime", test_prime,
                        "exponent-backend group order (decimal)")
            ->capture_default_str();
    }
};

struct SeedOpt {
    uint64_t seed = 0;
    CLI::Option* opt = nullptr;
    void add_to(CLI::App* cmd) {
        opt = cmd->add_option(
            "--seed", seed,
            "deterministic randomness seed (omit for OS entropy)");
    }
    int use() const { return opt && opt->count() > 0 ? 1 : 0; }
};

struct NowOpt {
    std::string text;
    void add_to(CLI::App* cmd) {
        cmd->add_option("--now", text,
                        "evaluation time, ISO-8601 (default: current time)");
    }
    int64_t value() const {
        if (text.empty()) return etk_now_epoch();
        int64_t t = 0;
        check(etk_parse_time(text.c_str(), &t), "parsing --now");
        return t;
    }
};

// ----- stored-state paths ---------------------------------------------------------

fs::path authority_path(const fs::path& dir) { return dir / "authority.bin"; }
fs::path params_path(const fs::path& dir) { return dir / "params.bin"; }
fs::path seller_path(const fs::path& dir, const std::string& id) {
    return dir / ("seller-" + slug(id) + ".bin");
}
fs::path user_path(const fs::path& dir, const std::string& name) {
    return dir / ("user-" + slug(name) + ".bin");
}
fs::path vtable_path(const fs::path& dir, const std::string& id) {
    return dir / ("vtable-" + slug(id) + ".bin");
}

ParamsH load_params(const fs::path& dir) {
    auto blob = read_file(params_path(dir));
    ParamsH pp;
    check(etk_params_load(blob.data(), blob.size(), pp.out()),
          "loading " + params_path(dir).string());
    return pp;
}

AuthorityH load_authority(const fs::path& dir, const SeedOpt& seed) {
    auto blob = read_file(authority_path(dir));
    AuthorityH ca;
    check(etk_authority_load(blob.data(), blob.size(), seed.seed, seed.use(),
                             ca.out()),
          "loading " + authority_path(dir).string());
    return ca;
}

void save_authority_and_params(const fs::path& dir, const AuthorityH& ca) {
    Buf ab, pb;
    check(etk_authority_save(ca, &ab.b), "serializing authority");
    check(etk_authority_params(ca, &pb.b), "serializing parameters");
    write_file(authority_path(dir), ab);
    write_file(params_path(dir), pb);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "privacy-preserving attribute-based e-tickets: setup, registration, "
        "issuing, validation, double-spend detection"};
    app.require_subcommand(1);

    // ----- setup ---------------------------------------------------------------
    auto* setup = app.add_subcommand(
        "setup", "run system setup and write authority.bin / params.bin");
    GroupOpts setup_group;
    SeedOpt setup_seed;
    std::string setup_policy, setup_dir = ".";
    setup->add_option("--policy", setup_policy,
                      "policy universe definition file")
        ->required()
        ->check(CLI::ExistingFile);
    setup->add_option("--dir", setup_dir, "state directory")
        ->capture_default_str();
    setup_group.add_to(setup);
    setup_seed.add_to(setup);
    setup->callback([&] {
        fs::create_directories(setup_dir);
        std::string policy_text = read_text_file(setup_policy);
        AuthorityH ca;
        check(etk_authority_setup(setup_group.backend_id(), setup_group.rbits,
                                  setup_group.qbits,
                                  setup_group.test_prime.c_str(),
                                  policy_text.c_str(), setup_seed.seed,
                                  setup_seed.use(), ca.out()),
              "system setup");
        save_authority_and_params(setup_dir, ca);
        std::cout << "setup complete: " << authority_path(setup_dir).string()
                  << " (keep private), " << params_path(setup_dir).string()
                  << " (publish)\n";
    });

    // ----- register-seller -------------------------------------------------------
    auto* regs = app.add_subcommand("register-seller",
                                    "register a seller with the authority");
    std::string regs_dir = ".", regs_id, regs_vp;
    SeedOpt regs_seed;
    regs->add_option("--dir", regs_dir, "state directory")
        ->capture_default_str();
    regs->add_option("--id", regs_id, "seller identity")->required();
    regs->add_option("--vp", regs_vp, "credential validity period (ISO-8601)")
        ->required();
    regs_seed.add_to(regs);
    regs->callback([&] {
        auto pp = load_params(regs_dir);
        auto ca = load_authority(regs_dir, regs_seed);
        SellerH s;
        check(etk_seller_create(pp, regs_id.c_str(), regs_seed.seed,
                                regs_seed.use(), s.out()),
              "creating seller");
        Buf req;
        check(etk_seller_reg_request(s, regs_vp.c_str(), &req.b),
              "building registration request");
        Buf resp;
        check(etk_authority_register_seller(ca, req.data(), req.len(),
                                            &resp.b),
              "authority registration");
        check(etk_seller_finish_registration(s, resp.data(), resp.len()),
              "checking issued credential");
        Buf sb;
        check(etk_seller_save(s, &sb.b), "serializing seller");
        write_file(seller_path(regs_dir, regs_id), sb);
        // Registration published the seller's key: refresh the parameters.
        save_authority_and_params(regs_dir, ca);
        std::cout << "seller registered: "
                  << seller_path(regs_dir, regs_id).string() << "\n";
    });

    // ----- register-user -----------------------------------------------------------
    auto* regu = app.add_subcommand("register-user",
                                    "register a ticket holder");
    std::string regu_dir = ".", regu_attrs, regu_vp, regu_name = "user";
    SeedOpt regu_seed;
    regu->add_option("--dir", regu_dir, "state directory")
        ->capture_default_str();
    regu->add_option("--attrs", regu_attrs, "attribute assignment file")
        ->required()
        ->check(CLI::ExistingFile);
    regu->add_option("--vp", regu_vp, "credential validity period (ISO-8601)")
        ->required();
    regu->add_option("--name", regu_name, "local name for the stored state")
        ->capture_default_str();
    regu_seed.add_to(regu);
    regu->callback([&] {
        auto pp = load_params(regu_dir);
        auto ca = load_authority(regu_dir, regu_seed);
        UserH u;
        check(etk_user_create(pp, regu_seed.seed, regu_seed.use(), u.out()),
              "creating holder");
        std::string attrs_text = read_text_file(regu_attrs);
        Buf req;
        check(etk_user_reg_request(u, attrs_text.c_str(), regu_vp.c_str(),
                                   &req.b),
              "building registration request");
        Buf resp;
        check(etk_authority_register_user(ca, req.data(), req.len(), &resp.b),
              "authority registration");
        check(etk_user_finish_registration(u, resp.data(), resp.len()),
              "checking issued credential");
        Buf ub;
        check(etk_user_save(u, &ub.b), "serializing holder");
        write_file(user_path(regu_dir, regu_name), ub);
        save_authority_and_params(regu_dir, ca);
        std::cout << "holder registered: "
                  << user_path(regu_dir, regu_name).string() << "\n";
    });

    // ----- issue ---------------------------------------------------------------------
    auto* issue = app.add_subcommand(
        "issue", "run one sale: offer, policy proof, ticket signing");
    std::string is_dir = ".", is_seller, is_user = "user", is_service,
                is_price, is_vp;
    std::vector<std::string> is_policies;
    std::string is_ticket_out;
    SeedOpt is_seed;
    NowOpt is_now;
    issue->add_option("--dir", is_dir, "state directory")
        ->capture_default_str();
    issue->add_option("--seller", is_seller, "seller identity")->required();
    issue->add_option("--user", is_user, "holder state name")
        ->capture_default_str();
    issue->add_option("--service", is_service, "service description")
        ->required();
    issue->add_option("--price", is_price, "price tag")->required();
    issue
        ->add_option("--vp-ticket", is_vp,
                     "ticket validity period (ISO-8601)")
        ->required();
    issue
        ->add_option("--require", is_policies,
                     "policy names the buyer must satisfy (repeatable)")
        ->required();
    issue->add_option("--ticket", is_ticket_out,
                      "output ticket file (default: <dir>/ticket.bin)");
    is_seed.add_to(issue);
    is_now.add_to(issue);
    issue->callback([&] {
        auto pp = load_params(is_dir);
        int64_t now = is_now.value();

        auto sblob = read_file(seller_path(is_dir, is_seller));
        SellerH s;
        check(etk_seller_load(pp, sblob.data(), sblob.size(), is_seed.seed,
                              is_seed.use(), s.out()),
              "loading seller");
        auto ublob = read_file(user_path(is_dir, is_user));
        UserH u;
        check(etk_user_load(pp, ublob.data(), ublob.size(),
                            is_seed.opt && is_seed.use() ? is_seed.seed + 1
                                                         : 0,
                            is_seed.use(), u.out()),
              "loading holder");

        std::vector<const char*> names;
        names.reserve(is_policies.size());
        for (auto& n : is_policies) names.push_back(n.c_str());
        check(etk_seller_configure_sale(s, is_service.c_str(),
                                        is_price.c_str(), is_vp.c_str(),
                                        names.data(), names.size()),
              "configuring sale");

        Buf offer;
        check(etk_seller_make_offer(s, &offer.b), "building offer");
        Buf purchase;
        check(etk_user_request_purchase(u, offer.data(), offer.len(), now,
                                        &purchase.b),
              "checking offer / proving policy satisfaction");
        Buf grant;
        check(etk_seller_issue(s, purchase.data(), purchase.len(), now,
                               &grant.b),
              "checking policy proof / signing ticket");
        Buf ticket;
        check(etk_user_finish_purchase(u, grant.data(), grant.len(),
                                       &ticket.b),
              "checking issued ticket");

        fs::path out = is_ticket_out.empty() ? fs::path(is_dir) / "ticket.bin"
                                             : fs::path(is_ticket_out);
        write_file(out, ticket);
        Buf sb, ub;
        check(etk_seller_save(s, &sb.b), "serializing seller");
        check(etk_user_save(u, &ub.b), "serializing holder");
        write_file(seller_path(is_dir, is_seller), sb);
        write_file(user_path(is_dir, is_user), ub);
        std::cout << "ticket issued: " << out.string() << "\n";
    });

    // ----- validate -------------------------------------------------------------------
    auto* val = app.add_subcommand(
        "validate", "run one validation session at a verifier");
    std::string va_dir = ".", va_ticket, va_verifier, va_user = "user";
    SeedOpt va_seed;
    NowOpt va_now;
    val->add_option("--dir", va_dir, "state directory")->capture_default_str();
    val->add_option("--ticket", va_ticket, "ticket file")
        ->required()
        ->check(CLI::ExistingFile);
    val->add_option("--verifier", va_verifier, "verifier identity")
        ->required();
    val->add_option("--user", va_user, "holder state name")
        ->capture_default_str();
    va_seed.add_to(val);
    va_now.add_to(val);
    val->callback([&] {
        auto pp = load_params(va_dir);
        int64_t now = va_now.value();

        auto ublob = read_file(user_path(va_dir, va_user));
        UserH u;
        check(etk_user_load(pp, ublob.data(), ublob.size(), va_seed.seed,
                            va_seed.use(), u.out()),
              "loading holder");
        VerifierH v;
        check(etk_verifier_create(pp, va_verifier.c_str(),
                                  va_seed.opt && va_seed.use()
                                      ? va_seed.seed + 1
                                      : 0,
                                  va_seed.use(), v.out()),
              "creating verifier");
        fs::path vt = vtable_path(va_dir, va_verifier);
        int truncated = 0;
        check(etk_verifier_load_table(v, vt.string().c_str(), &truncated),
              "loading acceptance log");
        if (truncated)
            std::cerr << "warning: dropped a truncated trailing record in "
                      << vt.string() << "\n";

        auto ticket = read_file(va_ticket);
        Buf ch;
        check(etk_verifier_challenge(v, &ch.b), "drawing challenge");
        Buf transcript;
        check(etk_user_present(u, ticket.data(), ticket.size(), ch.data(),
                               ch.len(), now, &transcript.b),
              "presenting ticket");
        check(etk_verifier_accept(v, transcript.data(), transcript.len(), now,
                                  vt.string().c_str()),
              "verifying transcript");

        Buf ub;
        check(etk_user_save(u, &ub.b), "serializing holder");
        write_file(user_path(va_dir, va_user), ub);
        std::cout << "ticket accepted at " << va_verifier << "; logged in "
                  << vt.string() << "\n";
    });

    // ----- detect ----------------------------------------------------------------------
    auto* det = app.add_subcommand(
        "detect", "scan acceptance logs for double spends");
    std::string de_dir = ".";
    std::vector<std::string> de_logs;
    det->add_option("--dir", de_dir, "state directory")->capture_default_str();
    det->add_option("--log", de_logs,
                    "acceptance log file (repeatable; default: all "
                    "vtable-*.bin under --dir)");
    det->callback([&] {
        auto pp = load_params(de_dir);
        std::vector<std::string> paths = de_logs;
        if (paths.empty()) {
            for (const auto& entry : fs::directory_iterator(de_dir)) {
                auto name = entry.path().filename().string();
                if (name.rfind("vtable-", 0) == 0 &&
                    entry.path().extension() == ".bin")
                    paths.push_back(entry.path().string());
            }
            std::sort(paths.begin(), paths.end());
        }
        std::vector<const char*> cpaths;
        cpaths.reserve(paths.size());
        for (auto& p : paths) cpaths.push_back(p.c_str());
        Buf report, key;
        int hits = 0;
        check(etk_detect(pp, cpaths.data(), cpaths.size(), &report.b, &hits,
                         &key.b),
              "scanning logs");
        std::cout << report.str();
        if (hits > 0) std::exit(20);
    });

    // ----- demo ------------------------------------------------------------------------
    auto* demo = app.add_subcommand(
        "demo", "run the built-in end-to-end lifecycle demo");
    GroupOpts demo_group;
    uint64_t demo_seed = 1;
    demo_group.add_to(demo);
    demo->add_option("--seed", demo_seed, "deterministic randomness seed")
        ->capture_default_str();
    demo->callback([&] {
        int st = etk_demo(demo_group.backend_id(), demo_group.rbits,
                          demo_group.qbits, demo_group.test_prime.c_str(),
                          demo_seed);
        if (st != ETK_OK) die(st, "demo");
    });

    // ----- bench -----------------------------------------------------------------------
    auto* bench = app.add_subcommand(
        "bench", "time every protocol phase; sweep digit count and set size");
    GroupOpts bench_group;
    uint64_t bench_seed = 1;
    unsigned bench_iters = 20;
    std::string bench_csv;
    bench_group.add_to(bench);
    bench->add_option("--seed", bench_seed, "deterministic randomness seed")
        ->capture_default_str();
    bench->add_option("--iters", bench_iters, "timed repetitions per phase")
        ->capture_default_str();
    bench->add_option("--csv", bench_csv,
                      "CSV output file (default: stdout)");
    bench->callback([&] {
        if (bench_iters < 20)
            std::cerr << "warning: fewer than 20 iterations per phase gives "
                         "noisy timings\n";
        int st = etk_bench(bench_group.backend_id(), bench_group.rbits,
                           bench_group.qbits, bench_group.test_prime.c_str(),
                           bench_seed, bench_iters,
                           bench_csv.empty() ? nullptr : bench_csv.c_str());
        if (st != ETK_OK) die(st, "bench");
    });

    CLI11_PARSE(app, argc, argv);
    return 0;
}
