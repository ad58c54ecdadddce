#include <optional>

#include "groups/backends.hpp"
#include "rng.hpp"
#include "sha256.hpp"

namespace eticket {

namespace {

// Element of F_{q^2} = F_q[i] / (i^2 + 1), valid because q = 3 mod 4.
struct Fq2 {
    mpz_class a, b;  // a + b*i
};

// Supersingular curve y^2 = x^3 + x over F_q with q = 3 mod 4.  The group of
// rational points is cyclic of size q + 1; we work in its prime-order
// subgroup of size r where q + 1 = cof * r.  The distortion map
// phi(x, y) = (-x, i*y) sends the subgroup off itself, so the modified Tate
// pairing e(P, Q) = f_{r,P}(phi(Q))^{(q^2-1)/r} is symmetric and
// non-degenerate on a single subgroup — a type-I pairing.
class PairingGroup final : public Group {
  public:
    PairingGroup(const GroupConfig& cfg, const mpz_class& q, const mpz_class& r)
        : Group(cfg), q_(q) {
        if (!mpz_probab_prime_p(q.get_mpz_t(), 40) ||
            !mpz_probab_prime_p(r.get_mpz_t(), 40))
            throw Error(Err::invalid_arg, "pairing primes fail primality");
        if (q % 4 != 3)
            throw Error(Err::invalid_arg, "field prime must be 3 mod 4");
        if ((q + 1) % r != 0)
            throw Error(Err::invalid_arg, "subgroup order must divide q+1");
        set_order(r);
        cof_ = (q + 1) / r;
        fq_width_ = (mpz_sizeinbase(q.get_mpz_t(), 2) + 7) / 8;
        sqrt_exp_ = (q + 1) / 4;
    }

    // ----- F_q helpers -----
    mpz_class fmod(const mpz_class& v) const {
        mpz_class r = v % q_;
        if (r < 0) r += q_;
        return r;
    }
    mpz_class fmul(const mpz_class& a, const mpz_class& b) const {
        return (a * b) % q_;
    }
    mpz_class finv(const mpz_class& a) const {
        mpz_class r;
        if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), q_.get_mpz_t()))
            throw Error(Err::pole_collision, "field inverse of zero");
        return r;
    }

    // ----- F_{q^2} helpers -----
    Fq2 f2one() const { return {1, 0}; }
    Fq2 f2mul(const Fq2& x, const Fq2& y) const {
        // (a+bi)(c+di) = (ac - bd) + (ad + bc)i
        mpz_class ac = x.a * y.a, bd = x.b * y.b;
        mpz_class cross = (x.a + x.b) * (y.a + y.b) - ac - bd;
        return {fmod(ac - bd), fmod(cross)};
    }
    Fq2 f2sqr(const Fq2& x) const {
        // (a+bi)^2 = (a-b)(a+b) + 2ab i
        mpz_class re = (x.a - x.b) * (x.a + x.b);
        mpz_class im = 2 * x.a * x.b;
        return {fmod(re), fmod(im)};
    }
    Fq2 f2conj(const Fq2& x) const { return {x.a, x.b == 0 ? mpz_class(0) : q_ - x.b}; }
    Fq2 f2inv(const Fq2& x) const {
        mpz_class norm = fmod(x.a * x.a + x.b * x.b);
        if (norm == 0) throw Error(Err::pole_collision, "inverse of zero in Fq2");
        mpz_class ninv = finv(norm);
        return {fmul(x.a, ninv), x.b == 0 ? mpz_class(0) : fmul(q_ - x.b, ninv)};
    }
    Fq2 f2pow(const Fq2& x, const mpz_class& e) const {
        Fq2 acc = f2one();
        if (e == 0) return acc;
        long bits = mpz_sizeinbase(e.get_mpz_t(), 2);
        for (long i = bits - 1; i >= 0; --i) {
            acc = f2sqr(acc);
            if (mpz_tstbit(e.get_mpz_t(), i)) acc = f2mul(acc, x);
        }
        return acc;
    }
    bool f2eq(const Fq2& x, const Fq2& y) const { return x.a == y.a && x.b == y.b; }

    // ----- curve helpers (affine y^2 = x^3 + x) -----
    bool on_curve(const GElem& P) const {
        if (P.inf) return true;
        mpz_class lhs = fmul(P.y, P.y);
        mpz_class rhs = fmod(fmul(fmul(P.x, P.x), P.x) + P.x);
        return lhs == rhs;
    }

    GElem pt_neg(const GElem& P) const {
        if (P.inf) return P;
        return GElem{P.x, P.y == 0 ? mpz_class(0) : q_ - P.y, false};
    }

    GElem pt_dbl(const GElem& P) const {
        if (P.inf || P.y == 0) return GElem{0, 0, true};
        // lambda = (3x^2 + 1) / 2y
        mpz_class lam = fmul(fmod(3 * fmul(P.x, P.x) + 1), finv(fmod(2 * P.y)));
        mpz_class x3 = fmod(fmul(lam, lam) - 2 * P.x);
        mpz_class y3 = fmod(fmul(lam, P.x - x3) - P.y);
        return GElem{x3, y3, false};
    }

    GElem pt_add(const GElem& P, const GElem& Q) const {
        if (P.inf) return Q;
        if (Q.inf) return P;
        if (P.x == Q.x) {
            if (P.y == Q.y) return pt_dbl(P);
            return GElem{0, 0, true};  // Q = -P
        }
        mpz_class lam = fmul(fmod(Q.y - P.y), finv(fmod(Q.x - P.x)));
        mpz_class x3 = fmod(fmul(lam, lam) - P.x - Q.x);
        mpz_class y3 = fmod(fmul(lam, P.x - x3) - P.y);
        return GElem{x3, y3, false};
    }

    // y with y^2 = v, using q = 3 mod 4; empty if v is a non-residue.
    std::optional<mpz_class> sqrt_fq(const mpz_class& v) const {
        if (v == 0) return mpz_class(0);
        mpz_class y;
        mpz_powm(y.get_mpz_t(), v.get_mpz_t(), sqrt_exp_.get_mpz_t(),
                 q_.get_mpz_t());
        if (fmul(y, y) != v) return std::nullopt;
        return y;
    }

    // Clears the cofactor so the result lands in the order-r subgroup.
    GElem to_subgroup(const GElem& P) const { return pow_mpz(P, cof_); }

    GElem pow_mpz(const GElem& P, const mpz_class& e) const {
        if (P.inf || e == 0) return GElem{0, 0, true};
        GElem acc{0, 0, true};
        long bits = mpz_sizeinbase(e.get_mpz_t(), 2);
        for (long i = bits - 1; i >= 0; --i) {
            acc = pt_dbl(acc);
            if (mpz_tstbit(e.get_mpz_t(), i)) acc = pt_add(acc, P);
        }
        return acc;
    }

    // ----- Group interface -----
    GElem identity() const override { return GElem{0, 0, true}; }
    bool is_identity(const GElem& a) const override { return a.inf; }
    GElem mul(const GElem& a, const GElem& b) const override { return pt_add(a, b); }
    GElem pow(const GElem& a, const Scalar& e) const override {
        return pow_mpz(a, e.v);
    }
    GElem inv(const GElem& a) const override { return pt_neg(a); }
    bool g_eq(const GElem& a, const GElem& b) const override {
        if (a.inf || b.inf) return a.inf == b.inf;
        return a.x == b.x && a.y == b.y;
    }
    bool g_valid(const GElem& a) const override {
        if (a.inf) return a.x == 0 && a.y == 0;
        return a.x >= 0 && a.x < q_ && a.y >= 0 && a.y < q_ && on_curve(a);
    }

    GElem random_element(Rng& rng) const override {
        while (true) {
            mpz_class x = rng.below(q_);
            auto y = sqrt_fq(fmod(fmul(fmul(x, x), x) + x));
            if (!y) continue;
            mpz_class ychoice = (rng.next_u64() & 1) ? q_ - *y : *y;
            if (*y == 0) ychoice = 0;
            GElem P = to_subgroup(GElem{x, ychoice, false});
            if (!P.inf) return P;
        }
    }

    GElem hash_to_group(const Bytes& data) const override {
        for (uint32_t ctr = 0;; ++ctr) {
            Bytes material = data;
            append_u32be(material, ctr);
            auto d0 = sha256(material);
            material.push_back(0xff);
            auto d1 = sha256(material);
            Bytes wide(d0.begin(), d0.end());
            wide.insert(wide.end(), d1.begin(), d1.end());
            mpz_class x = mpz_from_bytes(wide.data(), wide.size()) % q_;
            auto y = sqrt_fq(fmod(fmul(fmul(x, x), x) + x));
            if (!y) continue;
            mpz_class ychoice = (d0[0] & 1) ? q_ - *y : *y;
            if (*y == 0) ychoice = 0;
            GElem P = to_subgroup(GElem{x, ychoice, false});
            if (!P.inf) return P;
        }
    }

    GTElem gt_identity() const override { return GTElem{1, 0}; }
    GTElem gt_mul(const GTElem& a, const GTElem& b) const override {
        Fq2 r = f2mul({a.a, a.b}, {b.a, b.b});
        return GTElem{r.a, r.b};
    }
    GTElem gt_pow(const GTElem& a, const Scalar& e) const override {
        Fq2 r = f2pow({a.a, a.b}, e.v);
        return GTElem{r.a, r.b};
    }
    GTElem gt_inv(const GTElem& a) const override {
        // Pairing outputs live in the norm-1 subgroup, where the inverse is
        // the conjugate; fall back to a full inversion otherwise.
        mpz_class norm = fmod(a.a * a.a + a.b * a.b);
        Fq2 r = norm == 1 ? f2conj({a.a, a.b}) : f2inv({a.a, a.b});
        return GTElem{r.a, r.b};
    }
    bool gt_eq(const GTElem& a, const GTElem& b) const override {
        return a.a == b.a && a.b == b.b;
    }
    bool gt_valid(const GTElem& a) const override {
        if (a.a < 0 || a.a >= q_ || a.b < 0 || a.b >= q_) return false;
        return fmod(a.a * a.a + a.b * a.b) == 1;
    }

    GTElem pair(const GElem& P, const GElem& Q) const override {
        if (P.inf || Q.inf) return gt_identity();
        Fq2 f = miller(P, Q);
        // Final exponentiation (q^2-1)/r = (q-1) * cof: the q-1 power maps
        // into the norm-1 subgroup and kills the F_q factors the Miller loop
        // dropped; the cof power lands in the order-r subgroup.
        Fq2 z = f2mul(f2conj(f), f2inv(f));
        z = f2pow(z, cof_);
        return GTElem{z.a, z.b};
    }

    size_t g_width() const override { return 1 + 2 * fq_width_; }
    size_t gt_width() const override { return 2 * fq_width_; }
    const mpz_class& field_prime() const override { return q_; }

  protected:
    Bytes g_payload(const GElem& a) const override {
        Bytes out;
        out.reserve(g_width());
        out.push_back(a.inf ? 0x00 : 0x04);
        Bytes x = mpz_to_fixed(a.inf ? 0 : a.x, fq_width_);
        Bytes y = mpz_to_fixed(a.inf ? 0 : a.y, fq_width_);
        out.insert(out.end(), x.begin(), x.end());
        out.insert(out.end(), y.begin(), y.end());
        return out;
    }

    GElem g_from_payload(const uint8_t* data, size_t len, size_t offset,
                         const char* field) const override {
        (void)len;
        uint8_t flag = data[0];
        mpz_class x = mpz_from_bytes(data + 1, fq_width_);
        mpz_class y = mpz_from_bytes(data + 1 + fq_width_, fq_width_);
        if (flag == 0x00) {
            if (x != 0 || y != 0)
                throw ParseError("non-canonical identity point", offset, field);
            return GElem{0, 0, true};
        }
        if (flag != 0x04)
            throw ParseError("unknown point flag", offset, field);
        GElem P{x, y, false};
        if (x >= q_ || y >= q_ || !on_curve(P))
            throw ParseError("point not on curve", offset, field);
        return P;
    }

    Bytes gt_payload(const GTElem& a) const override {
        Bytes out = mpz_to_fixed(a.a, fq_width_);
        Bytes b = mpz_to_fixed(a.b, fq_width_);
        out.insert(out.end(), b.begin(), b.end());
        return out;
    }

    GTElem gt_from_payload(const uint8_t* data, size_t len, size_t offset,
                           const char* field) const override {
        (void)len;
        GTElem v{mpz_from_bytes(data, fq_width_),
                 mpz_from_bytes(data + fq_width_, fq_width_)};
        if (!gt_valid(v))
            throw ParseError("target element outside unit torus", offset, field);
        return v;
    }

  private:
    // Miller loop for f_{r,P} evaluated at phi(Q) = (-xQ, i*yQ).  Lines that
    // degenerate to verticals take values in F_q and are skipped: the final
    // exponentiation kills every F_q factor.
    Fq2 miller(const GElem& P, const GElem& Q) const {
        Fq2 f = f2one();
        GElem T = P;
        long bits = mpz_sizeinbase(p_.get_mpz_t(), 2);
        for (long i = bits - 2; i >= 0; --i) {
            f = f2sqr(f);
            f = f2mul(f, line(T, T, Q));
            T = pt_dbl(T);
            if (mpz_tstbit(p_.get_mpz_t(), i)) {
                f = f2mul(f, line(T, P, Q));
                T = pt_add(T, P);
            }
        }
        return f;
    }

    // Value at phi(Q) of the line through A and B (tangent when A == B).
    Fq2 line(const GElem& A, const GElem& B, const GElem& Q) const {
        if (A.inf || B.inf) return f2one();
        mpz_class lam;
        if (A.x == B.x) {
            if (A.y != B.y || A.y == 0) return f2one();  // vertical
            lam = fmul(fmod(3 * fmul(A.x, A.x) + 1), finv(fmod(2 * A.y)));
        } else {
            lam = fmul(fmod(B.y - A.y), finv(fmod(B.x - A.x)));
        }
        // l(x,y) = y - yA - lam (x - xA) at (-xQ, i yQ):
        //   real = lam (xQ + xA) - yA, imag = yQ
        mpz_class re = fmod(fmul(lam, fmod(Q.x + A.x)) - A.y);
        return {re, Q.y};
    }

    mpz_class q_;        // base field prime, q = 3 mod 4
    mpz_class cof_;      // (q + 1) / r
    mpz_class sqrt_exp_; // (q + 1) / 4
    size_t fq_width_ = 0;
};

// Deterministic parameter search: r is the next prime after an rbits-wide
// draw; the cofactor is a multiple of four (so q = cof*r - 1 = 3 mod 4)
// redrawn until q is prime with exactly qbits bits.
void find_params(const GroupConfig& cfg, Rng& rng, mpz_class& q, mpz_class& r) {
    if (cfg.rbits < 16 || cfg.qbits < cfg.rbits + 8)
        throw Error(Err::invalid_arg, "pairing size profile too small");
    for (int attempt = 0; attempt < 64; ++attempt) {
        mpz_class rstart = rng.below(mpz_class(1) << (cfg.rbits - 1));
        mpz_setbit(rstart.get_mpz_t(), cfg.rbits - 1);
        mpz_nextprime(r.get_mpz_t(), rstart.get_mpz_t());
        if (mpz_sizeinbase(r.get_mpz_t(), 2) != cfg.rbits) continue;
        unsigned hbits = cfg.qbits - cfg.rbits;
        for (int tries = 0; tries < 4096; ++tries) {
            mpz_class h = rng.below(mpz_class(1) << (hbits - 1));
            mpz_setbit(h.get_mpz_t(), hbits - 1);
            h -= h % 4;
            q = h * r - 1;
            if (mpz_sizeinbase(q.get_mpz_t(), 2) != cfg.qbits) continue;
            if (mpz_probab_prime_p(q.get_mpz_t(), 32)) return;
        }
    }
    throw Error(Err::invalid_arg, "pairing parameter search exhausted");
}

}  // namespace

namespace detail {

std::shared_ptr<const Group> make_pairing_group(const GroupConfig& cfg, Rng& rng) {
    mpz_class q, r;
    find_params(cfg, rng, q, r);
    return std::make_shared<PairingGroup>(cfg, q, r);
}

std::shared_ptr<const Group> make_pairing_group_from(const GroupConfig& cfg,
                                                     const mpz_class& q,
                                                     const mpz_class& r) {
    return std::make_shared<PairingGroup>(cfg, q, r);
}

}  // namespace detail

std::shared_ptr<const Group> Group::create(const GroupConfig& cfg, Rng& rng) {
    switch (cfg.backend) {
        case Backend::pairing:
            return detail::make_pairing_group(cfg, rng);
        case Backend::exponent:
            return detail::make_exponent_group(cfg);
    }
    throw Error(Err::invalid_arg, "unknown group backend");
}

std::shared_ptr<const Group> Group::restore_pairing(const GroupConfig& cfg,
                                                    const mpz_class& q,
                                                    const mpz_class& r) {
    return detail::make_pairing_group_from(cfg, q, r);
}

}  // namespace eticket
