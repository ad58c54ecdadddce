#include "groups/backends.hpp"
#include "rng.hpp"

namespace eticket {

namespace {

// Mirror group for algebra testing: an element IS its discrete log modulo a
// small prime p.  Group law is addition mod p, exponentiation is
// multiplication, and the pairing multiplies discrete logs into a mirror
// target group.  Every protocol identity that holds here holds in any group
// where the same exponent algebra is performed.
class ExponentGroup final : public Group {
  public:
    explicit ExponentGroup(const GroupConfig& cfg) : Group(cfg) {
        const mpz_class& p = cfg.test_prime;
        if (p < 101)
            throw Error(Err::invalid_arg, "test prime must be at least 101");
        if (!mpz_probab_prime_p(p.get_mpz_t(), 40))
            throw Error(Err::invalid_arg, "test modulus is not prime");
        set_order(p);
    }

    GElem identity() const override { return GElem{0, 0, false}; }
    bool is_identity(const GElem& a) const override { return a.x == 0; }

    GElem mul(const GElem& a, const GElem& b) const override {
        mpz_class r = a.x + b.x;
        if (r >= p_) r -= p_;
        return GElem{r, 0, false};
    }

    GElem pow(const GElem& a, const Scalar& e) const override {
        return GElem{(a.x * e.v) % p_, 0, false};
    }

    GElem inv(const GElem& a) const override {
        if (a.x == 0) return identity();
        return GElem{p_ - a.x, 0, false};
    }

    bool g_eq(const GElem& a, const GElem& b) const override {
        return a.x == b.x;
    }

    bool g_valid(const GElem& a) const override {
        return !a.inf && a.y == 0 && a.x >= 0 && a.x < p_;
    }

    GElem random_element(Rng& rng) const override {
        return GElem{random_scalar(rng).v, 0, false};
    }

    GElem hash_to_group(const Bytes& data) const override {
        return GElem{hash_to_scalar(data).v, 0, false};
    }

    GTElem gt_identity() const override { return GTElem{0, 0}; }

    GTElem gt_mul(const GTElem& a, const GTElem& b) const override {
        mpz_class r = a.a + b.a;
        if (r >= p_) r -= p_;
        return GTElem{r, 0};
    }

    GTElem gt_pow(const GTElem& a, const Scalar& e) const override {
        return GTElem{(a.a * e.v) % p_, 0};
    }

    GTElem gt_inv(const GTElem& a) const override {
        if (a.a == 0) return gt_identity();
        return GTElem{p_ - a.a, 0};
    }

    bool gt_eq(const GTElem& a, const GTElem& b) const override {
        return a.a == b.a;
    }

    bool gt_valid(const GTElem& a) const override {
        return a.b == 0 && a.a >= 0 && a.a < p_;
    }

    GTElem pair(const GElem& a, const GElem& b) const override {
        return GTElem{(a.x * b.x) % p_, 0};
    }

    size_t g_width() const override { return scalar_width_; }
    size_t gt_width() const override { return scalar_width_; }
    const mpz_class& field_prime() const override { return p_; }

  protected:
    Bytes g_payload(const GElem& a) const override {
        return mpz_to_fixed(a.x, scalar_width_);
    }

    GElem g_from_payload(const uint8_t* data, size_t len, size_t offset,
                         const char* field) const override {
        mpz_class v = mpz_from_bytes(data, len);
        if (v >= p_)
            throw ParseError("group element not reduced", offset, field);
        return GElem{v, 0, false};
    }

    Bytes gt_payload(const GTElem& a) const override {
        return mpz_to_fixed(a.a, scalar_width_);
    }

    GTElem gt_from_payload(const uint8_t* data, size_t len, size_t offset,
                           const char* field) const override {
        mpz_class v = mpz_from_bytes(data, len);
        if (v >= p_)
            throw ParseError("target element not reduced", offset, field);
        return GTElem{v, 0};
    }
};

}  // namespace

namespace detail {
std::shared_ptr<const Group> make_exponent_group(const GroupConfig& cfg) {
    return std::make_shared<ExponentGroup>(cfg);
}
}  // namespace detail

}  // namespace eticket
