#pragma once

#include <gmpxx.h>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "common.hpp"

namespace eticket {

// Interval policy over integers: satisfied by a when lo <= a < hi.
struct RangePolicy {
    std::string name;
    mpz_class lo, hi;
};

// Membership policy: satisfied by holding one of the listed items.
struct SetPolicy {
    std::string name;
    std::vector<std::string> items;

    std::optional<size_t> index_of(const std::string& item) const {
        for (size_t j = 0; j < items.size(); ++j)
            if (items[j] == item) return j;
        return std::nullopt;
    }
};

struct PolicyUniverse {
    unsigned base = 2;  // digit base for range decompositions
    std::vector<RangePolicy> ranges;
    std::vector<SetPolicy> sets;

    void validate() const;  // unique names, sane bounds, base >= 2
    const RangePolicy* find_range(const std::string& name) const;
    const SetPolicy* find_set(const std::string& name) const;
    std::optional<size_t> range_index(const std::string& name) const;
    std::optional<size_t> set_index(const std::string& name) const;
};

// Smallest digit count k with base^k >= every interval width (k >= 1).
unsigned choose_digit_count(const PolicyUniverse& u);

// Digits of v in the given base, least-significant first, exactly k of them.
// Requires 0 <= v < base^k.
std::vector<unsigned> decompose(const mpz_class& v, unsigned base, unsigned k);
mpz_class recompose(const std::vector<unsigned>& digits, unsigned base);

mpz_class pow_u(unsigned base, unsigned k);  // base^k as an integer

// One value per range policy and one item per set policy in the universe;
// credentials always cover the whole universe.
struct UserAttributes {
    std::map<std::string, mpz_class> range_values;
    std::map<std::string, std::string> set_items;

    void validate_against(const PolicyUniverse& u) const;
};

// Canonically sorted, duplicate-free policy-name selection.
struct PolicySelection {
    std::vector<std::string> names;

    static PolicySelection make(std::vector<std::string> raw);
    bool contains(const std::string& n) const;
    // Names joined with the 0x1F unit separator, the canonical form that
    // enters ticket hashes.
    std::string joined() const;
};

// Digits witnessing a in [lo, hi) by the double shift
//   a - lo           in [0, base^k)
//   a - hi + base^k  in [0, base^k)
struct RangeWitness {
    size_t range_index;             // into universe.ranges
    std::vector<unsigned> digits_lo;
    std::vector<unsigned> digits_hi;
};

struct SetWitness {
    size_t set_index;  // into universe.sets
    size_t item_index; // the holder's item within that set
};

struct SatisfactionWitness {
    std::vector<RangeWitness> ranges;  // universe order, selected only
    std::vector<SetWitness> sets;
};

// Checks the selection against the universe and the holder's attributes.
// Throws Err::unknown_policy / Err::not_satisfied.
SatisfactionWitness satisfies(const PolicyUniverse& u,
                              const UserAttributes& attrs,
                              const PolicySelection& sel, unsigned k);

PolicyUniverse parse_policy_text(const std::string& text);
UserAttributes parse_attrs_text(const std::string& text,
                                const PolicyUniverse& u);

}  // namespace eticket
