#include "policy/policy.hpp"

#include <algorithm>
#include <set>

#include "policy/textconf.hpp"

namespace eticket {

void PolicyUniverse::validate() const {
    if (base < 2) throw Error(Err::invalid_arg, "digit base must be >= 2");
    std::set<std::string> names;
    for (const auto& r : ranges) {
        if (r.name.empty()) throw Error(Err::invalid_arg, "unnamed range policy");
        if (!names.insert(r.name).second)
            throw Error(Err::invalid_arg, "duplicate policy name: " + r.name);
        if (r.lo >= r.hi)
            throw Error(Err::invalid_arg,
                        "range '" + r.name + "' is empty (lo >= hi)");
    }
    for (const auto& s : sets) {
        if (s.name.empty()) throw Error(Err::invalid_arg, "unnamed set policy");
        if (!names.insert(s.name).second)
            throw Error(Err::invalid_arg, "duplicate policy name: " + s.name);
        if (s.items.empty())
            throw Error(Err::invalid_arg, "set '" + s.name + "' has no items");
        std::set<std::string> items(s.items.begin(), s.items.end());
        if (items.size() != s.items.size())
            throw Error(Err::invalid_arg,
                        "set '" + s.name + "' has duplicate items");
    }
}

const RangePolicy* PolicyUniverse::find_range(const std::string& name) const {
    for (const auto& r : ranges)
        if (r.name == name) return &r;
    return nullptr;
}

const SetPolicy* PolicyUniverse::find_set(const std::string& name) const {
    for (const auto& s : sets)
        if (s.name == name) return &s;
    return nullptr;
}

std::optional<size_t> PolicyUniverse::range_index(const std::string& name) const {
    for (size_t i = 0; i < ranges.size(); ++i)
        if (ranges[i].name == name) return i;
    return std::nullopt;
}

std::optional<size_t> PolicyUniverse::set_index(const std::string& name) const {
    for (size_t i = 0; i < sets.size(); ++i)
        if (sets[i].name == name) return i;
    return std::nullopt;
}

mpz_class pow_u(unsigned base, unsigned k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, k);
    return r;
}

unsigned choose_digit_count(const PolicyUniverse& u) {
    mpz_class widest = 1;
    for (const auto& r : u.ranges) widest = std::max(widest, mpz_class(r.hi - r.lo));
    unsigned k = 1;
    while (pow_u(u.base, k) < widest) ++k;
    return k;
}

std::vector<unsigned> decompose(const mpz_class& v, unsigned base, unsigned k) {
    if (v < 0 || v >= pow_u(base, k))
        throw Error(Err::invalid_arg, "value outside digit window");
    std::vector<unsigned> digits(k);
    mpz_class rest = v;
    for (unsigned i = 0; i < k; ++i) {
        mpz_class d = rest % base;
        digits[i] = unsigned(d.get_ui());
        rest /= base;
    }
    return digits;
}

mpz_class recompose(const std::vector<unsigned>& digits, unsigned base) {
    mpz_class acc = 0;
    for (size_t i = digits.size(); i-- > 0;) acc = acc * base + digits[i];
    return acc;
}

void UserAttributes::validate_against(const PolicyUniverse& u) const {
    for (const auto& [name, _] : range_values)
        if (!u.find_range(name))
            throw Error(Err::unknown_policy, "unknown range policy: " + name);
    for (const auto& [name, item] : set_items) {
        const SetPolicy* s = u.find_set(name);
        if (!s) throw Error(Err::unknown_policy, "unknown set policy: " + name);
        if (!s->index_of(item))
            throw Error(Err::not_satisfied,
                        "item '" + item + "' not in set '" + name + "'");
    }
    for (const auto& r : u.ranges)
        if (!range_values.count(r.name))
            throw Error(Err::invalid_arg,
                        "missing value for range policy: " + r.name);
    for (const auto& s : u.sets)
        if (!set_items.count(s.name))
            throw Error(Err::invalid_arg,
                        "missing item for set policy: " + s.name);
}

PolicySelection PolicySelection::make(std::vector<std::string> raw) {
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    return {std::move(raw)};
}

bool PolicySelection::contains(const std::string& n) const {
    return std::binary_search(names.begin(), names.end(), n);
}

std::string PolicySelection::joined() const {
    std::string out;
    for (size_t i = 0; i < names.size(); ++i) {
        if (i) out.push_back('\x1f');
        out += names[i];
    }
    return out;
}

SatisfactionWitness satisfies(const PolicyUniverse& u,
                              const UserAttributes& attrs,
                              const PolicySelection& sel, unsigned k) {
    SatisfactionWitness w;
    mpz_class window = pow_u(u.base, k);
    for (const auto& name : sel.names) {
        if (auto ri = u.range_index(name)) {
            const RangePolicy& r = u.ranges[*ri];
            auto it = attrs.range_values.find(name);
            if (it == attrs.range_values.end())
                throw Error(Err::not_satisfied, "no value for range: " + name);
            const mpz_class& a = it->second;
            if (a < r.lo || a >= r.hi)
                throw Error(Err::not_satisfied,
                            "value outside range policy: " + name);
            RangeWitness rw;
            rw.range_index = *ri;
            rw.digits_lo = decompose(a - r.lo, u.base, k);
            rw.digits_hi = decompose(a - r.hi + window, u.base, k);
            w.ranges.push_back(std::move(rw));
        } else if (auto si = u.set_index(name)) {
            const SetPolicy& s = u.sets[*si];
            auto it = attrs.set_items.find(name);
            if (it == attrs.set_items.end())
                throw Error(Err::not_satisfied, "no item for set: " + name);
            auto idx = s.index_of(it->second);
            if (!idx)
                throw Error(Err::not_satisfied,
                            "item not in set policy: " + name);
            w.sets.push_back(SetWitness{*si, *idx});
        } else {
            throw Error(Err::unknown_policy, "unknown policy: " + name);
        }
    }
    // Keep witnesses in universe order so proof layouts are deterministic.
    std::sort(w.ranges.begin(), w.ranges.end(),
              [](const RangeWitness& a, const RangeWitness& b) {
                  return a.range_index < b.range_index;
              });
    std::sort(w.sets.begin(), w.sets.end(),
              [](const SetWitness& a, const SetWitness& b) {
                  return a.set_index < b.set_index;
              });
    return w;
}

PolicyUniverse parse_policy_text(const std::string& text) {
    ConfFile f = parse_conf(text);
    PolicyUniverse u;
    if (const std::string* b = f.top.find("base")) {
        long v = std::stol(*b);
        if (v < 2) throw Error(Err::parse, "base must be >= 2");
        u.base = unsigned(v);
    }
    for (const auto& sec : f.sections) {
        if (sec.kind == "range") {
            RangePolicy r;
            r.name = sec.name;
            const std::string* lo = sec.find("low");
            const std::string* hi = sec.find("high");
            if (!lo || !hi)
                throw Error(Err::parse,
                            "range '" + sec.name + "' needs low and high");
            r.lo = mpz_class(*lo);
            r.hi = mpz_class(*hi);
            u.ranges.push_back(std::move(r));
        } else if (sec.kind == "set") {
            SetPolicy s;
            s.name = sec.name;
            const std::string* items = sec.find("items");
            if (!items)
                throw Error(Err::parse, "set '" + sec.name + "' needs items");
            s.items = split_list(*items, ',');
            u.sets.push_back(std::move(s));
        } else {
            throw Error(Err::parse, "unknown section kind: " + sec.kind);
        }
    }
    u.validate();
    return u;
}

UserAttributes parse_attrs_text(const std::string& text,
                                const PolicyUniverse& u) {
    ConfFile f = parse_conf(text);
    UserAttributes attrs;
    for (const auto& [key, value] : f.top.entries) {
        if (u.find_range(key)) {
            attrs.range_values[key] = mpz_class(value);
        } else if (u.find_set(key)) {
            attrs.set_items[key] = value;
        } else {
            throw Error(Err::unknown_policy, "unknown policy: " + key);
        }
    }
    attrs.validate_against(u);
    return attrs;
}

}  // namespace eticket
