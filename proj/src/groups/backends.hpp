#pragma once

#include "groups/group.hpp"

namespace eticket::detail {

std::shared_ptr<const Group> make_exponent_group(const GroupConfig& cfg);
std::shared_ptr<const Group> make_pairing_group(const GroupConfig& cfg, Rng& rng);
std::shared_ptr<const Group> make_pairing_group_from(const GroupConfig& cfg,
                                                     const mpz_class& q,
                                                     const mpz_class& r);

}  // namespace eticket::detail
