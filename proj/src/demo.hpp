#pragma once

#include <iosfwd>

#include "groups/group.hpp"

namespace eticket {

struct DemoOptions {
    GroupConfig group;
    uint64_t seed = 1;
};

// Runs the complete lifecycle on a small built-in policy universe
// (two range policies, four set policies): setup, registrations, a ticket
// purchase, honest validation at two verifiers, a repeat-verifier abort, a
// cloned-device double spend, offline detection and de-anonymization, and a
// replay attempt.  Prints a trace to `out` (deterministic for a fixed seed
// and group configuration) and returns 0 iff every expectation held.
int run_demo(const DemoOptions& opt, std::ostream& out);

}  // namespace eticket
