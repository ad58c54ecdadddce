#pragma once

#include <iosfwd>

#include "groups/group.hpp"

namespace eticket {

struct BenchOptions {
    GroupConfig group;
    uint64_t seed = 1;
    unsigned iters = 20;  // timed repetitions per phase
};

struct BenchResult {
    struct Row {
        std::string phase;   // e.g. "policy_prove"
        std::string entity;  // authority / seller / holder / verifier
        size_t n1 = 0, n2 = 0;
        unsigned k = 0;
        size_t set_size = 0;
        unsigned iters = 0;
        double mean_ms = 0.0;
    };
    std::vector<Row> rows;

    const Row* find(const std::string& phase, unsigned k, size_t set_size) const;
};

// Times every protocol phase on a representative universe, then sweeps the
// digit count k over {5, 10, 20} (one range policy of width 2^k) and the set
// size over {10, 100} (one set policy).  Writes CSV to `csv` when non-null
// and a human-readable summary to `log` when non-null.
BenchResult run_bench(const BenchOptions& opt, std::ostream* csv,
                      std::ostream* log);

}  // namespace eticket
