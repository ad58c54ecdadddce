#pragma once

#include "scheme/actors.hpp"

namespace eticket {

// A pair of accepted transcripts sharing a serial commitment D but carrying
// different tags E: evidence that one ticket answered two challenges.
struct DoubleSpendHit {
    size_t index_a = 0, index_b = 0;  // rows in the scanned table
    bool same_verifier = false;
};

// Scans a (merged) acceptance log for double-spend evidence.  Rows with equal
// D and equal E are duplicate records, not double spends, and are skipped.
std::vector<DoubleSpendHit> detect_double_spend(
    const Group& G, const std::vector<TableEntry>& table);

// Recovers the spender's public key Y = xi^{x_u} from a same-verifier hit:
//   (E_a^{r_b} / E_b^{r_a})^{1/(r_b - r_a)}.
// Throws Err::degenerate when the hit spans two verifiers or the nonces are
// equal (the tag bases or exponents then cancel and nothing can be solved).
GElem deanonymize(const Group& G, const TableEntry& a, const TableEntry& b);
GElem deanonymize(const Group& G, const std::vector<TableEntry>& table,
                  const DoubleSpendHit& hit);

}  // namespace eticket
