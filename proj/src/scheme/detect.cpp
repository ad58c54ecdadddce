#include "scheme/detect.hpp"

namespace eticket {

std::vector<DoubleSpendHit> detect_double_spend(
    const Group& G, const std::vector<TableEntry>& table) {
    std::vector<DoubleSpendHit> hits;
    for (size_t i = 0; i < table.size(); ++i) {
        for (size_t j = i + 1; j < table.size(); ++j) {
            if (!G.g_eq(table[i].D, table[j].D)) continue;
            if (G.g_eq(table[i].E, table[j].E)) continue;  // duplicate record
            hits.push_back(DoubleSpendHit{
                i, j, table[i].verifier_id == table[j].verifier_id});
        }
    }
    return hits;
}

GElem deanonymize(const Group& G, const TableEntry& a, const TableEntry& b) {
    if (a.verifier_id != b.verifier_id)
        throw Error(Err::degenerate,
                    "tags from different verifiers use different bases");
    if (G.s_eq(a.r, b.r))
        throw Error(Err::degenerate, "equal nonces cannot be solved");
    // E_a = Y H^{r_a s}, E_b = Y H^{r_b s}  =>  E_a^{r_b} / E_b^{r_a}
    // = Y^{r_b - r_a}, so raising to 1/(r_b - r_a) isolates Y.
    GElem num = G.pow(a.E, b.r);
    GElem den = G.pow(b.E, a.r);
    Scalar d = G.s_inv(G.s_sub(b.r, a.r));
    return G.pow(G.div(num, den), d);
}

GElem deanonymize(const Group& G, const std::vector<TableEntry>& table,
                  const DoubleSpendHit& hit) {
    return deanonymize(G, table.at(hit.index_a), table.at(hit.index_b));
}

}  // namespace eticket
