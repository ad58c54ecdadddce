#pragma once

#include "wire/wire.hpp"

// Append-only acceptance log kept by each verifier.  File layout: a sequence
// of records, each a 4-byte big-endian length followed by an encoded table
// entry.  Loading tolerates a truncated final record (a crash mid-append)
// by dropping it and reporting the fact; damage anywhere else aborts with
// Err::corrupt_record.

namespace eticket::wire {

Bytes encode_table_entry(const Group& G, const TableEntry& e);
TableEntry decode_table_entry(const Group& G, const Bytes& in);

void vtable_append(const std::string& path, const Group& G,
                   const TableEntry& e);

struct VTableLoad {
    std::vector<TableEntry> entries;
    bool truncated_tail = false;  // a partial trailing record was dropped
};

// Missing file loads as an empty table.
VTableLoad vtable_load(const std::string& path, const Group& G);

}  // namespace eticket::wire
