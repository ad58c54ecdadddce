#include "wire/vtable.hpp"

#include <filesystem>
#include <fstream>

namespace eticket::wire {

Bytes encode_table_entry(const Group& G, const TableEntry& e) {
    Writer w(G);
    w.str(e.verifier_id);
    w.scalar(e.r);
    w.g(e.D).g(e.E).g(e.F).g(e.J);
    w.scalar(e.psi);
    return w.take();
}

TableEntry decode_table_entry(const Group& G, const Bytes& in) {
    Reader r(G, in);
    TableEntry e;
    e.verifier_id = r.str("verifier_id");
    e.r = r.scalar("r");
    e.D = r.g("D");
    e.E = r.g("E");
    e.F = r.g("F");
    e.J = r.g("J");
    e.psi = r.scalar("psi");
    r.done();
    return e;
}

void vtable_append(const std::string& path, const Group& G,
                   const TableEntry& e) {
    Bytes rec = encode_table_entry(G, e);
    std::ofstream f(path, std::ios::binary | std::ios::app);
    if (!f) throw Error(Err::io, "cannot open " + path + " for append");
    uint8_t len[4] = {uint8_t(rec.size() >> 24), uint8_t(rec.size() >> 16),
                      uint8_t(rec.size() >> 8), uint8_t(rec.size())};
    f.write(reinterpret_cast<const char*>(len), 4);
    f.write(reinterpret_cast<const char*>(rec.data()),
            std::streamsize(rec.size()));
    f.flush();
    if (!f) throw Error(Err::io, "write to " + path + " failed");
}

VTableLoad vtable_load(const std::string& path, const Group& G) {
    VTableLoad out;
    if (!std::filesystem::exists(path)) return out;
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(Err::io, "cannot open " + path);
    Bytes data((std::istreambuf_iterator<char>(f)),
               std::istreambuf_iterator<char>());
    size_t pos = 0;
    while (pos < data.size()) {
        if (data.size() - pos < 4) {
            out.truncated_tail = true;  // partial length prefix
            break;
        }
        uint32_t len = 0;
        for (int i = 0; i < 4; ++i) len = (len << 8) | data[pos + i];
        if (data.size() - pos - 4 < len) {
            out.truncated_tail = true;  // partial record body
            break;
        }
        Bytes rec(data.begin() + ptrdiff_t(pos + 4),
                  data.begin() + ptrdiff_t(pos + 4 + len));
        try {
            out.entries.push_back(decode_table_entry(G, rec));
        } catch (const Error& e) {
            throw Error(Err::corrupt_record,
                        "record " + std::to_string(out.entries.size()) +
                            " in " + path + " is damaged: " + e.what());
        }
        pos += 4 + len;
    }
    return out;
}

}  // namespace eticket::wire
