#pragma once

#include <map>
#include <string>
#include <vector>

#include "common.hpp"

namespace eticket {

// Minimal sectioned key/value text format:
//   # comment            (also ';')
//   key = value          (top-level or inside a section)
//   [kind name]          (section header; name may contain spaces)
// Keys keep file order inside their section.
struct ConfSection {
    std::string kind;  // first word of the header, lower-cased
    std::string name;  // remainder of the header
    std::vector<std::pair<std::string, std::string>> entries;

    const std::string* find(const std::string& key) const {
        for (auto& [k, v] : entries)
            if (k == key) return &v;
        return nullptr;
    }
};

struct ConfFile {
    ConfSection top;  // entries before any section header
    std::vector<ConfSection> sections;
};

ConfFile parse_conf(const std::string& text);

std::string trim_copy(const std::string& s);
std::vector<std::string> split_list(const std::string& s, char sep);

}  // namespace eticket
