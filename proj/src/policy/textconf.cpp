#include "policy/textconf.hpp"

#include <sstream>

namespace eticket {

std::string trim_copy(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        std::string t = trim_copy(cur);
        if (!t.empty()) out.push_back(t);
    }
    return out;
}

ConfFile parse_conf(const std::string& text) {
    ConfFile file;
    ConfSection* current = &file.top;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim_copy(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw ParseError("unterminated section header", lineno);
            std::string header = trim_copy(t.substr(1, t.size() - 2));
            if (header.empty())
                throw ParseError("empty section header", lineno);
            ConfSection sec;
            size_t sp = header.find_first_of(" \t");
            if (sp == std::string::npos) {
                sec.kind = header;
            } else {
                sec.kind = header.substr(0, sp);
                sec.name = trim_copy(header.substr(sp + 1));
            }
            for (auto& c : sec.kind) c = char(tolower(c));
            file.sections.push_back(std::move(sec));
            current = &file.sections.back();
            continue;
        }
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'key = value'", lineno);
        std::string key = trim_copy(t.substr(0, eq));
        std::string value = trim_copy(t.substr(eq + 1));
        if (key.empty()) throw ParseError("empty key", lineno);
        current->entries.emplace_back(key, value);
    }
    return file;
}

}  // namespace eticket
