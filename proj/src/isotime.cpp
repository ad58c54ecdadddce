#include "isotime.hpp"

#include <cstdio>
#include <ctime>

namespace eticket {

namespace {

// Days since 1970-01-01 for a civil date (proleptic Gregorian).
int64_t days_from_civil(int64_t y, unsigned m, unsigned d) {
    y -= m <= 2;
    const int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<int64_t>(doe) - 719468;
}

bool all_digits(const std::string& s, size_t from, size_t count) {
    if (from + count > s.size()) return false;
    for (size_t i = from; i < from + count; ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

int num(const std::string& s, size_t from, size_t count) {
    int v = 0;
    for (size_t i = from; i < from + count; ++i) v = v * 10 + (s[i] - '0');
    return v;
}

}  // namespace

std::optional<int64_t> parse_iso8601(const std::string& text) {
    if (!all_digits(text, 0, 4) || text.size() < 10) return std::nullopt;
    if (text[4] != '-' || text[7] != '-') return std::nullopt;
    if (!all_digits(text, 5, 2) || !all_digits(text, 8, 2)) return std::nullopt;
    int year = num(text, 0, 4), month = num(text, 5, 2), day = num(text, 8, 2);
    if (month < 1 || month > 12 || day < 1 || day > 31) return std::nullopt;
    int hh = 0, mm = 0, ss = 0;
    size_t pos = 10;
    if (pos < text.size() && text[pos] == 'T') {
        if (!all_digits(text, 11, 2) || text.size() < 19) return std::nullopt;
        if (text[13] != ':' || text[16] != ':') return std::nullopt;
        if (!all_digits(text, 14, 2) || !all_digits(text, 17, 2)) return std::nullopt;
        hh = num(text, 11, 2), mm = num(text, 14, 2), ss = num(text, 17, 2);
        if (hh > 23 || mm > 59 || ss > 60) return std::nullopt;
        pos = 19;
    }
    if (pos < text.size() && text[pos] == 'Z') ++pos;
    if (pos != text.size()) return std::nullopt;
    return days_from_civil(year, month, day) * 86400 + hh * 3600 + mm * 60 + ss;
}

std::string now_utc_iso() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[80];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ",
                  tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday, tm.tm_hour,
                  tm.tm_min, tm.tm_sec);
    return buf;
}

}  // namespace eticket
