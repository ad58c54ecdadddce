#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace eticket {

// Parses "YYYY-MM-DD", optionally followed by "THH:MM:SS" and an optional
// trailing "Z", into seconds since the Unix epoch (UTC).  Returns nullopt if
// the text does not match; validity-period strings are free text and checks
// that involve them are skipped when parsing fails.
std::optional<int64_t> parse_iso8601(const std::string& text);

// Current UTC time formatted as "YYYY-MM-DDTHH:MM:SSZ".
std::string now_utc_iso();

}  // namespace eticket
