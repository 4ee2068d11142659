#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace meckit {

// Whitespace = space and horizontal tab. Line endings are handled by the
// readers, not here.
std::string_view trim(std::string_view text);

// ASCII case-fold; non-ASCII bytes pass through untouched.
std::string to_lower_ascii(std::string_view text);

// True iff the bytes form well-formed UTF-8 (rejects overlongs, surrogates
// and out-of-range code points).
bool is_valid_utf8(std::string_view bytes);

// Splits one CSV record into fields. Double-quoted fields may contain commas
// and doubled quotes. Returns false on an unterminated quote or on garbage
// after a closing quote.
bool split_csv_line(std::string_view line, std::vector<std::string>& fields);

// Quotes a field only when it needs it (comma, quote or newline inside).
std::string csv_escape(std::string_view field);

// Fixed-point rendering with one decimal, independent of the global locale.
std::string format_one_decimal(double value);

}  // namespace meckit
