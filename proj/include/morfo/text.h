#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace morfo::text {

bool is_valid_utf8(std::string_view s);

// Lowercase + NFC. ASCII input takes a fast path; everything else goes through ICU.
// Throws EncodingError on invalid UTF-8.
std::string normalize_lower(std::string_view s);

inline bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string_view trim(std::string_view s);

// Splits on runs of ASCII whitespace; never yields empty pieces.
std::vector<std::string_view> split_whitespace(std::string_view s);

}  // namespace morfo::text
