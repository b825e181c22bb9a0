#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace p2ix::utf8 {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

/// Decodes the code point starting at s[pos] and advances pos past it.
/// Returns false on an invalid sequence (pos is left unchanged).
/// Rejects overlong encodings, surrogates and values above U+10FFFF.
bool decode_next(std::string_view s, std::size_t& pos, char32_t& cp);

/// Byte offset of the first invalid sequence, or npos if s is valid UTF-8.
std::size_t find_invalid(std::string_view s);

/// Number of bytes of the code point starting at s[pos] (0 if invalid).
std::size_t sequence_length(std::string_view s, std::size_t pos);

}  // namespace p2ix::utf8
