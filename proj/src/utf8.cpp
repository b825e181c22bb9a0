#include "p2ix/utf8.hpp"

namespace p2ix::utf8 {

bool decode_next(std::string_view s, std::size_t& pos, char32_t& cp) {
    if (pos >= s.size()) return false;
    const auto* b = reinterpret_cast<const unsigned char*>(s.data()) + pos;
    const std::size_t left = s.size() - pos;

    if (b[0] < 0x80) {
        cp = b[0];
        pos += 1;
        return true;
    }

    std::size_t len;
    char32_t value;
    char32_t min_value;
    if ((b[0] & 0xE0) == 0xC0) {
        len = 2;
        value = b[0] & 0x1F;
        min_value = 0x80;
    } else if ((b[0] & 0xF0) == 0xE0) {
        len = 3;
        value = b[0] & 0x0F;
        min_value = 0x800;
    } else if ((b[0] & 0xF8) == 0xF0) {
        len = 4;
        value = b[0] & 0x07;
        min_value = 0x10000;
    } else {
        return false;  // stray continuation byte or invalid lead
    }

    if (left < len) return false;
    for (std::size_t i = 1; i < len; ++i) {
        if ((b[i] & 0xC0) != 0x80) return false;
        value = (value << 6) | (b[i] & 0x3F);
    }
    if (value < min_value) return false;              // overlong
    if (value >= 0xD800 && value <= 0xDFFF) return false;  // surrogate
    if (value > 0x10FFFF) return false;

    cp = value;
    pos += len;
    return true;
}

std::size_t find_invalid(std::string_view s) {
    std::size_t pos = 0;
    char32_t cp;
    while (pos < s.size()) {
        if (!decode_next(s, pos, cp)) return pos;
    }
    return npos;
}

std::size_t sequence_length(std::string_view s, std::size_t pos) {
    std::size_t p = pos;
    char32_t cp;
    if (!decode_next(s, p, cp)) return 0;
    return p - pos;
}

}  // namespace p2ix::utf8
