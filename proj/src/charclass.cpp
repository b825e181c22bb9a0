#include "p2ix/charclass.hpp"

#include <vector>

#include "p2ix/errors.hpp"
#include "p2ix/utf8.hpp"

namespace p2ix {

CharClass CharClass::parse(std::string_view expr) {
    std::vector<char32_t> cps;
    std::size_t pos = 0;
    char32_t cp;
    while (pos < expr.size()) {
        if (!utf8::decode_next(expr, pos, cp)) {
            throw ParseError("invalid UTF-8 in character class", pos);
        }
        cps.push_back(cp);
    }

    CharClass cc;
    for (std::size_t i = 0; i < cps.size(); ++i) {
        // "x-y" forms a range unless the dash is first or last.
        if (i + 2 < cps.size() && cps[i + 1] == U'-') {
            if (cps[i] > cps[i + 2]) {
                throw ParseError("reversed range in character class");
            }
            cc.ranges_.emplace_back(cps[i], cps[i + 2]);
            i += 2;
        } else {
            cc.ranges_.emplace_back(cps[i], cps[i]);
        }
    }
    return cc;
}

const CharClass& CharClass::ascii_punctuation() {
    static const CharClass cc = CharClass::parse("!-/:-@[-`{-~");
    return cc;
}

bool CharClass::contains(char32_t cp) const {
    for (const auto& [lo, hi] : ranges_) {
        if (cp >= lo && cp <= hi) return true;
    }
    return false;
}

bool CharClass::matches_all(std::string_view token) const {
    if (token.empty()) return false;
    std::size_t pos = 0;
    char32_t cp;
    while (pos < token.size()) {
        if (!utf8::decode_next(token, pos, cp)) return false;
        if (!contains(cp)) return false;
    }
    return true;
}

}  // namespace p2ix
