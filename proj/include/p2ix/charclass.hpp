#pragma once

#include <string_view>
#include <utility>
#include <vector>

namespace p2ix {

/// A set of code points given as ranges and single characters, written the
/// way a regex character class body is: "0-9", "a-zA-Z", "ぁ-ゖ". A '-' at
/// the start or end of the expression is a literal dash. An empty expression
/// matches nothing.
class CharClass {
public:
    CharClass() = default;

    /// Parses a class expression. Throws ParseError on invalid UTF-8 or a
    /// range whose endpoints are reversed.
    static CharClass parse(std::string_view expr);

    /// The ASCII punctuation set (everything std::ispunct accepts in "C").
    static const CharClass& ascii_punctuation();

    bool contains(char32_t cp) const;

    /// True when the token is non-empty and every code point is in the class.
    bool matches_all(std::string_view token) const;

    bool empty() const { return ranges_.empty(); }

private:
    std::vector<std::pair<char32_t, char32_t>> ranges_;
};

}  // namespace p2ix
