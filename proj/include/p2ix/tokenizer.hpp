#pragma once

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "p2ix/charclass.hpp"

namespace p2ix {

enum class TokenizerMode { whitespace, dictionary };

/// Decides which tokens can start or continue a phrase. Punctuation tokens
/// and tokens on the stop list break content runs; they are still emitted by
/// the tokenizer and indexed.
struct ContentFilter {
    CharClass punctuation = CharClass::ascii_punctuation();
    std::set<std::string> stop_tokens;

    bool is_punctuation(std::string_view token) const {
        return punctuation.matches_all(token);
    }
    bool is_stop_token(const std::string& token) const {
        return stop_tokens.count(token) > 0;
    }
};

/// Deterministic text segmentation. Two modes:
///  - whitespace: splits on whitespace; each punctuation code point becomes
///    its own token.
///  - dictionary: greedy longest match against a word list, consuming one
///    code point on a miss; whitespace separates but is never emitted.
class Tokenizer {
public:
    static Tokenizer whitespace(ContentFilter filter = {});
    /// Throws ConfigError when the word list is empty.
    static Tokenizer dictionary(std::vector<std::string> words, ContentFilter filter = {});

    std::vector<std::string> tokenize(std::string_view text) const;

    TokenizerMode mode() const { return mode_; }
    const ContentFilter& filter() const { return filter_; }

private:
    Tokenizer(TokenizerMode mode, ContentFilter filter)
        : mode_(mode), filter_(std::move(filter)) {}

    std::vector<std::string> tokenize_whitespace(std::string_view text) const;
    std::vector<std::string> tokenize_dictionary(std::string_view text) const;

    TokenizerMode mode_;
    ContentFilter filter_;
    std::set<std::string> words_;
    std::vector<std::size_t> word_lengths_;  // distinct byte lengths, descending
};

/// One word per line; blank lines skipped. Throws ParseError on invalid
/// UTF-8 and ConfigError on entries containing whitespace.
std::vector<std::string> load_dictionary(const std::filesystem::path& path);

}  // namespace p2ix
