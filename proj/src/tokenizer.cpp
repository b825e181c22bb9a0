#include "p2ix/tokenizer.hpp"

#include <algorithm>

#include "p2ix/errors.hpp"
#include "p2ix/io.hpp"
#include "p2ix/utf8.hpp"

namespace p2ix {

namespace {

bool is_space_cp(char32_t cp) {
    switch (cp) {
        case U' ':
        case U'\t':
        case U'\n':
        case U'\r':
        case U'\v':
        case U'\f':
        case U' ':
        case U'　':
            return true;
        default:
            return false;
    }
}

}  // namespace

Tokenizer Tokenizer::whitespace(ContentFilter filter) {
    return Tokenizer(TokenizerMode::whitespace, std::move(filter));
}

Tokenizer Tokenizer::dictionary(std::vector<std::string> words, ContentFilter filter) {
    if (words.empty()) {
        throw ConfigError("dictionary tokenizer requires a non-empty word list");
    }
    Tokenizer t(TokenizerMode::dictionary, std::move(filter));
    t.words_.insert(words.begin(), words.end());
    std::set<std::size_t> lengths;
    for (const auto& w : t.words_) lengths.insert(w.size());
    t.word_lengths_.assign(lengths.rbegin(), lengths.rend());
    return t;
}

std::vector<std::string> Tokenizer::tokenize(std::string_view text) const {
    return mode_ == TokenizerMode::whitespace ? tokenize_whitespace(text)
                                              : tokenize_dictionary(text);
}

std::vector<std::string> Tokenizer::tokenize_whitespace(std::string_view text) const {
    std::vector<std::string> out;
    std::string current;
    std::size_t pos = 0;
    char32_t cp;
    while (pos < text.size()) {
        const std::size_t start = pos;
        if (!utf8::decode_next(text, pos, cp)) {
            // Callers validate encodings up front; treat a stray byte as its
            // own token rather than losing input.
            if (!current.empty()) {
                out.push_back(std::move(current));
                current.clear();
            }
            out.emplace_back(1, text[start]);
            pos = start + 1;
            continue;
        }
        const std::string_view piece = text.substr(start, pos - start);
        if (is_space_cp(cp)) {
            if (!current.empty()) {
                out.push_back(std::move(current));
                current.clear();
            }
        } else if (filter_.punctuation.contains(cp)) {
            if (!current.empty()) {
                out.push_back(std::move(current));
                current.clear();
            }
            out.emplace_back(piece);
        } else {
            current.append(piece);
        }
    }
    if (!current.empty()) out.push_back(std::move(current));
    return out;
}

std::vector<std::string> Tokenizer::tokenize_dictionary(std::string_view text) const {
    std::vector<std::string> out;
    std::size_t pos = 0;
    char32_t cp;
    while (pos < text.size()) {
        std::size_t probe = pos;
        if (!utf8::decode_next(text, probe, cp)) {
            out.emplace_back(1, text[pos]);
            ++pos;
            continue;
        }
        if (is_space_cp(cp)) {
            pos = probe;
            continue;
        }
        bool matched = false;
        for (std::size_t len : word_lengths_) {
            if (len > text.size() - pos) continue;
            const std::string_view candidate = text.substr(pos, len);
            if (words_.count(std::string(candidate)) > 0) {
                out.emplace_back(candidate);
                pos += len;
                matched = true;
                break;
            }
        }
        if (!matched) {
            out.emplace_back(text.substr(pos, probe - pos));
            pos = probe;
        }
    }
    return out;
}

std::vector<std::string> load_dictionary(const std::filesystem::path& path) {
    const std::string data = read_file(path);
    const std::size_t bad = utf8::find_invalid(data);
    if (bad != utf8::npos) {
        throw ParseError("invalid UTF-8 in dictionary file", bad);
    }
    std::vector<std::string> words;
    std::size_t start = 0;
    while (start <= data.size()) {
        std::size_t end = data.find('\n', start);
        if (end == std::string::npos) end = data.size();
        std::string line = data.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) {
            if (line.find_first_of(" \t") != std::string::npos) {
                throw ConfigError("dictionary entry contains whitespace: " + line);
            }
            words.push_back(std::move(line));
        }
        if (end == data.size()) break;
        start = end + 1;
    }
    return words;
}

}  // namespace p2ix
