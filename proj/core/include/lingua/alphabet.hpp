#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

namespace lingua {

/// Ordered set of distinct characters. Defines the index space of every
/// n-gram profile built against it; profiles over different alphabets are
/// not comparable.
class Alphabet {
public:
    /// Validates that chars is nonempty and duplicate-free (the error names
    /// the repeated character).
    static Alphabet from_chars(std::u32string_view chars);

    /// spec is either the name of a preset ("french-default") or a literal
    /// UTF-8 character list such as "ab" or "abcdefghijklmnopqrstuvwxyz".
    static Alphabet from_spec(std::string_view spec);

    /// 41 letters: a-z interleaved with the accented Latin letters
    /// à â ä ç è é ê ë î ï ô ù û ü ÿ, in fixed order. Covers French in
    /// full and plain a-z languages by inclusion; the library's default.
    static const Alphabet& french_default();

    std::size_t size() const { return chars_.size(); }
    char32_t at(std::size_t i) const { return chars_[i]; }
    const std::u32string& chars() const { return chars_; }
    std::optional<std::uint32_t> index_of(char32_t c) const;
    std::string to_utf8() const;

    /// A single-character alphabet is structurally legal but cannot yield a
    /// nontrivial bigram space; callers may want to warn.
    bool is_trivial() const { return chars_.size() < 2; }

    bool operator==(const Alphabet& other) const {
        return chars_ == other.chars_;
    }

private:
    Alphabet() = default;

    std::u32string chars_;
    std::unordered_map<char32_t, std::uint32_t> index_;
};

}  // namespace lingua
