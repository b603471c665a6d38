#include "lingua/alphabet.hpp"

#include "lingua/errors.hpp"
#include "lingua/text.hpp"

namespace lingua {

Alphabet Alphabet::from_chars(std::u32string_view chars) {
    if (chars.empty()) {
        throw ValidationError("alphabet must contain at least one character");
    }
    Alphabet a;
    a.chars_.reserve(chars.size());
    for (char32_t c : chars) {
        const auto idx = static_cast<std::uint32_t>(a.chars_.size());
        if (!a.index_.emplace(c, idx).second) {
            throw ValidationError("duplicate character '" + encode_utf8(c) +
                                  "' in alphabet");
        }
        a.chars_.push_back(c);
    }
    return a;
}

Alphabet Alphabet::from_spec(std::string_view spec) {
    if (spec == "french-default") return french_default();
    return from_chars(decode_utf8(spec));
}

const Alphabet& Alphabet::french_default() {
    static const Alphabet instance = from_chars(std::u32string{
        U'a', U'à', U'â', U'ä', U'b',      U'c',
        U'ç', U'd', U'e',      U'è', U'é', U'ê',
        U'ë', U'f', U'g',      U'h',      U'i',      U'î',
        U'ï', U'j', U'k',      U'l',      U'm',      U'n',
        U'o',      U'ô', U'p', U'q',      U'r',      U's',
        U't',      U'u', U'ù', U'û', U'ü', U'v',
        U'w',      U'x', U'y',      U'ÿ', U'z'});
    return instance;
}

std::optional<std::uint32_t> Alphabet::index_of(char32_t c) const {
    const auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::string Alphabet::to_utf8() const { return encode_utf8(chars_); }

}  // namespace lingua
