#include "lingua/corpus.hpp"

#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

#include "lingua/errors.hpp"
#include "lingua/text.hpp"

namespace lingua {

TokenStream tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    const std::u32string cps = decode_utf8(text);
    std::u32string current;
    for (char32_t cp : cps) {
        if (is_word_separator(cp)) {
            if (!current.empty()) {
                tokens.push_back(encode_utf8(current));
                current.clear();
            }
        } else {
            current.push_back(to_lower_cp(cp));
        }
    }
    if (!current.empty()) tokens.push_back(encode_utf8(current));
    return TokenStream(std::move(tokens));
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() +
                      "': " + std::strerror(errno));
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw IoError("error while reading '" + path.string() + "'");
    }
    return buffer.str();
}

TokenStream tokenize_file(const std::filesystem::path& path) {
    return tokenize(read_text_file(path));
}

}  // namespace lingua
