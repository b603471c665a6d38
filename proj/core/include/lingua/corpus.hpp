#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace lingua {

/// Ordered stream of lowercased words. Immutable once built; safe to share
/// across threads.
class TokenStream {
public:
    TokenStream() = default;
    explicit TokenStream(std::vector<std::string> tokens)
        : tokens_(std::move(tokens)) {}

    const std::vector<std::string>& tokens() const { return tokens_; }
    std::size_t word_count() const { return tokens_.size(); }
    bool empty() const { return tokens_.empty(); }

private:
    std::vector<std::string> tokens_;
};

/// Splits on runs of space/tab/CR/LF and lowercases every token. Total:
/// never fails, empty input gives an empty stream. Punctuation is kept;
/// the profiling layer skips characters outside its alphabet and the
/// sentence layer strips terminal punctuation itself.
TokenStream tokenize(std::string_view text);

/// Reads a whole UTF-8 text file. Throws IoError naming the path.
std::string read_text_file(const std::filesystem::path& path);

TokenStream tokenize_file(const std::filesystem::path& path);

}  // namespace lingua
