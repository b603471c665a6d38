#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lingua {

inline constexpr std::string_view kNounType = "noun";
inline constexpr std::string_view kVerbType = "verb";

bool is_primitive_type(std::string_view type);

struct LexEntry {
    std::string word;
    std::string type;
};

// Insertion-ordered word list with unique words. Types are either the
// primitives "noun"/"verb" or composites like "averb bnoun" built from
// neighbor context.
class Lexicon {
  public:
    void add(std::string word, std::string type);
    void set_type(const std::string& word, std::string type);
    bool contains(const std::string& word) const;
    const std::string* find_type(const std::string& word) const;
    const std::vector<LexEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

  private:
    std::vector<LexEntry> entries_;
    std::unordered_map<std::string, std::size_t> index_;
};

struct SentencePattern {
    std::vector<std::string> slots;

    std::size_t word_count() const { return slots.size(); }
    std::string render() const;
    bool operator==(const SentencePattern&) const = default;
};

// Ordered pattern list; duplicates are kept so the history of learned
// sentence shapes stays intact.
class PatternCatalog {
  public:
    void add(SentencePattern pattern);
    const std::vector<SentencePattern>& patterns() const { return patterns_; }
    std::size_t size() const { return patterns_.size(); }
    bool empty() const { return patterns_.empty(); }

  private:
    std::vector<SentencePattern> patterns_;
};

Lexicon seed_lexicon(
    const std::vector<std::pair<std::string, std::string>>& seed);

std::vector<std::string> normalize_sentence(std::string_view raw);

enum class LearnMethod { Context, Pattern };

std::string_view learn_method_label(LearnMethod m);

struct ContextReport {
    std::vector<std::string> defined;
    std::vector<std::string> redefined;
    std::vector<std::string> unresolved;
    bool pattern_added = false;
};

struct PatternReport {
    std::size_t pattern_index = 0;
    int score = 0;
    int required = 0;
    bool matched = false;
    std::vector<std::string> defined;
};

ContextReport learn_by_context(const std::vector<std::string>& sentence,
                               Lexicon& lex, PatternCatalog& cat);

PatternReport learn_by_pattern(const std::vector<std::string>& sentence,
                               Lexicon& lex, const PatternCatalog& cat);

struct LearnResult {
    LearnMethod method = LearnMethod::Context;
    ContextReport context;
    std::optional<PatternReport> pattern;
};

LearnResult learn(const std::vector<std::string>& sentence, Lexicon& lex,
                  PatternCatalog& cat);

std::vector<std::string> collapse_phrases(
    const std::vector<std::string>& slots);

struct SyntaxState {
    Lexicon lexicon;
    PatternCatalog catalog;
};

std::string dump_state(const SyntaxState& state);
SyntaxState parse_state(std::string_view text);
void save_state(const SyntaxState& state, const std::filesystem::path& path);
SyntaxState load_state(const std::filesystem::path& path);

// Seed files are word<TAB>type lines where type is "noun" or "verb".
Lexicon load_seed_file(const std::filesystem::path& path);

}  // namespace lingua
