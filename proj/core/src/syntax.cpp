#include "lingua/syntax.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cstring>
#include <fstream>

#include "lingua/corpus.hpp"
#include "lingua/errors.hpp"

namespace lingua {

namespace {

bool valid_word(std::string_view word) {
    if (word.empty()) return false;
    return word.find_first_of(" \t\r\n") == std::string_view::npos;
}

void check_type(std::string_view type) {
    if (type.empty()) {
        throw ValidationError("word type must be nonempty");
    }
    if (type.find_first_of("\t\r\n|") != std::string_view::npos) {
        throw ValidationError("word type '" + std::string(type) +
                              "' contains a reserved character");
    }
}

void check_sentence(const std::vector<std::string>& sentence) {
    if (sentence.empty()) {
        throw ValidationError("sentence must contain at least one word");
    }
    for (const auto& w : sentence) {
        if (!valid_word(w)) {
            throw ValidationError("sentence word '" + w +
                                  "' is empty or contains whitespace");
        }
    }
}

// Composite type for the word at position i, built from the current types
// of its immediate neighbors. Untyped neighbors contribute nothing.
std::string context_candidate(const std::vector<std::string>& sentence,
                              std::size_t i, const Lexicon& lex) {
    std::string candidate;
    if (i > 0) {
        if (const std::string* prev = lex.find_type(sentence[i - 1])) {
            candidate += 'a';
            candidate += *prev;
            candidate += ' ';
        }
    }
    if (i + 1 < sentence.size()) {
        if (const std::string* next = lex.find_type(sentence[i + 1])) {
            candidate += 'b';
            candidate += *next;
            candidate += ' ';
        }
    }
    while (!candidate.empty() && candidate.back() == ' ') candidate.pop_back();
    return candidate;
}

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t nl = text.find('\n', start);
        std::string_view line = nl == std::string_view::npos
                                    ? text.substr(start)
                                    : text.substr(start, nl - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (nl == std::string_view::npos) {
            if (!line.empty()) lines.emplace_back(line);
            break;
        }
        lines.emplace_back(line);
        start = nl + 1;
    }
    return lines;
}

}  // namespace

bool is_primitive_type(std::string_view type) {
    return type == kNounType || type == kVerbType;
}

void Lexicon::add(std::string word, std::string type) {
    if (!valid_word(word)) {
        throw ValidationError("word '" + word +
                              "' is empty or contains whitespace");
    }
    check_type(type);
    if (index_.contains(word)) {
        throw ValidationError("word '" + word + "' is already defined");
    }
    index_.emplace(word, entries_.size());
    entries_.push_back({std::move(word), std::move(type)});
}

void Lexicon::set_type(const std::string& word, std::string type) {
    check_type(type);
    const auto it = index_.find(word);
    if (it == index_.end()) {
        throw ValidationError("word '" + word + "' is not in the lexicon");
    }
    entries_[it->second].type = std::move(type);
}

bool Lexicon::contains(const std::string& word) const {
    return index_.contains(word);
}

const std::string* Lexicon::find_type(const std::string& word) const {
    const auto it = index_.find(word);
    return it == index_.end() ? nullptr : &entries_[it->second].type;
}

std::string SentencePattern::render() const {
    std::string out = std::to_string(word_count());
    out += ' ';
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (i > 0) out += '|';
        out += slots[i];
    }
    return out;
}

void PatternCatalog::add(SentencePattern pattern) {
    if (pattern.slots.empty()) {
        throw ValidationError("sentence pattern must have at least one slot");
    }
    for (const auto& slot : pattern.slots) check_type(slot);
    patterns_.push_back(std::move(pattern));
}

Lexicon seed_lexicon(
    const std::vector<std::pair<std::string, std::string>>& seed) {
    Lexicon lex;
    for (const auto& [word, type] : seed) {
        if (!is_primitive_type(type)) {
            throw ValidationError("seed type for '" + word +
                                  "' must be 'noun' or 'verb', got '" + type +
                                  "'");
        }
        lex.add(word, type);
    }
    return lex;
}

std::vector<std::string> normalize_sentence(std::string_view raw) {
    std::vector<std::string> words;
    const TokenStream stream = tokenize(raw);
    for (const std::string& token : stream.tokens()) {
        std::string word = token;
        while (!word.empty() && (word.back() == '.' || word.back() == ',' ||
                                 word.back() == '!' || word.back() == '?')) {
            word.pop_back();
        }
        if (!word.empty()) words.push_back(std::move(word));
    }
    if (words.empty()) {
        throw ValidationError("sentence contains no words");
    }
    return words;
}

std::string_view learn_method_label(LearnMethod m) {
    return m == LearnMethod::Context ? "context" : "pattern";
}

ContextReport learn_by_context(const std::vector<std::string>& sentence,
                               Lexicon& lex, PatternCatalog& cat) {
    check_sentence(sentence);
    ContextReport report;
    for (std::size_t i = 0; i < sentence.size(); ++i) {
        const std::string& word = sentence[i];
        const std::string candidate = context_candidate(sentence, i, lex);
        if (const std::string* stored = lex.find_type(word)) {
            if (is_primitive_type(*stored)) continue;
            if (!candidate.empty() && candidate.size() <= stored->size() &&
                candidate != *stored) {
                lex.set_type(word, candidate);
                report.redefined.push_back(word);
            }
        } else if (!candidate.empty()) {
            lex.add(word, candidate);
            report.defined.push_back(word);
        } else {
            report.unresolved.push_back(word);
        }
    }

    SentencePattern pattern;
    pattern.slots.reserve(sentence.size());
    bool complete = true;
    for (const auto& word : sentence) {
        const std::string* type = lex.find_type(word);
        if (!type) {
            complete = false;
            break;
        }
        pattern.slots.push_back(*type);
    }
    if (complete) {
        cat.add(std::move(pattern));
        report.pattern_added = true;
    }
    return report;
}

PatternReport learn_by_pattern(const std::vector<std::string>& sentence,
                               Lexicon& lex, const PatternCatalog& cat) {
    check_sentence(sentence);
    if (cat.empty()) {
        throw ValidationError("pattern catalog is empty");
    }
    const std::size_t n = sentence.size();

    PatternReport report;
    report.required = static_cast<int>(n / 2);
    int best = -1;
    for (std::size_t j = 0; j < cat.size(); ++j) {
        const SentencePattern& pattern = cat.patterns()[j];
        int score = 0;
        const std::size_t limit = std::min(n, pattern.word_count());
        for (std::size_t i = 0; i < limit; ++i) {
            const std::string* type = lex.find_type(sentence[i]);
            if (type && *type == pattern.slots[i]) ++score;
        }
        if (pattern.word_count() == n) ++score;
        if (score > best) {
            best = score;
            report.pattern_index = j;
        }
    }
    report.score = best;
    report.matched = best > report.required;
    if (!report.matched) return report;

    const auto& slots = cat.patterns()[report.pattern_index].slots;
    for (std::size_t i = 0; i < n && i < slots.size(); ++i) {
        if (!lex.contains(sentence[i])) {
            lex.add(sentence[i], slots[i]);
            report.defined.push_back(sentence[i]);
        }
    }
    return report;
}

LearnResult learn(const std::vector<std::string>& sentence, Lexicon& lex,
                  PatternCatalog& cat) {
    LearnResult result;
    if (!cat.empty()) {
        PatternReport attempt = learn_by_pattern(sentence, lex, cat);
        const bool applied = !attempt.defined.empty();
        result.pattern = std::move(attempt);
        if (applied) {
            result.method = LearnMethod::Pattern;
            return result;
        }
    }
    result.method = LearnMethod::Context;
    result.context = learn_by_context(sentence, lex, cat);
    return result;
}

std::vector<std::string> collapse_phrases(
    const std::vector<std::string>& slots) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < slots.size()) {
        if (is_primitive_type(slots[i])) {
            std::size_t run = 1;
            while (i + run < slots.size() && slots[i + run] == slots[i]) ++run;
            if (run >= 2) {
                out.push_back(slots[i] + "-phrase(" + std::to_string(run) +
                              ")");
                i += run;
                continue;
            }
        }
        out.push_back(slots[i]);
        ++i;
    }
    return out;
}

std::string dump_state(const SyntaxState& state) {
    std::string out;
    for (const auto& entry : state.lexicon.entries()) {
        out += entry.word;
        out += '\t';
        out += entry.type;
        out += '\n';
    }
    out += '\n';
    for (const auto& pattern : state.catalog.patterns()) {
        out += std::to_string(pattern.word_count());
        out += '\t';
        for (std::size_t i = 0; i < pattern.slots.size(); ++i) {
            if (i > 0) out += '|';
            out += pattern.slots[i];
        }
        out += '\n';
    }
    return out;
}

SyntaxState parse_state(std::string_view text) {
    SyntaxState state;
    const std::vector<std::string> lines = split_lines(text);
    std::size_t i = 0;
    for (; i < lines.size() && !lines[i].empty(); ++i) {
        const std::string& line = lines[i];
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos) {
            throw ValidationError("state line " + std::to_string(i + 1) +
                                  ": expected word<TAB>type, got '" + line +
                                  "'");
        }
        state.lexicon.add(line.substr(0, tab), line.substr(tab + 1));
    }
    for (; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        if (line.empty()) continue;
        const std::size_t tab = line.find('\t');
        std::size_t declared = 0;
        const char* begin = line.data();
        const char* end = begin + (tab == std::string::npos ? 0 : tab);
        const auto [ptr, ec] = std::from_chars(begin, end, declared);
        if (tab == std::string::npos || ec != std::errc{} || ptr != end ||
            declared == 0) {
            throw ValidationError("state line " + std::to_string(i + 1) +
                                  ": expected count<TAB>slot|slot|..., got '" +
                                  line + "'");
        }
        SentencePattern pattern;
        std::size_t start = tab + 1;
        while (true) {
            const std::size_t bar = line.find('|', start);
            if (bar == std::string::npos) {
                pattern.slots.push_back(line.substr(start));
                break;
            }
            pattern.slots.push_back(line.substr(start, bar - start));
            start = bar + 1;
        }
        if (pattern.slots.size() != declared) {
            throw ValidationError(
                "state line " + std::to_string(i + 1) + ": declared " +
                std::to_string(declared) + " slots but found " +
                std::to_string(pattern.slots.size()));
        }
        state.catalog.add(std::move(pattern));
    }
    return state;
}

void save_state(const SyntaxState& state, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write '" + path.string() +
                      "': " + std::strerror(errno));
    }
    out << dump_state(state);
    out.flush();
    if (!out) {
        throw IoError("error while writing '" + path.string() + "'");
    }
}

SyntaxState load_state(const std::filesystem::path& path) {
    return parse_state(read_text_file(path));
}

Lexicon load_seed_file(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    std::vector<std::pair<std::string, std::string>> seed;
    const std::vector<std::string> lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        if (line.empty()) continue;
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos) {
            throw ValidationError("seed line " + std::to_string(i + 1) +
                                  ": expected word<TAB>type, got '" + line +
                                  "'");
        }
        seed.emplace_back(line.substr(0, tab), line.substr(tab + 1));
    }
    return seed_lexicon(seed);
}

}  // namespace lingua
