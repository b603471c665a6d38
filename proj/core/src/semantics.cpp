#include "lingua/semantics.hpp"

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <numeric>

#include "lingua/corpus.hpp"
#include "lingua/errors.hpp"
#include "lingua/syntax.hpp"
#include "lingua/text.hpp"

namespace lingua {

namespace {

void check_word(std::string_view word, std::string_view role) {
    if (word.empty()) {
        throw ValidationError(std::string(role) + " must be nonempty");
    }
    if (word.find_first_of(" \t\r\n|@,") != std::string_view::npos) {
        throw ValidationError(std::string(role) + " '" + std::string(word) +
                              "' contains whitespace or a reserved character");
    }
}

void check_sentence(const AnnotatedSentence& s) {
    check_word(s.subject, "subject");
    check_word(s.verb, "verb");
    if (s.object) check_word(*s.object, "object");
    for (const auto& use : s.adjectives) {
        check_word(use.adjective, "adjective");
        if (use.attach == Attach::Object && !s.object) {
            throw ValidationError("adjective '" + use.adjective +
                                  "' attaches to a missing object");
        }
    }
}

std::string fold_case(std::string_view word) {
    std::string out;
    for (const char32_t cp : decode_utf8(word)) {
        out += encode_utf8(to_lower_cp(cp));
    }
    return out;
}

std::vector<std::string> split_on(std::string_view text, char sep) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            fields.emplace_back(text.substr(start));
            return fields;
        }
        fields.emplace_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string join(const std::set<std::string>& items) {
    std::string out;
    for (const auto& item : items) {
        if (!out.empty()) out += ',';
        out += item;
    }
    return out;
}

std::set<std::string> parse_word_set(const std::string& field,
                                     std::string_view role) {
    std::set<std::string> out;
    if (field.empty()) return out;
    for (auto& word : split_on(field, ',')) {
        check_word(word, role);
        out.insert(std::move(word));
    }
    return out;
}

// Disjoint-set forest over record indices.
class UnionFind {
  public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

  private:
    std::vector<std::size_t> parent_;
};

}  // namespace

NounRecord& AssociationWeb::noun_record(const std::string& noun) {
    const auto it = noun_index_.find(noun);
    if (it != noun_index_.end()) return nouns_[it->second];
    noun_index_.emplace(noun, nouns_.size());
    nouns_.push_back({noun, {}, {}, {}});
    return nouns_.back();
}

VerbRecord& AssociationWeb::verb_record(const std::string& verb) {
    const auto it = verb_index_.find(verb);
    if (it != verb_index_.end()) return verbs_[it->second];
    verb_index_.emplace(verb, verbs_.size());
    verbs_.push_back({verb, {}, {}});
    return verbs_.back();
}

void AssociationWeb::ingest(const AnnotatedSentence& sentence) {
    check_sentence(sentence);
    noun_record(sentence.subject).verbs_as_subject.insert(sentence.verb);
    verb_record(sentence.verb).subjects.insert(sentence.subject);
    if (sentence.object) {
        noun_record(*sentence.object).verbs_as_object.insert(sentence.verb);
        verb_record(sentence.verb).objects.insert(*sentence.object);
    }
    for (const auto& use : sentence.adjectives) {
        const std::string& noun =
            use.attach == Attach::Subject ? sentence.subject : *sentence.object;
        noun_record(noun).adjectives.insert(use.adjective);
    }
}

const NounRecord* AssociationWeb::find_noun(const std::string& noun) const {
    const auto it = noun_index_.find(noun);
    return it == noun_index_.end() ? nullptr : &nouns_[it->second];
}

const VerbRecord* AssociationWeb::find_verb(const std::string& verb) const {
    const auto it = verb_index_.find(verb);
    return it == verb_index_.end() ? nullptr : &verbs_[it->second];
}

std::set<std::string> AssociationWeb::attributes(
    const std::string& noun) const {
    const NounRecord* record = find_noun(noun);
    if (!record) {
        throw ValidationError("noun '" + noun + "' is not in the web");
    }
    std::set<std::string> out = record->adjectives;
    out.insert(record->verbs_as_object.begin(), record->verbs_as_object.end());
    return out;
}

double noun_similarity(const std::string& a, const std::string& b,
                       const AssociationWeb& web) {
    const std::set<std::string> attrs_a = web.attributes(a);
    const std::set<std::string> attrs_b = web.attributes(b);
    if (attrs_a.empty() && attrs_b.empty()) return 0.0;

    std::size_t intersection = 0;
    auto ia = attrs_a.begin();
    auto ib = attrs_b.begin();
    while (ia != attrs_a.end() && ib != attrs_b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++intersection;
            ++ia;
            ++ib;
        }
    }
    const std::size_t uni = attrs_a.size() + attrs_b.size() - intersection;
    return static_cast<double>(intersection) / static_cast<double>(uni);
}

std::vector<std::vector<std::string>> categorize(const AssociationWeb& web,
                                                 double threshold) {
    if (!(threshold > 0.0) || threshold > 1.0) {
        throw ValidationError("similarity threshold must be in (0, 1]");
    }
    const auto& nouns = web.nouns();
    UnionFind groups(nouns.size());
    for (std::size_t i = 0; i < nouns.size(); ++i) {
        for (std::size_t j = i + 1; j < nouns.size(); ++j) {
            if (noun_similarity(nouns[i].noun, nouns[j].noun, web) >=
                threshold) {
                groups.unite(i, j);
            }
        }
    }
    std::vector<std::vector<std::string>> partition;
    std::unordered_map<std::size_t, std::size_t> root_to_group;
    for (std::size_t i = 0; i < nouns.size(); ++i) {
        const std::size_t root = groups.find(i);
        const auto it = root_to_group.find(root);
        if (it == root_to_group.end()) {
            root_to_group.emplace(root, partition.size());
            partition.push_back({nouns[i].noun});
        } else {
            partition[it->second].push_back(nouns[i].noun);
        }
    }
    return partition;
}

AnnotatedSentence parse_annotated_line(std::string_view line) {
    const std::vector<std::string> fields = split_on(line, '|');
    if (fields.size() < 2 || fields.size() > 4) {
        throw ValidationError(
            "annotated sentence must be subject|verb|object?|adjectives, "
            "got '" +
            std::string(line) + "'");
    }
    AnnotatedSentence s;
    s.subject = fold_case(fields[0]);
    s.verb = fold_case(fields[1]);
    if (fields.size() >= 3 && !fields[2].empty()) {
        s.object = fold_case(fields[2]);
    }
    if (fields.size() == 4 && !fields[3].empty()) {
        for (const auto& item : split_on(fields[3], ',')) {
            const std::size_t at = item.find('@');
            if (at == std::string::npos) {
                throw ValidationError("adjective '" + item +
                                      "' must name its attachment with "
                                      "@subject or @object");
            }
            const std::string target = item.substr(at + 1);
            AdjectiveUse use;
            use.adjective = fold_case(item.substr(0, at));
            if (target == "subject") {
                use.attach = Attach::Subject;
            } else if (target == "object") {
                use.attach = Attach::Object;
            } else {
                throw ValidationError("adjective attachment '" + target +
                                      "' must be subject or object");
            }
            s.adjectives.push_back(std::move(use));
        }
    }
    check_sentence(s);
    return s;
}

std::optional<AnnotatedSentence> annotate_from_types(
    const std::vector<std::string>& words,
    const std::vector<std::string>& types) {
    if (words.size() != types.size()) {
        throw ValidationError(
            "word and type lists must have the same length");
    }
    const auto noun_run_end = [&](std::size_t start) {
        std::size_t end = start;
        while (end < types.size() && types[end] == kNounType) ++end;
        return end;
    };

    std::size_t i = 0;
    while (i < types.size() && types[i] != kNounType) ++i;
    if (i == types.size()) return std::nullopt;
    const std::size_t subject_end = noun_run_end(i);

    AnnotatedSentence s;
    s.subject = words[subject_end - 1];
    for (std::size_t k = i; k + 1 < subject_end; ++k) {
        s.adjectives.push_back({words[k], Attach::Subject});
    }

    std::size_t v = subject_end;
    while (v < types.size() && types[v] != kVerbType) ++v;
    if (v == types.size()) return std::nullopt;
    s.verb = words[v];

    std::size_t o = v + 1;
    while (o < types.size() && types[o] != kNounType) ++o;
    if (o < types.size()) {
        const std::size_t object_end = noun_run_end(o);
        s.object = words[object_end - 1];
        for (std::size_t k = o; k + 1 < object_end; ++k) {
            s.adjectives.push_back({words[k], Attach::Object});
        }
    }
    return s;
}

std::string serialize_web(const AssociationWeb& web) {
    std::string out;
    for (const auto& record : web.nouns()) {
        out += "noun\t";
        out += record.noun;
        out += '\t';
        out += join(record.adjectives);
        out += '\t';
        out += join(record.verbs_as_subject);
        out += '\t';
        out += join(record.verbs_as_object);
        out += '\n';
    }
    for (const auto& record : web.verbs()) {
        out += "verb\t";
        out += record.verb;
        out += '\t';
        out += join(record.subjects);
        out += '\t';
        out += join(record.objects);
        out += '\n';
    }
    return out;
}

AssociationWeb parse_web(std::string_view text) {
    AssociationWeb web;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(start, nl - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        start = nl + 1;
        ++line_no;
        if (line.empty()) continue;

        const std::vector<std::string> fields = split_on(line, '\t');
        const auto fail = [&](std::string_view why) {
            throw ValidationError("web line " + std::to_string(line_no) +
                                  ": " + std::string(why));
        };
        if (fields[0] == "noun") {
            if (fields.size() != 5) fail("noun records need 5 fields");
            check_word(fields[1], "noun");
            if (web.noun_index_.contains(fields[1])) {
                fail("duplicate noun record");
            }
            NounRecord& record = web.noun_record(fields[1]);
            record.adjectives = parse_word_set(fields[2], "adjective");
            record.verbs_as_subject = parse_word_set(fields[3], "verb");
            record.verbs_as_object = parse_word_set(fields[4], "verb");
        } else if (fields[0] == "verb") {
            if (fields.size() != 4) fail("verb records need 4 fields");
            check_word(fields[1], "verb");
            if (web.verb_index_.contains(fields[1])) {
                fail("duplicate verb record");
            }
            VerbRecord& record = web.verb_record(fields[1]);
            record.subjects = parse_word_set(fields[2], "noun");
            record.objects = parse_word_set(fields[3], "noun");
        } else {
            fail("record kind must be noun or verb");
        }
    }

    for (const auto& noun : web.nouns()) {
        for (const auto& verb : noun.verbs_as_subject) {
            const VerbRecord* record = web.find_verb(verb);
            if (!record || !record->subjects.contains(noun.noun)) {
                throw ValidationError("web is inconsistent: noun '" +
                                      noun.noun + "' lists subject-verb '" +
                                      verb + "' without the reverse link");
            }
        }
        for (const auto& verb : noun.verbs_as_object) {
            const VerbRecord* record = web.find_verb(verb);
            if (!record || !record->objects.contains(noun.noun)) {
                throw ValidationError("web is inconsistent: noun '" +
                                      noun.noun + "' lists object-verb '" +
                                      verb + "' without the reverse link");
            }
        }
    }
    for (const auto& verb : web.verbs()) {
        for (const auto& noun : verb.subjects) {
            const NounRecord* record = web.find_noun(noun);
            if (!record || !record->verbs_as_subject.contains(verb.verb)) {
                throw ValidationError("web is inconsistent: verb '" +
                                      verb.verb + "' lists subject '" + noun +
                                      "' without the reverse link");
            }
        }
        for (const auto& noun : verb.objects) {
            const NounRecord* record = web.find_noun(noun);
            if (!record || !record->verbs_as_object.contains(verb.verb)) {
                throw ValidationError("web is inconsistent: verb '" +
                                      verb.verb + "' lists object '" + noun +
                                      "' without the reverse link");
            }
        }
    }
    return web;
}

void save_web(const AssociationWeb& web, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write '" + path.string() +
                      "': " + std::strerror(errno));
    }
    out << serialize_web(web);
    out.flush();
    if (!out) {
        throw IoError("error while writing '" + path.string() + "'");
    }
}

AssociationWeb load_web(const std::filesystem::path& path) {
    return parse_web(read_text_file(path));
}

}  // namespace lingua
