#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lingua {

inline constexpr double kDefaultSimilarityThreshold = 0.5;

enum class Attach { Subject, Object };

struct AdjectiveUse {
    std::string adjective;
    Attach attach = Attach::Subject;
};

struct AnnotatedSentence {
    std::string subject;
    std::string verb;
    std::optional<std::string> object;
    std::vector<AdjectiveUse> adjectives;
};

struct NounRecord {
    std::string noun;
    std::set<std::string> adjectives;
    std::set<std::string> verbs_as_subject;
    std::set<std::string> verbs_as_object;
};

struct VerbRecord {
    std::string verb;
    std::set<std::string> subjects;
    std::set<std::string> objects;
};

// Accumulates noun and verb association records from annotated sentences.
// Records are kept in first-seen order.
class AssociationWeb {
  public:
    void ingest(const AnnotatedSentence& sentence);

    const NounRecord* find_noun(const std::string& noun) const;
    const VerbRecord* find_verb(const std::string& verb) const;
    const std::vector<NounRecord>& nouns() const { return nouns_; }
    const std::vector<VerbRecord>& verbs() const { return verbs_; }

    // A noun's attribute set: its adjectives plus the verbs that act on it.
    std::set<std::string> attributes(const std::string& noun) const;

  private:
    NounRecord& noun_record(const std::string& noun);
    VerbRecord& verb_record(const std::string& verb);

    std::vector<NounRecord> nouns_;
    std::vector<VerbRecord> verbs_;
    std::unordered_map<std::string, std::size_t> noun_index_;
    std::unordered_map<std::string, std::size_t> verb_index_;

    friend AssociationWeb parse_web(std::string_view text);
};

double noun_similarity(const std::string& a, const std::string& b,
                       const AssociationWeb& web);

std::vector<std::vector<std::string>> categorize(const AssociationWeb& web,
                                                 double threshold);

// Line format: subject|verb|object?|adj@subject,adj@object,...
// The object and adjective fields may be empty or omitted.
AnnotatedSentence parse_annotated_line(std::string_view line);

// Best-effort bridge from per-word syntax types: the first noun run is the
// subject phrase, the next verb is the verb, the following noun run is the
// object phrase. Extra nouns in a phrase are treated as adjectives of its
// final word. Returns nothing when no subject-verb core is found.
std::optional<AnnotatedSentence> annotate_from_types(
    const std::vector<std::string>& words,
    const std::vector<std::string>& types);

std::string serialize_web(const AssociationWeb& web);
AssociationWeb parse_web(std::string_view text);
void save_web(const AssociationWeb& web, const std::filesystem::path& path);
AssociationWeb load_web(const std::filesystem::path& path);

}  // namespace lingua
