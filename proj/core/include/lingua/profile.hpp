#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lingua/alphabet.hpp"
#include "lingua/corpus.hpp"

namespace lingua {

/// Summed-percentage-difference threshold below which two texts are judged
/// to be the same language. Calibrated on long English/French samples and
/// verified on Spanish; override per call where texts are short or unusual.
inline constexpr double kDefaultThreshold = 55.0;

/// Below this many source words, comparisons degrade and results carry a
/// low-confidence flag.
inline constexpr std::size_t kLowConfidenceWordCount = 400;

/// Percentage frequency of every possible character n-gram over a fixed
/// alphabet. Bigrams (order 2) are kept as a dense matrix indexed
/// [first][second]; higher orders use a sparse table of nonzero cells.
/// Immutable after construction.
class FrequencyProfile {
public:
    /// A cell key: alphabet indices of the n-gram's characters.
    using Key = std::vector<std::uint32_t>;

    /// Counts every window of `order` consecutive characters within each
    /// token. A window counts only if all of its characters are in the
    /// alphabet; windows touching a foreign character are dropped whole
    /// (the token is not split around them). Tokens shorter than `order`
    /// contribute nothing. Cells hold (count / total) * 100.
    static FrequencyProfile build(const TokenStream& tokens,
                                  const Alphabet& alphabet, int order = 2);

    /// Wraps an existing percentage matrix (row-major, size*size cells,
    /// order 2). Cells must be nonnegative. Intended for tools and tests
    /// that need a profile that was not counted from text.
    static FrequencyProfile from_percentages(const Alphabet& alphabet,
                                             std::vector<double> cells,
                                             std::uint64_t total_ngrams,
                                             std::size_t source_word_count);

    const Alphabet& alphabet() const { return alphabet_; }
    int order() const { return order_; }
    std::uint64_t total_ngrams() const { return total_; }
    std::size_t source_word_count() const { return word_count_; }

    double percentage(const Key& key) const;
    /// Sum of all cells; 100 (to rounding) for a nonempty profile, else 0.
    double sum() const;
    /// Nonzero cells as (utf8 n-gram, percentage), in alphabet order.
    std::vector<std::pair<std::string, double>> nonzero_cells() const;
    std::string ngram_utf8(const Key& key) const;

    bool same_shape_as(const FrequencyProfile& other) const {
        return order_ == other.order_ && alphabet_ == other.alphabet_;
    }

private:
    FrequencyProfile(Alphabet alphabet, int order)
        : alphabet_(std::move(alphabet)), order_(order) {}

    friend double compare_profiles(const FrequencyProfile&,
                                   const FrequencyProfile&);
    friend std::vector<struct NgramFrequency> top_ngrams(
        const FrequencyProfile&, std::size_t);
    friend std::string render_profile_csv(const FrequencyProfile&);

    Alphabet alphabet_;
    int order_;
    std::uint64_t total_ = 0;
    std::size_t word_count_ = 0;
    std::vector<double> dense_;       // order 2: size*size percentages
    std::map<Key, double> sparse_;    // order > 2: nonzero cells only
};

enum class Verdict { SameLanguage, DifferentLanguage };

/// "Same Language" / "Different Language".
std::string_view verdict_label(Verdict v);

struct ComparisonResult {
    double difference = 0.0;
    Verdict verdict = Verdict::DifferentLanguage;
    double threshold_used = kDefaultThreshold;
    bool low_confidence = false;
};

/// Sum over all cells of |a[cell] - b[cell]|. Requires identical alphabet
/// and order; ranges over [0, 200] when both profiles are nonempty.
double compare_profiles(const FrequencyProfile& a, const FrequencyProfile& b);

/// Same-language verdict iff difference < threshold (strict). Flags low
/// confidence when either input was built from fewer than 400 words.
ComparisonResult classify(const FrequencyProfile& a, const FrequencyProfile& b,
                          double threshold = kDefaultThreshold);

struct NgramFrequency {
    std::string ngram;
    double percentage = 0.0;
};

/// The k highest-frequency cells in descending order; ties and zero-fill
/// follow alphabet order of the n-gram characters.
std::vector<NgramFrequency> top_ngrams(const FrequencyProfile& p,
                                       std::size_t k);

/// Shortest decimal form with at most 6 significant digits ("0", "66.666",
/// "2.9"). The cell format of the CSV table and of printed differences.
std::string format_value(double v);

/// One row per leading character in alphabet order; each row holds the
/// percentages of every n-gram starting with it, suffixes in alphabet
/// order, each value followed by ',' and each row ended by '\n'.
std::string render_profile_csv(const FrequencyProfile& p);

/// Writes render_profile_csv(p) to path. Throws IoError naming the path.
void export_profile(const FrequencyProfile& p,
                    const std::filesystem::path& path);

}  // namespace lingua
