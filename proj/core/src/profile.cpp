#include "lingua/profile.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>

#include "lingua/errors.hpp"
#include "lingua/text.hpp"

namespace lingua {

namespace {

// Advances an index tuple's digits [first, key.size()) through the alphabet
// in lexicographic order. Returns false once the region wraps around.
bool advance_key(FrequencyProfile::Key& key, std::size_t base,
                 std::size_t first) {
    for (std::size_t pos = key.size(); pos > first; --pos) {
        auto& digit = key[pos - 1];
        if (++digit < base) return true;
        digit = 0;
    }
    return false;
}

}  // namespace

FrequencyProfile FrequencyProfile::build(const TokenStream& tokens,
                                         const Alphabet& alphabet, int order) {
    if (order < 2) {
        throw ValidationError("n-gram order must be at least 2, got " +
                              std::to_string(order));
    }
    FrequencyProfile p(alphabet, order);
    p.word_count_ = tokens.word_count();

    const std::size_t a = alphabet.size();
    const auto width = static_cast<std::size_t>(order);
    std::vector<std::uint64_t> dense_counts;
    std::map<Key, std::uint64_t> sparse_counts;
    if (order == 2) dense_counts.assign(a * a, 0);

    std::uint64_t total = 0;
    Key key(width);
    for (const auto& token : tokens.tokens()) {
        const std::u32string cps = decode_utf8(token);
        if (cps.size() < width) continue;
        for (std::size_t i = 0; i + width <= cps.size(); ++i) {
            bool valid = true;
            for (std::size_t k = 0; k < width; ++k) {
                const auto idx = alphabet.index_of(cps[i + k]);
                if (!idx) {
                    valid = false;
                    break;
                }
                key[k] = *idx;
            }
            if (!valid) continue;
            if (order == 2) {
                ++dense_counts[key[0] * a + key[1]];
            } else {
                ++sparse_counts[key];
            }
            ++total;
        }
    }

    p.total_ = total;
    if (order == 2) {
        p.dense_.assign(a * a, 0.0);
        if (total > 0) {
            for (std::size_t i = 0; i < p.dense_.size(); ++i) {
                p.dense_[i] = (static_cast<double>(dense_counts[i]) /
                               static_cast<double>(total)) *
                              100.0;
            }
        }
    } else if (total > 0) {
        for (const auto& [k, count] : sparse_counts) {
            p.sparse_[k] = (static_cast<double>(count) /
                            static_cast<double>(total)) *
                           100.0;
        }
    }
    return p;
}

FrequencyProfile FrequencyProfile::from_percentages(
    const Alphabet& alphabet, std::vector<double> cells,
    std::uint64_t total_ngrams, std::size_t source_word_count) {
    const std::size_t a = alphabet.size();
    if (cells.size() != a * a) {
        throw ValidationError(
            "percentage matrix must have alphabet-size^2 cells, expected " +
            std::to_string(a * a) + ", got " + std::to_string(cells.size()));
    }
    for (double v : cells) {
        if (v < 0.0) {
            throw ValidationError("percentage cells must be nonnegative");
        }
    }
    FrequencyProfile p(alphabet, 2);
    p.total_ = total_ngrams;
    p.word_count_ = source_word_count;
    p.dense_ = std::move(cells);
    return p;
}

double FrequencyProfile::percentage(const Key& key) const {
    if (key.size() != static_cast<std::size_t>(order_)) return 0.0;
    for (auto idx : key) {
        if (idx >= alphabet_.size()) return 0.0;
    }
    if (order_ == 2) return dense_[key[0] * alphabet_.size() + key[1]];
    const auto it = sparse_.find(key);
    return it == sparse_.end() ? 0.0 : it->second;
}

double FrequencyProfile::sum() const {
    double s = 0.0;
    if (order_ == 2) {
        for (double v : dense_) s += v;
    } else {
        for (const auto& [k, v] : sparse_) s += v;
    }
    return s;
}

std::vector<std::pair<std::string, double>> FrequencyProfile::nonzero_cells()
    const {
    std::vector<std::pair<std::string, double>> out;
    if (order_ == 2) {
        const std::size_t a = alphabet_.size();
        Key key(2);
        for (std::size_t i = 0; i < a; ++i) {
            for (std::size_t j = 0; j < a; ++j) {
                const double v = dense_[i * a + j];
                if (v > 0.0) {
                    key[0] = static_cast<std::uint32_t>(i);
                    key[1] = static_cast<std::uint32_t>(j);
                    out.emplace_back(ngram_utf8(key), v);
                }
            }
        }
    } else {
        for (const auto& [k, v] : sparse_) out.emplace_back(ngram_utf8(k), v);
    }
    return out;
}

std::string FrequencyProfile::ngram_utf8(const Key& key) const {
    std::string out;
    for (auto idx : key) out += encode_utf8(alphabet_.at(idx));
    return out;
}

std::string_view verdict_label(Verdict v) {
    return v == Verdict::SameLanguage ? "Same Language" : "Different Language";
}

double compare_profiles(const FrequencyProfile& a, const FrequencyProfile& b) {
    if (!(a.alphabet() == b.alphabet())) {
        throw ValidationError(
            "profiles were built over different alphabets and cannot be "
            "compared");
    }
    if (a.order() != b.order()) {
        throw ValidationError("profiles have different n-gram orders (" +
                              std::to_string(a.order()) + " vs " +
                              std::to_string(b.order()) + ")");
    }
    double diff = 0.0;
    if (a.order() == 2) {
        for (std::size_t i = 0; i < a.dense_.size(); ++i) {
            diff += std::abs(a.dense_[i] - b.dense_[i]);
        }
        return diff;
    }
    // Merged walk over the union of nonzero cells.
    auto ia = a.sparse_.begin();
    auto ib = b.sparse_.begin();
    while (ia != a.sparse_.end() || ib != b.sparse_.end()) {
        if (ib == b.sparse_.end() ||
            (ia != a.sparse_.end() && ia->first < ib->first)) {
            diff += std::abs(ia->second);
            ++ia;
        } else if (ia == a.sparse_.end() || ib->first < ia->first) {
            diff += std::abs(ib->second);
            ++ib;
        } else {
            diff += std::abs(ia->second - ib->second);
            ++ia;
            ++ib;
        }
    }
    return diff;
}

ComparisonResult classify(const FrequencyProfile& a, const FrequencyProfile& b,
                          double threshold) {
    if (!(threshold > 0.0)) {
        throw ValidationError("threshold must be greater than zero");
    }
    ComparisonResult result;
    result.difference = compare_profiles(a, b);
    result.threshold_used = threshold;
    result.verdict = result.difference < threshold ? Verdict::SameLanguage
                                                   : Verdict::DifferentLanguage;
    result.low_confidence = a.source_word_count() < kLowConfidenceWordCount ||
                            b.source_word_count() < kLowConfidenceWordCount;
    return result;
}

std::vector<NgramFrequency> top_ngrams(const FrequencyProfile& p,
                                       std::size_t k) {
    if (k < 1) throw ValidationError("top-k requires k >= 1");

    struct Cell {
        double pct;
        FrequencyProfile::Key key;
    };
    std::vector<Cell> nonzero;
    if (p.order_ == 2) {
        const std::size_t a = p.alphabet_.size();
        for (std::size_t i = 0; i < a; ++i) {
            for (std::size_t j = 0; j < a; ++j) {
                const double v = p.dense_[i * a + j];
                if (v > 0.0) {
                    nonzero.push_back(
                        {v,
                         {static_cast<std::uint32_t>(i),
                          static_cast<std::uint32_t>(j)}});
                }
            }
        }
    } else {
        for (const auto& [key, v] : p.sparse_) nonzero.push_back({v, key});
    }
    // Cells were collected in alphabet order, so a stable sort on frequency
    // leaves ties in alphabet order.
    std::stable_sort(nonzero.begin(), nonzero.end(),
                     [](const Cell& x, const Cell& y) { return x.pct > y.pct; });

    std::vector<NgramFrequency> out;
    out.reserve(k);
    for (const auto& cell : nonzero) {
        if (out.size() == k) break;
        out.push_back({p.ngram_utf8(cell.key), cell.pct});
    }
    // Pad with zero-frequency cells in alphabet order when the profile has
    // fewer than k nonzero cells.
    if (out.size() < k) {
        FrequencyProfile::Key key(static_cast<std::size_t>(p.order_), 0);
        bool more = p.alphabet_.size() > 0;
        while (more && out.size() < k) {
            if (p.percentage(key) == 0.0) out.push_back({p.ngram_utf8(key), 0.0});
            more = advance_key(key, p.alphabet_.size(), 0);
        }
    }
    return out;
}

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string render_profile_csv(const FrequencyProfile& p) {
    std::string out;
    const std::size_t a = p.alphabet_.size();
    const auto width = static_cast<std::size_t>(p.order_);
    FrequencyProfile::Key key(width, 0);
    for (std::size_t first = 0; first < a; ++first) {
        key[0] = static_cast<std::uint32_t>(first);
        std::fill(key.begin() + 1, key.end(), 0);
        do {
            out += format_value(p.percentage(key));
            out += ',';
        } while (advance_key(key, a, 1));
        out += '\n';
    }
    return out;
}

void export_profile(const FrequencyProfile& p,
                    const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write '" + path.string() +
                      "': " + std::strerror(errno));
    }
    out << render_profile_csv(p);
    out.flush();
    if (!out) {
        throw IoError("error while writing '" + path.string() + "'");
    }
}

}  // namespace lingua
