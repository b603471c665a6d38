#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lingua/alphabet.hpp"
#include "lingua/corpus.hpp"
#include "lingua/errors.hpp"
#include "lingua/profile.hpp"
#include "lingua/semantics.hpp"
#include "lingua/syntax.hpp"
#include "lingua/text.hpp"

namespace lingua::cli {

namespace {

using nlohmann::json;

struct Config {
    std::string alphabet_spec;
    double threshold = kDefaultThreshold;
    double similarity_threshold = kDefaultSimilarityThreshold;
};

double parse_env_number(const char* name, const char* value) {
    char* end = nullptr;
    const double parsed = std::strtod(value, &end);
    if (end == value || *end != '\0') {
        throw ValidationError(std::string(name) + " must be a number, got '" +
                              value + "'");
    }
    return parsed;
}

Config config_from_env() {
    Config cfg;
    if (const char* alphabet = std::getenv("LINGUA_ALPHABET")) {
        cfg.alphabet_spec = alphabet;
    }
    if (const char* threshold = std::getenv("LINGUA_THRESHOLD")) {
        cfg.threshold = parse_env_number("LINGUA_THRESHOLD", threshold);
    }
    if (const char* sim = std::getenv("LINGUA_SIMILARITY_THRESHOLD")) {
        cfg.similarity_threshold =
            parse_env_number("LINGUA_SIMILARITY_THRESHOLD", sim);
    }
    return cfg;
}

// Alphabet specs: empty or "french-default" for the builtin set, "@path" for
// a file holding the characters, anything else is the characters themselves.
Alphabet resolve_alphabet(const std::string& spec) {
    if (spec.empty()) return Alphabet::french_default();
    if (spec.front() == '@') {
        const std::string text = read_text_file(spec.substr(1));
        std::u32string chars;
        for (const char32_t cp : decode_utf8(text)) {
            if (!is_word_separator(cp)) chars += cp;
        }
        return Alphabet::from_chars(chars);
    }
    return Alphabet::from_spec(spec);
}

std::string fold_case(const std::string& word) {
    std::string out;
    for (const char32_t cp : decode_utf8(word)) {
        out += encode_utf8(to_lower_cp(cp));
    }
    return out;
}

std::vector<std::string> nonblank_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string::npos) nl = text.size();
        std::string line = text.substr(start, nl - start);
        start = nl + 1;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(std::move(line));
    }
    return lines;
}

std::string join_words(const std::vector<std::string>& words) {
    std::string out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i > 0) out += ' ';
        out += words[i];
    }
    return out;
}

struct ProfileArgs {
    std::string input;
    std::string alphabet_spec;
    int order = 2;
    std::size_t top = 0;
    bool top_given = false;
    std::string out_path;
    bool no_csv = false;
    bool json_out = false;
};

int run_profile(const ProfileArgs& a, std::ostream& out) {
    const Alphabet alphabet = resolve_alphabet(a.alphabet_spec);
    const FrequencyProfile profile =
        FrequencyProfile::build(tokenize_file(a.input), alphabet, a.order);

    std::optional<std::filesystem::path> csv_path;
    if (!a.no_csv) {
        if (!a.out_path.empty()) {
            csv_path = a.out_path;
        } else {
            const std::filesystem::path in(a.input);
            csv_path = in.parent_path() / (in.stem().string() + "_tab.csv");
        }
        export_profile(profile, *csv_path);
    }
    std::vector<NgramFrequency> top;
    if (a.top_given) top = top_ngrams(profile, a.top);

    if (a.json_out) {
        json j;
        j["words"] = profile.source_word_count();
        j["ngrams"] = profile.total_ngrams();
        j["order"] = profile.order();
        if (csv_path) j["csv"] = csv_path->string();
        if (a.top_given) {
            j["top"] = json::array();
            for (const auto& nf : top) {
                j["top"].push_back(
                    {{"ngram", nf.ngram}, {"percentage", nf.percentage}});
            }
        }
        out << j.dump(2) << '\n';
        return 0;
    }
    out << "words\t" << profile.source_word_count() << '\n';
    out << "ngrams\t" << profile.total_ngrams() << '\n';
    for (const auto& nf : top) {
        out << "top\t" << nf.ngram << '\t' << format_value(nf.percentage)
            << '\n';
    }
    if (csv_path) out << "csv\t" << csv_path->string() << '\n';
    return 0;
}

struct CompareArgs {
    std::string input1;
    std::string input2;
    std::string alphabet_spec;
    int order = 2;
    double threshold = kDefaultThreshold;
    bool json_out = false;
};

int run_compare(const CompareArgs& a, std::ostream& out, std::ostream& err) {
    const Alphabet alphabet = resolve_alphabet(a.alphabet_spec);
    const auto build_one = [&alphabet, &a](const std::string& path) {
        return FrequencyProfile::build(tokenize_file(path), alphabet, a.order);
    };
    auto pending = std::async(std::launch::async, build_one, a.input1);
    const FrequencyProfile second = build_one(a.input2);
    const FrequencyProfile first = pending.get();

    const ComparisonResult result = classify(first, second, a.threshold);
    const auto warn = [&err](const std::string& path,
                             const FrequencyProfile& p) {
        if (p.source_word_count() < kLowConfidenceWordCount) {
            err << "warning: '" << path << "' has " << p.source_word_count()
                << " words; verdicts are unreliable below "
                << kLowConfidenceWordCount << " words\n";
        }
    };
    warn(a.input1, first);
    warn(a.input2, second);

    if (a.json_out) {
        json j;
        j["difference"] = result.difference;
        j["verdict"] = verdict_label(result.verdict);
        j["threshold"] = result.threshold_used;
        j["low_confidence"] = result.low_confidence;
        out << j.dump(2) << '\n';
        return 0;
    }
    out << format_value(result.difference) << '\n';
    out << verdict_label(result.verdict) << '\n';
    return 0;
}

struct SyntaxTrainArgs {
    std::string seed;
    std::string state;
    std::string sentences;
    std::string dump;
    bool json_out = false;
};

int run_syntax_train(const SyntaxTrainArgs& a, std::ostream& out) {
    SyntaxState state;
    if (!a.state.empty()) {
        state = load_state(a.state);
    } else {
        state.lexicon = load_seed_file(a.seed);
    }

    struct SentenceOutcome {
        std::string text;
        LearnMethod method;
    };
    std::vector<SentenceOutcome> outcomes;
    const std::vector<std::string> lines =
        nonblank_lines(read_text_file(a.sentences));
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        try {
            const std::vector<std::string> words =
                normalize_sentence(lines[i]);
            const LearnResult result =
                learn(words, state.lexicon, state.catalog);
            outcomes.push_back({join_words(words), result.method});
        } catch (const ValidationError& e) {
            throw ValidationError("sentence " + std::to_string(i + 1) + ": " +
                                  e.what());
        }
    }
    if (!a.dump.empty()) save_state(state, a.dump);

    if (a.json_out) {
        json j;
        j["sentences"] = json::array();
        for (const auto& outcome : outcomes) {
            j["sentences"].push_back(
                {{"sentence", outcome.text},
                 {"method", learn_method_label(outcome.method)}});
        }
        j["words"] = state.lexicon.size();
        j["patterns"] = state.catalog.size();
        if (a.dump.empty()) j["state"] = dump_state(state);
        out << j.dump(2) << '\n';
        return 0;
    }
    if (a.dump.empty()) {
        out << dump_state(state);
        return 0;
    }
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        out << (i + 1) << '\t' << learn_method_label(outcomes[i].method)
            << '\t' << outcomes[i].text << '\n';
    }
    out << "words\t" << state.lexicon.size() << '\n';
    out << "patterns\t" << state.catalog.size() << '\n';
    return 0;
}

struct SyntaxAnalyzeArgs {
    std::string state;
    std::string sentence;
    std::string dump;
    bool json_out = false;
};

int run_syntax_analyze(const SyntaxAnalyzeArgs& a, std::ostream& out) {
    SyntaxState state = load_state(a.state);
    const std::vector<std::string> words = normalize_sentence(a.sentence);
    const LearnResult result = learn(words, state.lexicon, state.catalog);

    std::vector<std::string> types;
    types.reserve(words.size());
    for (const auto& word : words) {
        const std::string* type = state.lexicon.find_type(word);
        types.push_back(type ? *type : "?");
    }
    const std::vector<std::string> phrases = collapse_phrases(types);
    if (!a.dump.empty()) save_state(state, a.dump);

    if (a.json_out) {
        json j;
        j["method"] = learn_method_label(result.method);
        j["words"] = json::array();
        for (std::size_t i = 0; i < words.size(); ++i) {
            json w;
            w["word"] = words[i];
            if (types[i] == "?") {
                w["type"] = nullptr;
            } else {
                w["type"] = types[i];
            }
            j["words"].push_back(std::move(w));
        }
        j["phrases"] = phrases;
        out << j.dump(2) << '\n';
        return 0;
    }
    out << "method\t" << learn_method_label(result.method) << '\n';
    for (std::size_t i = 0; i < words.size(); ++i) {
        out << "word\t" << words[i] << '\t' << types[i] << '\n';
    }
    out << "phrases\t";
    for (std::size_t i = 0; i < phrases.size(); ++i) {
        if (i > 0) out << '|';
        out << phrases[i];
    }
    out << '\n';
    return 0;
}

struct SemanticsTrainArgs {
    std::string input;
    std::string state;
    std::string dump;
    bool json_out = false;
};

json record_to_json(const NounRecord& r) {
    return {{"noun", r.noun},
            {"adjectives", r.adjectives},
            {"verbs_as_subject", r.verbs_as_subject},
            {"verbs_as_object", r.verbs_as_object}};
}

json record_to_json(const VerbRecord& r) {
    return {{"verb", r.verb},
            {"subjects", r.subjects},
            {"objects", r.objects}};
}

int run_semantics_train(const SemanticsTrainArgs& a, std::ostream& out) {
    AssociationWeb web;
    if (!a.state.empty()) web = load_web(a.state);
    const std::vector<std::string> lines =
        nonblank_lines(read_text_file(a.input));
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        try {
            web.ingest(parse_annotated_line(lines[i]));
        } catch (const ValidationError& e) {
            throw ValidationError("sentence " + std::to_string(i + 1) + ": " +
                                  e.what());
        }
    }
    if (!a.dump.empty()) save_web(web, a.dump);

    if (a.json_out) {
        json j;
        j["nouns"] = json::array();
        for (const auto& record : web.nouns()) {
            j["nouns"].push_back(record_to_json(record));
        }
        j["verbs"] = json::array();
        for (const auto& record : web.verbs()) {
            j["verbs"].push_back(record_to_json(record));
        }
        out << j.dump(2) << '\n';
        return 0;
    }
    if (a.dump.empty()) {
        out << serialize_web(web);
        return 0;
    }
    out << "nouns\t" << web.nouns().size() << '\n';
    out << "verbs\t" << web.verbs().size() << '\n';
    return 0;
}

struct SemanticsQueryArgs {
    std::string state;
    std::vector<std::string> similar;
    bool do_categorize = false;
    double threshold = kDefaultSimilarityThreshold;
    bool json_out = false;
};

int run_semantics_query(const SemanticsQueryArgs& a, std::ostream& out) {
    const AssociationWeb web = load_web(a.state);
    if (!a.similar.empty()) {
        const double similarity = noun_similarity(
            fold_case(a.similar[0]), fold_case(a.similar[1]), web);
        if (a.json_out) {
            json j;
            j["similarity"] = similarity;
            out << j.dump(2) << '\n';
        } else {
            out << format_value(similarity) << '\n';
        }
        return 0;
    }
    const auto groups = categorize(web, a.threshold);
    if (a.json_out) {
        json j;
        j["threshold"] = a.threshold;
        j["groups"] = groups;
        out << j.dump(2) << '\n';
        return 0;
    }
    for (const auto& group : groups) {
        out << join_words(group) << '\n';
    }
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
    Config cfg;
    try {
        cfg = config_from_env();
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    CLI::App app{
        "character n-gram language profiles plus a small syntax and "
        "semantics learner",
        "lingua"};
    app.require_subcommand(1);

    ProfileArgs profile_args;
    profile_args.alphabet_spec = cfg.alphabet_spec;
    auto* profile_cmd =
        app.add_subcommand("profile", "build a frequency profile of a text");
    profile_cmd->add_option("input", profile_args.input, "text file")
        ->required();
    profile_cmd->add_option("--alphabet", profile_args.alphabet_spec,
                            "alphabet: french-default, characters, or @file");
    profile_cmd->add_option("--n,--order", profile_args.order,
                            "n-gram order (default 2)");
    auto* top_opt = profile_cmd->add_option("--top", profile_args.top,
                                            "print the k most frequent n-grams");
    profile_cmd->add_option("--out", profile_args.out_path,
                            "CSV output path (default <stem>_tab.csv)");
    profile_cmd->add_flag("--no-csv", profile_args.no_csv,
                          "skip the CSV table file");
    profile_cmd->add_flag("--json", profile_args.json_out, "JSON output");

    CompareArgs compare_args;
    compare_args.alphabet_spec = cfg.alphabet_spec;
    compare_args.threshold = cfg.threshold;
    auto* compare_cmd = app.add_subcommand(
        "compare", "decide whether two texts are in the same language");
    compare_cmd->add_option("first", compare_args.input1, "text file")
        ->required();
    compare_cmd->add_option("second", compare_args.input2, "text file")
        ->required();
    compare_cmd->add_option("--alphabet", compare_args.alphabet_spec,
                            "alphabet: french-default, characters, or @file");
    compare_cmd->add_option("--n,--order", compare_args.order,
                            "n-gram order (default 2)");
    compare_cmd->add_option("--threshold", compare_args.threshold,
                            "same-language cutoff (default 55)");
    compare_cmd->add_flag("--json", compare_args.json_out, "JSON output");

    SyntaxTrainArgs train_args;
    auto* train_cmd = app.add_subcommand(
        "syntax-train", "learn word types and sentence patterns");
    train_cmd
        ->add_option("sentences", train_args.sentences,
                     "file with one sentence per line")
        ->required();
    auto* seed_opt = train_cmd->add_option(
        "--seed", train_args.seed, "seed lexicon file (word<TAB>noun|verb)");
    auto* state_opt = train_cmd->add_option("--state", train_args.state,
                                            "resume from a state dump");
    seed_opt->excludes(state_opt);
    train_cmd->add_option("--dump-state", train_args.dump,
                          "write the final state here instead of stdout");
    train_cmd->add_flag("--json", train_args.json_out, "JSON output");

    SyntaxAnalyzeArgs analyze_args;
    auto* analyze_cmd = app.add_subcommand(
        "syntax-analyze", "type a sentence against a trained state");
    analyze_cmd->add_option("--state", analyze_args.state, "state dump file")
        ->required();
    analyze_cmd->add_option("sentence", analyze_args.sentence, "the sentence")
        ->required();
    analyze_cmd->add_option("--dump-state", analyze_args.dump,
                            "save the updated state here");
    analyze_cmd->add_flag("--json", analyze_args.json_out, "JSON output");

    SemanticsTrainArgs sem_train_args;
    auto* sem_train_cmd = app.add_subcommand(
        "semantics-train", "build an association web from annotated sentences");
    sem_train_cmd
        ->add_option("input", sem_train_args.input,
                     "file of subject|verb|object?|adj@role,... lines")
        ->required();
    sem_train_cmd->add_option("--state", sem_train_args.state,
                              "resume from a web dump");
    sem_train_cmd->add_option("--dump-state", sem_train_args.dump,
                              "write the final web here instead of stdout");
    sem_train_cmd->add_flag("--json", sem_train_args.json_out, "JSON output");

    SemanticsQueryArgs query_args;
    query_args.threshold = cfg.similarity_threshold;
    auto* query_cmd =
        app.add_subcommand("semantics-query", "query an association web");
    query_cmd->add_option("--state", query_args.state, "web dump file")
        ->required();
    auto* similar_opt =
        query_cmd
            ->add_option("--similar", query_args.similar,
                         "print the similarity of two nouns")
            ->expected(2);
    auto* categorize_opt = query_cmd->add_flag(
        "--categorize", query_args.do_categorize, "group similar nouns");
    similar_opt->excludes(categorize_opt);
    query_cmd->add_option("--threshold", query_args.threshold,
                          "similarity cutoff for --categorize (default 0.5)");
    query_cmd->add_flag("--json", query_args.json_out, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }
    profile_args.top_given = top_opt->count() > 0;

    try {
        if (profile_cmd->parsed()) return run_profile(profile_args, out);
        if (compare_cmd->parsed()) return run_compare(compare_args, out, err);
        if (train_cmd->parsed()) {
            if (train_args.seed.empty() && train_args.state.empty()) {
                throw ValidationError(
                    "syntax-train needs --seed or --state");
            }
            return run_syntax_train(train_args, out);
        }
        if (analyze_cmd->parsed()) return run_syntax_analyze(analyze_args, out);
        if (sem_train_cmd->parsed()) {
            return run_semantics_train(sem_train_args, out);
        }
        if (query_cmd->parsed()) {
            if (query_args.similar.empty() && !query_args.do_categorize) {
                throw ValidationError(
                    "semantics-query needs --similar or --categorize");
            }
            return run_semantics_query(query_args, out);
        }
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace lingua::cli
