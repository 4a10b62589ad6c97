#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "annot/error.hpp"
#include "annot/porter.hpp"

namespace annot {

/// Splits text into lowercased maximal runs of ASCII letters. Digits,
/// punctuation and any non-ASCII byte act as separators.
inline std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (char ch : text) {
        const auto c = static_cast<unsigned char>(ch);
        if (c >= 'A' && c <= 'Z') {
            current.push_back(static_cast<char>(c - 'A' + 'a'));
        } else if (c >= 'a' && c <= 'z') {
            current.push_back(ch);
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

inline std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                                 const std::set<std::string>& stopwords) {
    std::vector<std::string> kept;
    kept.reserve(tokens.size());
    for (const auto& t : tokens)
        if (!stopwords.contains(t)) kept.push_back(t);
    return kept;
}

/// One entry per line, '#' starts a comment, blank lines ignored.
inline std::vector<std::string> read_word_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open word list " + path.string());
    std::vector<std::string> entries;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        std::size_t start = 0;
        while (start < line.size() && (line[start] == ' ' || line[start] == '\t')) ++start;
        if (start > 0) line.erase(0, start);
        if (!line.empty()) entries.push_back(line);
    }
    return entries;
}

inline std::set<std::string> load_stopwords(const std::filesystem::path& path) {
    std::set<std::string> words;
    for (const auto& entry : read_word_list(path))
        for (const auto& tok : tokenize(entry)) words.insert(tok);
    return words;
}

/// The list shipped with the tool; used when no stopword file is given.
inline const std::set<std::string>& default_stopwords() {
    static const std::set<std::string> words = {
        "a",       "about",   "above",  "after",   "again",   "against", "all",     "am",
        "an",      "and",     "any",    "are",     "as",      "at",      "be",      "because",
        "been",    "before",  "being",  "below",   "between", "both",    "but",     "by",
        "could",   "did",     "do",     "does",    "doing",   "down",    "during",  "each",
        "few",     "for",     "from",   "further", "had",     "has",     "have",    "having",
        "he",      "her",     "here",   "hers",    "him",     "his",     "how",     "i",
        "if",      "in",      "into",   "is",      "it",      "its",     "itself",  "just",
        "me",      "more",    "most",   "my",      "no",      "nor",     "not",     "now",
        "of",      "off",     "on",     "once",    "only",    "or",      "other",   "our",
        "ours",    "out",     "over",   "own",     "same",    "she",     "should",  "so",
        "some",    "such",    "than",   "that",    "the",     "their",   "theirs",  "them",
        "then",    "there",   "these",  "they",    "this",    "those",   "through", "to",
        "too",     "under",   "until",  "up",      "very",    "was",     "we",      "were",
        "what",    "when",    "where",  "which",   "while",   "who",     "whom",    "why",
        "will",    "with",    "you",    "your",
    };
    return words;
}

/// Concept lexicon in stem space. Multi-word entries contribute the stems of
/// each constituent word.
class Lexicon {
public:
    static Lexicon from_file(const std::filesystem::path& path) {
        Lexicon lex;
        for (const auto& entry : read_word_list(path))
            for (const auto& tok : tokenize(entry)) lex.stems_.insert(porter_stem(tok));
        return lex;
    }

    static Lexicon from_entries(const std::vector<std::string>& entries) {
        Lexicon lex;
        for (const auto& entry : entries)
            for (const auto& tok : tokenize(entry)) lex.stems_.insert(porter_stem(tok));
        return lex;
    }

    bool contains(const std::string& stem) const { return stems_.contains(stem); }
    std::size_t size() const { return stems_.size(); }
    const std::set<std::string>& stems() const { return stems_; }

private:
    std::set<std::string> stems_;
};

/// Identity when no lexicon is supplied.
inline std::vector<std::string> lexicon_filter(const std::vector<std::string>& stems,
                                               const std::optional<Lexicon>& lexicon) {
    if (!lexicon) return stems;
    std::vector<std::string> kept;
    kept.reserve(stems.size());
    for (const auto& s : stems)
        if (lexicon->contains(s)) kept.push_back(s);
    return kept;
}

/// Output of the full text pipeline over one document.
struct AnalyzedText {
    std::vector<std::string> stems; // pipeline output, order preserved
    std::map<std::string, std::set<std::string>> surface_forms; // stem -> source tokens
};

/// tokenize -> remove_stopwords -> porter_stem -> lexicon_filter, keeping the
/// original token behind every surviving stem.
inline AnalyzedText analyze_text(std::string_view text, const std::set<std::string>& stopwords,
                                 const std::optional<Lexicon>& lexicon) {
    AnalyzedText out;
    for (const auto& token : remove_stopwords(tokenize(text), stopwords)) {
        std::string stem = porter_stem(token);
        if (lexicon && !lexicon->contains(stem)) continue;
        out.surface_forms[stem].insert(token);
        out.stems.push_back(std::move(stem));
    }
    return out;
}

} // namespace annot
