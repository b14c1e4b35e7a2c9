#pragma once

// Text preprocessing: raw page text -> keyword stream. The chain is
// tokenize -> stopword/unwanted-word removal -> noun filter -> Porter stem,
// with each stem presented by its canonical lexicon form so that keyword
// strings stay readable ("tree", not the raw stem).

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "senseclust/corpus.hpp"
#include "senseclust/errors.hpp"
#include "senseclust/porter.hpp"
#include "senseclust/text_file.hpp"

namespace senseclust {

// A preprocessed page: ordered keyword stream plus its term counts.
struct Document {
    std::string doc_id;
    std::vector<std::string> tokens;  // keywords in text order
    std::map<std::string, int> counts;
    int total = 0; // == tokens.size() == sum of counts

    bool empty() const { return total == 0; }
};

class StopList {
public:
    StopList() = default;

    explicit StopList(const std::vector<std::string>& words) {
        for (const std::string& w : words) words_.insert(to_lower_ascii(w));
    }

    // One lowercase word per line; '#' comments and blank lines ignored.
    static StopList load(const std::filesystem::path& path) {
        std::vector<std::string> words;
        for (const DataLine& line : read_data_lines(path))
            words.push_back(line.text);
        return StopList(words);
    }

    bool contains(const std::string& word) const { return words_.count(word) != 0; }
    std::size_t size() const { return words_.size(); }

private:
    std::unordered_set<std::string> words_;
};

// Allowlist of noun surface forms (pre-stemming), standing in for a
// part-of-speech tagger. Each Porter stem class represented in the lexicon
// gets one display form: the shortest member word (ties broken
// lexicographically), so "trees" and "tree" both surface as "tree".
class NounLexicon {
public:
    NounLexicon() = default;

    explicit NounLexicon(const std::vector<std::string>& words) {
        if (words.empty()) {
            throw std::invalid_argument("noun lexicon must not be empty");
        }
        for (const std::string& raw : words) {
            std::string w = to_lower_ascii(raw);
            std::string stem = porter_stem(w);
            auto [it, inserted] = display_.try_emplace(std::move(stem), w);
            if (!inserted && (w.size() < it->second.size() ||
                              (w.size() == it->second.size() && w < it->second))) {
                it->second = w;
            }
            surface_.insert(std::move(w));
        }
    }

    static NounLexicon load(const std::filesystem::path& path) {
        std::vector<std::string> words;
        for (const DataLine& line : read_data_lines(path))
            words.push_back(line.text);
        if (words.empty()) {
            throw ParseError("noun lexicon is empty: " + path.string());
        }
        return NounLexicon(words);
    }

    bool contains(const std::string& word) const { return surface_.count(word) != 0; }

    // Canonical display form for a stem class present in the lexicon.
    const std::string& display_form(const std::string& stem) const {
        auto it = display_.find(stem);
        if (it == display_.end()) {
            throw DataError("stem '" + stem + "' has no lexicon display form");
        }
        return it->second;
    }

    std::size_t size() const { return surface_.size(); }

    // Exposed so loaders can check lexicon/stoplist disjointness.
    const std::unordered_set<std::string>& surface_forms() const { return surface_; }

private:
    std::unordered_set<std::string> surface_;
    std::unordered_map<std::string, std::string> display_; // stem -> display
};

// Splits on every non-alphabetic character and lowercases. Empty fragments
// are dropped, order is preserved.
inline std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (const char c : text) {
        if ((c >= 'a' && c <= 'z')) {
            current.push_back(c);
        } else if (c >= 'A' && c <= 'Z') {
            current.push_back(static_cast<char>(c - 'A' + 'a'));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

// Drops stopwords and unwanted (single-character) tokens.
inline std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                                 const StopList& stoplist) {
    std::vector<std::string> kept;
    kept.reserve(tokens.size());
    for (const std::string& t : tokens) {
        if (t.size() <= 1) continue;
        if (stoplist.contains(t)) continue;
        kept.push_back(t);
    }
    return kept;
}

// Keeps only tokens whose surface form is a known noun.
inline std::vector<std::string> filter_nouns(const std::vector<std::string>& tokens,
                                             const NounLexicon& lexicon) {
    std::vector<std::string> kept;
    kept.reserve(tokens.size());
    for (const std::string& t : tokens) {
        if (lexicon.contains(t)) kept.push_back(t);
    }
    return kept;
}

// Stoplist plus lexicon: everything needed to turn text into keywords.
class Pipeline {
public:
    Pipeline(StopList stopwords, NounLexicon lexicon)
        : stopwords_(std::move(stopwords)), lexicon_(std::move(lexicon)) {
        for (const std::string& w : lexicon_.surface_forms()) {
            if (stopwords_.contains(w)) {
                throw ParseError("lexicon word '" + w + "' is also a stopword");
            }
        }
    }

    const StopList& stopwords() const { return stopwords_; }
    const NounLexicon& lexicon() const { return lexicon_; }

    // Full preprocessing chain; returns canonical keyword strings.
    std::vector<std::string> keywords(std::string_view text) const {
        std::vector<std::string> out;
        for (const std::string& noun :
             filter_nouns(remove_stopwords(tokenize(text), stopwords_), lexicon_)) {
            out.push_back(lexicon_.display_form(porter_stem(noun)));
        }
        return out;
    }

    Document preprocess(const RawDocument& raw) const {
        Document doc;
        doc.doc_id = raw.doc_id;
        doc.tokens = keywords(raw.text);
        for (const std::string& t : doc.tokens) ++doc.counts[t];
        doc.total = static_cast<int>(doc.tokens.size());
        return doc;
    }

private:
    StopList stopwords_;
    NounLexicon lexicon_;
};

} // namespace senseclust
