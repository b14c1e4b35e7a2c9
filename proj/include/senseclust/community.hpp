#pragma once

// Sense communities: dictionary-derived word sets for each sense of an
// ambiguous query, pruned to corpus-present terms and weighted with TF-IDF.
// Community TF uses the number of distinct member terms as denominator.

#include <filesystem>
#include <ostream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "senseclust/errors.hpp"
#include "senseclust/pipeline.hpp"
#include "senseclust/porter.hpp"
#include "senseclust/text_file.hpp"
#include "senseclust/vector_space.hpp"

namespace senseclust {

// Offline stand-in for a dictionary service: headword -> related terms.
class DictionarySnapshot {
public:
    DictionarySnapshot() = default;

    // Parses `headword<TAB>term1,term2,...` lines; '#' comments and blank
    // lines ignored; everything lowercased.
    static DictionarySnapshot load(const std::filesystem::path& path) {
        DictionarySnapshot snapshot;
        for (const DataLine& line : read_data_lines(path)) {
            const std::string at = path.string() + ":" + std::to_string(line.number);
            const std::size_t tab = line.text.find('\t');
            if (tab == std::string::npos) {
                throw ParseError(at + ": expected headword<TAB>term,term,...");
            }
            std::string head = to_lower_ascii(trim(std::string_view(line.text).substr(0, tab)));
            std::string rest = trim(std::string_view(line.text).substr(tab + 1));
            if (head.empty() || rest.empty()) {
                throw ParseError(at + ": empty headword or term list");
            }
            std::vector<std::string> terms;
            std::size_t pos = 0;
            while (pos <= rest.size()) {
                std::size_t comma = rest.find(',', pos);
                if (comma == std::string::npos) comma = rest.size();
                std::string term = to_lower_ascii(trim(std::string_view(rest).substr(pos, comma - pos)));
                if (term.empty()) {
                    throw ParseError(at + ": empty related term");
                }
                terms.push_back(std::move(term));
                if (comma == rest.size()) break;
                pos = comma + 1;
            }
            if (!snapshot.entries_.emplace(head, std::move(terms)).second) {
                throw ParseError(at + ": duplicate headword '" + head + "'");
            }
        }
        return snapshot;
    }

    void add(std::string headword, std::vector<std::string> related) {
        if (!entries_.emplace(to_lower_ascii(headword), std::move(related)).second) {
            throw std::invalid_argument("duplicate headword '" + headword + "'");
        }
    }

    bool contains(const std::string& headword) const { return entries_.count(headword) != 0; }

    const std::vector<std::string>* find(const std::string& headword) const {
        auto it = entries_.find(headword);
        return it == entries_.end() ? nullptr : &it->second;
    }

    std::size_t size() const { return entries_.size(); }

private:
    std::unordered_map<std::string, std::vector<std::string>> entries_;
};

// One sense of the query: its seed label, surviving member terms with their
// corpus-wide frequencies, and the TF-IDF weight vector.
struct Community {
    std::string label;
    std::vector<std::pair<std::string, long long>> members;
    SparseVector vector;
};

namespace detail {

// Runs raw dictionary terms through the preprocessing chain, deduplicating
// while preserving first occurrence.
inline void append_keywords(const Pipeline& pipeline, const std::string& raw_term,
                            std::vector<std::string>& out,
                            std::unordered_set<std::string>& seen) {
    for (std::string& kw : pipeline.keywords(raw_term)) {
        if (seen.insert(kw).second) out.push_back(std::move(kw));
    }
}

} // namespace detail

// Derives the sense seeds W_j for a query: the query's dictionary terms,
// preprocessed, with the query's own stem class removed.
inline std::vector<std::string> seed_senses(const DictionarySnapshot& snapshot,
                                            const std::string& query,
                                            const Pipeline& pipeline) {
    const std::string q = to_lower_ascii(query);
    const std::vector<std::string>* related = snapshot.find(q);
    if (related == nullptr) {
        throw DataError("query '" + q + "' not found in dictionary snapshot");
    }
    const std::string query_stem = porter_stem(q);
    std::vector<std::string> seeds;
    std::unordered_set<std::string> seen;
    for (const std::string& term : *related) {
        detail::append_keywords(pipeline, term, seeds, seen);
    }
    std::erase_if(seeds, [&](const std::string& s) { return porter_stem(s) == query_stem; });
    return seeds;
}

// Member candidates of one sense: the seed itself plus its preprocessed
// dictionary terms. A seed missing from the snapshot degenerates to a
// singleton community.
inline std::vector<std::string> expand_community(const DictionarySnapshot& snapshot,
                                                 const std::string& seed,
                                                 const Pipeline& pipeline) {
    std::vector<std::string> members{seed};
    std::unordered_set<std::string> seen{seed};
    if (const std::vector<std::string>* related = snapshot.find(seed)) {
        for (const std::string& term : *related) {
            detail::append_keywords(pipeline, term, members, seen);
        }
    }
    return members;
}

// Deletes candidate terms that appear nowhere in the corpus.
inline std::vector<std::string> prune_to_corpus(const std::vector<std::string>& members,
                                                const CorpusIndex& index) {
    std::vector<std::string> kept;
    kept.reserve(members.size());
    for (const std::string& term : members) {
        if (index.has_term(term)) kept.push_back(term);
    }
    return kept;
}

// Pairs each member with its total occurrence count across the corpus.
inline std::vector<std::pair<std::string, long long>> community_frequencies(
    const std::vector<std::string>& members, const CorpusIndex& index) {
    std::vector<std::pair<std::string, long long>> freqs;
    freqs.reserve(members.size());
    for (const std::string& term : members) {
        const long long f = index.corpus_frequency(term); // DataError if unpruned
        freqs.emplace_back(term, f);
    }
    return freqs;
}

// TF-IDF weights for a community: TF = corpus frequency over the number of
// distinct members (which may exceed 1), IDF from the document corpus.
inline SparseVector community_vector(
    const std::vector<std::pair<std::string, long long>>& members,
    const CorpusIndex& index) {
    if (members.empty()) {
        throw std::invalid_argument("community_vector: empty member list");
    }
    const auto distinct = static_cast<double>(members.size());
    std::vector<SparseVector::Entry> entries;
    entries.reserve(members.size());
    for (const auto& [term, freq] : members) {
        const int id = index.vocabulary().id_of(term);
        const double tf = static_cast<double>(freq) / distinct;
        entries.push_back({id, tf * index.idf(id)});
    }
    return SparseVector::make(std::move(entries));
}

// Full community construction for a query: seed -> expand -> prune ->
// frequencies -> vector, in seed order. Senses with no surviving member
// are dropped.
inline std::vector<Community> build_communities(const DictionarySnapshot& snapshot,
                                                const std::string& query,
                                                const CorpusIndex& index,
                                                const Pipeline& pipeline) {
    std::vector<Community> communities;
    for (const std::string& seed : seed_senses(snapshot, query, pipeline)) {
        std::vector<std::string> members =
            prune_to_corpus(expand_community(snapshot, seed, pipeline), index);
        if (members.empty()) continue;
        Community community;
        community.label = seed;
        community.members = community_frequencies(members, index);
        community.vector = community_vector(community.members, index);
        communities.push_back(std::move(community));
    }
    if (communities.empty()) {
        throw DataError("no sense of '" + to_lower_ascii(query) +
                        "' found in corpus");
    }
    return communities;
}

inline std::vector<LabeledVector> to_labeled_vectors(const std::vector<Community>& communities) {
    std::vector<LabeledVector> out;
    out.reserve(communities.size());
    for (const Community& c : communities) out.push_back({c.label, c.vector});
    return out;
}

// `label<TAB>term:freq,...` per community.
inline void write_communities_tsv(const std::vector<Community>& communities,
                                  std::ostream& out) {
    for (const Community& c : communities) {
        out << c.label << '\t';
        bool first = true;
        for (const auto& [term, freq] : c.members) {
            if (!first) out << ',';
            first = false;
            out << term << ':' << freq;
        }
        out << '\n';
    }
}

} // namespace senseclust
