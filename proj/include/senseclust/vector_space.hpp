#pragma once

// TF-IDF vector space: vocabulary and corpus statistics, sparse weight
// vectors and cosine similarity.
//
//   TF_i  = n_i / sum_k n_k          (term count over document length)
//   IDF_i = log10(N / df_i)
//   w_i   = TF_i * IDF_i

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "senseclust/errors.hpp"
#include "senseclust/pipeline.hpp"

namespace senseclust {

// Sorted (token id, weight) pairs. Zero weights are dropped on
// construction; an absent entry reads as weight 0.
class SparseVector {
public:
    struct Entry {
        int id;
        double weight;
    };

    SparseVector() = default;

    // Builds from arbitrary-order entries. Duplicate ids, negative or
    // non-finite weights are rejected.
    static SparseVector make(std::vector<Entry> entries) {
        std::sort(entries.begin(), entries.end(),
                  [](const Entry& a, const Entry& b) { return a.id < b.id; });
        SparseVector v;
        v.entries_.reserve(entries.size());
        int last_id = -1;
        for (const Entry& e : entries) {
            if (e.id < 0 || e.id == last_id) {
                throw std::invalid_argument("sparse vector: bad or duplicate id " +
                                            std::to_string(e.id));
            }
            if (!std::isfinite(e.weight) || e.weight < 0.0) {
                throw std::invalid_argument("sparse vector: weight must be finite and >= 0");
            }
            last_id = e.id;
            if (e.weight > 0.0) v.entries_.push_back(e);
        }
        return v;
    }

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    double weight_of(int id) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), id,
                                   [](const Entry& e, int key) { return e.id < key; });
        return (it != entries_.end() && it->id == id) ? it->weight : 0.0;
    }

    double norm() const {
        double sq = 0.0;
        for (const Entry& e : entries_) sq += e.weight * e.weight;
        return std::sqrt(sq);
    }

private:
    std::vector<Entry> entries_;
};

// Merge-join dot product over matching token ids.
inline double dot(const SparseVector& a, const SparseVector& b) {
    double sum = 0.0;
    auto ia = a.entries().begin();
    auto ib = b.entries().begin();
    while (ia != a.entries().end() && ib != b.entries().end()) {
        if (ia->id < ib->id) {
            ++ia;
        } else if (ib->id < ia->id) {
            ++ib;
        } else {
            sum += ia->weight * ib->weight;
            ++ia;
            ++ib;
        }
    }
    return sum;
}

// cos(theta) between two weight vectors; 0 when either has zero norm.
inline double cosine_similarity(const SparseVector& a, const SparseVector& b) {
    const double na = a.norm();
    const double nb = b.norm();
    if (na == 0.0 || nb == 0.0) return 0.0;
    return std::clamp(dot(a, b) / (na * nb), 0.0, 1.0);
}

// A vector with the id of the document or community it belongs to.
struct LabeledVector {
    std::string id;
    SparseVector vec;
};

// term <-> dense token id, assigned in first-appearance order.
class Vocabulary {
public:
    int add(const std::string& term) {
        auto it = ids_.find(term);
        if (it != ids_.end()) return it->second;
        const int id = static_cast<int>(terms_.size());
        ids_.emplace(term, id);
        terms_.push_back(term);
        return id;
    }

    bool contains(const std::string& term) const { return ids_.count(term) != 0; }

    int id_of(const std::string& term) const {
        auto it = ids_.find(term);
        if (it == ids_.end()) throw DataError("unknown term '" + term + "'");
        return it->second;
    }

    const std::string& term_of(int id) const { return terms_.at(static_cast<std::size_t>(id)); }
    int size() const { return static_cast<int>(terms_.size()); }

private:
    std::unordered_map<std::string, int> ids_;
    std::vector<std::string> terms_;
};

inline double term_frequency(long long count, long long total) {
    if (total <= 0) throw std::invalid_argument("term_frequency: total must be > 0");
    if (count < 0 || count > total) {
        throw std::invalid_argument("term_frequency: count out of range");
    }
    return static_cast<double>(count) / static_cast<double>(total);
}

inline double inverse_document_frequency(int n_docs, int df) {
    if (n_docs < 1) throw std::invalid_argument("idf: corpus must have documents");
    if (df < 1 || df > n_docs) {
        throw std::invalid_argument("idf: df must be in [1, n_docs]");
    }
    return std::log10(static_cast<double>(n_docs) / static_cast<double>(df));
}

// Immutable corpus statistics: vocabulary, document frequencies and total
// occurrence counts over the preprocessed documents (kept in corpus order).
class CorpusIndex {
public:
    static CorpusIndex build(std::vector<Document> docs) {
        if (docs.empty()) throw DataError("empty corpus");
        CorpusIndex index;
        index.docs_ = std::move(docs);
        for (const Document& doc : index.docs_) {
            for (const std::string& token : doc.tokens) {
                const int id = index.vocab_.add(token);
                if (id == static_cast<int>(index.counts_.size())) {
                    index.counts_.push_back(0);
                    index.df_.push_back(0);
                }
            }
            for (const auto& [term, count] : doc.counts) {
                const int id = index.vocab_.id_of(term);
                index.df_[static_cast<std::size_t>(id)] += 1;
                index.counts_[static_cast<std::size_t>(id)] += count;
            }
        }
        if (index.vocab_.size() == 0) {
            throw DataError("corpus has no keywords after preprocessing");
        }
        return index;
    }

    int n_docs() const { return static_cast<int>(docs_.size()); }
    const Vocabulary& vocabulary() const { return vocab_; }
    const std::vector<Document>& docs() const { return docs_; }

    bool has_term(const std::string& term) const { return vocab_.contains(term); }

    int df(int id) const { return df_.at(static_cast<std::size_t>(id)); }
    int df(const std::string& term) const { return df(vocab_.id_of(term)); }

    // Total occurrences of the term across the whole corpus.
    long long corpus_frequency(int id) const { return counts_.at(static_cast<std::size_t>(id)); }
    long long corpus_frequency(const std::string& term) const {
        return corpus_frequency(vocab_.id_of(term));
    }

    double idf(int id) const { return inverse_document_frequency(n_docs(), df(id)); }
    double idf(const std::string& term) const { return idf(vocab_.id_of(term)); }

private:
    Vocabulary vocab_;
    std::vector<Document> docs_;
    std::vector<int> df_;
    std::vector<long long> counts_;
};

// TF-IDF vector of one document against the corpus index.
inline SparseVector document_vector(const Document& doc, const CorpusIndex& index) {
    std::vector<SparseVector::Entry> entries;
    entries.reserve(doc.counts.size());
    for (const auto& [term, count] : doc.counts) {
        const int id = index.vocabulary().id_of(term);
        entries.push_back(
            {id, term_frequency(count, doc.total) * index.idf(id)});
    }
    return SparseVector::make(std::move(entries));
}

inline std::string format_weight(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.5f", value);
    return buf;
}

// `term<TAB>id<TAB>df` per vocabulary entry, in id order.
inline void write_index_tsv(const CorpusIndex& index, std::ostream& out) {
    for (int id = 0; id < index.vocabulary().size(); ++id) {
        out << index.vocabulary().term_of(id) << '\t' << id << '\t'
            << index.df(id) << '\n';
    }
}

// `row_id<TAB>term=weight,...` with terms in id order.
inline void write_vector_tsv_line(std::ostream& out, std::string_view row_id,
                                  const SparseVector& vec, const Vocabulary& vocab) {
    out << row_id << '\t';
    bool first = true;
    for (const SparseVector::Entry& e : vec.entries()) {
        if (!first) out << ',';
        first = false;
        out << vocab.term_of(e.id) << '=' << format_weight(e.weight);
    }
    out << '\n';
}

} // namespace senseclust
