#pragma once

// Document-to-community similarity matrix and maximum-similarity
// assignment. Documents whose row is all zero stay unclustered.

#include <cmath>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "senseclust/errors.hpp"
#include "senseclust/vector_space.hpp"

namespace senseclust {

struct SimilarityMatrix {
    std::vector<std::string> doc_ids;
    std::vector<std::string> community_labels;
    std::vector<std::vector<double>> values; // [doc][community], in [0,1]
};

struct Assignment {
    std::string community;
    double similarity = 0.0;
};

struct ClusterReport {
    std::map<std::string, Assignment> assignments; // doc_id -> winner
    std::vector<std::string> unclustered;          // row order
    SimilarityMatrix matrix;
};

inline SimilarityMatrix similarity_matrix(const std::vector<LabeledVector>& doc_vectors,
                                          const std::vector<LabeledVector>& community_vectors) {
    if (community_vectors.empty()) {
        throw DataError("similarity matrix needs at least one community");
    }
    SimilarityMatrix matrix;
    matrix.doc_ids.reserve(doc_vectors.size());
    matrix.community_labels.reserve(community_vectors.size());
    for (const LabeledVector& c : community_vectors) matrix.community_labels.push_back(c.id);
    for (const LabeledVector& d : doc_vectors) {
        matrix.doc_ids.push_back(d.id);
        std::vector<double> row;
        row.reserve(community_vectors.size());
        for (const LabeledVector& c : community_vectors) {
            row.push_back(cosine_similarity(d.vec, c.vec));
        }
        matrix.values.push_back(std::move(row));
    }
    return matrix;
}

// Maximum-similarity assignment per document. Exact ties go to the
// lexicographically smallest community label; all-zero rows are unclustered.
inline ClusterReport assign(SimilarityMatrix matrix) {
    if (matrix.values.size() != matrix.doc_ids.size()) {
        throw std::invalid_argument("similarity matrix: row/doc mismatch");
    }
    ClusterReport report;
    for (std::size_t row = 0; row < matrix.values.size(); ++row) {
        const std::vector<double>& sims = matrix.values[row];
        if (sims.size() != matrix.community_labels.size()) {
            throw std::invalid_argument("similarity matrix: column/label mismatch");
        }
        std::size_t best = 0;
        for (std::size_t col = 0; col < sims.size(); ++col) {
            if (!std::isfinite(sims[col])) {
                throw std::invalid_argument("similarity matrix: non-finite value");
            }
            if (col == 0) continue;
            if (sims[col] > sims[best] ||
                (sims[col] == sims[best] &&
                 matrix.community_labels[col] < matrix.community_labels[best])) {
                best = col;
            }
        }
        if (sims.empty() || sims[best] == 0.0) {
            report.unclustered.push_back(matrix.doc_ids[row]);
        } else {
            report.assignments[matrix.doc_ids[row]] =
                {matrix.community_labels[best], sims[best]};
        }
    }
    report.matrix = std::move(matrix);
    return report;
}

// Groups assigned documents by community, each list in matrix row order;
// communities with no documents are omitted.
inline std::map<std::string, std::vector<std::string>> group_by_community(
    const ClusterReport& report) {
    std::map<std::string, std::vector<std::string>> groups;
    for (const std::string& doc_id : report.matrix.doc_ids) {
        auto it = report.assignments.find(doc_id);
        if (it != report.assignments.end()) {
            groups[it->second.community].push_back(doc_id);
        }
    }
    return groups;
}

// Report format: two '#' header lines, then one line per document:
// `doc_id<TAB>assigned_or_-<TAB>similarity<TAB>sim1,sim2,...` (5 decimals).
inline void write_report(std::ostream& out, std::string_view query,
                         const ClusterReport& report) {
    out << "#query\t" << query << '\n';
    out << "#communities\t";
    for (std::size_t i = 0; i < report.matrix.community_labels.size(); ++i) {
        if (i > 0) out << ',';
        out << report.matrix.community_labels[i];
    }
    out << '\n';
    for (std::size_t row = 0; row < report.matrix.doc_ids.size(); ++row) {
        const std::string& doc_id = report.matrix.doc_ids[row];
        auto it = report.assignments.find(doc_id);
        out << doc_id << '\t';
        if (it == report.assignments.end()) {
            out << "-\t" << format_weight(0.0);
        } else {
            out << it->second.community << '\t' << format_weight(it->second.similarity);
        }
        out << '\t';
        const std::vector<double>& sims = report.matrix.values[row];
        for (std::size_t col = 0; col < sims.size(); ++col) {
            if (col > 0) out << ',';
            out << format_weight(sims[col]);
        }
        out << '\n';
    }
}

} // namespace senseclust
