// senseclust: clusters a retrieved-page corpus by the senses of an
// ambiguous one-word query.
//
//   senseclust cluster --query apple --corpus data/corpus/manifest.tsv
//       --dictionary data/dictionary.tsv --stopwords data/stopwords.txt
//       --lexicon data/nouns.txt --out out/
//   senseclust explain D3 --query apple ... (same inputs, no --out)

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "senseclust/clustering.hpp"
#include "senseclust/community.hpp"
#include "senseclust/corpus.hpp"
#include "senseclust/errors.hpp"
#include "senseclust/pipeline.hpp"
#include "senseclust/vector_space.hpp"

namespace fs = std::filesystem;
using namespace senseclust;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2; // unusable flags or input files
constexpr int kExitData = 3;   // inputs fine, query/corpus combination is not

struct RunConfig {
    std::string query;
    fs::path corpus_manifest;
    fs::path dictionary;
    fs::path stopwords;
    fs::path lexicon;
    fs::path output_dir;
    int top_n = 0; // 0 = use the whole manifest
    bool dump_intermediates = false;
};

struct Run {
    Pipeline pipeline;
    CorpusIndex index;
    std::vector<Community> communities;
    std::vector<LabeledVector> doc_vectors;
};

Run execute(const RunConfig& cfg) {
    Pipeline pipeline(StopList::load(cfg.stopwords), NounLexicon::load(cfg.lexicon));

    CorpusManifest manifest = load_manifest(cfg.corpus_manifest);
    if (cfg.top_n > 0 &&
        manifest.entries.size() > static_cast<std::size_t>(cfg.top_n)) {
        manifest.entries.resize(static_cast<std::size_t>(cfg.top_n));
    }

    std::vector<Document> docs;
    for (const RawDocument& raw : load_corpus(manifest)) {
        docs.push_back(pipeline.preprocess(raw));
    }
    CorpusIndex index = CorpusIndex::build(std::move(docs));

    DictionarySnapshot snapshot = DictionarySnapshot::load(cfg.dictionary);
    std::vector<Community> communities =
        build_communities(snapshot, cfg.query, index, pipeline);

    std::vector<LabeledVector> doc_vectors;
    doc_vectors.reserve(index.docs().size());
    for (const Document& doc : index.docs()) {
        doc_vectors.push_back({doc.doc_id, document_vector(doc, index)});
    }
    return Run{std::move(pipeline), std::move(index), std::move(communities),
               std::move(doc_vectors)};
}

void write_file(const fs::path& path, const std::function<void(std::ostream&)>& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    body(out);
    out.flush();
    if (!out) throw IoError("error while writing " + path.string());
}

int cmd_cluster(const RunConfig& cfg) {
    Run run = execute(cfg);
    ClusterReport report =
        assign(similarity_matrix(run.doc_vectors, to_labeled_vectors(run.communities)));

    fs::create_directories(cfg.output_dir);
    write_file(cfg.output_dir / "report.tsv", [&](std::ostream& out) {
        write_report(out, to_lower_ascii(cfg.query), report);
    });

    if (cfg.dump_intermediates) {
        write_file(cfg.output_dir / "preprocessed.tsv", [&](std::ostream& out) {
            for (const Document& doc : run.index.docs()) {
                out << doc.doc_id << '\t';
                for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
                    if (i > 0) out << ' ';
                    out << doc.tokens[i];
                }
                out << '\n';
            }
        });
        write_file(cfg.output_dir / "index.tsv", [&](std::ostream& out) {
            write_index_tsv(run.index, out);
        });
        write_file(cfg.output_dir / "communities.tsv", [&](std::ostream& out) {
            write_communities_tsv(run.communities, out);
        });
        write_file(cfg.output_dir / "doc_vectors.tsv", [&](std::ostream& out) {
            for (const LabeledVector& dv : run.doc_vectors) {
                write_vector_tsv_line(out, dv.id, dv.vec, run.index.vocabulary());
            }
        });
        write_file(cfg.output_dir / "community_vectors.tsv", [&](std::ostream& out) {
            for (const Community& c : run.communities) {
                write_vector_tsv_line(out, c.label, c.vector, run.index.vocabulary());
            }
        });
    }

    for (const auto& [label, doc_ids] : group_by_community(report)) {
        std::cout << label << ":";
        for (const std::string& id : doc_ids) std::cout << ' ' << id;
        std::cout << '\n';
    }
    if (!report.unclustered.empty()) {
        std::cout << "unclustered:";
        for (const std::string& id : report.unclustered) std::cout << ' ' << id;
        std::cout << '\n';
    }
    std::cout << "report written to " << (cfg.output_dir / "report.tsv").string()
              << '\n';
    return kExitOk;
}

// Per-term similarity breakdown for one document, so any matrix entry can
// be audited by hand.
int cmd_explain(const RunConfig& cfg, const std::string& doc_id) {
    Run run = execute(cfg);

    const LabeledVector* doc = nullptr;
    for (const LabeledVector& dv : run.doc_vectors) {
        if (dv.id == doc_id) {
            doc = &dv;
            break;
        }
    }
    if (doc == nullptr) throw DataError("unknown document id '" + doc_id + "'");

    std::cout << "document " << doc_id << " (norm "
              << format_weight(doc->vec.norm()) << ")\n";
    for (const Community& c : run.communities) {
        std::cout << "community " << c.label << ": similarity "
                  << format_weight(cosine_similarity(doc->vec, c.vector)) << '\n';
        bool any = false;
        for (const SparseVector::Entry& e : doc->vec.entries()) {
            const double cw = c.vector.weight_of(e.id);
            if (cw == 0.0) continue;
            any = true;
            std::cout << "  " << run.index.vocabulary().term_of(e.id) << ": "
                      << format_weight(e.weight) << " x " << format_weight(cw)
                      << " = " << format_weight(e.weight * cw) << '\n';
        }
        if (!any) std::cout << "  (no shared terms)\n";
        std::cout << "  doc norm " << format_weight(doc->vec.norm())
                  << ", community norm " << format_weight(c.vector.norm())
                  << ", dot " << format_weight(dot(doc->vec, c.vector)) << '\n';
    }
    return kExitOk;
}

void add_input_options(CLI::App& cmd, RunConfig& cfg) {
    cmd.add_option("--query", cfg.query, "ambiguous query word")->required();
    cmd.add_option("--corpus", cfg.corpus_manifest, "corpus manifest file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd.add_option("--dictionary", cfg.dictionary, "dictionary snapshot file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd.add_option("--stopwords", cfg.stopwords, "stopword list file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd.add_option("--lexicon", cfg.lexicon, "noun lexicon file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd.add_option("--top-n", cfg.top_n, "use only the first n manifest entries")
        ->check(CLI::PositiveNumber);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sense clustering for ambiguous one-word queries"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string explain_doc_id;

    CLI::App* cluster = app.add_subcommand("cluster", "cluster the corpus by query sense");
    add_input_options(*cluster, cfg);
    cluster->add_option("--out", cfg.output_dir, "output directory")->required();
    cluster->add_flag("--dump", cfg.dump_intermediates,
                      "also write preprocessed docs, index, communities and vectors");

    CLI::App* explain = app.add_subcommand("explain", "show per-term similarity contributions");
    explain->add_option("doc_id", explain_doc_id, "document id to explain")->required();
    add_input_options(*explain, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (cluster->parsed()) return cmd_cluster(cfg);
        return cmd_explain(cfg, explain_doc_id);
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}
