#pragma once

// Corpus ingestion: manifest-driven loading of retrieved pages and a
// best-effort markup stripper that reduces them to plain text.

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "senseclust/errors.hpp"
#include "senseclust/text_file.hpp"

namespace senseclust {

// One retrieved page, markup already stripped.
struct RawDocument {
    std::string doc_id;
    std::string source; // file path or URI the text came from
    std::string text;
};

struct ManifestEntry {
    std::string doc_id;
    std::filesystem::path path;
};

// Ordered list of corpus members; entry order defines document order
// (and thereby N, the corpus size).
struct CorpusManifest {
    std::vector<ManifestEntry> entries;
};

// Parses a manifest file: one `doc_id<TAB>relative-path` per line,
// '#' comments and blank lines ignored. Relative paths are resolved
// against the manifest's own directory.
inline CorpusManifest load_manifest(const std::filesystem::path& path) {
    const auto base = path.parent_path();
    CorpusManifest manifest;
    std::unordered_set<std::string> seen;
    for (const DataLine& line : read_data_lines(path)) {
        const std::size_t tab = line.text.find('\t');
        if (tab == std::string::npos ||
            line.text.find('\t', tab + 1) != std::string::npos) {
            throw ParseError(path.string() + ":" + std::to_string(line.number) +
                             ": expected doc_id<TAB>path");
        }
        std::string id = trim(std::string_view(line.text).substr(0, tab));
        std::string rel = trim(std::string_view(line.text).substr(tab + 1));
        if (id.empty() || rel.empty()) {
            throw ParseError(path.string() + ":" + std::to_string(line.number) +
                             ": empty doc id or path");
        }
        if (!seen.insert(id).second) {
            throw ParseError(path.string() + ":" + std::to_string(line.number) +
                             ": duplicate doc id '" + id + "'");
        }
        std::filesystem::path file(rel);
        if (file.is_relative()) file = base / file;
        manifest.entries.push_back({std::move(id), std::move(file)});
    }
    return manifest;
}

namespace detail {

// Decodes the named character entity starting at s[pos] (the '&').
// Returns true and advances pos past the ';' on success.
inline bool decode_entity(std::string_view s, std::size_t& pos, char& out) {
    static constexpr std::pair<std::string_view, char> kEntities[] = {
        {"&amp;", '&'},  {"&lt;", '<'},   {"&gt;", '>'},
        {"&quot;", '"'}, {"&apos;", '\''},
    };
    for (const auto& [name, ch] : kEntities) {
        if (s.substr(pos, name.size()) == name) {
            pos += name.size();
            out = ch;
            return true;
        }
    }
    return false;
}

} // namespace detail

// Reduces markup to plain text: tag spans `<...>` become a separator,
// the five basic character entities are decoded, and whitespace runs
// collapse to single spaces. Malformed markup degrades to best effort
// (an unterminated tag swallows the rest of the input).
inline std::string strip_markup(std::string_view text) {
    std::string flat;
    flat.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '<') {
            const std::size_t close = text.find('>', i + 1);
            if (close == std::string_view::npos) break;
            flat.push_back(' ');
            i = close + 1;
        } else if (c == '&') {
            char decoded;
            if (detail::decode_entity(text, i, decoded)) {
                flat.push_back(decoded);
            } else {
                flat.push_back(c);
                ++i;
            }
        } else {
            flat.push_back(c);
            ++i;
        }
    }
    std::string out;
    out.reserve(flat.size());
    bool in_space = false;
    for (const char c : flat) {
        if (is_ascii_space(c)) {
            in_space = true;
            continue;
        }
        if (in_space && !out.empty()) out.push_back(' ');
        in_space = false;
        out.push_back(c);
    }
    return out;
}

// Loads every manifest entry, rejecting invalid UTF-8, and strips markup.
// The result preserves manifest order.
inline std::vector<RawDocument> load_corpus(const CorpusManifest& manifest) {
    std::vector<RawDocument> docs;
    docs.reserve(manifest.entries.size());
    for (const ManifestEntry& entry : manifest.entries) {
        std::string raw;
        try {
            raw = read_text_file(entry.path);
        } catch (const IoError&) {
            throw IoError("document '" + entry.doc_id + "': cannot read " +
                          entry.path.string());
        }
        if (!is_valid_utf8(raw)) {
            throw ParseError("document '" + entry.doc_id +
                             "': invalid UTF-8 in " + entry.path.string());
        }
        docs.push_back({entry.doc_id, entry.path.string(), strip_markup(raw)});
    }
    return docs;
}

} // namespace senseclust
