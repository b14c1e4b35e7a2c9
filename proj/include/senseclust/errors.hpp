#pragma once

#include <stdexcept>
#include <string>

namespace senseclust {

// Missing or unreadable files.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally invalid input files (manifest, dictionary, word lists).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Inputs that parse but cannot be processed: unknown query, empty corpus,
// no surviving sense community, unknown term or document id.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace senseclust
