#pragma once

#include <hrl/core.hpp>

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace hrl::io {

/// Malformed input. `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string source, std::size_t line, const std::string & message);

    const std::string & source() const { return source_; }
    std::size_t line() const { return line_; }

private:
    std::string source_;
    std::size_t line_;
};

/// File could not be opened or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A hypergraph as read from text, together with where each file line's edge
/// landed in canonical order (needed to align a coloring written against the
/// file's order).
struct LoadedHypergraph {
    Hypergraph graph;
    std::vector<EdgeIndex> canonical_index;
};

// Hypergraph text: "k n m" then m lines of k vertex ids.
LoadedHypergraph parse_hypergraph(std::istream & in, const std::string & source = "<stream>");
void write_hypergraph(std::ostream & out, const Hypergraph & graph);

// Coloring text: "r m" then m lines of one color, aligned with the file order
// of the paired hypergraph.
Coloring parse_coloring(std::istream & in, const LoadedHypergraph & graph, const std::string & source = "<stream>");
void write_coloring(std::ostream & out, const Coloring & coloring);

// Partition text: "t" then t lines of space-separated vertex ids.
Partition parse_partition(std::istream & in, const std::string & source = "<stream>");
void write_partition(std::ostream & out, const Partition & partition);

LoadedHypergraph read_hypergraph(const std::filesystem::path & path);
Coloring read_coloring(const std::filesystem::path & path, const LoadedHypergraph & graph);
Partition read_partition(const std::filesystem::path & path);

void save_hypergraph(const std::filesystem::path & path, const Hypergraph & graph);
void save_coloring(const std::filesystem::path & path, const Coloring & coloring);
void save_partition(const std::filesystem::path & path, const Partition & partition);

std::string read_text(const std::filesystem::path & path);
void write_text(const std::filesystem::path & path, const std::string & text);

} // namespace hrl::io
