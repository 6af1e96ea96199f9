#include <hrl/io.hpp>

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace hrl::io {

ParseError::ParseError(std::string source, std::size_t line, const std::string & message) :
    std::runtime_error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + message),
    source_(std::move(source)),
    line_(line)
{
}

namespace {

/// Line reader that tracks 1-based positions and splits on whitespace.
class LineReader {
public:
    LineReader(std::istream & in, std::string source) : in_(in), source_(std::move(source)) {}

    /// Next non-blank line's tokens; empty when the input is exhausted.
    std::vector<std::string_view> next(std::string & storage)
    {
        while (std::getline(in_, storage)) {
            ++line_;
            if (!storage.empty() && storage.back() == '\r')
                storage.pop_back();
            auto tokens = split(storage);
            if (!tokens.empty())
                return tokens;
        }
        ++line_;
        return {};
    }

    std::vector<std::string_view> expect(std::string & storage, const std::string & what)
    {
        auto tokens = next(storage);
        if (tokens.empty())
            fail("unexpected end of input, expected " + what);
        return tokens;
    }

    template <typename T>
    T number(std::string_view token, const std::string & what) const
    {
        T value{};
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size())
            fail("invalid " + what + " '" + std::string(token) + "'");
        return value;
    }

    [[noreturn]] void fail(const std::string & message) const { throw ParseError(source_, line_, message); }

    bool at_end(std::string & storage)
    {
        auto tokens = next(storage);
        return tokens.empty();
    }

private:
    static std::vector<std::string_view> split(std::string_view line)
    {
        std::vector<std::string_view> out;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
                ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t')
                ++j;
            if (j > i)
                out.push_back(line.substr(i, j - i));
            i = j;
        }
        return out;
    }

    std::istream & in_;
    std::string source_;
    std::size_t line_ = 0;
};

std::ifstream open_in(const std::filesystem::path & path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open '" + path.string() + "' for reading");
    return in;
}

std::ofstream open_out(const std::filesystem::path & path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    return out;
}

void finish(std::ofstream & out, const std::filesystem::path & path)
{
    out.flush();
    if (!out)
        throw IoError("write to '" + path.string() + "' failed");
}

} // namespace

LoadedHypergraph parse_hypergraph(std::istream & in, const std::string & source)
{
    LineReader reader(in, source);
    std::string line;
    auto header = reader.expect(line, "header 'k n m'");
    if (header.size() != 3)
        reader.fail("header must be 'k n m'");
    auto k = reader.number<std::size_t>(header[0], "uniformity");
    auto n = reader.number<std::size_t>(header[1], "vertex count");
    auto m = reader.number<std::size_t>(header[2], "edge count");
    if (k == 0)
        reader.fail("uniformity must be positive");

    std::vector<std::vector<Vertex>> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        auto tokens = reader.expect(line, "edge " + std::to_string(i + 1) + " of " + std::to_string(m));
        if (tokens.size() != k)
            reader.fail("edge has " + std::to_string(tokens.size()) + " vertices, expected " + std::to_string(k));
        std::vector<Vertex> edge;
        for (auto token : tokens) {
            auto v = reader.number<std::uint64_t>(token, "vertex id");
            if (v >= n)
                reader.fail("vertex " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
            edge.push_back(static_cast<Vertex>(v));
        }
        edges.push_back(std::move(edge));
    }
    if (!reader.at_end(line))
        reader.fail("trailing content after " + std::to_string(m) + " edges");

    try {
        auto built = Hypergraph::build(k, n, std::move(edges));
        return {std::move(built.graph), std::move(built.canonical_index)};
    } catch (const std::invalid_argument & e) {
        throw ParseError(source, 0, e.what());
    }
}

void write_hypergraph(std::ostream & out, const Hypergraph & graph)
{
    out << graph.k() << ' ' << graph.n() << ' ' << graph.num_edges() << '\n';
    for (EdgeIndex e = 0; e < graph.num_edges(); ++e) {
        auto vs = graph.edge(e);
        for (std::size_t i = 0; i < vs.size(); ++i)
            out << (i ? " " : "") << vs[i];
        out << '\n';
    }
}

Coloring parse_coloring(std::istream & in, const LoadedHypergraph & graph, const std::string & source)
{
    LineReader reader(in, source);
    std::string line;
    auto header = reader.expect(line, "header 'r m'");
    if (header.size() != 2)
        reader.fail("header must be 'r m'");
    auto r = reader.number<std::size_t>(header[0], "color count");
    auto m = reader.number<std::size_t>(header[1], "edge count");
    if (r == 0)
        reader.fail("color count must be positive");
    if (m != graph.graph.num_edges())
        reader.fail("coloring lists " + std::to_string(m) + " edges but the hypergraph has "
            + std::to_string(graph.graph.num_edges()));

    std::vector<Color> colors(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
        auto tokens = reader.expect(line, "color " + std::to_string(i + 1) + " of " + std::to_string(m));
        if (tokens.size() != 1)
            reader.fail("expected one color per line");
        auto c = reader.number<Color>(tokens[0], "color");
        if (c < 1 || c > r)
            reader.fail("color " + std::to_string(c) + " outside [1, " + std::to_string(r) + "]");
        colors[graph.canonical_index.empty() ? i : graph.canonical_index[i]] = c;
    }
    if (!reader.at_end(line))
        reader.fail("trailing content after " + std::to_string(m) + " colors");
    return Coloring(r, std::move(colors));
}

void write_coloring(std::ostream & out, const Coloring & coloring)
{
    out << coloring.r() << ' ' << coloring.size() << '\n';
    for (Color c : coloring.colors())
        out << c << '\n';
}

Partition parse_partition(std::istream & in, const std::string & source)
{
    LineReader reader(in, source);
    std::string line;
    auto header = reader.expect(line, "header 't'");
    if (header.size() != 1)
        reader.fail("header must be 't'");
    auto t = reader.number<std::size_t>(header[0], "part count");
    Partition parts;
    // Blank lines are skipped by the reader, so empty parts are not
    // representable; every class must list at least one vertex.
    for (std::size_t i = 0; i < t; ++i) {
        auto tokens = reader.expect(line, "part " + std::to_string(i + 1) + " of " + std::to_string(t));
        std::vector<Vertex> part;
        for (auto token : tokens)
            part.push_back(reader.number<Vertex>(token, "vertex id"));
        parts.push_back(std::move(part));
    }
    if (!reader.at_end(line))
        reader.fail("trailing content after " + std::to_string(t) + " parts");
    return parts;
}

void write_partition(std::ostream & out, const Partition & partition)
{
    out << partition.size() << '\n';
    for (const auto & part : partition) {
        for (std::size_t i = 0; i < part.size(); ++i)
            out << (i ? " " : "") << part[i];
        out << '\n';
    }
}

LoadedHypergraph read_hypergraph(const std::filesystem::path & path)
{
    auto in = open_in(path);
    return parse_hypergraph(in, path.string());
}

Coloring read_coloring(const std::filesystem::path & path, const LoadedHypergraph & graph)
{
    auto in = open_in(path);
    return parse_coloring(in, graph, path.string());
}

Partition read_partition(const std::filesystem::path & path)
{
    auto in = open_in(path);
    return parse_partition(in, path.string());
}

void save_hypergraph(const std::filesystem::path & path, const Hypergraph & graph)
{
    auto out = open_out(path);
    write_hypergraph(out, graph);
    finish(out, path);
}

void save_coloring(const std::filesystem::path & path, const Coloring & coloring)
{
    auto out = open_out(path);
    write_coloring(out, coloring);
    finish(out, path);
}

void save_partition(const std::filesystem::path & path, const Partition & partition)
{
    auto out = open_out(path);
    write_partition(out, partition);
    finish(out, path);
}

std::string read_text(const std::filesystem::path & path)
{
    auto in = open_in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text(const std::filesystem::path & path, const std::string & text)
{
    auto out = open_out(path);
    out << text;
    finish(out, path);
}

} // namespace hrl::io
