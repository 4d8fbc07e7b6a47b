#include "gcol/graph_io.hpp"

#include <charconv>
#include <istream>
#include <sstream>

#include "gcol/error.hpp"

namespace gcol {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' ||
                          s.front() == '\n'))
        s.remove_prefix(1);
    while (!s.empty() &&
           (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
        s.remove_suffix(1);
    return s;
}

int graph6_value(char c) {
    if (c < 63 || c > 126)
        throw ParseError(std::string("graph6: character out of range (code ") +
                         std::to_string(static_cast<unsigned char>(c)) + ")");
    return c - 63;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long parse_long(std::string_view tok, const char* what) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(std::string(what) + ": expected integer, got '" + std::string(tok) + "'");
    return value;
}

std::vector<std::string_view> lines_of(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        out.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    text = trim(text);
    if (text.substr(0, kGraph6Header.size()) == kGraph6Header) text.remove_prefix(kGraph6Header.size());
    if (text.empty()) throw ParseError("graph6: empty input");

    std::size_t pos = 0;
    long n = 0;
    int first = graph6_value(text[0]);
    if (first < 63) {
        n = first;
        pos = 1;
    } else {
        if (text.size() < 4) throw ParseError("graph6: malformed length prefix");
        if (graph6_value(text[1]) == 63) {
            if (text.size() < 8) throw ParseError("graph6: malformed length prefix");
            for (int i = 2; i < 8; ++i) n = (n << 6) | graph6_value(text[i]);
            pos = 8;
            if (n < 258048) throw ParseError("graph6: malformed length prefix (non-minimal)");
        } else {
            for (int i = 1; i < 4; ++i) n = (n << 6) | graph6_value(text[i]);
            pos = 4;
            if (n < 63) throw ParseError("graph6: malformed length prefix (non-minimal)");
        }
    }
    if (n > Graph::kMaxOrder)
        throw ParseError("graph6: order " + std::to_string(n) + " exceeds supported maximum " +
                         std::to_string(Graph::kMaxOrder));

    const long bits = n * (n - 1) / 2;
    const long chars = (bits + 5) / 6;
    if (static_cast<long>(text.size() - pos) < chars) throw ParseError("graph6: truncated adjacency data");
    if (static_cast<long>(text.size() - pos) > chars) throw ParseError("graph6: trailing garbage");

    Graph g(static_cast<int>(n));
    long k = 0;
    for (long c = 0; c < chars; ++c) {
        int val = graph6_value(text[pos + c]);
        for (int b = 5; b >= 0; --b, ++k) {
            const bool set = (val >> b) & 1;
            if (k >= bits) {
                if (set) throw ParseError("graph6: nonzero padding bits");
                continue;
            }
            if (!set) continue;
            // bit k enumerates pairs (i, j), i < j, column by column
            long j = 1;
            long base = 0;
            while (base + j <= k) {
                base += j;
                ++j;
            }
            g.add_edge(static_cast<int>(k - base), static_cast<int>(j));
        }
    }
    return g;
}

std::string serialize_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int acc = 0;
    int used = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                used = 0;
            }
        }
    }
    if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto t = trim(line);
        if (t.empty() || t == kGraph6Header) continue;
        try {
            out.push_back(parse_graph6(t));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

Graph parse_dimacs(std::string_view text) {
    long n = -1;
    long declared_m = -1;
    EdgeList edges;
    std::size_t lineno = 0;
    for (auto raw : lines_of(text)) {
        ++lineno;
        auto toks = split_ws(raw);
        if (toks.empty() || toks[0] == "c") continue;
        auto where = "dimacs line " + std::to_string(lineno);
        if (toks[0] == "p") {
            if (n >= 0) throw ParseError(where + ": duplicate problem line");
            if (toks.size() != 4 || (toks[1] != "edge" && toks[1] != "col"))
                throw ParseError(where + ": expected 'p edge n m'");
            n = parse_long(toks[2], where.c_str());
            declared_m = parse_long(toks[3], where.c_str());
            if (n < 0 || n > Graph::kMaxOrder)
                throw ParseError(where + ": order " + std::to_string(n) + " unsupported");
        } else if (toks[0] == "e") {
            if (n < 0) throw ParseError(where + ": edge before problem line");
            if (toks.size() != 3) throw ParseError(where + ": expected 'e u v'");
            long u = parse_long(toks[1], where.c_str());
            long v = parse_long(toks[2], where.c_str());
            if (u < 1 || v < 1 || u > n || v > n) throw ParseError(where + ": endpoint out of range");
            if (u == v) throw ParseError(where + ": loop");
            edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1)});
        } else {
            throw ParseError(where + ": unknown line type '" + std::string(toks[0]) + "'");
        }
    }
    if (n < 0) throw ParseError("dimacs: missing problem line");
    Graph g(static_cast<int>(n));
    for (const Edge& e : edges) g.add_edge(e.u, e.v);  // some files list both directions
    if (declared_m >= 0 && g.size() != declared_m && static_cast<long>(edges.size()) != declared_m)
        throw ParseError("dimacs: declared " + std::to_string(declared_m) + " edges, found " +
                         std::to_string(g.size()));
    return g;
}

std::string serialize_dimacs(const Graph& g) {
    std::ostringstream os;
    os << "p edge " << g.order() << " " << g.size() << "\n";
    for (const Edge& e : g.edges()) os << "e " << e.u + 1 << " " << e.v + 1 << "\n";
    return os.str();
}

Graph parse_edge_list(std::string_view text, int order) {
    EdgeList edges;
    long max_v = -1;
    std::size_t lineno = 0;
    for (auto raw : lines_of(text)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string_view::npos) raw = raw.substr(0, hash);
        auto toks = split_ws(raw);
        if (toks.empty()) continue;
        auto where = "edge list line " + std::to_string(lineno);
        if (toks.size() != 2) throw ParseError(where + ": expected 'u v'");
        long u = parse_long(toks[0], where.c_str());
        long v = parse_long(toks[1], where.c_str());
        if (u < 0 || v < 0) throw ParseError(where + ": negative vertex");
        if (u == v) throw ParseError(where + ": loop");
        max_v = std::max({max_v, u, v});
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    long n = order >= 0 ? order : max_v + 1;
    if (max_v >= n) throw ParseError("edge list: vertex " + std::to_string(max_v) + " exceeds order");
    if (n > Graph::kMaxOrder) throw ParseError("edge list: order " + std::to_string(n) + " unsupported");
    Graph g(static_cast<int>(n));
    for (const Edge& e : edges) {
        if (g.adjacent(e.u, e.v))
            throw ParseError("edge list: duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
        g.add_edge(e.u, e.v);
    }
    return g;
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream os;
    for (const Edge& e : g.edges()) os << e.u << " " << e.v << "\n";
    return os.str();
}

GraphFormat parse_format_name(std::string_view name) {
    if (name == "graph6" || name == "g6") return GraphFormat::Graph6;
    if (name == "dimacs" || name == "col") return GraphFormat::Dimacs;
    if (name == "edges" || name == "edgelist") return GraphFormat::Edges;
    throw InvalidArgument("unknown graph format '" + std::string(name) + "'");
}

Graph parse_graph(std::string_view text, GraphFormat format) {
    switch (format) {
        case GraphFormat::Graph6: return parse_graph6(text);
        case GraphFormat::Dimacs: return parse_dimacs(text);
        case GraphFormat::Edges: return parse_edge_list(text);
    }
    throw InvalidArgument("unknown graph format");
}

}  // namespace gcol
