#include "forcelab/graph_io.hpp"

#include <charconv>
#include <iterator>
#include <sstream>

#include "forcelab/error.hpp"

namespace forcelab {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

int sextet(std::string_view line, std::size_t pos) {
    const auto c = static_cast<unsigned char>(line[pos]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte outside 63..126", pos);
    return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line, std::size_t cap) {
    std::size_t pos = 0;
    if (line.substr(0, kGraph6Header.size()) == kGraph6Header) pos = kGraph6Header.size();
    if (pos >= line.size()) throw ParseError("empty graph6 record", pos);

    std::uint64_t n = 0;
    if (static_cast<unsigned char>(line[pos]) != 126) {
        n = static_cast<std::uint64_t>(sextet(line, pos));
        pos += 1;
    } else if (pos + 1 < line.size() && static_cast<unsigned char>(line[pos + 1]) == 126) {
        if (pos + 8 > line.size()) throw ParseError("truncated graph6 order field", line.size());
        for (std::size_t i = pos + 2; i < pos + 8; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(line, i));
        if (n <= kGraph6DefaultCap) throw ParseError("non-canonical graph6 long order form", pos);
        pos += 8;
    } else {
        if (pos + 4 > line.size()) throw ParseError("truncated graph6 order field", line.size());
        for (std::size_t i = pos + 1; i < pos + 4; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(line, i));
        if (n < 63) throw ParseError("non-canonical graph6 long order form", pos);
        pos += 4;
    }
    if (n == 0) throw ValidationError("graph6 record encodes the empty graph");
    if (n > cap) throw CapacityError("graph6 order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    if (n > kMaxVertices)
        throw CapacityError("graph6 order " + std::to_string(n) + " exceeds vertex capacity " +
                            std::to_string(kMaxVertices));

    const std::uint64_t bits = n * (n - 1) / 2;
    const std::size_t payload = static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() < pos + payload) throw ParseError("truncated graph6 payload", line.size());
    if (line.size() > pos + payload) throw ParseError("trailing bytes after graph6 payload", pos + payload);

    std::vector<Edge> edges;
    std::uint64_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int byte = sextet(line, pos + static_cast<std::size_t>(k / 6));
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    if (k % 6 != 0) {
        const std::size_t last = pos + payload - 1;
        const int byte = sextet(line, last);
        if (byte & ((1 << (6 - k % 6)) - 1)) throw ParseError("nonzero graph6 padding bits", last);
    }
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

std::string to_graph6(const Graph& g) {
    const std::uint64_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    int acc = 0, used = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = used = 0;
            }
        }
    }
    if (used > 0) out.push_back(static_cast<char>(63 + (acc << (6 - used))));
    return out;
}

Graph parse_edge_list_text(std::string_view text) {
    std::size_t pos = 0;
    auto next_number = [&](const char* what) -> std::uint64_t {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
            ++pos;
        if (pos >= text.size()) throw ParseError(std::string("edge list ended while reading ") + what, pos);
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
        if (ec != std::errc{}) throw ParseError(std::string("expected ") + what, pos);
        pos = static_cast<std::size_t>(ptr - text.data());
        return v;
    };
    const auto n = next_number("vertex count");
    const auto m = next_number("edge count");
    if (n > kMaxVertices)
        throw CapacityError("order " + std::to_string(n) + " exceeds vertex capacity " + std::to_string(kMaxVertices));
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::uint64_t e = 0; e < m; ++e) {
        const auto start = pos;
        const auto u = next_number("edge endpoint");
        const auto v = next_number("edge endpoint");
        if (u >= n || v >= n) throw ParseError("edge endpoint out of range", start);
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
        ++pos;
    if (pos != text.size()) throw ParseError("trailing data after edge list", pos);
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph parse_edge_list(std::istream& in) {
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_edge_list_text(text);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace forcelab
