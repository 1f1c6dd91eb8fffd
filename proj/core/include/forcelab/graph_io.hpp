#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "forcelab/graph.hpp"

namespace forcelab {

/// Largest order accepted by the graph6 long form by default (the 18-bit N(n) form).
inline constexpr std::size_t kGraph6DefaultCap = 258047;

/// Decodes one graph6 line (without the trailing newline; an optional
/// ">>graph6<<" header is accepted). Throws ParseError naming the byte offset
/// for malformed headers, truncated payloads, bad characters, nonzero padding
/// and trailing garbage; CapacityError when the order exceeds `cap` or the
/// VertexSet capacity.
Graph parse_graph6(std::string_view line, std::size_t cap = kGraph6DefaultCap);

/// Encodes in graph6 (short form for n <= 62, 18-bit long form above).
std::string to_graph6(const Graph& g);

/// Plain edge-list text: first line "n m", then m lines "u v" (0-indexed).
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_text(std::string_view text);
std::string to_edge_list(const Graph& g);

}  // namespace forcelab
