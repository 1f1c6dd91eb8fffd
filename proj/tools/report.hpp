#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "forcelab/classifier.hpp"
#include "forcelab/forcing.hpp"
#include "forcelab/graph.hpp"
#include "forcelab/throttle.hpp"

// Serialization of solver results. Every emitter re-runs propagation on the
// witness it prints and throws ReverifyError on any mismatch.
namespace forcelab::report {

inline constexpr int kSchemaVersion = 1;

using nlohmann::ordered_json;

class ReverifyError : public Error {
public:
    using Error::Error;
};

/// Where a graph came from: graph6 lines use their encoding as id.
struct Source {
    std::string id;
    std::size_t line = 0;
};

ordered_json vertex_list(const VertexSet& s);
ordered_json ext_nat(const ExtNat& v);

/// id, line, n, m, maxDegree.
ordered_json graph_header(const Graph& g, const Source& src);

ordered_json propagation(const Graph& g, const VertexSet& s, Rule rule, const PropagationOutcome& outcome);
ordered_json throttle(const Graph& g, const ThrottleResult& r);
ordered_json classification(const Graph& g, const ExtremeClassification& c);

/// One-line human summary, e.g. "thp<=n-2 (not in G: induced house)".
std::string classification_summary(const Graph& g, const ExtremeClassification& c);

/// Checks value = omega*|S| + pt(G; S) with pt recomputed from scratch.
void reverify(const Graph& g, const ThrottleResult& r);

/// TSV helpers: tab-joined fields, vertex sets as comma lists ("-" when empty).
std::string tsv_row(const std::vector<std::string>& fields);
std::string tsv_set(const VertexSet& s);

}  // namespace forcelab::report
