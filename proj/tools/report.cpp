#include "report.hpp"

#include <sstream>

#include "forcelab/metrics.hpp"

namespace forcelab::report {

ordered_json vertex_list(const VertexSet& s) {
    ordered_json out = ordered_json::array();
    s.for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

ordered_json ext_nat(const ExtNat& v) {
    if (v.is_infinite()) return "inf";
    return v.value();
}

ordered_json graph_header(const Graph& g, const Source& src) {
    ordered_json out;
    out["id"] = src.id;
    out["line"] = src.line;
    out["n"] = g.order();
    out["m"] = g.size();
    out["maxDegree"] = g.max_degree();
    return out;
}

ordered_json propagation(const Graph& g, const VertexSet& s, Rule rule, const PropagationOutcome& outcome) {
    const ExtNat again = propagation_time(g, s, rule);
    if (again != outcome.steps) throw ReverifyError("propagation time changed on re-run");
    ordered_json out;
    out["set"] = vertex_list(s);
    out["forcing"] = outcome.steps.is_finite();
    out["pt"] = ext_nat(outcome.steps);
    ordered_json forces = ordered_json::array();
    for (const auto& e : outcome.history) forces.push_back({{"step", e.step}, {"forcer", e.forcer}, {"forced", e.forced}});
    out["forces"] = std::move(forces);
    out["finalBlue"] = vertex_list(outcome.final_blue);
    return out;
}

void reverify(const Graph& g, const ThrottleResult& r) {
    const ExtNat pt = propagation_time(g, r.witness, r.rule);
    if (pt.is_infinite()) throw ReverifyError("witness " + r.witness.str() + " does not force the graph");
    if (pt.value() != r.witness_pt || r.witness.size() != r.witness_size)
        throw ReverifyError("witness " + r.witness.str() + " has pt " + std::to_string(pt.value()) + ", reported " +
                            std::to_string(r.witness_pt));
    const Rational value = r.omega * Rational(static_cast<std::int64_t>(r.witness_size)) +
                           Rational(static_cast<std::int64_t>(r.witness_pt));
    if (value != r.value) throw ReverifyError("objective " + value.str() + " != reported " + r.value.str());
    (void)g;
}

ordered_json throttle(const Graph& g, const ThrottleResult& r) {
    reverify(g, r);
    ordered_json out;
    out["rule"] = std::string(to_string(r.rule));
    out["omega"] = r.omega.str();
    out["value"] = r.value.str();
    out["witness"] = vertex_list(r.witness);
    out["witnessSize"] = r.witness_size;
    out["witnessPt"] = r.witness_pt;
    out["provenOptimal"] = r.proven_optimal;
    return out;
}

namespace {

std::string_view reason_name(ThreeReason r) {
    switch (r) {
        case ThreeReason::DisconnectedThreeK1: return "3K1";
        case ThreeReason::DisconnectedTwoStars: return "two stars";
        case ThreeReason::TreeDiameter3or4: return "tree of diameter 3 or 4";
        case ThreeReason::Pair: return "pair";
    }
    return "?";
}

}  // namespace

ordered_json classification(const Graph& g, const ExtremeClassification& c) {
    ordered_json out;
    ordered_json classes = ordered_json::array();
    for (auto k : c.classes) classes.push_back(std::string(to_string(k)));
    out["classes"] = std::move(classes);
    out["highEndAsserted"] = c.high_end_asserted;
    if (c.three) {
        ordered_json three;
        three["reason"] = std::string(reason_name(c.three->reason));
        if (c.three->pair) {
            const auto [u, v] = *c.three->pair;
            if (propagation_time(g, VertexSet{u, v}, Rule::PSD) != ExtNat(1u))
                throw ReverifyError("pair evidence does not force in one round");
            three["pair"] = {u, v};
        }
        out["thp3"] = std::move(three);
    }
    ordered_json family;
    family["member"] = c.family.member;
    family["reason"] = std::string(to_string(c.family.reason));
    family["witness"] = c.family.witness;
    out["family"] = std::move(family);
    out["summary"] = classification_summary(g, c);
    return out;
}

std::string classification_summary(const Graph& g, const ExtremeClassification& c) {
    if (c.has(ExtremeClass::ThpOne)) return "thp=1";
    if (c.has(ExtremeClass::ThpTwo)) return "thp=2";
    if (c.has(ExtremeClass::ThpThree)) return "thp=3";
    if (c.has(ExtremeClass::ThpEqualsN)) return "thp=n";
    if (c.has(ExtremeClass::ThpAtLeastNMinus1)) return "thp=n-1";
    if (!c.high_end_asserted) return "none (disconnected: high end not characterized)";
    (void)g;
    return "thp<=n-2 (not in G: " + std::string(to_string(c.family.reason)) + ")";
}

std::string tsv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += '\t';
        out += fields[i];
    }
    return out;
}

std::string tsv_set(const VertexSet& s) {
    if (s.empty()) return "-";
    std::string out;
    s.for_each([&](Vertex v) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
    });
    return out;
}

}  // namespace forcelab::report
