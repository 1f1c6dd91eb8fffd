#include "app.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "forcelab/classifier.hpp"
#include "forcelab/error.hpp"
#include "forcelab/forcing.hpp"
#include "forcelab/formulas.hpp"
#include "forcelab/generators.hpp"
#include "forcelab/graph_io.hpp"
#include "forcelab/throttle.hpp"
#include "forcelab/verify.hpp"
#include "report.hpp"

namespace forcelab::cli {

namespace {

using report::ordered_json;
using Clock = std::chrono::steady_clock;

struct InputGraph {
    report::Source src;
    std::optional<Graph> graph;
    std::string error;
};

enum class Format { Auto, Graph6, EdgeList };

bool looks_like_edge_list(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        return c >= '0' && c <= '9';  // graph6 never starts with a digit
    }
    return false;
}

void read_source(const std::string& name, const std::string& text, Format format, std::vector<InputGraph>& out) {
    if (format == Format::EdgeList || (format == Format::Auto && looks_like_edge_list(text))) {
        InputGraph item{{name, 1}, std::nullopt, {}};
        try {
            item.graph = parse_edge_list_text(text);
        } catch (const Error& e) {
            item.error = e.what();
        }
        out.push_back(std::move(item));
        return;
    }
    std::istringstream lines(text);
    std::string line;
    for (std::size_t number = 1; std::getline(lines, line); ++number) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        InputGraph item{{line, number}, std::nullopt, {}};
        try {
            item.graph = parse_graph6(line);
        } catch (const Error& e) {
            item.error = e.what();
        }
        out.push_back(std::move(item));
    }
}

std::vector<InputGraph> read_inputs(const std::vector<std::string>& paths, Format format, std::istream& in) {
    std::vector<InputGraph> out;
    auto slurp = [](std::istream& s) { return std::string{std::istreambuf_iterator<char>(s), {}}; };
    if (paths.empty()) {
        read_source("stdin", slurp(in), format, out);
        return out;
    }
    for (const auto& path : paths) {
        if (path == "-") {
            read_source("stdin", slurp(in), format, out);
            continue;
        }
        std::ifstream file(path, std::ios::binary);
        if (!file) throw Error("cannot open " + path);
        read_source(path, slurp(file), format, out);
    }
    return out;
}

unsigned thread_count(unsigned flag) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("FORCELAB_THREADS")) {
        unsigned v = 0;
        const std::string_view s(env);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc{} && ptr == s.data() + s.size() && v > 0) return v;
    }
    return 1;
}

// Runs work(i) for every item on `threads` workers; results land by index,
// so output order always follows input order.
void for_each_parallel(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& work) {
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, count); ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) work(i);
        });
    for (auto& t : pool) t.join();
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
    std::vector<Vertex> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
        if (pos >= text.size()) break;
        Vertex v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
        if (ec != std::errc{}) throw ParseError("expected a vertex number in --set", pos);
        out.push_back(v);
        pos = static_cast<std::size_t>(ptr - text.data());
    }
    return out;
}

VertexSet checked_set(const Graph& g, const std::vector<Vertex>& vs) {
    VertexSet s;
    for (Vertex v : vs) {
        if (v >= g.order()) throw ValidationError("vertex " + std::to_string(v) + " not in graph of order " +
                                                  std::to_string(g.order()));
        s.insert(v);
    }
    return s;
}

Rule parse_rule(const std::string& s) { return s == "std" ? Rule::Standard : Rule::PSD; }

std::string ext_str(const ExtNat& v) { return v.is_finite() ? std::to_string(v.value()) : "inf"; }

// Per-record outcome: exit code contribution plus the JSON and TSV forms.
struct Record {
    ordered_json json;
    std::vector<std::string> tsv;
    int code = kOk;
};

void fail_record(Record& rec, const std::string& message, int code, std::size_t tsv_width) {
    rec.json["error"] = message;
    rec.code = code;
    while (rec.tsv.size() + 1 < tsv_width) rec.tsv.push_back("-");
    rec.tsv.push_back("error: " + message);
}

void emit(std::ostream& out, const std::string& command, const std::vector<Record>& records, bool tsv,
          const std::vector<std::string>& header) {
    if (tsv) {
        out << report::tsv_row(header) << '\n';
        for (const auto& r : records) out << report::tsv_row(r.tsv) << '\n';
        return;
    }
    ordered_json doc;
    doc["schemaVersion"] = report::kSchemaVersion;
    doc["command"] = command;
    doc["records"] = ordered_json::array();
    for (const auto& r : records) doc["records"].push_back(r.json);
    out << doc.dump(2) << '\n';
}

int worst(const std::vector<Record>& records) {
    int code = kOk;
    for (const auto& r : records) code = std::max(code, r.code);
    return code;
}

struct CommonFlags {
    std::vector<std::string> inputs;
    std::string format = "auto";
    bool tsv = false;
    bool timing = false;
    unsigned threads = 0;
};

Format parse_format(const std::string& s) {
    if (s == "graph6") return Format::Graph6;
    if (s == "edgelist") return Format::EdgeList;
    return Format::Auto;
}

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("inputs", f.inputs, "graph6 files (one graph per line) or edge-list files; '-' or none reads stdin");
    cmd->add_option("--format", f.format, "input format")->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
    cmd->add_flag("--tsv", f.tsv, "write TSV instead of JSON");
    cmd->add_flag("--timing", f.timing, "add wall-clock milliseconds to each record");
    cmd->add_option("--threads", f.threads, "worker threads (default: FORCELAB_THREADS or 1)");
}

// --- compute -----------------------------------------------------------------

struct ComputeFlags {
    CommonFlags common;
    std::string rule = "psd";
    std::string omega = "1";
    std::string what = "throttle";
    std::string set;
    std::size_t max_n = 24;
    std::uint64_t budget = 0;
    std::uint64_t time_limit_ms = 0;
};

const std::vector<std::string> kComputeHeader = {"id", "line", "n", "m", "max_degree", "rule", "omega",
                                                 "what", "value", "size", "pt", "witness", "status"};

Record compute_one(const InputGraph& item, const ComputeFlags& f, Rule rule, Rational omega,
                   const std::optional<std::vector<Vertex>>& set) {
    Record rec;
    const auto started = Clock::now();
    rec.tsv = {item.src.id, std::to_string(item.src.line)};
    if (!item.graph) {
        rec.json["id"] = item.src.id;
        rec.json["line"] = item.src.line;
        fail_record(rec, item.error, kInputError, kComputeHeader.size());
        return rec;
    }
    const Graph& g = *item.graph;
    rec.json = report::graph_header(g, item.src);
    rec.json["rule"] = std::string(to_string(rule));
    rec.json["what"] = f.what;
    rec.tsv.insert(rec.tsv.end(), {std::to_string(g.order()), std::to_string(g.size()),
                                   std::to_string(g.max_degree()), std::string(to_string(rule)), omega.str(), f.what});
    try {
        if (f.what == "pt" && set) {
            const VertexSet s = checked_set(g, *set);
            const auto outcome = propagate(g, s, rule);
            rec.json["result"] = report::propagation(g, s, rule, outcome);
            rec.tsv.insert(rec.tsv.end(), {ext_str(outcome.steps), std::to_string(s.size()), ext_str(outcome.steps),
                                           report::tsv_set(s), outcome.steps.is_finite() ? "ok" : "not forcing"});
        } else if (f.what == "pt") {
            const auto z = zero_forcing_number(g, rule, f.max_n);
            const std::uint32_t pt = graph_propagation_time(g, rule, f.max_n);
            rec.json["result"] = {{"pt", pt}, {"z", z.value}};
            rec.tsv.insert(rec.tsv.end(),
                           {std::to_string(pt), std::to_string(z.value), std::to_string(pt), "-", "ok"});
        } else if (f.what == "z") {
            const auto z = zero_forcing_number(g, rule, f.max_n);
            const ExtNat pt = propagation_time(g, z.witness, rule);
            if (pt.is_infinite() || z.witness.size() != z.value)
                throw report::ReverifyError("zero forcing witness does not force");
            rec.json["result"] = {{"z", z.value}, {"witness", report::vertex_list(z.witness)}, {"witnessPt", pt.value()}};
            rec.tsv.insert(rec.tsv.end(), {std::to_string(z.value), std::to_string(z.value), ext_str(pt),
                                           report::tsv_set(z.witness), "ok"});
        } else if (set) {
            const VertexSet s = checked_set(g, *set);
            const auto value = throttle_of_set(g, s, rule, omega);
            const ExtNat pt = propagation_time(g, s, rule);
            ordered_json r;
            r["omega"] = omega.str();
            r["set"] = report::vertex_list(s);
            r["value"] = value.is_finite() ? value.value().str() : "inf";
            r["pt"] = report::ext_nat(pt);
            rec.json["result"] = std::move(r);
            rec.tsv.insert(rec.tsv.end(), {value.is_finite() ? value.value().str() : "inf", std::to_string(s.size()),
                                           ext_str(pt), report::tsv_set(s), pt.is_finite() ? "ok" : "not forcing"});
        } else {
            SearchBudget budget;
            budget.max_n = f.max_n;
            if (f.budget > 0) budget.max_subsets = f.budget;
            if (f.time_limit_ms > 0) budget.wall_clock = std::chrono::milliseconds(f.time_limit_ms);
            ThrottleResult r;
            try {
                r = throttle_exact(g, rule, omega, budget);
            } catch (const BudgetExhausted& e) {
                r = e.incumbent();
            }
            rec.json["result"] = report::throttle(g, r);
            rec.tsv.insert(rec.tsv.end(), {r.value.str(), std::to_string(r.witness_size), std::to_string(r.witness_pt),
                                           report::tsv_set(r.witness), r.proven_optimal ? "ok" : "not proven optimal"});
        }
    } catch (const report::ReverifyError& e) {
        rec.tsv.resize(8);
        fail_record(rec, e.what(), kVerificationFailed, kComputeHeader.size());
    } catch (const Error& e) {
        rec.tsv.resize(8);
        if (dynamic_cast<const CapacityError*>(&e)) rec.json["provenOptimal"] = false;
        fail_record(rec, e.what(), kInputError, kComputeHeader.size());
    }
    if (f.common.timing) {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started).count();
        rec.json["wallMs"] = ms;
        rec.tsv.push_back(std::to_string(ms));
    }
    return rec;
}

int cmd_compute(const ComputeFlags& f, std::istream& in, std::ostream& out, std::ostream& err) {
    const Rule rule = parse_rule(f.rule);
    Rational omega;
    std::optional<std::vector<Vertex>> set;
    try {
        omega = Rational::parse(f.omega);
        if (omega <= Rational(0)) throw DomainError("--omega must be positive");
        if (!f.set.empty()) set = parse_vertex_list(f.set);
    } catch (const Error& e) {
        err << "forcelab: " << e.what() << '\n';
        return kInputError;
    }
    const auto inputs = read_inputs(f.common.inputs, parse_format(f.common.format), in);
    std::vector<Record> records(inputs.size());
    for_each_parallel(inputs.size(), thread_count(f.common.threads),
                      [&](std::size_t i) { records[i] = compute_one(inputs[i], f, rule, omega, set); });
    auto header = kComputeHeader;
    if (f.common.timing) header.push_back("wall_ms");
    emit(out, "compute", records, f.common.tsv, header);
    return worst(records);
}

// --- classify ----------------------------------------------------------------

const std::vector<std::string> kClassifyHeader = {"id", "line", "n", "m", "classes", "family", "summary"};

Record classify_one(const InputGraph& item, bool timing) {
    Record rec;
    const auto started = Clock::now();
    rec.tsv = {item.src.id, std::to_string(item.src.line)};
    if (!item.graph) {
        rec.json["id"] = item.src.id;
        rec.json["line"] = item.src.line;
        fail_record(rec, item.error, kInputError, kClassifyHeader.size());
        return rec;
    }
    const Graph& g = *item.graph;
    rec.json = report::graph_header(g, item.src);
    rec.tsv.insert(rec.tsv.end(), {std::to_string(g.order()), std::to_string(g.size())});
    try {
        const auto c = classify(g);
        rec.json["classification"] = report::classification(g, c);
        std::string classes;
        for (auto k : c.classes) classes += (classes.empty() ? "" : ",") + std::string(to_string(k));
        rec.tsv.insert(rec.tsv.end(), {classes.empty() ? "none" : classes,
                                       c.family.member ? "member" : std::string(to_string(c.family.reason)),
                                       report::classification_summary(g, c)});
    } catch (const report::ReverifyError& e) {
        rec.tsv.resize(4);
        fail_record(rec, e.what(), kVerificationFailed, kClassifyHeader.size());
    } catch (const Error& e) {
        rec.tsv.resize(4);
        fail_record(rec, e.what(), kInputError, kClassifyHeader.size());
    }
    if (timing) {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started).count();
        rec.json["wallMs"] = ms;
        rec.tsv.push_back(std::to_string(ms));
    }
    return rec;
}

int cmd_classify(const CommonFlags& f, std::istream& in, std::ostream& out) {
    const auto inputs = read_inputs(f.inputs, parse_format(f.format), in);
    std::vector<Record> records(inputs.size());
    for_each_parallel(inputs.size(), thread_count(f.threads),
                      [&](std::size_t i) { records[i] = classify_one(inputs[i], f.timing); });
    auto header = kClassifyHeader;
    if (f.timing) header.push_back("wall_ms");
    emit(out, "classify", records, f.tsv, header);
    return worst(records);
}

// --- verify --------------------------------------------------------------------

struct VerifyFlags {
    std::vector<std::string> suites;
    std::vector<std::string> corpus;
    std::uint64_t seed = verify::Options{}.seed;
    bool json = false;
    unsigned threads = 0;
};

int cmd_verify(const VerifyFlags& f, std::ostream& out, std::ostream& err) {
    verify::Options options;
    options.corpus_paths = f.corpus;
    options.seed = f.seed;
    options.parallelism = thread_count(f.threads);
    std::vector<std::string> suites = f.suites;
    if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) {
        suites.clear();
        for (auto name : verify::suite_names())
            if (name != "census" || !f.corpus.empty()) suites.emplace_back(name);
    }
    bool all_passed = true;
    ordered_json doc;
    doc["schemaVersion"] = report::kSchemaVersion;
    doc["command"] = "verify";
    doc["suites"] = ordered_json::array();
    for (const auto& name : suites) {
        verify::SuiteReport rep;
        try {
            rep = verify::run_suite(name, options);
        } catch (const Error& e) {
            err << "forcelab: " << e.what() << '\n';
            return kInputError;
        }
        all_passed = all_passed && rep.passed();
        ordered_json s;
        s["suite"] = rep.suite;
        s["passed"] = rep.passed();
        s["claims"] = ordered_json::array();
        for (const auto& c : rep.claims) {
            s["claims"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
            if (!f.json)
                out << (c.passed ? "PASS" : "FAIL") << '\t' << rep.suite << '\t' << c.name << '\t' << c.detail << '\n';
        }
        doc["suites"].push_back(std::move(s));
    }
    if (f.json) out << doc.dump(2) << '\n';
    return all_passed ? kOk : kVerificationFailed;
}

// --- table ---------------------------------------------------------------------

struct TableFlags {
    std::string family;
    std::string range;
    std::size_t delta = 3;
    bool brute = false;
    std::size_t max_n = 20;
};

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    std::uint64_t a = 0, b = 0;
    auto number = [&](std::string_view s, std::uint64_t& v) {
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        return ec == std::errc{} && ptr == s.data() + s.size() && !s.empty();
    };
    const std::string_view view(text);
    if (dots == std::string::npos) {
        if (!number(view, a)) throw ParseError("--range expects a..b", 0);
        return {a, a};
    }
    if (!number(view.substr(0, dots), a) || !number(view.substr(dots + 2), b))
        throw ParseError("--range expects a..b", dots);
    if (a > b) throw ParseError("--range start exceeds end", 0);
    return {a, b};
}

int cmd_table(const TableFlags& f, std::ostream& out, std::ostream& err) {
    std::pair<std::uint64_t, std::uint64_t> range;
    try {
        range = parse_range(f.range);
    } catch (const Error& e) {
        err << "forcelab: " << e.what() << '\n';
        return kInputError;
    }
    std::vector<std::string> header = {"param", "n", "value",
                                       "witness_size", "witness_pt"};
    if (f.brute) header.push_back("brute");
    out << report::tsv_row(header) << '\n';
    int code = kOk;
    for (std::uint64_t p = range.first; p <= range.second; ++p) {
        try {
            Graph g = Graph::from_edges(1, {});
            Rule rule = Rule::PSD;
            std::uint64_t value = 0;
            VertexSet witness;
            if (f.family == "path") {
                g = gen::path(p);
                value = thp_path(p);
                witness = witness_path(p);
            } else if (f.family == "cycle") {
                g = gen::cycle(p);
                value = thp_cycle(p);
                witness = p == 3 ? VertexSet{0, 1} : witness_cycle(p);
            } else if (f.family == "stdcycle") {
                g = gen::cycle(p);
                rule = Rule::Standard;
                value = th_std_cycle(p);
                witness = witness_std_cycle(p);
            } else if (f.family == "binarytree") {
                g = gen::full_binary_tree(p);
                value = thp_binary_tree(p);
                witness = VertexSet{0};
            } else {
                g = gen::delta_tree(f.delta, p);
                value = thp_tdh(f.delta, p);
                witness = VertexSet{0};
            }
            const ExtNat pt = propagation_time(g, witness, rule);
            if (pt.is_infinite() || witness.size() + pt.value() != value)
                throw report::ReverifyError("witness gives " + ext_str(pt) + " rounds with " +
                                            std::to_string(witness.size()) + " vertices");
            std::vector<std::string> row = {std::to_string(p), std::to_string(g.order()), std::to_string(value),
                                            std::to_string(witness.size()), std::to_string(pt.value())};
            if (f.brute) {
                if (g.order() <= f.max_n) {
                    SearchBudget budget;
                    budget.max_n = f.max_n;
                    row.push_back(throttle_exact(g, rule, 1, budget).value.str());
                } else {
                    row.push_back("-");
                }
            }
            out << report::tsv_row(row) << '\n';
        } catch (const report::ReverifyError& e) {
            err << "forcelab: row " << p << ": " << e.what() << '\n';
            code = std::max(code, kVerificationFailed);
        } catch (const Error& e) {
            err << "forcelab: row " << p << ": " << e.what() << '\n';
            code = kInputError;
        }
    }
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Zero forcing, propagation time and throttling for small graphs", "forcelab"};
    app.require_subcommand(1);

    ComputeFlags compute;
    auto* c = app.add_subcommand("compute", "pt, Z/Z+ or th/th+/th+^omega of each input graph");
    add_common(c, compute.common);
    c->add_option("--rule", compute.rule, "color change rule")->check(CLI::IsMember({"std", "psd"}));
    c->add_option("--omega", compute.omega, "weight on |S| for throttling, e.g. 2 or 1/2");
    c->add_option("--what", compute.what, "quantity to compute")->check(CLI::IsMember({"pt", "z", "throttle"}));
    c->add_option("--set", compute.set, "initial blue set \"v1,v2,...\" (0-indexed)");
    c->add_option("--max-n", compute.max_n, "largest order for exhaustive searches");
    c->add_option("--budget", compute.budget, "subset budget for the throttling search (0 = unlimited)");
    c->add_option("--time-limit", compute.time_limit_ms, "wall-clock budget in ms (0 = unlimited)");
    c->footer(
        "TSV columns: id line n m max_degree rule omega what value size pt witness status [wall_ms].\n"
        "status is ok, 'not proven optimal' (budget ran out), 'not forcing', or 'error: ...'.");

    CommonFlags classify_flags;
    auto* k = app.add_subcommand("classify", "extreme throttling classes of each input graph");
    add_common(k, classify_flags);
    k->footer("TSV columns: id line n m classes family summary [wall_ms].");

    VerifyFlags verify_flags;
    auto* v = app.add_subcommand("verify", "run computational checks of the closed-form results");
    v->add_option("--suite", verify_flags.suites, "suite name(s) or all")
        ->check(CLI::IsMember({"all", "paths", "cycles", "stdcycles", "trees", "census", "weighted", "lemma"}));
    v->add_option("--corpus", verify_flags.corpus, "graph6 corpus for the census suite");
    v->add_option("--seed", verify_flags.seed, "seed for the randomized checks");
    v->add_flag("--json", verify_flags.json, "write a JSON report");
    v->add_option("--threads", verify_flags.threads, "worker threads (default: FORCELAB_THREADS or 1)");

    TableFlags table;
    auto* t = app.add_subcommand("table", "formula values with re-verified witnesses for a graph family");
    t->add_option("--family", table.family, "graph family")
        ->required()
        ->check(CLI::IsMember({"path", "cycle", "stdcycle", "binarytree", "tdh"}));
    t->add_option("--range", table.range, "parameter range a..b (n, or h for trees)")->required();
    t->add_option("--delta", table.delta, "maximum degree for tdh");
    t->add_flag("--brute", table.brute, "add the exhaustive-search value when n <= --max-n");
    t->add_option("--max-n", table.max_n, "largest order for --brute");
    t->footer("TSV columns: param (n, or h for trees) n value witness_size witness_pt [brute].");

    std::vector<const char*> argv{"forcelab"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (c->parsed()) return cmd_compute(compute, in, out, err);
        if (k->parsed()) return cmd_classify(classify_flags, in, out);
        if (v->parsed()) return cmd_verify(verify_flags, out, err);
        return cmd_table(table, out, err);
    } catch (const Error& e) {
        err << "forcelab: " << e.what() << '\n';
        return kInputError;
    }
}

}  // namespace forcelab::cli
