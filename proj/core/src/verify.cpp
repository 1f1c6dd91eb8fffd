#include "forcelab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "forcelab/classifier.hpp"
#include "forcelab/error.hpp"
#include "forcelab/forcing.hpp"
#include "forcelab/formulas.hpp"
#include "forcelab/generators.hpp"
#include "forcelab/graph_io.hpp"
#include "forcelab/metrics.hpp"
#include "forcelab/throttle.hpp"

namespace forcelab::verify {

bool SuiteReport::passed() const {
    return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.passed; });
}

namespace {

// Collects failures; the first few are kept verbatim in the detail text.
class Tally {
public:
    explicit Tally(std::string name) : name_(std::move(name)) {}

    template <class What>
    void check(bool ok, const What& what) {
        ++checked_;
        if (ok) return;
        ++failed_;
        if (failed_ <= kShown) failures_ << (failed_ > 1 ? "; " : "") << what();
    }
    void note(const std::string& text) { notes_ << (!notes_.str().empty() ? "; " : "") << text; }

    ClaimResult result() const {
        ClaimResult r{name_, failed_ == 0, {}};
        std::ostringstream out;
        out << checked_ << " checks, " << failed_ << " failed";
        if (failed_ > 0) out << ": " << failures_.str() << (failed_ > kShown ? "; ..." : "");
        if (!notes_.str().empty()) out << " (" << notes_.str() << ")";
        r.detail = out.str();
        return r;
    }

private:
    static constexpr std::size_t kShown = 5;
    std::string name_;
    std::size_t checked_ = 0, failed_ = 0;
    std::ostringstream failures_, notes_;
};

std::string str(const Rational& r) { return r.str(); }
std::string str(const Extended<Rational>& r) { return r.is_finite() ? r.value().str() : "inf"; }

Rational thp(const Graph& g, Rule rule = Rule::PSD, Rational omega = 1) {
    SearchBudget budget;
    budget.max_n = kMaxVertices;
    return throttle_exact(g, rule, omega, budget).value;
}

// Runs body(i) for i in [0, count) over `parallelism` threads.
void parallel_for(std::size_t count, unsigned parallelism, const std::function<void(std::size_t)>& body) {
    if (parallelism <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (unsigned w = 0; w < parallelism; ++w) {
        workers.emplace_back([&] {
            try {
                for (std::size_t i = next++; i < count; i = next++) body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = count;
            }
        });
    }
    for (auto& t : workers) t.join();
    if (error) std::rethrow_exception(error);
}

Graph random_graph(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> density(0.15, 0.75);
    std::bernoulli_distribution coin(density(rng));
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph random_tree(std::mt19937_64& rng, std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        std::uniform_int_distribution<Vertex> parent(0, v - 1);
        edges.emplace_back(parent(rng), v);
    }
    return Graph::from_edges(n, edges);
}

// A connected vertex subset of size k grown from a random vertex.
VertexSet random_connected_subset(std::mt19937_64& rng, const Graph& g, std::size_t k) {
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(g.order() - 1));
    VertexSet s{pick(rng)};
    while (s.size() < k) {
        const auto frontier = (g.neighborhood(s) - s).to_vector();
        if (frontier.empty()) break;
        std::uniform_int_distribution<std::size_t> i(0, frontier.size() - 1);
        s.insert(frontier[i(rng)]);
    }
    return s;
}

}  // namespace

ClaimResult path_formula(std::size_t search_max, std::size_t witness_max) {
    Tally t("path formula");
    for (std::size_t n = 1; n <= search_max; ++n) {
        const Rational got = thp(gen::path(n));
        t.check(got == Rational(static_cast<std::int64_t>(thp_path(n))),
                [&] { return "P" + std::to_string(n) + ": search " + str(got) + ", formula " + std::to_string(thp_path(n)); });
    }
    for (std::size_t n = search_max + 1; n <= witness_max; ++n) {
        const auto w = throttle_of_set(gen::path(n), witness_path(n), Rule::PSD);
        const Rational lb(static_cast<std::int64_t>(lb_delta2(n)));
        t.check(w.is_finite() && w.value() == lb && lb == Rational(static_cast<std::int64_t>(thp_path(n))),
                [&] { return "P" + std::to_string(n) + ": witness " + str(w) + ", bound " + str(lb); });
    }
    return t.result();
}

ClaimResult cycle_formula(std::size_t search_max, std::size_t witness_max) {
    Tally t("cycle formula");
    for (std::size_t n = 3; n <= search_max; ++n) {
        const Rational got = thp(gen::cycle(n));
        t.check(got == Rational(static_cast<std::int64_t>(thp_cycle(n))),
                [&] { return "C" + std::to_string(n) + ": search " + str(got) + ", formula " + std::to_string(thp_cycle(n)); });
    }
    for (std::size_t n = std::max<std::size_t>(4, search_max + 1); n <= witness_max; ++n) {
        const auto w = throttle_of_set(gen::cycle(n), witness_cycle(n), Rule::PSD);
        const Rational lb(static_cast<std::int64_t>(lb_delta2(n)));
        t.check(w.is_finite() && w.value() == lb && lb == Rational(static_cast<std::int64_t>(thp_cycle(n))),
                [&] { return "C" + std::to_string(n) + ": witness " + str(w) + ", bound " + str(lb); });
    }
    return t.result();
}

ClaimResult std_cycle_formula(std::size_t search_max) {
    Tally t("standard cycle formula");
    for (std::size_t n = 3; n <= search_max; ++n) {
        const Rational got = thp(gen::cycle(n), Rule::Standard);
        t.check(got == Rational(static_cast<std::int64_t>(th_std_cycle(n))), [&] {
            return "C" + std::to_string(n) + ": search " + str(got) + ", formula " + std::to_string(th_std_cycle(n));
        });
    }
    for (const auto& [n, expected] : {std::pair<std::size_t, std::uint64_t>{8, 5}, {9, 6}, {16, 7}})
        t.check(th_std_cycle(n) == expected, [&, n = n] { return "row n=" + std::to_string(n); });
    for (std::size_t n = 3; n <= 60; ++n) {
        const auto w = throttle_of_set(gen::cycle(n), witness_std_cycle(n), Rule::Standard);
        t.check(w.is_finite() && w.value() == Rational(static_cast<std::int64_t>(th_std_cycle(n))),
                [&] { return "witness on C" + std::to_string(n) + " gives " + str(w); });
    }
    return t.result();
}

ClaimResult piecewise_lemma(std::uint64_t limit) {
    Tally t("piecewise lemma");
    for (std::uint64_t n = 1; n <= limit; ++n) {
        const std::uint64_t a = snake_piecewise(n), b = ceil_sqrt2n_half(n);
        t.check(a == b, [&] { return "n=" + std::to_string(n) + ": " + std::to_string(a) + " vs " + std::to_string(b); });
    }
    return t.result();
}

ClaimResult binary_trees(std::size_t max_height) {
    Tally t("binary trees");
    for (std::size_t h = 1; h <= max_height; ++h) {
        const Rational got = thp(gen::full_binary_tree(h));
        t.check(got == Rational(static_cast<std::int64_t>(thp_binary_tree(h))),
                [&] { return "height " + std::to_string(h) + ": search " + str(got); });
    }
    const Graph tdh = gen::delta_tree(3, 2);
    const Rational got = thp(tdh);
    const std::uint64_t lb = lb_delta_ge3(tdh.order(), 3, 1);
    t.check(tdh.order() == 10 && got == Rational(3) && lb == 3 && thp_tdh(3, 2) == 3,
            [&] { return "T(3,2): search " + str(got) + ", bound " + std::to_string(lb); });
    return t.result();
}

ClaimResult growth_constraint(std::size_t samples, std::size_t max_n, std::uint64_t seed) {
    Tally t("growth constraint");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> order(1, max_n);
    for (std::size_t i = 0; i < samples; ++i) {
        const Graph g = random_graph(rng, order(rng));
        const std::size_t n = g.order();
        // Random set, topped up with random vertices until it forces.
        std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0.05, 0.6)(rng));
        VertexSet s;
        for (Vertex v = 0; v < n; ++v)
            if (coin(rng)) s.insert(v);
        std::vector<Vertex> order_of(n);
        for (Vertex v = 0; v < n; ++v) order_of[v] = v;
        std::shuffle(order_of.begin(), order_of.end(), rng);
        ExtNat pt = s.empty() ? ExtNat::infinity() : propagation_time(g, s, Rule::PSD);
        for (std::size_t j = 0; pt.is_infinite(); ++j) {
            s.insert(order_of[j]);
            pt = propagation_time(g, s, Rule::PSD);
        }
        const BoundInputs b{n, g.max_degree(), s.size(), pt.value()};
        t.check(growth_constraint_holds(b), [&] { return to_graph6(g) + " S=" + s.str() + " violates growth"; });
        const ExtNat d = dist_set_to_complement(g, s);
        t.check(d <= pt, [&] { return to_graph6(g) + " S=" + s.str() + " has dist > pt"; });
    }
    return t.result();
}

ClaimResult subtree_monotonicity(std::size_t samples, std::size_t max_n, std::uint64_t seed) {
    Tally t("subtree monotonicity");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> order(1, max_n);
    for (std::size_t i = 0; i < samples; ++i) {
        const Graph tree = random_tree(rng, order(rng));
        std::uniform_int_distribution<std::size_t> sub_order(1, tree.order());
        const VertexSet part = random_connected_subset(rng, tree, sub_order(rng));
        const Graph sub = tree.induced(part);
        for (Rule rule : {Rule::PSD, Rule::Standard}) {
            const Rational big = thp(tree, rule), small = thp(sub, rule);
            t.check(small <= big, [&] {
                return std::string(to_string(rule)) + " " + to_graph6(tree) + " subtree " + part.str() + ": " + str(small) +
                       " > " + str(big);
            });
        }
    }
    return t.result();
}

ClaimResult ladder_example() {
    Tally t("P10 x P2 example");
    const Graph g = gen::cartesian_product(gen::path(10), gen::path(2));
    SearchBudget budget;
    budget.max_n = g.order();
    const ThrottleResult best = throttle_exact(g, Rule::PSD, 1, budget);
    t.check(best.value == Rational(6), [&] { return "th+ = " + str(best.value); });
    t.note("solver witness " + best.witness.str() + " size " + std::to_string(best.witness_size) + " pt " +
           std::to_string(best.witness_pt));
    const auto four = best_for_size(g, Rule::PSD, 4, 1, budget);
    t.check(four && four->value == Rational(6) && four->witness_pt == 2,
            [&] { return four ? "best size-4 set gives " + str(four->value) : std::string("no size-4 forcing set"); });
    const auto two = best_for_size(g, Rule::PSD, 2, 1, budget);
    t.check(!two || two->value >= Rational(7), [&] { return "best size-2 set gives " + str(two->value); });
    return t.result();
}

ClaimResult weighted_bounds(std::size_t max_n) {
    Tally t("weighted bounds");
    std::size_t real_violations = 0;
    const Rational omegas[] = {Rational(1, 2), Rational(1), Rational(2), Rational(3)};
    for (const Rational& omega : omegas) {
        for (std::size_t n = 1; n <= max_n; ++n) {
            std::vector<std::pair<std::string, Graph>> graphs{{"P" + std::to_string(n), gen::path(n)}};
            if (n >= 3) graphs.emplace_back("C" + std::to_string(n), gen::cycle(n));
            for (const auto& [name, g] : graphs) {
                const Rational got = thp(g, Rule::PSD, omega);
                const std::uint64_t lb = lb_delta2_weighted(n, omega);
                // The un-rounded bound, compared exactly: th >= sqrt(2wn) - 1/2 iff (2th + 1)^2 >= 8wn.
                const Rational twice = Rational(2) * got + Rational(1);
                if (twice * twice < Rational(8) * omega * Rational(static_cast<std::int64_t>(n))) ++real_violations;
                t.check(got >= Rational(static_cast<std::int64_t>(lb)), [&, name = name] {
                    const long double real = std::sqrt(2.0L * omega.to_double() * n) - 0.5L;
                    std::ostringstream out;
                    out << name << " omega=" << omega << ": th=" << got << " < ceiling " << lb << " (real bound "
                        << static_cast<double>(real) << ")";
                    return out.str();
                });
            }
        }
    }
    const Graph tdh = gen::delta_tree(3, 2);
    for (const Rational& omega : {Rational(1), Rational(2)}) {
        const Rational got = thp(tdh, Rule::PSD, omega);
        const WeightedLowerBound lb = weighted_lb(tdh.order(), 3, 1, omega);
        t.check(got >= Rational(lb.ceiling), [&] {
            return "T(3,2) omega=" + omega.str() + ": th=" + str(got) + " < " + std::to_string(lb.ceiling);
        });
    }
    const Rational p4 = thp(gen::path(4), Rule::PSD, 2);
    t.check(p4 == Rational(4), [&] { return "th+^2(P4) = " + str(p4); });
    t.note("un-rounded sqrt(2wn) - 1/2 violated " + std::to_string(real_violations) + " times");
    return t.result();
}

ClaimResult obstruction_fixtures() {
    Tally t("forbidden subgraph fixtures");
    const std::tuple<std::string, Graph, VertexSet> fixtures[] = {
        {"C5", gen::cycle(5), VertexSet{0, 2}},
        {"house", gen::house(), VertexSet{1, 4}},
        {"double diamond", gen::double_diamond(), VertexSet{1, 4}},
    };
    for (const auto& [name, h, blue] : fixtures) {
        const auto value = throttle_of_set(h, blue, Rule::PSD);
        const Rational target(static_cast<std::int64_t>(h.order()) - 2);
        t.check(value.is_finite() && value.value() == target,
                [&, name = name] { return name + ": stored set gives " + str(value); });
        const Rational best = thp(h);
        t.check(best == target, [&, name = name] { return name + ": th+ = " + str(best); });
    }
    return t.result();
}

std::vector<Graph> load_corpus(const std::vector<std::string>& paths) {
    std::vector<Graph> out;
    for (const auto& path : paths) {
        std::ifstream in(path);
        if (!in) throw Error("cannot open corpus file " + path);
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            out.push_back(parse_graph6(line));
        }
    }
    return out;
}

ClaimResult census_equivalence(const std::vector<Graph>& corpus, unsigned parallelism) {
    Tally t("census equivalence");
    std::vector<const Graph*> graphs;
    for (const auto& g : corpus)
        if (g.order() <= 7 && is_connected(g)) graphs.push_back(&g);
    std::vector<Rational> values(graphs.size());
    parallel_for(graphs.size(), parallelism, [&](std::size_t i) { values[i] = thp(*graphs[i]); });
    std::size_t literal_mismatches = 0;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = *graphs[i];
        const Rational th = values[i];
        const auto n = static_cast<std::int64_t>(g.order());
        const ExtremeClassification c = classify(g);
        auto expect = [&](const char* what, bool predicted, bool actual) {
            t.check(predicted == actual, [&] {
                return to_graph6(g) + " " + what + ": classifier " + (predicted ? "yes" : "no") + ", th+ = " + str(th);
            });
        };
        expect("thp=1", c.has(ExtremeClass::ThpOne), th == Rational(1));
        expect("thp=2", c.has(ExtremeClass::ThpTwo), th == Rational(2));
        expect("thp=3", c.has(ExtremeClass::ThpThree), th == Rational(3));
        expect("thp=n", c.has(ExtremeClass::ThpEqualsN), th == Rational(n));
        expect("thp>=n-1", c.has(ExtremeClass::ThpAtLeastNMinus1), th >= Rational(n - 1));
        expect("family", c.family.member, th == Rational(n - 1));
        if (g.order() >= 3 && is_thp_three(g, PairReading::Literal) != (th == Rational(3))) ++literal_mismatches;
    }
    t.note(std::to_string(graphs.size()) + " connected graphs; literal pair reading disagrees on " +
           std::to_string(literal_mismatches));
    return t.result();
}

ClaimResult upper_bounds(const std::vector<Graph>& corpus, unsigned parallelism) {
    Tally t("upper bounds");
    std::vector<const Graph*> graphs;
    for (const auto& g : corpus)
        if (g.order() <= 8) graphs.push_back(&g);
    std::vector<Rational> psd(graphs.size()), standard(graphs.size());
    parallel_for(graphs.size(), parallelism, [&](std::size_t i) {
        psd[i] = thp(*graphs[i]);
        standard[i] = thp(*graphs[i], Rule::Standard);
    });
    std::size_t connected = 0;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = *graphs[i];
        t.check(psd[i] <= standard[i],
                [&] { return to_graph6(g) + ": th+ " + str(psd[i]) + " > th " + str(standard[i]); });
        if (!is_connected(g)) continue;
        ++connected;
        const auto bound = static_cast<std::int64_t>(g.order() - independence_number(g) + 1);
        t.check(psd[i] <= Rational(bound),
                [&] { return to_graph6(g) + ": th+ " + str(psd[i]) + " > n-alpha+1 = " + std::to_string(bound); });
    }
    const ClaimResult fixtures = obstruction_fixtures();
    t.check(fixtures.passed, [&] { return fixtures.detail; });
    t.note(std::to_string(graphs.size()) + " graphs, alpha bound on " + std::to_string(connected) + " connected");
    return t.result();
}

ClaimResult non_monotonicity(const std::vector<Graph>& corpus) {
    ClaimResult r{"non-monotonicity", false, "no pair found"};
    std::vector<const Graph*> graphs;
    for (const auto& g : corpus)
        if (g.order() <= 8 && is_connected(g) && !is_tree(g)) graphs.push_back(&g);
    std::stable_sort(graphs.begin(), graphs.end(),
                     [](const Graph* a, const Graph* b) { return a->order() < b->order(); });
    for (const Graph* gp : graphs) {
        const Graph& g = *gp;
        const Rational whole = thp(g);
        const std::uint64_t full = (std::uint64_t{1} << g.order()) - 1;
        for (std::uint64_t mask = 1; mask < full; ++mask) {
            const VertexSet part = VertexSet::from_mask(mask);
            const Graph sub = g.induced(part);
            if (!is_connected(sub)) continue;
            const Rational inner = thp(sub);
            if (inner > whole) {
                r.passed = true;
                r.detail = "G=" + to_graph6(g) + " th+=" + whole.str() + ", induced on " + part.str() + " (" +
                           to_graph6(sub) + ") th+=" + inner.str();
                return r;
            }
        }
    }
    return r;
}

std::vector<std::string_view> suite_names() {
    return {"paths", "cycles", "stdcycles", "trees", "census", "weighted", "lemma"};
}

SuiteReport run_suite(std::string_view name, const Options& options) {
    SuiteReport report{std::string(name), {}};
    auto& c = report.claims;
    if (name == "paths") {
        c.push_back(path_formula());
        c.push_back(piecewise_lemma());
    } else if (name == "cycles") {
        c.push_back(cycle_formula());
    } else if (name == "stdcycles") {
        c.push_back(std_cycle_formula());
    } else if (name == "trees") {
        c.push_back(binary_trees());
        c.push_back(subtree_monotonicity(200, 12, options.seed));
    } else if (name == "census") {
        if (options.corpus_paths.empty()) throw DomainError("the census suite needs --corpus files");
        const auto corpus = load_corpus(options.corpus_paths);
        c.push_back(census_equivalence(corpus, options.parallelism));
        c.push_back(upper_bounds(corpus, options.parallelism));
        c.push_back(non_monotonicity(corpus));
    } else if (name == "weighted") {
        c.push_back(weighted_bounds());
    } else if (name == "lemma") {
        c.push_back(growth_constraint(10'000, 12, options.seed));
        c.push_back(ladder_example());
    } else {
        throw DomainError("unknown suite '" + std::string(name) + "'");
    }
    return report;
}

}  // namespace forcelab::verify
