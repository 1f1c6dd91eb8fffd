#include "forcelab/throttle.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "combinations.hpp"
#include "forcelab/formulas.hpp"
#include "forcelab/metrics.hpp"

namespace forcelab {

Extended<Rational> throttle_of_set(const Graph& g, const VertexSet& s, Rule rule, Rational omega) {
    if (omega <= Rational(0)) throw DomainError("omega must be positive");
    const ExtNat pt = propagation_time(g, s, rule);
    if (pt.is_infinite()) return Extended<Rational>::infinity();
    return omega * Rational(static_cast<std::int64_t>((s & g.vertices()).size())) +
           Rational(static_cast<std::int64_t>(pt.value()));
}

namespace {

// Objective scaled by the denominator of omega = a/b: a|S| + b·pt.
using Scaled = detail::int128_t;
constexpr Scaled kUnbounded = static_cast<Scaled>(1) << 100;

struct Bound {
    Scaled value = kUnbounded;
    bool allow_equal = true;
};

struct Found {
    Scaled value = kUnbounded;
    std::uint32_t pt = 0;
    std::uint64_t rank = 0;
    VertexSet set;
};

class Search {
public:
    Search(const Graph& g, Rule rule, Rational omega, const SearchBudget& budget)
        : g_(g), rule_(rule), a_(omega.num()), b_(omega.den()), budget_(budget),
          start_(std::chrono::steady_clock::now()) {
        for (Vertex v = 0; v < g.order(); ++v) {
            if (g.degree(v) == 0)
                mandatory_.insert(v);
            else
                pool_.push_back(v);
        }
    }

    std::size_t mandatory_size() const { return mandatory_.size(); }
    Scaled scaled(std::size_t size, std::uint32_t pt) const {
        return Scaled(a_) * static_cast<Scaled>(size) + Scaled(b_) * pt;
    }
    bool exhausted() const { return exhausted_.load(); }

    ExtNat min_pt(std::size_t size) const {
        return min_possible_propagation_time(g_.order(), g_.max_degree(), size, rule_);
    }

    // Largest pt keeping a|S| + b·pt inside the bound; -1 if none.
    std::int64_t pt_cap(std::size_t size, const Bound& bound) const {
        if (bound.value >= kUnbounded) return static_cast<std::int64_t>(g_.order());
        Scaled room = bound.value - Scaled(a_) * static_cast<Scaled>(size);
        if (!bound.allow_equal) room -= 1;
        if (room < 0) return -1;
        return static_cast<std::int64_t>(std::min<Scaled>(room / b_, static_cast<Scaled>(g_.order())));
    }

    /// Best forcing set of the given size strictly inside `bound`, ties to lexicographic order.
    std::optional<Found> best_of_size(std::size_t size, const Bound& bound) {
        if (size < mandatory_.size() || size == 0 || size > g_.order()) return std::nullopt;
        const ExtNat floor_pt = min_pt(size);
        if (floor_pt.is_infinite()) return std::nullopt;
        if (pt_cap(size, bound) < static_cast<std::int64_t>(floor_pt.value())) return std::nullopt;

        const std::size_t k = size - mandatory_.size();
        const std::uint64_t total = detail::binomial(pool_.size(), k);
        shared_ = bound;
        stop_rank_ = UINT64_MAX;

        const unsigned workers = std::max(1u, budget_.parallelism);
        constexpr std::uint64_t kParallelThreshold = 2048;
        std::vector<Found> results;
        if (workers == 1 || total < kParallelThreshold) {
            if (auto f = scan(size, k, 0, total, bound, floor_pt.value())) results.push_back(*f);
        } else {
            const std::uint64_t chunks = std::min<std::uint64_t>(total, std::uint64_t{workers} * 16);
            const std::uint64_t width = (total + chunks - 1) / chunks;
            std::atomic<std::uint64_t> next{0};
            std::mutex out_mutex;
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w) {
                pool.emplace_back([&] {
                    for (std::uint64_t c = next++; c < chunks && !exhausted(); c = next++) {
                        const std::uint64_t lo = c * width, hi = std::min(total, lo + width);
                        if (lo >= hi) continue;
                        if (auto f = scan(size, k, lo, hi, bound, floor_pt.value())) {
                            std::lock_guard lock(out_mutex);
                            results.push_back(*f);
                        }
                    }
                });
            }
            for (auto& t : pool) t.join();
        }
        if (results.empty()) return std::nullopt;
        return *std::min_element(results.begin(), results.end(), [](const Found& x, const Found& y) {
            return x.value != y.value ? x.value < y.value : x.rank < y.rank;
        });
    }

private:
    std::optional<Found> scan(std::size_t size, std::size_t k, std::uint64_t lo, std::uint64_t hi,
                              const Bound& outer, std::uint32_t floor_pt) {
        if (lo > stop_rank_.load()) return std::nullopt;
        std::optional<Found> best;
        detail::Combinations combo(pool_, k, lo);
        for (std::uint64_t rank = lo; rank < hi; ++rank, combo.next()) {
            if (!charge()) return best;
            // Cap from the caller's bound, this chunk's best (strict) and
            // the best any chunk has found (ties survive for the lex order).
            std::int64_t cap = pt_cap(size, outer);
            if (best) cap = std::min(cap, pt_cap(size, {best->value, false}));
            {
                std::lock_guard lock(shared_mutex_);
                cap = std::min(cap, pt_cap(size, shared_));
            }
            if (cap < static_cast<std::int64_t>(floor_pt)) break;
            const VertexSet s = mandatory_ | combo.set();
            if (!dist_set_to_complement_at_most(g_, s, static_cast<std::uint32_t>(cap))) continue;
            const ExtNat pt = propagation_time(g_, s, rule_, static_cast<std::uint32_t>(cap));
            if (pt.is_infinite()) continue;
            best = Found{scaled(size, pt.value()), pt.value(), rank, s};
            {
                std::lock_guard lock(shared_mutex_);
                if (best->value < shared_.value) shared_ = {best->value, true};
            }
            if (pt.value() == floor_pt) {
                // Nothing later in rank order can beat this one.
                std::uint64_t seen = stop_rank_.load();
                while (rank < seen && !stop_rank_.compare_exchange_weak(seen, rank)) {
                }
                break;
            }
        }
        return best;
    }

    bool charge() {
        const std::uint64_t used = ++subsets_;
        if (used > budget_.max_subsets) {
            exhausted_ = true;
        } else if ((used & 63) == 0 && budget_.wall_clock != std::chrono::milliseconds::max()) {
            if (std::chrono::steady_clock::now() - start_ > budget_.wall_clock) exhausted_ = true;
        }
        return !exhausted_.load();
    }

    const Graph& g_;
    Rule rule_;
    std::int64_t a_, b_;
    SearchBudget budget_;
    std::chrono::steady_clock::time_point start_;
    VertexSet mandatory_;
    std::vector<Vertex> pool_;

    std::atomic<std::uint64_t> subsets_{0};
    std::atomic<bool> exhausted_{false};
    std::atomic<std::uint64_t> stop_rank_{UINT64_MAX};
    std::mutex shared_mutex_;
    Bound shared_;
};

void check_inputs(const Graph& g, Rational omega, const SearchBudget& budget) {
    if (omega <= Rational(0)) throw DomainError("omega must be positive");
    if (g.order() > budget.max_n)
        throw CapacityError("exact throttling search capped at order " + std::to_string(budget.max_n) +
                            ", got " + std::to_string(g.order()));
}

ThrottleResult make_result(const Found& f, std::size_t size, Rule rule, Rational omega, bool proven) {
    ThrottleResult r;
    r.witness = f.set;
    r.witness_pt = f.pt;
    r.witness_size = size;
    r.rule = rule;
    r.omega = omega;
    r.value = omega * Rational(static_cast<std::int64_t>(size)) + Rational(static_cast<std::int64_t>(f.pt));
    r.proven_optimal = proven;
    return r;
}

}  // namespace

ThrottleResult throttle_exact(const Graph& g, Rule rule, Rational omega, const SearchBudget& budget) {
    check_inputs(g, omega, budget);
    Search search(g, rule, omega, budget);
    const std::size_t n = g.order();

    Found incumbent{search.scaled(n, 0), 0, 0, g.vertices()};
    std::size_t incumbent_size = n;

    for (std::size_t size = std::max<std::size_t>(1, search.mandatory_size()); size < n; ++size) {
        const Bound bound{incumbent.value, size < incumbent_size};
        if (search.pt_cap(size, bound) < 0) break;  // a|S| alone is already too large
        if (auto found = search.best_of_size(size, bound)) {
            incumbent = *found;
            incumbent_size = size;
        }
        if (search.exhausted()) throw BudgetExhausted(make_result(incumbent, incumbent_size, rule, omega, false));
    }
    return make_result(incumbent, incumbent_size, rule, omega, true);
}

std::optional<ThrottleResult> best_for_size(const Graph& g, Rule rule, std::size_t size, Rational omega,
                                            const SearchBudget& budget) {
    check_inputs(g, omega, budget);
    Search search(g, rule, omega, budget);
    auto found = search.best_of_size(size, {});
    if (search.exhausted()) {
        ThrottleResult partial = found ? make_result(*found, size, rule, omega, false) : ThrottleResult{};
        partial.proven_optimal = false;
        throw BudgetExhausted(partial);
    }
    if (!found) return std::nullopt;
    return make_result(*found, size, rule, omega, true);
}

}  // namespace forcelab
