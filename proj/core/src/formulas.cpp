#include "forcelab/formulas.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "forcelab/error.hpp"

namespace forcelab {

namespace {

using u128 = detail::uint128_t;
constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

u128 sq(std::uint64_t x) { return static_cast<u128>(x) * x; }

std::uint64_t saturate(u128 x) { return x > kSat ? kSat : static_cast<std::uint64_t>(x); }

}  // namespace

std::uint64_t isqrt(std::uint64_t n) noexcept {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (sq(r) > n) --r;
    while (sq(r + 1) <= n) ++r;
    return r;
}

std::uint64_t ceil_sqrt2n_half(std::uint64_t n) {
    // ⌈√(2n) − ½⌉ <= t  ⇔  √(2n) <= t + ½  ⇔  8n <= (2t + 1)².
    const u128 target = static_cast<u128>(n) * 8;
    std::uint64_t t = isqrt(8 * n) / 2;
    while (t > 0 && sq(2 * t - 1) >= target) --t;
    while (sq(2 * t + 1) < target) ++t;
    return t;
}

SnakeParams snake_params(std::uint64_t n) {
    // k = 2j with 2j² <= n, j maximal.
    const std::uint64_t j = isqrt(n / 2);
    return {n, 2 * j, n - 2 * j * j};
}

std::uint64_t snake_piecewise(std::uint64_t n) {
    const auto [_, k, r] = snake_params(n);
    if (2 * r < k + 2) return k;          // 0 <= r < k/2 + 1
    if (2 * r < 3 * k + 4) return k + 1;  // k/2 + 1 <= r < 3k/2 + 2
    return k + 2;                         // 3k/2 + 2 <= r < 2k + 2
}

StdCycleParams std_cycle_params(std::uint64_t n) {
    const std::uint64_t m = isqrt(n);
    return {n, m, n - m * m};
}

std::uint64_t thp_path(std::uint64_t n) {
    if (n == 0) throw DomainError("th+(P_n) needs n >= 1");
    return ceil_sqrt2n_half(n);
}

std::uint64_t thp_cycle(std::uint64_t n) {
    if (n < 3) throw DomainError("th+(C_n) needs n >= 3");
    if (n == 3) return 3;  // C3 = K3
    return ceil_sqrt2n_half(n);
}

VertexSet witness_path(std::size_t n) {
    if (n == 0 || n > kMaxVertices) throw DomainError("witness_path: n out of range");
    const auto [_, k, r] = snake_params(n);
    // Paper labels are v_1..v_n; vertex v_i is i-1 here.
    //   B = { v_{k²/2 − i(k+1)} : i = 0..k/2−1 }
    VertexSet s;
    const std::uint64_t half_square = k * k / 2;
    for (std::uint64_t i = 0; i < k / 2; ++i) s.insert(static_cast<Vertex>(half_square - i * (k + 1) - 1));
    if (2 * r < k + 2) return s;
    //   q = min(n, k²/2 + k + 1); add v_q, and v_n in the last case.
    const std::uint64_t q = std::min<std::uint64_t>(n, half_square + k + 1);
    s.insert(static_cast<Vertex>(q - 1));
    if (2 * r >= 3 * k + 4) s.insert(static_cast<Vertex>(n - 1));
    return s;
}

VertexSet witness_cycle(std::size_t n) {
    if (n < 4 || n > kMaxVertices) throw DomainError("witness_cycle: n out of range");
    const std::uint64_t k = snake_params(n).k;
    //   S = { v_{1 + i(k+1)} : i = 0..⌊(n−1)/(k+1)⌋ }
    VertexSet s;
    for (std::uint64_t i = 0; i <= (n - 1) / (k + 1); ++i) s.insert(static_cast<Vertex>(i * (k + 1)));
    return s;
}

std::uint64_t lb_delta2(std::uint64_t n) { return ceil_sqrt2n_half(n); }

std::uint64_t lb_delta2_weighted(std::uint64_t n, Rational omega) {
    if (omega <= Rational(0)) throw DomainError("omega must be positive");
    const auto a = static_cast<u128>(omega.num());
    const auto b = static_cast<u128>(omega.den());
    // least t >= 0 with b(2t+1)² >= 8an
    auto holds = [&](std::uint64_t t) { return b * sq(2 * t + 1) >= 8 * a * n; };
    const long double approx = std::sqrt(2.0L * omega.num() * n / omega.den()) - 0.5L;
    std::uint64_t t = approx > 0 ? static_cast<std::uint64_t>(approx) : 0;
    while (t > 0 && holds(t - 1)) --t;
    while (!holds(t)) ++t;
    return t;
}

std::uint64_t growth_capacity(std::uint64_t set_size, std::uint64_t max_degree, std::uint64_t prop_time) {
    // s(1 + Δ Σ_{t=0}^{p−1} (Δ−1)^t)
    u128 sum = 0, term = 1;
    for (std::uint64_t t = 0; t < prop_time; ++t) {
        sum += term;
        if (max_degree <= 1) break;  // (Δ−1)^t = 0 for t >= 1
        term *= max_degree - 1;
        if (sum > kSat || term > kSat) return kSat;
    }
    const u128 cap = static_cast<u128>(set_size) * (1 + static_cast<u128>(max_degree) * sum);
    return saturate(cap);
}

bool growth_constraint_holds(const BoundInputs& b) {
    return b.n <= growth_capacity(b.set_size, b.max_degree, b.prop_time);
}

ExtNat min_possible_propagation_time(std::uint64_t n, std::uint64_t max_degree, std::uint64_t set_size,
                                     Rule rule) {
    if (set_size >= n) return 0u;
    if (set_size == 0) return ExtNat::infinity();
    std::uint64_t p = 1;
    if (growth_capacity(set_size, max_degree, 1) < n) {
        if (max_degree <= 1) return ExtNat::infinity();  // capacity never grows past round 1
        while (growth_capacity(set_size, max_degree, p) < n) ++p;
    }
    if (rule == Rule::Standard) {
        // Each forcing chain gains at most one vertex per round: s(p + 1) >= n.
        const std::uint64_t chains = (n + set_size - 1) / set_size - 1;
        p = std::max(p, chains);
    }
    return static_cast<std::uint32_t>(p);
}

std::uint64_t lb_delta_ge3(std::uint64_t n, std::uint64_t max_degree, std::uint64_t s0) {
    if (max_degree < 3) throw DomainError("lb_delta_ge3 needs max degree >= 3");
    if (s0 == 0) throw DomainError("lb_delta_ge3 needs s0 >= 1");
    // least p with Δ s₀ (Δ−1)^p >= (Δ−2)n + 2s₀
    const u128 rhs = static_cast<u128>(max_degree - 2) * n + 2 * static_cast<u128>(s0);
    u128 lhs = static_cast<u128>(max_degree) * s0;
    std::uint64_t p = 0;
    while (lhs < rhs) {
        lhs *= max_degree - 1;
        ++p;
    }
    return s0 + p;
}

std::uint64_t thp_low_degree(std::uint64_t n, std::uint64_t isolated, std::uint64_t max_degree) {
    if (max_degree == 0) {
        if (isolated != n) throw DomainError("max degree 0 requires every vertex isolated");
        return n;
    }
    if (max_degree == 1) {
        if (isolated >= n || (n - isolated) % 2 != 0)
            throw DomainError("max degree 1 requires an even, nonzero number of non-isolated vertices");
        return (n - isolated) / 2 + isolated + 1;
    }
    throw DomainError("thp_low_degree covers max degree 0 and 1 only");
}

TreeBounds tree_bounds(std::uint64_t diameter) {
    return {ceil_sqrt2n_half(diameter + 1), (diameter + 1) / 2 + 1};
}

std::uint64_t thp_binary_tree(std::uint64_t height) {
    if (height < 1) throw DomainError("full binary tree height must be >= 1");
    return height + 1;
}

std::uint64_t delta_tree_order(std::uint64_t max_degree, std::uint64_t height) {
    if (max_degree < 3) throw DomainError("T(Δ,h) needs Δ >= 3");
    // 1 + Δ Σ_{k<h} (Δ−1)^k = (Δ(Δ−1)^h − 2)/(Δ−2)
    u128 power = 1;
    for (std::uint64_t i = 0; i < height; ++i) power *= max_degree - 1;
    return saturate((max_degree * power - 2) / (max_degree - 2));
}

std::uint64_t thp_tdh(std::uint64_t max_degree, std::uint64_t height) {
    if (max_degree < 3 || height < 2) throw DomainError("th+(T(Δ,h)) needs Δ >= 3 and h >= 2");
    const std::uint64_t value = height + 1;
    const std::uint64_t lb = lb_delta_ge3(delta_tree_order(max_degree, height), max_degree, 1);
    if (lb != value)
        throw std::logic_error("T(" + std::to_string(max_degree) + "," + std::to_string(height) +
                               "): lower bound " + std::to_string(lb) + " != h+1");
    return value;
}

std::uint64_t th_std_path(std::uint64_t n) {
    if (n == 0) throw DomainError("th(P_n) needs n >= 1");
    // ⌈2√n − 1⌉ <= t  ⇔  4n <= (t + 1)²
    std::uint64_t root = isqrt(4 * n);
    if (sq(root) < 4 * static_cast<u128>(n)) ++root;
    return root - 1;
}

std::uint64_t th_std_cycle(std::uint64_t n) {
    if (n < 3) throw DomainError("th(C_n) needs n >= 3");
    const auto [_, m, r] = std_cycle_params(n);
    if (r == 0) return m % 2 == 0 ? 2 * m - 1 : 2 * m;
    if (r <= m) return 2 * m;
    return 2 * m + 1;
}

namespace {

// Snake 0..n-1 through `rows` x `cols`: even rows run left to right, odd
// rows right to left. Returns the rightmost vertex of every row.
VertexSet right_column(std::size_t n, std::size_t rows, std::size_t cols) {
    VertexSet s;
    for (std::size_t r = 0; r < rows; ++r) {
        const std::size_t begin = r * cols;
        const std::size_t end = std::min(n, begin + cols);
        s.insert(static_cast<Vertex>(r % 2 == 0 ? end - 1 : begin));
    }
    return s;
}

}  // namespace

VertexSet witness_std_cycle(std::size_t n) {
    if (n < 3 || n > kMaxVertices) throw DomainError("witness_std_cycle: n out of range");
    const std::uint64_t target = th_std_path(n);
    // With an even number of rows the path's far end is never a lone
    // chain-starting endpoint, so closing the cycle keeps pt.
    for (std::size_t cols = 1; cols <= n; ++cols) {
        const std::size_t rows = (n + cols - 1) / cols;
        if (rows % 2 == 0 && rows + cols - 1 == target) return right_column(n, rows, cols);
    }
    // Only n = m², m odd is left: use the m x m square and also color the
    // other path endpoint.
    const auto [_, m, r] = std_cycle_params(n);
    if (r != 0 || m % 2 == 0) throw std::logic_error("no even-row snake for n=" + std::to_string(n));
    VertexSet s = right_column(n, m, m);
    s.insert(0);
    return s;
}

// --- weighted ------------------------------------------------------------------

long double weighted_threshold(std::uint64_t n, std::uint64_t max_degree, std::uint64_t s0) {
    const long double d = static_cast<long double>(max_degree);
    const long double nn = static_cast<long double>(n);
    const long double s = static_cast<long double>(s0);
    return (1.0L / std::log(d - 1)) * ((d - 2) * nn / (s * (d - 2) * nn + 2 * s * s));
}

namespace {

using boost::multiprecision::cpp_int;

cpp_int ipow(std::uint64_t base, std::uint64_t e) {
    cpp_int result = 1, b = base;
    while (e) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

// ⌈ωs + log_{Δ−1}(A/B)⌉ with A = (Δ−2)n + 2s and B = Δs.
std::int64_t weighted_term_ceiling(std::uint64_t n, std::uint64_t delta, std::uint64_t s, Rational omega,
                                   long double approx) {
    const std::uint64_t A = (delta - 2) * n + 2 * s;
    const std::uint64_t B = delta * s;
    const std::int64_t a = omega.num(), b = omega.den();
    constexpr std::int64_t kExactDenominator = 4096;
    if (b > kExactDenominator) {
        // Guard band around integers; outside it the float ceiling is safe.
        const long double guard = std::ldexp(1.0L, -30);
        const long double up = std::ceil(approx - guard);
        return static_cast<std::int64_t>(up);
    }
    // t >= ωs + x  ⇔  (A/B)^b <= (Δ−1)^{tb − as}
    auto holds = [&](std::int64_t t) {
        const std::int64_t e = t * b - a * static_cast<std::int64_t>(s);
        const cpp_int lhs = ipow(A, static_cast<std::uint64_t>(b));
        const cpp_int rhs = ipow(B, static_cast<std::uint64_t>(b));
        if (e >= 0) return lhs <= rhs * ipow(delta - 1, static_cast<std::uint64_t>(e));
        return lhs * ipow(delta - 1, static_cast<std::uint64_t>(-e)) <= rhs;
    };
    auto t = static_cast<std::int64_t>(std::floor(approx));
    while (holds(t - 1)) --t;
    while (!holds(t)) ++t;
    return t;
}

}  // namespace

WeightedLowerBound weighted_lb(std::uint64_t n, std::uint64_t max_degree, std::uint64_t s0, Rational omega) {
    if (max_degree < 3) throw DomainError("weighted_lb needs max degree >= 3");
    if (s0 == 0) throw DomainError("weighted_lb needs s0 >= 1");
    if (omega <= Rational(0)) throw DomainError("omega must be positive");
    const long double w = static_cast<long double>(omega.num()) / static_cast<long double>(omega.den());
    const long double ln_base = std::log(static_cast<long double>(max_degree - 1));

    WeightedLowerBound out;
    std::uint64_t s_max = s0;
    if (w >= weighted_threshold(n, max_degree, s0)) {
        out.branch = WeightedBranch::LargeOmega;
    } else {
        out.branch = WeightedBranch::SmallOmega;
        s_max = std::max<std::uint64_t>(s0, static_cast<std::uint64_t>(std::ceil(1.0L / (w * ln_base))));
    }
    bool first = true;
    for (std::uint64_t s = s0; s <= s_max; ++s) {
        const long double A = static_cast<long double>((max_degree - 2) * n + 2 * s);
        const long double B = static_cast<long double>(max_degree * s);
        const long double value = w * static_cast<long double>(s) + std::log(A / B) / ln_base;
        const std::int64_t ceiling = weighted_term_ceiling(n, max_degree, s, omega, value);
        if (first || value < out.real) {
            out.real = value;
            out.set_size = s;
        }
        out.ceiling = first ? ceiling : std::min(out.ceiling, ceiling);
        first = false;
    }
    return out;
}

}  // namespace forcelab
