#pragma once

// k-subsets of a candidate list, in lexicographic order of the index tuples.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "forcelab/rational.hpp"
#include "forcelab/vertex_set.hpp"

namespace forcelab::detail {

/// C(n, k), saturating at UINT64_MAX.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    uint128_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(r);
}

class Combinations {
public:
    /// Positioned at the combination of lexicographic rank `rank`.
    Combinations(const std::vector<Vertex>& pool, std::size_t k, std::uint64_t rank = 0)
        : pool_(pool), idx_(k) {
        const std::size_t n = pool.size();
        std::size_t next = 0;
        for (std::size_t i = 0; i < k; ++i) {
            // Skip blocks of combinations starting with `next` while the rank is beyond them.
            while (true) {
                const auto block = binomial(n - next - 1, k - i - 1);
                if (rank < block) break;
                rank -= block;
                ++next;
            }
            idx_[i] = next++;
        }
    }

    VertexSet set() const {
        VertexSet s;
        for (auto i : idx_) s.insert(pool_[i]);
        return s;
    }

    /// Advances; false once past the last combination.
    bool next() {
        const std::size_t k = idx_.size(), n = pool_.size();
        std::size_t i = k;
        while (i > 0 && idx_[i - 1] == n - k + i - 1) --i;
        if (i == 0) return false;
        ++idx_[i - 1];
        for (std::size_t j = i; j < k; ++j) idx_[j] = idx_[j - 1] + 1;
        return true;
    }

private:
    const std::vector<Vertex>& pool_;
    std::vector<std::size_t> idx_;
};

}  // namespace forcelab::detail
