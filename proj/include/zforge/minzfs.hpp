#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "zforge/engine.hpp"
#include "zforge/errors.hpp"
#include "zforge/graph.hpp"

namespace zforge {

struct MinZfsOptions {
    std::size_t limit = 20; // refuse graphs larger than this
};

namespace detail {

// Closure over 64-bit masks; valid while vertex_count <= 64, which the
// limit guard guarantees.
inline std::uint64_t mask_closure(const std::vector<std::uint64_t>& adj,
                                  std::uint64_t black, std::size_t n) {
    for (;;) {
        std::uint64_t next = black;
        for (std::size_t u = 0; u < n; ++u) {
            if (!(black >> u & 1)) continue;
            std::uint64_t whites = adj[u] & ~black;
            if (whites != 0 && (whites & (whites - 1)) == 0) next |= whites;
        }
        if (next == black) return black;
        black = next;
    }
}

} // namespace detail

// Exact minimum zero forcing set. Subsets are enumerated in increasing
// size; within a size, in lexicographic order over the vertices sorted
// by their id strings, so ties resolve to the lexicographically least
// sorted id list. The search stops at the first size that contains a
// forcing set.
inline VertexSet minimum_zero_forcing_set(const ColoredGraph& g,
                                          const MinZfsOptions& opts = {}) {
    const std::size_t n = g.vertex_count();
    if (n > opts.limit)
        throw LimitError("graph has " + std::to_string(n) +
                         " vertices, exceeding the search limit of " +
                         std::to_string(opts.limit));

    // order[i] = vertex with the i-th smallest id string
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), VertexId(0));
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        return g.name(a) < g.name(b);
    });

    std::vector<std::uint64_t> adj(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (VertexId w : g.neighbors(order[i])) {
            auto j = std::size_t(std::find(order.begin(), order.end(), w) - order.begin());
            adj[i] |= std::uint64_t(1) << j;
        }

    const std::uint64_t full = n == 64 ? ~std::uint64_t(0)
                                       : (std::uint64_t(1) << n) - 1;

    std::vector<std::size_t> pick;
    // Lexicographic combinations of size k over positions 0..n-1.
    auto search = [&](auto&& self, std::size_t k, std::size_t from,
                      std::uint64_t black) -> bool {
        if (pick.size() == k)
            return detail::mask_closure(adj, black, n) == full;
        for (std::size_t i = from; i + (k - pick.size()) <= n; ++i) {
            pick.push_back(i);
            if (self(self, k, i + 1, black | (std::uint64_t(1) << i)))
                return true;
            pick.pop_back();
        }
        return false;
    };

    for (std::size_t k = 0; k <= n; ++k) {
        pick.clear();
        if (search(search, k, 0, 0)) {
            VertexSet out;
            for (std::size_t i : pick) out.push_back(order[i]);
            std::sort(out.begin(), out.end());
            return out;
        }
    }
    throw std::logic_error("full vertex set must force itself");
}

} // namespace zforge
