#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zforge/errors.hpp"

namespace zforge {

enum class Color : std::uint8_t { white, black };

// Dense index of a vertex inside one ColoredGraph. Indices follow
// insertion order and never change, so every iteration over a graph
// is deterministic.
using VertexId = std::uint32_t;

using VertexSet = std::vector<VertexId>; // kept sorted ascending

// Simple undirected graph with a total white/black coloring and
// string names on vertices. Self-loops and duplicate edges are
// rejected. Neighbor lists are kept sorted.
class ColoredGraph {
public:
    VertexId add_vertex(std::string name, Color c = Color::white) {
        if (name.empty())
            throw ShapeError("vertex id must be a nonempty string");
        auto [it, inserted] = index_.emplace(std::move(name), VertexId(names_.size()));
        if (!inserted)
            throw ShapeError("duplicate vertex id: " + it->first);
        names_.push_back(it->first);
        adj_.emplace_back();
        colors_.push_back(c);
        return VertexId(names_.size() - 1);
    }

    void add_edge(VertexId a, VertexId b) {
        check(a);
        check(b);
        if (a == b)
            throw ShapeError("self-loop on vertex " + names_[a]);
        auto& na = adj_[a];
        auto pos = std::lower_bound(na.begin(), na.end(), b);
        if (pos != na.end() && *pos == b)
            throw ShapeError("duplicate edge " + names_[a] + " -- " + names_[b]);
        na.insert(pos, b);
        auto& nb = adj_[b];
        nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
    }

    bool has_edge(VertexId a, VertexId b) const {
        check(a);
        check(b);
        return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
    }

    std::size_t vertex_count() const { return names_.size(); }
    std::size_t edge_count() const {
        std::size_t deg = 0;
        for (const auto& n : adj_) deg += n.size();
        return deg / 2;
    }

    const std::string& name(VertexId v) const { check(v); return names_[v]; }

    std::optional<VertexId> find(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    VertexId vertex(std::string_view name) const {
        auto v = find(name);
        if (!v) throw ShapeError("unknown vertex id: " + std::string(name));
        return *v;
    }

    std::span<const VertexId> neighbors(VertexId v) const { check(v); return adj_[v]; }

    Color color(VertexId v) const { check(v); return colors_[v]; }
    void set_color(VertexId v, Color c) { check(v); colors_[v] = c; }
    bool black(VertexId v) const { return color(v) == Color::black; }

    std::size_t black_count() const {
        return std::size_t(std::count(colors_.begin(), colors_.end(), Color::black));
    }
    bool all_black() const { return black_count() == vertex_count(); }

    VertexSet black_vertices() const {
        VertexSet out;
        for (VertexId v = 0; v < vertex_count(); ++v)
            if (black(v)) out.push_back(v);
        return out;
    }

    // Same vertices and edges, every vertex white.
    ColoredGraph blank() const {
        ColoredGraph g = *this;
        std::fill(g.colors_.begin(), g.colors_.end(), Color::white);
        return g;
    }

private:
    void check(VertexId v) const {
        if (v >= names_.size())
            throw std::logic_error("vertex index out of range");
    }

    std::vector<std::string> names_;
    std::map<std::string, VertexId> index_;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<Color> colors_;
};

} // namespace zforge
