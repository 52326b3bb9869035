#pragma once

#include <string>

#include "zforge/graph.hpp"

namespace zforge {

namespace detail {

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

} // namespace detail

// Graphviz rendering of a coloring: black vertices filled black with
// white labels, white vertices outlined.
inline std::string to_dot(const ColoredGraph& g, const std::string& title = "G") {
    std::string out = "graph " + detail::dot_quote(title) + " {\n";
    out += "  node [style=filled, fontname=\"monospace\"];\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out += "  " + detail::dot_quote(g.name(v));
        if (g.black(v)) out += " [fillcolor=black, fontcolor=white]";
        else out += " [fillcolor=white]";
        out += ";\n";
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (VertexId w : g.neighbors(v))
            if (v < w)
                out += "  " + detail::dot_quote(g.name(v)) + " -- " +
                       detail::dot_quote(g.name(w)) + ";\n";
    out += "}\n";
    return out;
}

} // namespace zforge
