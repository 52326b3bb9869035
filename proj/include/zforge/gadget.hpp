#pragma once

#include <string>
#include <vector>

#include "zforge/errors.hpp"
#include "zforge/graph.hpp"

namespace zforge {

// A gadget is a colored graph fragment that computes one Boolean
// function under the color-change rule. Input and output ports are
// ordinary vertices that get merged with neighboring fragments when
// circuits are glued. Shipped constructors keep every port white;
// pre-colored vertices are helpers.
struct Gadget {
    std::string name;
    ColoredGraph fragment;
    std::vector<VertexId> inputs;
    std::vector<VertexId> outputs;
    // Steps from "all inputs black" to "all outputs black" on the
    // all-true row. output_latencies[j] is the per-port figure; they
    // differ for copy, whose second output lags the first.
    int latency = 0;
    std::vector<int> output_latencies;
};

// Triangle. Both inputs must be black before either can force the
// output, which is what makes it conjunctive.
inline Gadget and_gadget() {
    Gadget g;
    g.name = "and";
    VertexId v1 = g.fragment.add_vertex("1");
    VertexId v2 = g.fragment.add_vertex("2");
    VertexId v3 = g.fragment.add_vertex("3");
    g.fragment.add_edge(v1, v2);
    g.fragment.add_edge(v1, v3);
    g.fragment.add_edge(v2, v3);
    g.inputs = {v1, v2};
    g.outputs = {v3};
    g.latency = 1;
    g.output_latencies = {1};
    return g;
}

// Four vertices, helper 3 pre-colored black. A single black input
// forces the output through vertex 4's side and the helper forces the
// idle input in the same round; that back-coloring is load-bearing,
// later gates need both input-side vertices black to keep moving.
inline Gadget or_gadget() {
    Gadget g;
    g.name = "or";
    VertexId v1 = g.fragment.add_vertex("1");
    VertexId v2 = g.fragment.add_vertex("2");
    VertexId v3 = g.fragment.add_vertex("3", Color::black);
    VertexId v4 = g.fragment.add_vertex("4");
    g.fragment.add_edge(v1, v3);
    g.fragment.add_edge(v1, v4);
    g.fragment.add_edge(v2, v3);
    g.fragment.add_edge(v2, v4);
    g.inputs = {v1, v2};
    g.outputs = {v4};
    g.latency = 1;
    g.output_latencies = {1};
    return g;
}

// Three-vertex star that computes OR on its output vertex but cannot
// force anything past it on a single true input (the output keeps two
// white neighbors). Kept as a negative fixture: verification must flag
// it as non-propagating.
inline Gadget or_gadget_nonpropagating() {
    Gadget g;
    g.name = "or3";
    VertexId v1 = g.fragment.add_vertex("1");
    VertexId v2 = g.fragment.add_vertex("2");
    VertexId v3 = g.fragment.add_vertex("3");
    g.fragment.add_edge(v1, v3);
    g.fragment.add_edge(v2, v3);
    g.inputs = {v1, v2};
    g.outputs = {v3};
    g.latency = 1;
    g.output_latencies = {1};
    return g;
}

// Fan-out 2. With input a black: a forces o1, then helper b forces o2,
// so o2 lags o1 by one step. The skew is compensated by the compiler's
// delay pass, not inside the gadget.
inline Gadget copy_gadget() {
    Gadget g;
    g.name = "copy";
    VertexId a = g.fragment.add_vertex("a");
    VertexId b = g.fragment.add_vertex("b", Color::black);
    VertexId o1 = g.fragment.add_vertex("o1");
    VertexId o2 = g.fragment.add_vertex("o2");
    g.fragment.add_edge(a, o1);
    g.fragment.add_edge(b, o1);
    g.fragment.add_edge(b, o2);
    g.inputs = {a};
    g.outputs = {o1, o2};
    g.latency = 2;
    g.output_latencies = {1, 2};
    return g;
}

// Delay line: output turns black exactly k steps after the input, so
// the path carries k edges (k-1 interior vertices). k=1 is a bare edge.
inline Gadget wire_gadget(int k) {
    if (k < 1) throw ShapeError("wire delay must be at least 1");
    Gadget g;
    g.name = "wire" + std::to_string(k);
    VertexId in = g.fragment.add_vertex("in");
    VertexId prev = in;
    for (int i = 1; i < k; ++i) {
        VertexId w = g.fragment.add_vertex("w" + std::to_string(i));
        g.fragment.add_edge(prev, w);
        prev = w;
    }
    VertexId out = g.fragment.add_vertex("out");
    g.fragment.add_edge(prev, out);
    g.inputs = {in};
    g.outputs = {out};
    g.latency = k;
    g.output_latencies = {k};
    return g;
}

// Diode. Forward: i forces x while b forces t, then x forces o, two
// steps in. Backward: a black o forces x, but x then holds two white
// neighbors (i and t) and the force dies there, so nothing upstream
// of i ever moves.
inline Gadget filter_gadget() {
    Gadget g;
    g.name = "filter";
    VertexId i = g.fragment.add_vertex("i");
    VertexId b = g.fragment.add_vertex("b", Color::black);
    VertexId t = g.fragment.add_vertex("t");
    VertexId x = g.fragment.add_vertex("x");
    VertexId o = g.fragment.add_vertex("o");
    g.fragment.add_edge(i, x);
    g.fragment.add_edge(i, b);
    g.fragment.add_edge(b, t);
    g.fragment.add_edge(x, t);
    g.fragment.add_edge(x, o);
    g.inputs = {i};
    g.outputs = {o};
    g.latency = 2;
    g.output_latencies = {2};
    return g;
}

} // namespace zforge
