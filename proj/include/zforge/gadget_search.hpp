#pragma once

#include <string>
#include <vector>

#include "zforge/errors.hpp"
#include "zforge/harness.hpp"

namespace zforge {

struct SearchOptions {
    int max_vertices = 4;
    int hard_cap = 6; // enumeration is exponential; refuse beyond this
};

namespace detail {

// A gadget meets two kinds of context: mounted behind upstream wiring
// (the harness models that with stubs) and at the outermost layer,
// where input vertices are colored directly and have no stub to soak
// up a stray force. Candidates must produce the right table in both.
// Without this check the search admits shapes that force straight
// through an idle input when nothing guards it, e.g. a bare 2-edge
// path posing as AND.
inline bool leaf_table_matches(const Gadget& g, const BoolFn& fn) {
    const std::size_t arity = g.inputs.size();
    for (std::size_t row = 0; row < (std::size_t(1) << arity); ++row) {
        ColoredGraph frag = g.fragment;
        std::vector<bool> bits(arity);
        for (std::size_t i = 0; i < arity; ++i) {
            bits[i] = row >> (arity - 1 - i) & 1;
            if (bits[i]) frag.set_color(g.inputs[i], Color::black);
        }
        ForcingTrace t = run_to_fixpoint(std::move(frag));
        std::vector<bool> want = fn(bits);
        for (std::size_t j = 0; j < g.outputs.size(); ++j)
            if (t.final.black(g.outputs[j]) != want[j]) return false;
    }
    return true;
}

} // namespace detail

// Exhaustive search for gadgets realizing `fn` (arity `arity`, one
// output per element of fn's result). Enumerates every graph on up to
// max_vertices labeled vertices, every ordered port assignment, and
// every pre-coloring of the non-input vertices. Input ports must start
// white since they carry values; output ports may be pre-colored,
// which is the only way a constant-true gadget can exist (a wrongly
// pre-colored output fails its zero rows in verification anyway).
//
// Returns every gadget that computes the right table with directly
// colored inputs and passes mounted verification, including forward
// propagation on true rows, ordered by (vertex count, edge count,
// enumeration rank). Latency is measured from the all-true row.
inline std::vector<Gadget> search_minimal_gadget(const BoolFn& fn,
                                                 std::size_t arity,
                                                 const SearchOptions& opts = {}) {
    if (opts.max_vertices > opts.hard_cap)
        throw LimitError("gadget search limited to " +
                         std::to_string(opts.hard_cap) + " vertices");

    std::vector<bool> probe(arity, true);
    const std::size_t n_out = fn(probe).size();
    if (n_out == 0) throw ShapeError("target function must have outputs");

    std::vector<Gadget> found;

    for (int n = std::max<int>(1, int(arity + n_out));
         n <= opts.max_vertices; ++n) {
        const int max_edges = n * (n - 1) / 2;

        // Edge slot e corresponds to the e-th pair (i, j), i < j.
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);

        // Ordered choice of arity + n_out distinct port vertices.
        std::vector<int> ports(arity + n_out);
        std::vector<bool> used(n, false);
        auto assign_ports = [&](auto&& self, std::size_t slot,
                                auto&& per_assignment) -> void {
            if (slot == ports.size()) { per_assignment(); return; }
            for (int v = 0; v < n; ++v) {
                if (used[v]) continue;
                used[v] = true;
                ports[slot] = v;
                self(self, slot + 1, per_assignment);
                used[v] = false;
            }
        };

        for (std::uint64_t edges = 0; edges < (std::uint64_t(1) << max_edges);
             ++edges) {
            assign_ports(assign_ports, 0, [&] {
                // Pre-color any subset of the non-input vertices.
                std::vector<int> colorable;
                for (int v = 0; v < n; ++v) {
                    bool is_input = false;
                    for (std::size_t i = 0; i < arity; ++i)
                        if (ports[i] == v) is_input = true;
                    if (!is_input) colorable.push_back(v);
                }
                for (std::uint64_t coloring = 0;
                     coloring < (std::uint64_t(1) << colorable.size());
                     ++coloring) {
                    Gadget g;
                    g.name = "search";
                    for (int v = 0; v < n; ++v)
                        g.fragment.add_vertex(std::to_string(v + 1));
                    for (int e = 0; e < max_edges; ++e)
                        if (edges >> e & 1)
                            g.fragment.add_edge(VertexId(slots[e].first),
                                                VertexId(slots[e].second));
                    for (std::size_t c = 0; c < colorable.size(); ++c)
                        if (coloring >> c & 1)
                            g.fragment.set_color(VertexId(colorable[c]), Color::black);
                    for (std::size_t i = 0; i < arity; ++i)
                        g.inputs.push_back(VertexId(ports[i]));
                    for (std::size_t j = 0; j < n_out; ++j)
                        g.outputs.push_back(VertexId(ports[arity + j]));

                    if (!detail::leaf_table_matches(g, fn)) continue;
                    TruthTableReport report = verify_gadget(g, fn);
                    if (!report.passes()) continue;

                    auto lat = measured_latency(report.rows.back());
                    g.latency = lat.value_or(0);
                    g.output_latencies.assign(n_out, g.latency);
                    found.push_back(std::move(g));
                }
            });
        }
    }

    std::stable_sort(found.begin(), found.end(),
                     [](const Gadget& a, const Gadget& b) {
                         auto ka = std::make_pair(a.fragment.vertex_count(),
                                                  a.fragment.edge_count());
                         auto kb = std::make_pair(b.fragment.vertex_count(),
                                                  b.fragment.edge_count());
                         return ka < kb;
                     });
    return found;
}

} // namespace zforge
