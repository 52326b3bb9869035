#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zforge/errors.hpp"
#include "zforge/formula.hpp"
#include "zforge/gadget.hpp"
#include "zforge/graph.hpp"
#include "zforge/netlist.hpp"

namespace zforge {

// ======================= compiled circuits ========================
//
// Gluing turns a netlist into one colored graph. Every net becomes a
// single vertex shared by its driver and its load; gadget interiors
// get fresh vertices named "<label>.<fragment vertex>". Labels are the
// lowercase gate kind plus the gate id ("and0", "filter5"), so vertex
// names stay unique and human-readable.

struct GadgetInstance {
    std::string label;
    GateKind kind = GateKind::and_;
    int gate_id = 0;
    int wire_k = 0;
    int layer = 0;
    std::vector<VertexId> vertices; // ports and interiors, sorted
    std::vector<VertexId> input_ports;
    std::vector<VertexId> output_ports;
    std::vector<VertexId> interior; // sorted
};

struct CompiledCircuit {
    ColoredGraph graph; // ports white; helper vertices pre-black
    FormulaMode mode = FormulaMode::monotone;
    std::string formula;
    std::vector<std::string> input_order;
    // Monotone inputs and outputs hold one vertex; dual-rail ones hold
    // two, zero rail first.
    std::map<std::string, std::vector<VertexId>> inputs;
    std::vector<std::vector<VertexId>> outputs;
    std::map<VertexId, int> layers;
    std::optional<int> expected_output_step;
    std::vector<GadgetInstance> instances;
};

struct CompileOptions {
    bool balance_delays = true;
    bool insert_filters = false;
};

inline const Gadget& gadget_for(GateKind kind, int wire_k) {
    static const Gadget and_g = and_gadget();
    static const Gadget or_g = or_gadget();
    static const Gadget copy_g = copy_gadget();
    static const Gadget filter_g = filter_gadget();
    static std::map<int, Gadget> wires;
    switch (kind) {
    case GateKind::and_: return and_g;
    case GateKind::or_: return or_g;
    case GateKind::copy: return copy_g;
    case GateKind::filter: return filter_g;
    case GateKind::wire: {
        auto it = wires.find(wire_k);
        if (it == wires.end()) it = wires.emplace(wire_k, wire_gadget(wire_k)).first;
        return it->second;
    }
    }
    throw std::logic_error("bad gate kind");
}

inline std::string gate_label(GateKind kind, int id) {
    std::string s = kind_name(kind);
    for (char& c : s) c = char(std::tolower(static_cast<unsigned char>(c)));
    return s + std::to_string(id);
}

// The standard pass pipeline: copy guards always, explicit filters on
// request, delay balancing last so it accounts for everything spliced
// before it. Returns the common output-ready step when balancing.
inline std::optional<int> run_passes(Netlist& nl, const CompileOptions& opts) {
    guard_copy_outputs(nl);
    if (opts.insert_filters) insert_filters(nl);
    std::optional<int> expected;
    if (opts.balance_delays) {
        DelayInfo info = insert_delays(nl);
        expected = equalize_outputs(nl, info);
    }
    return expected;
}

namespace detail {

// Net vertices carry the name of their driver: primary inputs keep the
// input name, gate outputs become "<label>.out" ("<label>.o1"/".o2"
// for copies).
inline std::vector<std::string> net_vertex_names(const Netlist& nl) {
    NetEnds ends = compute_ends(nl);
    std::vector<std::string> names(std::size_t(nl.net_count));
    for (int n = 0; n < nl.net_count; ++n) {
        const NetEnd& d = ends.driver[std::size_t(n)];
        if (d.gate < 0) {
            names[std::size_t(n)] = nl.primary_inputs[std::size_t(d.slot)].first;
        } else {
            const Gate& g = nl.gates[std::size_t(d.gate)];
            std::string base = gate_label(g.kind, g.id);
            if (g.kind == GateKind::copy)
                names[std::size_t(n)] = base + (d.slot == 0 ? ".o1" : ".o2");
            else
                names[std::size_t(n)] = base + ".out";
        }
    }
    return names;
}

struct GlueResult {
    ColoredGraph graph;
    std::vector<VertexId> net_vertex; // net id -> vertex
    std::vector<GadgetInstance> instances;
    std::map<VertexId, int> layers;
};

inline GlueResult glue(const Netlist& nl) {
    GlueResult r;
    NetEnds ends = compute_ends(nl);
    std::vector<std::string> net_names = net_vertex_names(nl);

    for (int n = 0; n < nl.net_count; ++n)
        r.net_vertex.push_back(r.graph.add_vertex(net_names[std::size_t(n)]));

    for (const Gate& g : nl.gates) {
        const Gadget& gad = gadget_for(g.kind, g.wire_k);
        std::string label = gate_label(g.kind, g.id);

        GadgetInstance inst;
        inst.label = label;
        inst.kind = g.kind;
        inst.gate_id = g.id;
        inst.wire_k = g.wire_k;
        inst.layer = g.layer;

        // Fragment vertex -> glued vertex: ports map onto net vertices,
        // interiors get fresh ones with the fragment's coloring.
        std::vector<VertexId> local(gad.fragment.vertex_count());
        std::vector<char> is_port(gad.fragment.vertex_count(), 0);
        for (std::size_t i = 0; i < gad.inputs.size(); ++i) {
            local[gad.inputs[i]] = r.net_vertex[std::size_t(g.inputs[i])];
            is_port[gad.inputs[i]] = 1;
        }
        for (std::size_t i = 0; i < gad.outputs.size(); ++i) {
            local[gad.outputs[i]] = r.net_vertex[std::size_t(g.outputs[i])];
            is_port[gad.outputs[i]] = 1;
        }
        for (VertexId v = 0; v < gad.fragment.vertex_count(); ++v) {
            if (is_port[v]) continue;
            VertexId nv = r.graph.add_vertex(label + "." + gad.fragment.name(v),
                                             gad.fragment.color(v));
            local[v] = nv;
            inst.interior.push_back(nv);
            r.layers[nv] = g.layer;
        }
        for (VertexId v = 0; v < gad.fragment.vertex_count(); ++v)
            for (VertexId w : gad.fragment.neighbors(v))
                if (v < w) r.graph.add_edge(local[v], local[w]);

        for (int in : g.inputs)
            inst.input_ports.push_back(r.net_vertex[std::size_t(in)]);
        for (int out : g.outputs)
            inst.output_ports.push_back(r.net_vertex[std::size_t(out)]);
        inst.vertices = inst.interior;
        inst.vertices.insert(inst.vertices.end(), inst.input_ports.begin(),
                             inst.input_ports.end());
        inst.vertices.insert(inst.vertices.end(), inst.output_ports.begin(),
                             inst.output_ports.end());
        std::sort(inst.vertices.begin(), inst.vertices.end());
        std::sort(inst.interior.begin(), inst.interior.end());
        r.instances.push_back(std::move(inst));
    }

    // Net vertices take their driver gate's layer; primary-input nets
    // take the consuming gate's layer so in-gadget forces from a fresh
    // input classify as internal, not forward. A lone pass-through net
    // sits at layer 0.
    for (int n = 0; n < nl.net_count; ++n) {
        const NetEnd& d = ends.driver[std::size_t(n)];
        const NetEnd& l = ends.load[std::size_t(n)];
        int layer = 0;
        if (d.gate >= 0) layer = nl.gates[std::size_t(d.gate)].layer;
        else if (l.gate >= 0) layer = nl.gates[std::size_t(l.gate)].layer;
        r.layers[r.net_vertex[std::size_t(n)]] = layer;
    }
    return r;
}

inline CompiledCircuit
finish_compile(Netlist nl, FormulaMode mode, std::string formula,
               const std::vector<std::pair<std::string, std::vector<int>>>& input_nets,
               std::size_t rails_per_output, const CompileOptions& opts) {
    std::optional<int> expected = run_passes(nl, opts);

    GlueResult glued = glue(nl);

    CompiledCircuit c;
    c.graph = std::move(glued.graph);
    c.mode = mode;
    c.formula = std::move(formula);
    c.layers = std::move(glued.layers);
    c.instances = std::move(glued.instances);
    c.expected_output_step = expected;
    for (const auto& [name, nets] : input_nets) {
        c.input_order.push_back(name);
        std::vector<VertexId> vs;
        for (int n : nets) vs.push_back(glued.net_vertex[std::size_t(n)]);
        c.inputs.emplace(name, std::move(vs));
    }
    if (nl.primary_outputs.size() % rails_per_output != 0)
        throw std::logic_error("ragged output rails");
    for (std::size_t i = 0; i < nl.primary_outputs.size(); i += rails_per_output) {
        std::vector<VertexId> vs;
        for (std::size_t j = 0; j < rails_per_output; ++j)
            vs.push_back(glued.net_vertex[std::size_t(nl.primary_outputs[i + j])]);
        c.outputs.push_back(std::move(vs));
    }
    return c;
}

} // namespace detail

inline CompiledCircuit compile_monotone(const FormulaPtr& f,
                                        const CompileOptions& opts = {}) {
    Netlist nl = lower_to_netlist(f);
    std::vector<std::pair<std::string, std::vector<int>>> ins;
    for (const auto& [name, net] : nl.primary_inputs)
        ins.emplace_back(name, std::vector<int>{net});
    return detail::finish_compile(std::move(nl), FormulaMode::monotone,
                                  to_string(f), ins, 1, opts);
}

inline CompiledCircuit compile_dual_rail(const FormulaPtr& f,
                                         const CompileOptions& opts = {}) {
    DualNetlist d = lower_to_netlist_dual(f);
    std::vector<std::pair<std::string, std::vector<int>>> ins;
    for (const auto& [name, rails] : d.inputs)
        ins.emplace_back(name, std::vector<int>{rails.zero, rails.one});
    return detail::finish_compile(std::move(d.netlist), FormulaMode::dual_rail,
                                  to_string(f), ins, 2, opts);
}

inline CompiledCircuit compile_formula(const FormulaPtr& f, FormulaMode mode,
                                       const CompileOptions& opts = {}) {
    return mode == FormulaMode::monotone ? compile_monotone(f, opts)
                                         : compile_dual_rail(f, opts);
}

// Reversible benchmark: (a, b, c) -> (a, b, c XOR (a AND b)).
inline CompiledCircuit build_toffoli(const CompileOptions& opts = {}) {
    DualNetlist d = lower_toffoli_netlist();
    std::vector<std::pair<std::string, std::vector<int>>> ins;
    for (const auto& [name, rails] : d.inputs)
        ins.emplace_back(name, std::vector<int>{rails.zero, rails.one});
    return detail::finish_compile(std::move(d.netlist), FormulaMode::dual_rail,
                                  "toffoli(a, b, c)", ins, 2, opts);
}

// ========================= input application ======================

inline ColoredGraph apply_inputs(const CompiledCircuit& c,
                                 const std::map<std::string, bool>& bits) {
    for (const auto& [name, value] : bits)
        if (!c.inputs.count(name))
            throw ShapeError("unknown input variable '" + name + "'");
    ColoredGraph g = c.graph;
    for (const auto& [name, vs] : c.inputs) {
        auto it = bits.find(name);
        if (it == bits.end())
            throw ShapeError("missing input variable '" + name + "'");
        if (vs.size() == 1) {
            if (it->second) g.set_color(vs[0], Color::black);
        } else {
            g.set_color(it->second ? vs[1] : vs[0], Color::black);
        }
    }
    return g;
}

// Reads logical output `which` from a finished run. Monotone outputs
// are black iff true; dual-rail pairs must be exclusive.
inline bool decode_output(const CompiledCircuit& c, const ColoredGraph& final_graph,
                          std::size_t which = 0) {
    if (which >= c.outputs.size()) throw ShapeError("output index out of range");
    const std::vector<VertexId>& vs = c.outputs[which];
    if (vs.size() == 1) return final_graph.color(vs[0]) == Color::black;
    bool zero = final_graph.color(vs[0]) == Color::black;
    bool one = final_graph.color(vs[1]) == Color::black;
    if (zero == one)
        throw ShapeError("output rail pair is not exclusive (zero="
                         + std::string(zero ? "black" : "white") + ", one="
                         + std::string(one ? "black" : "white") + ")");
    return one;
}

} // namespace zforge
