#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zforge/engine.hpp"
#include "zforge/errors.hpp"
#include "zforge/gadget.hpp"

namespace zforge {

// Boolean function the gadget is checked against: input bits in port
// order to output bits in port order.
using BoolFn = std::function<std::vector<bool>(const std::vector<bool>&)>;

// Standard mounting for gadget verification. Each 1-input is fed by an
// already-fired stub (two black vertices in a chain, the nearer one
// adjacent to the port, the companion keeps the stub from ever forcing
// anything but the port). Each 0-input gets the same stub all white.
// Each output carries a white pendant sink; a gadget "propagates
// forward" on a row when every true output forces its sink.
struct Harness {
    bool attach_sinks = true;
};

struct MountedGadget {
    ColoredGraph graph;
    std::vector<VertexId> input_ports;
    std::vector<VertexId> output_ports;
    std::vector<VertexId> sinks; // parallel to output_ports, empty if none
};

inline MountedGadget mount(const Gadget& g, const std::vector<bool>& bits,
                           const Harness& harness = {}) {
    if (bits.size() != g.inputs.size())
        throw ShapeError("gadget " + g.name + " takes " +
                         std::to_string(g.inputs.size()) + " inputs, got " +
                         std::to_string(bits.size()));
    MountedGadget m;
    m.graph = g.fragment;
    for (VertexId v : g.inputs) m.input_ports.push_back(v);
    for (VertexId v : g.outputs) m.output_ports.push_back(v);

    for (std::size_t i = 0; i < g.inputs.size(); ++i) {
        Color c = bits[i] ? Color::black : Color::white;
        VertexId s1 = m.graph.add_vertex("in" + std::to_string(i) + ".s1", c);
        VertexId s2 = m.graph.add_vertex("in" + std::to_string(i) + ".s2", c);
        m.graph.add_edge(s1, m.input_ports[i]);
        m.graph.add_edge(s1, s2);
    }
    if (harness.attach_sinks) {
        for (std::size_t j = 0; j < g.outputs.size(); ++j) {
            VertexId s = m.graph.add_vertex("out" + std::to_string(j) + ".sink");
            m.graph.add_edge(m.output_ports[j], s);
            m.sinks.push_back(s);
        }
    }
    return m;
}

struct TruthTableRow {
    std::vector<bool> inputs;
    std::vector<bool> outputs;          // port colors at the fixpoint
    std::vector<bool> expected;         // what the target function says
    std::optional<int> output_ready_step; // internal time all outputs black
    bool propagates_forward = false;    // every true output forced its sink
    bool matches = false;               // outputs == expected
};

struct TruthTableReport {
    std::string gadget;
    std::size_t arity = 0;
    std::vector<TruthTableRow> rows; // binary counting order over inputs

    bool all_match() const {
        for (const auto& r : rows)
            if (!r.matches) return false;
        return true;
    }
    // True when every row matches and every row with a true output can
    // move the computation forward. This is the bar shipped gadgets and
    // search results must clear.
    bool passes() const {
        for (const auto& r : rows)
            if (!r.matches || (!r.propagates_forward &&
                               std::find(r.outputs.begin(), r.outputs.end(), true) !=
                                   r.outputs.end()))
                return false;
        return true;
    }
};

// Simulates the gadget on every input row in the standard harness.
inline TruthTableReport verify_gadget(const Gadget& g, const BoolFn& expected,
                                      const Harness& harness = {}) {
    TruthTableReport report;
    report.gadget = g.name;
    report.arity = g.inputs.size();
    const std::size_t rows = std::size_t(1) << report.arity;
    for (std::size_t r = 0; r < rows; ++r) {
        TruthTableRow row;
        row.inputs.resize(report.arity);
        for (std::size_t i = 0; i < report.arity; ++i)
            row.inputs[i] = (r >> (report.arity - 1 - i)) & 1;

        MountedGadget m = mount(g, row.inputs, harness);
        ForcingTrace trace = run_to_fixpoint(m.graph);

        int ready = 0;
        bool all_out_black = true;
        for (VertexId o : m.output_ports) {
            if (!trace.final.black(o)) { all_out_black = false; break; }
            ready = std::max(ready, trace.black_step(o));
        }
        row.outputs.reserve(m.output_ports.size());
        for (VertexId o : m.output_ports) row.outputs.push_back(trace.final.black(o));
        if (all_out_black) row.output_ready_step = ready;

        row.propagates_forward = true;
        for (std::size_t j = 0; j < m.output_ports.size(); ++j)
            if (trace.final.black(m.output_ports[j]) && !m.sinks.empty() &&
                !trace.final.black(m.sinks[j]))
                row.propagates_forward = false;

        row.expected = expected(row.inputs);
        if (row.expected.size() != row.outputs.size())
            throw ShapeError("expected function arity does not match gadget " + g.name);
        row.matches = row.expected == row.outputs;
        report.rows.push_back(std::move(row));
    }
    return report;
}

// Offset between the harness step at which inputs were set and the step
// all outputs were black, for the given row of a verified report.
inline std::optional<int> measured_latency(const TruthTableRow& row) {
    if (!row.output_ready_step) return std::nullopt;
    bool any_input = std::find(row.inputs.begin(), row.inputs.end(), true) !=
                     row.inputs.end();
    return *row.output_ready_step - (any_input ? 2 : 1);
}

// Mounts the gadget with the given inputs, runs to the fixpoint, then
// blackens the output ports externally and resumes. True when that
// turns a previously white input port black: the gadget transmits back
// forcing for this input row.
inline bool transmits_back_force(const Gadget& g, const std::vector<bool>& bits,
                                 const Harness& harness = {}) {
    MountedGadget m = mount(g, bits, harness);
    ForcingTrace first = run_to_fixpoint(m.graph);
    ColoredGraph resumed = first.final;

    std::vector<VertexId> white_inputs;
    for (VertexId p : m.input_ports)
        if (!resumed.black(p)) white_inputs.push_back(p);

    for (VertexId o : m.output_ports) resumed.set_color(o, Color::black);
    ForcingTrace second = run_to_fixpoint(std::move(resumed));

    for (VertexId p : white_inputs)
        if (second.final.black(p)) return true;
    return false;
}

} // namespace zforge
