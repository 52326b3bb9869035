// A walk through the library: run the color-change rule on a small
// graph, compile a formula, watch it evaluate, and peek at the
// analyses. Prints plain text; see the zforge tool for JSON output.

#include <iostream>
#include <string>

#include "zforge/zforge.hpp"

using namespace zforge;

namespace {

void banner(const std::string& title) {
    std::cout << "\n== " << title << " ==\n";
}

void show_trace(const ColoredGraph& g, const ForcingTrace& t) {
    for (const StepRecord& rec : t.steps) {
        std::cout << "step " << rec.step << ":";
        for (const ForceEvent& ev : rec.events)
            std::cout << "  " << g.name(ev.forcer) << " -> " << g.name(ev.forced);
        std::cout << "\n";
    }
    std::cout << "fixpoint after step " << t.fixpoint_step << ", "
              << t.final.black_count() << "/" << t.final.vertex_count()
              << " vertices black\n";
}

} // namespace

int main() {
    banner("zero forcing on a path");
    ColoredGraph path;
    VertexId a = path.add_vertex("a", Color::black);
    VertexId b = path.add_vertex("b");
    VertexId c = path.add_vertex("c");
    path.add_edge(a, b);
    path.add_edge(b, c);
    ForcingTrace t = run_to_fixpoint(path);
    show_trace(t.final, t);

    banner("minimum zero forcing set of the triangle");
    ColoredGraph tri;
    tri.add_vertex("1");
    tri.add_vertex("2");
    tri.add_vertex("3");
    tri.add_edge(0, 1);
    tri.add_edge(0, 2);
    tri.add_edge(1, 2);
    VertexSet z = minimum_zero_forcing_set(tri);
    std::cout << "size " << z.size() << ":";
    for (VertexId v : z) std::cout << " " << tri.name(v);
    std::cout << "\n";

    banner("compiling (x1 AND x2) OR (x3 AND x4)");
    FormulaPtr f = parse_formula("(x1 AND x2) OR (x3 AND x4)", FormulaMode::monotone);
    CompiledCircuit circuit = compile_monotone(f);
    std::cout << circuit.graph.vertex_count() << " vertices, "
              << circuit.graph.edge_count() << " edges, output expected at step "
              << *circuit.expected_output_step << "\n";

    banner("evaluating on 1100");
    EvalResult ev = evaluate_bits(circuit, {true, true, false, false});
    show_trace(ev.trace.final, ev.trace);
    std::cout << "output = " << ev.outputs[0] << " (step " << ev.output_steps[0]
              << ")\n";

    banner("force directions on 1100");
    ForceClassification cls = classify_forces(circuit, ev.trace);
    std::cout << cls.forward << " forward, " << cls.backward << " backward, "
              << cls.internal << " internal\n";
    for (const ClassifiedForce& cf : cls.events)
        if (cf.direction == ForceDirection::backward)
            std::cout << "backward: " << circuit.graph.name(cf.event.forcer)
                      << " (layer " << cf.from_layer << ") -> "
                      << circuit.graph.name(cf.event.forced) << " (layer "
                      << cf.to_layer << ")\n";

    banner("what two parties learn");
    LeakageReport leak = leakage_analysis(
        circuit, {{"A", {"x1", "x2"}}, {"B", {"x3", "x4"}}});
    for (const PartyLeakage& pl : leak.parties)
        for (const LeakCase& lc : pl.cases)
            std::cout << pl.party << " holding " << bit_string(lc.own) << ": "
                      << verdict_name(lc.verdict) << "\n";

    banner("the same formula in dual-rail");
    CompiledCircuit dual = compile_dual_rail(f);
    EvalResult dev = evaluate_bits(dual, {true, true, false, false});
    std::cout << dual.graph.vertex_count() << " vertices, output = "
              << dev.outputs[0] << "\n";
    return 0;
}
