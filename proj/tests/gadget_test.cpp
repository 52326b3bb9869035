#include <vector>

#include <gtest/gtest.h>

#include "zforge/engine.hpp"
#include "zforge/errors.hpp"
#include "zforge/gadget.hpp"
#include "zforge/harness.hpp"

using namespace zforge;

namespace {

std::vector<bool> and_fn(const std::vector<bool>& in) { return {in[0] && in[1]}; }
std::vector<bool> or_fn(const std::vector<bool>& in) { return {in[0] || in[1]}; }
std::vector<bool> copy_fn(const std::vector<bool>& in) { return {in[0], in[0]}; }
std::vector<bool> pass_fn(const std::vector<bool>& in) { return {in[0]}; }

} // namespace

TEST(Gadget, Shapes) {
    Gadget a = and_gadget();
    EXPECT_EQ(a.fragment.vertex_count(), 3u);
    EXPECT_EQ(a.fragment.edge_count(), 3u);
    EXPECT_EQ(a.fragment.black_count(), 0u);
    EXPECT_EQ(a.latency, 1);

    Gadget o = or_gadget();
    EXPECT_EQ(o.fragment.vertex_count(), 4u);
    EXPECT_EQ(o.fragment.edge_count(), 4u);
    EXPECT_TRUE(o.fragment.black(o.fragment.vertex("3"))); // helper
    EXPECT_EQ(o.latency, 1);

    Gadget c = copy_gadget();
    EXPECT_EQ(c.outputs.size(), 2u);
    EXPECT_EQ(c.output_latencies, (std::vector<int>{1, 2}));

    Gadget f = filter_gadget();
    EXPECT_EQ(f.fragment.vertex_count(), 5u);
    EXPECT_EQ(f.latency, 2);

    Gadget w = wire_gadget(3);
    EXPECT_EQ(w.fragment.vertex_count(), 4u);
    EXPECT_EQ(w.fragment.edge_count(), 3u);
    EXPECT_THROW(wire_gadget(0), ShapeError);
}

TEST(Gadget, TruthTablesPass) {
    EXPECT_TRUE(verify_gadget(and_gadget(), and_fn).passes());
    EXPECT_TRUE(verify_gadget(or_gadget(), or_fn).passes());
    EXPECT_TRUE(verify_gadget(copy_gadget(), copy_fn).passes());
    EXPECT_TRUE(verify_gadget(filter_gadget(), pass_fn).passes());
    for (int k = 1; k <= 3; ++k)
        EXPECT_TRUE(verify_gadget(wire_gadget(k), pass_fn).passes()) << "k=" << k;
}

TEST(Gadget, NonPropagatingOrIsFlagged) {
    TruthTableReport rep = verify_gadget(or_gadget_nonpropagating(), or_fn);
    EXPECT_TRUE(rep.all_match()); // it does compute OR on the port
    EXPECT_FALSE(rep.passes());   // but a single 1 cannot move past it
    EXPECT_FALSE(rep.rows[1].propagates_forward); // (0,1)
    EXPECT_FALSE(rep.rows[2].propagates_forward); // (1,0)
    EXPECT_TRUE(rep.rows[3].propagates_forward);  // (1,1)
}

TEST(Gadget, MeasuredLatenciesMatchDeclared) {
    struct Case { Gadget g; BoolFn fn; };
    std::vector<Case> cases;
    cases.push_back({and_gadget(), and_fn});
    cases.push_back({or_gadget(), or_fn});
    cases.push_back({copy_gadget(), copy_fn});
    cases.push_back({filter_gadget(), pass_fn});
    for (int k = 1; k <= 3; ++k) cases.push_back({wire_gadget(k), pass_fn});
    for (const Case& c : cases) {
        TruthTableReport rep = verify_gadget(c.g, c.fn);
        const TruthTableRow& all_true = rep.rows.back();
        auto lat = measured_latency(all_true);
        ASSERT_TRUE(lat.has_value()) << c.g.name;
        EXPECT_EQ(*lat, c.g.latency) << c.g.name;
    }
}

TEST(Gadget, CopyPortLatenciesDiffer) {
    Gadget c = copy_gadget();
    MountedGadget m = mount(c, {true});
    ForcingTrace t = run_to_fixpoint(m.graph);
    // Input set at step 2, first output one step later, second two.
    EXPECT_EQ(t.black_step(m.input_ports[0]), 2);
    EXPECT_EQ(t.black_step(m.output_ports[0]), 3);
    EXPECT_EQ(t.black_step(m.output_ports[1]), 4);
}

TEST(Gadget, BareAndForcesOutputAtStepTwo) {
    Gadget a = and_gadget();
    ColoredGraph g = a.fragment;
    g.set_color(a.inputs[0], Color::black);
    g.set_color(a.inputs[1], Color::black);
    ForcingTrace t = run_to_fixpoint(g);
    EXPECT_EQ(t.black_step(a.outputs[0]), 2);
}

TEST(Gadget, BareOrBackColorsIdleInputSameStep) {
    Gadget o = or_gadget();
    ColoredGraph g = o.fragment;
    g.set_color(o.inputs[0], Color::black);
    ForcingTrace t = run_to_fixpoint(g);
    EXPECT_EQ(t.black_step(o.outputs[0]), 2);
    EXPECT_EQ(t.black_step(o.inputs[1]), 2); // helper back-colors it
}

TEST(Gadget, AndTransmitsBackForceIffOneInputFired) {
    Gadget a = and_gadget();
    EXPECT_FALSE(transmits_back_force(a, {false, false}));
    EXPECT_TRUE(transmits_back_force(a, {false, true}));
    EXPECT_TRUE(transmits_back_force(a, {true, false}));
    EXPECT_FALSE(transmits_back_force(a, {true, true})); // nothing left white
}

TEST(Gadget, OrDoesNotTransmitBackForceWhenIdle) {
    EXPECT_FALSE(transmits_back_force(or_gadget(), {false, false}));
}

TEST(Gadget, FilterBlocksBackForce) {
    Gadget f = filter_gadget();
    EXPECT_FALSE(transmits_back_force(f, {false}));
    EXPECT_FALSE(transmits_back_force(f, {true}));
}

TEST(Gadget, CopyBackForceDependsOnLoads) {
    // With pendant sinks (the default harness) the white sink keeps o1
    // from forcing the input; with bare outputs the force returns.
    Gadget c = copy_gadget();
    EXPECT_FALSE(transmits_back_force(c, {false}));
    EXPECT_TRUE(transmits_back_force(c, {false}, Harness{false}));
}

TEST(Gadget, ZeroForcingSetsOfFragments) {
    Gadget a = and_gadget();
    EXPECT_TRUE(is_zero_forcing_set(a.fragment, {a.inputs[0], a.inputs[1]}));
    EXPECT_FALSE(is_zero_forcing_set(a.fragment, {a.inputs[0]}));
    EXPECT_FALSE(is_zero_forcing_set(a.fragment, {a.outputs[0]}));

    Gadget o = or_gadget();
    VertexId helper = o.fragment.vertex("3");
    EXPECT_TRUE(is_zero_forcing_set(o.fragment, {o.inputs[0], helper}));
    EXPECT_TRUE(is_zero_forcing_set(o.fragment, {o.inputs[1], helper}));
    // Both inputs but no helper: output and helper stay separated.
    EXPECT_FALSE(is_zero_forcing_set(o.fragment, {o.inputs[0], o.inputs[1]}));
}

TEST(Harness, MountRejectsWrongArity) {
    EXPECT_THROW(mount(and_gadget(), {true}), ShapeError);
    EXPECT_THROW(mount(wire_gadget(1), {true, false}), ShapeError);
}

TEST(Harness, SinksOptional) {
    MountedGadget with = mount(and_gadget(), {true, true});
    EXPECT_EQ(with.sinks.size(), 1u);
    MountedGadget without = mount(and_gadget(), {true, true}, Harness{false});
    EXPECT_TRUE(without.sinks.empty());
    EXPECT_EQ(with.graph.vertex_count(), without.graph.vertex_count() + 1);
}

TEST(Harness, ExpectedArityMismatchThrows) {
    EXPECT_THROW(verify_gadget(and_gadget(), copy_fn), ShapeError);
}

TEST(Harness, RowsInBinaryCountingOrder) {
    TruthTableReport rep = verify_gadget(and_gadget(), and_fn);
    ASSERT_EQ(rep.rows.size(), 4u);
    EXPECT_EQ(rep.rows[0].inputs, (std::vector<bool>{false, false}));
    EXPECT_EQ(rep.rows[1].inputs, (std::vector<bool>{false, true}));
    EXPECT_EQ(rep.rows[2].inputs, (std::vector<bool>{true, false}));
    EXPECT_EQ(rep.rows[3].inputs, (std::vector<bool>{true, true}));
    // A row that never turns its output black reports no ready step.
    EXPECT_FALSE(rep.rows[0].output_ready_step.has_value());
    EXPECT_EQ(rep.rows[3].output_ready_step, std::optional<int>(3));
}
