#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zforge/errors.hpp"
#include "zforge/formula.hpp"

namespace zforge {

// ============================ netlists ============================
//
// A netlist is the intermediate form between formulas and glued
// graphs. Nets are integer ids; after lowering, every net has exactly
// one driver (a gate output or a primary input) and exactly one load
// (a gate input or a primary output). Fan-out is never implicit: any
// value with several consumers goes through an explicit COPY tree.

enum class GateKind { and_, or_, copy, wire, filter };

inline const char* kind_name(GateKind k) {
    switch (k) {
    case GateKind::and_: return "AND";
    case GateKind::or_: return "OR";
    case GateKind::copy: return "COPY";
    case GateKind::wire: return "WIRE";
    case GateKind::filter: return "FILTER";
    }
    return "?";
}

inline std::size_t kind_arity(GateKind k) {
    return (k == GateKind::and_ || k == GateKind::or_) ? 2 : 1;
}
inline std::size_t kind_outputs(GateKind k) {
    return k == GateKind::copy ? 2 : 1;
}

// Steps from "inputs ready" to "this output port black", matching the
// library gadgets (copy's second output lags its first).
inline int port_latency(GateKind k, int wire_k, std::size_t port) {
    switch (k) {
    case GateKind::and_:
    case GateKind::or_: return 1;
    case GateKind::copy: return port == 0 ? 1 : 2;
    case GateKind::wire: return wire_k;
    case GateKind::filter: return 2;
    }
    return 0;
}

struct Gate {
    int id = 0; // equals index in Netlist::gates
    GateKind kind = GateKind::and_;
    int wire_k = 0; // delay for wire gates
    std::vector<int> inputs;
    std::vector<int> outputs;
    int layer = 0; // longest path from the primary inputs, first gates at 1
};

struct Netlist {
    std::vector<Gate> gates;
    std::vector<std::pair<std::string, int>> primary_inputs; // declaration order
    std::vector<int> primary_outputs;
    int net_count = 0;
};

// One endpoint of a net. gate == -1 means the primary side; slot then
// indexes primary_inputs or primary_outputs.
struct NetEnd {
    int gate = -1;
    int slot = -1;
};

struct NetEnds {
    std::vector<NetEnd> driver;
    std::vector<NetEnd> load;
};

inline NetEnds compute_ends(const Netlist& nl) {
    NetEnds ends;
    ends.driver.assign(std::size_t(nl.net_count), NetEnd{-2, -1});
    ends.load.assign(std::size_t(nl.net_count), NetEnd{-2, -1});
    auto set = [&](std::vector<NetEnd>& side, int net, NetEnd e, const char* what) {
        if (net < 0 || net >= nl.net_count)
            throw std::logic_error("net id out of range");
        if (side[std::size_t(net)].gate != -2)
            throw std::logic_error(std::string("net ") + std::to_string(net) +
                                   " has more than one " + what);
        side[std::size_t(net)] = e;
    };
    for (std::size_t i = 0; i < nl.primary_inputs.size(); ++i)
        set(ends.driver, nl.primary_inputs[i].second, NetEnd{-1, int(i)}, "driver");
    for (std::size_t i = 0; i < nl.primary_outputs.size(); ++i)
        set(ends.load, nl.primary_outputs[i], NetEnd{-1, int(i)}, "load");
    for (const Gate& g : nl.gates) {
        for (std::size_t s = 0; s < g.inputs.size(); ++s)
            set(ends.load, g.inputs[s], NetEnd{g.id, int(s)}, "load");
        for (std::size_t s = 0; s < g.outputs.size(); ++s)
            set(ends.driver, g.outputs[s], NetEnd{g.id, int(s)}, "driver");
    }
    for (int n = 0; n < nl.net_count; ++n) {
        if (ends.driver[std::size_t(n)].gate == -2)
            throw std::logic_error("net " + std::to_string(n) + " has no driver");
        if (ends.load[std::size_t(n)].gate == -2)
            throw std::logic_error("net " + std::to_string(n) + " has no load");
    }
    return ends;
}

inline void validate_netlist(const Netlist& nl) {
    for (const Gate& g : nl.gates) {
        if (g.id != int(&g - nl.gates.data()))
            throw std::logic_error("gate id out of sync");
        if (g.inputs.size() != kind_arity(g.kind) ||
            g.outputs.size() != kind_outputs(g.kind))
            throw std::logic_error(std::string(kind_name(g.kind)) +
                                   " gate with wrong port count");
        if (g.kind == GateKind::wire && g.wire_k < 1)
            throw std::logic_error("wire gate with no delay");
    }
    compute_ends(nl);
}

// Longest path from the primary inputs; also the cycle check.
inline void assign_layers(Netlist& nl) {
    NetEnds ends = compute_ends(nl);
    std::vector<int> memo(nl.gates.size(), -1);
    std::vector<char> visiting(nl.gates.size(), 0);
    auto layer = [&](auto&& self, int gate) -> int {
        if (memo[std::size_t(gate)] >= 0) return memo[std::size_t(gate)];
        if (visiting[std::size_t(gate)])
            throw std::logic_error("netlist has a cycle");
        visiting[std::size_t(gate)] = 1;
        int t = 0;
        for (int in : nl.gates[std::size_t(gate)].inputs) {
            const NetEnd& d = ends.driver[std::size_t(in)];
            if (d.gate >= 0) t = std::max(t, self(self, d.gate));
        }
        visiting[std::size_t(gate)] = 0;
        return memo[std::size_t(gate)] = t + 1;
    };
    for (Gate& g : nl.gates) g.layer = layer(layer, g.id);
}

// ============================ building ============================

class NetlistBuilder {
public:
    int input_net(const std::string& name) {
        auto it = input_memo_.find(name);
        if (it != input_memo_.end()) return it->second;
        int n = new_net();
        nl_.primary_inputs.emplace_back(name, n);
        input_memo_.emplace(name, n);
        return n;
    }

    // Adds a single-output gate; returns its output net.
    int add_gate(GateKind kind, std::vector<int> inputs, int wire_k = 0) {
        if (inputs.size() != kind_arity(kind) || kind == GateKind::copy)
            throw std::logic_error("bad gate shape");
        Gate g;
        g.id = int(nl_.gates.size());
        g.kind = kind;
        g.wire_k = wire_k;
        g.inputs = std::move(inputs);
        g.outputs = {new_net()};
        nl_.gates.push_back(std::move(g));
        return nl_.gates.back().outputs[0];
    }

    void set_outputs(std::vector<int> nets) { nl_.primary_outputs = std::move(nets); }

    // Materializes COPY trees for every net with several consumers,
    // then validates and layers. Consumers are served in (gate id,
    // input slot) order, primary outputs last.
    Netlist finish() {
        materialize_fanout();
        validate_netlist(nl_);
        assign_layers(nl_);
        return std::move(nl_);
    }

private:
    int new_net() { return nl_.net_count++; }

    void materialize_fanout() {
        struct LoadRef { int gate; int slot; }; // gate -1: primary_outputs[slot]
        std::vector<std::vector<LoadRef>> loads(std::size_t(nl_.net_count));
        for (const Gate& g : nl_.gates)
            for (std::size_t s = 0; s < g.inputs.size(); ++s)
                loads[std::size_t(g.inputs[s])].push_back(LoadRef{g.id, int(s)});
        for (std::size_t s = 0; s < nl_.primary_outputs.size(); ++s)
            loads[std::size_t(nl_.primary_outputs[s])].push_back(LoadRef{-1, int(s)});

        auto repoint = [&](const LoadRef& ref, int net) {
            if (ref.gate < 0) nl_.primary_outputs[std::size_t(ref.slot)] = net;
            else nl_.gates[std::size_t(ref.gate)].inputs[std::size_t(ref.slot)] = net;
        };

        const int original = nl_.net_count;
        for (int n = 0; n < original; ++n) {
            const auto& consumers = loads[std::size_t(n)];
            if (consumers.size() <= 1) continue;
            int src = n;
            for (std::size_t i = 0; i + 1 < consumers.size(); ++i) {
                Gate c;
                c.id = int(nl_.gates.size());
                c.kind = GateKind::copy;
                c.inputs = {src};
                c.outputs = {new_net(), new_net()};
                repoint(consumers[i], c.outputs[0]);
                src = c.outputs[1];
                nl_.gates.push_back(std::move(c));
            }
            repoint(consumers.back(), src);
        }
    }

    Netlist nl_;
    std::map<std::string, int> input_memo_;
};

// ======================== netlist passes ==========================

namespace detail {

// Splices a single-input single-output gate into `net` between its
// driver and its current load; returns the new net on the load side.
inline int splice(Netlist& nl, int net, GateKind kind, int wire_k = 0) {
    NetEnds ends = compute_ends(nl);
    NetEnd load = ends.load[std::size_t(net)];
    Gate g;
    g.id = int(nl.gates.size());
    g.kind = kind;
    g.wire_k = wire_k;
    g.inputs = {net};
    g.outputs = {nl.net_count++};
    int out = g.outputs[0];
    nl.gates.push_back(std::move(g));
    if (load.gate < 0) nl.primary_outputs[std::size_t(load.slot)] = out;
    else nl.gates[std::size_t(load.gate)].inputs[std::size_t(load.slot)] = out;
    return out;
}

} // namespace detail

// Splices a filter onto every gate-loaded COPY output. Back forces
// that enter one copy output must not re-emerge from the other (the
// copy helper relays them); the filters absorb them first. This guard
// is unconditional: without it, fan-out circuits can fire gates from
// relayed back forces and compute the wrong value.
inline void guard_copy_outputs(Netlist& nl) {
    std::vector<int> targets;
    {
        NetEnds ends = compute_ends(nl);
        for (const Gate& g : nl.gates) {
            if (g.kind != GateKind::copy) continue;
            for (int out : g.outputs)
                if (ends.load[std::size_t(out)].gate >= 0) targets.push_back(out);
        }
    }
    for (int net : targets) detail::splice(nl, net, GateKind::filter);
    assign_layers(nl);
}

// Splices a filter into every net that runs from one gate to another
// and is not already guarded. Primary input and primary output nets
// are left untouched, so idle primary inputs stay reachable by the
// OR gadget's documented back-coloring.
inline void insert_filters(Netlist& nl) {
    std::vector<int> targets;
    {
        NetEnds ends = compute_ends(nl);
        for (int n = 0; n < nl.net_count; ++n) {
            const NetEnd& d = ends.driver[std::size_t(n)];
            const NetEnd& l = ends.load[std::size_t(n)];
            if (d.gate < 0 || l.gate < 0) continue;
            if (nl.gates[std::size_t(d.gate)].kind == GateKind::filter ||
                nl.gates[std::size_t(l.gate)].kind == GateKind::filter)
                continue;
            targets.push_back(n);
        }
    }
    for (int net : targets) detail::splice(nl, net, GateKind::filter);
    assign_layers(nl);
}

// Net id -> internal step at which the net's merged vertex turns black
// under the all-true input, assuming balanced arrival everywhere.
struct DelayInfo {
    std::vector<int> ready;
};

// Inserts WIRE gates so that all inputs of every gate become ready at
// the same internal step under the all-true input. Primary inputs are
// ready at step 1 (they are colored directly).
inline DelayInfo insert_delays(Netlist& nl) {
    assign_layers(nl);

    std::vector<int> order;
    for (const Gate& g : nl.gates) order.push_back(g.id);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return nl.gates[std::size_t(a)].layer < nl.gates[std::size_t(b)].layer;
    });

    DelayInfo info;
    info.ready.assign(std::size_t(nl.net_count), 0);
    for (const auto& [name, net] : nl.primary_inputs)
        info.ready[std::size_t(net)] = 1;

    for (int id : order) {
        // splice() appends gates, so nl.gates may reallocate; re-index
        // instead of holding a reference.
        int t = 0;
        for (int in : nl.gates[std::size_t(id)].inputs)
            t = std::max(t, info.ready[std::size_t(in)]);
        const std::size_t nin = nl.gates[std::size_t(id)].inputs.size();
        for (std::size_t s = 0; s < nin; ++s) {
            int in = nl.gates[std::size_t(id)].inputs[s];
            int lag = t - info.ready[std::size_t(in)];
            if (lag > 0) {
                int m = detail::splice(nl, in, GateKind::wire, lag);
                info.ready.resize(std::size_t(nl.net_count), 0);
                info.ready[std::size_t(m)] = t;
            }
        }
        const Gate& g = nl.gates[std::size_t(id)];
        for (std::size_t s = 0; s < g.outputs.size(); ++s) {
            info.ready.resize(std::size_t(nl.net_count), 0);
            info.ready[std::size_t(g.outputs[s])] =
                t + port_latency(g.kind, g.wire_k, s);
        }
    }
    assign_layers(nl);
    return info;
}

// Pads the shallower primary outputs with WIREs so all of them become
// ready at the same step. Returns that step (0 for no outputs).
inline int equalize_outputs(Netlist& nl, DelayInfo& info) {
    int target = 0;
    for (int net : nl.primary_outputs)
        target = std::max(target, info.ready[std::size_t(net)]);
    for (std::size_t s = 0; s < nl.primary_outputs.size(); ++s) {
        int net = nl.primary_outputs[s];
        int lag = target - info.ready[std::size_t(net)];
        if (lag > 0) {
            int m = detail::splice(nl, net, GateKind::wire, lag);
            info.ready.resize(std::size_t(nl.net_count), 0);
            info.ready[std::size_t(m)] = target;
        }
    }
    assign_layers(nl);
    return target;
}

// ============================ lowering ============================

namespace detail {

inline int lower_monotone_rec(const FormulaPtr& f, NetlistBuilder& b) {
    switch (f->op) {
    case FormulaOp::var:
        return b.input_net(f->var);
    case FormulaOp::and_:
        return b.add_gate(GateKind::and_, {lower_monotone_rec(f->left, b),
                                           lower_monotone_rec(f->right, b)});
    case FormulaOp::or_:
        return b.add_gate(GateKind::or_, {lower_monotone_rec(f->left, b),
                                          lower_monotone_rec(f->right, b)});
    default:
        throw ModeViolation("formula is not monotone");
    }
}

} // namespace detail

// One gate per AND/OR node, shared input nets per variable, COPY trees
// for every reuse. Var-only formulas produce an empty gate list whose
// input net is the output net.
inline Netlist lower_to_netlist(const FormulaPtr& f) {
    NetlistBuilder b;
    int out = detail::lower_monotone_rec(f, b);
    b.set_outputs({out});
    return b.finish();
}

// ========================= dual-rail form =========================
//
// Every logical value becomes a rail pair: the zero rail is black when
// the value is 0, the one rail when it is 1. NOT is free (rails cross),
// the other operators lower to monotone gates on rails.

struct RailNets {
    int zero = -1;
    int one = -1;
};

struct DualNetlist {
    Netlist netlist;
    std::vector<std::pair<std::string, RailNets>> inputs; // declaration order
    std::vector<RailNets> outputs;
};

namespace detail {

inline RailNets rail_and(NetlistBuilder& b, RailNets a, RailNets c) {
    RailNets r;
    r.zero = b.add_gate(GateKind::or_, {a.zero, c.zero});
    r.one = b.add_gate(GateKind::and_, {a.one, c.one});
    return r;
}
inline RailNets rail_or(NetlistBuilder& b, RailNets a, RailNets c) {
    RailNets r;
    r.zero = b.add_gate(GateKind::and_, {a.zero, c.zero});
    r.one = b.add_gate(GateKind::or_, {a.one, c.one});
    return r;
}
inline RailNets rail_not(RailNets a) { return RailNets{a.one, a.zero}; }
inline RailNets rail_nand(NetlistBuilder& b, RailNets a, RailNets c) {
    return rail_not(rail_and(b, a, c));
}
inline RailNets rail_xor(NetlistBuilder& b, RailNets a, RailNets c) {
    int p = b.add_gate(GateKind::and_, {a.one, c.zero});
    int q = b.add_gate(GateKind::and_, {a.zero, c.one});
    int r = b.add_gate(GateKind::and_, {a.one, c.one});
    int s = b.add_gate(GateKind::and_, {a.zero, c.zero});
    RailNets out;
    out.one = b.add_gate(GateKind::or_, {p, q});
    out.zero = b.add_gate(GateKind::or_, {r, s});
    return out;
}

struct DualLowering {
    NetlistBuilder b;
    std::vector<std::pair<std::string, RailNets>> inputs;
    std::map<std::string, RailNets> memo;

    RailNets var(const std::string& name) {
        auto it = memo.find(name);
        if (it != memo.end()) return it->second;
        RailNets r;
        r.zero = b.input_net(name + ".0");
        r.one = b.input_net(name + ".1");
        inputs.emplace_back(name, r);
        memo.emplace(name, r);
        return r;
    }

    RailNets lower(const FormulaPtr& f) {
        if (f->op == FormulaOp::var) return var(f->var);
        if (f->op == FormulaOp::not_) return rail_not(lower(f->left));
        // Two statements so nets are numbered left operand first; as
        // call arguments the evaluation order would be unspecified.
        RailNets l = lower(f->left);
        RailNets r = lower(f->right);
        switch (f->op) {
        case FormulaOp::and_: return rail_and(b, l, r);
        case FormulaOp::or_: return rail_or(b, l, r);
        case FormulaOp::nand_: return rail_nand(b, l, r);
        case FormulaOp::xor_: return rail_xor(b, l, r);
        default: throw std::logic_error("bad formula node");
        }
    }

    DualNetlist finish(std::vector<RailNets> outs) {
        std::vector<int> flat;
        for (const RailNets& o : outs) {
            flat.push_back(o.zero);
            flat.push_back(o.one);
        }
        b.set_outputs(std::move(flat));
        DualNetlist d;
        d.netlist = b.finish();
        d.inputs = std::move(inputs);
        // Fan-out materialization may have re-pointed output slots.
        for (std::size_t i = 0; i + 1 < d.netlist.primary_outputs.size(); i += 2)
            d.outputs.push_back(RailNets{d.netlist.primary_outputs[i],
                                         d.netlist.primary_outputs[i + 1]});
        return d;
    }
};

} // namespace detail

inline DualNetlist lower_to_netlist_dual(const FormulaPtr& f) {
    detail::DualLowering lo;
    RailNets out = lo.lower(f);
    return lo.finish({out});
}

// (a, b, c) -> (a, b, c XOR (a AND b)). The passthrough outputs reuse
// the input rails, so a and b go through COPY trees.
inline DualNetlist lower_toffoli_netlist() {
    detail::DualLowering lo;
    RailNets a = lo.var("a");
    RailNets b = lo.var("b");
    RailNets c = lo.var("c");
    RailNets t = detail::rail_and(lo.b, a, b);
    RailNets third = detail::rail_xor(lo.b, c, t);
    return lo.finish({a, b, third});
}

} // namespace zforge
