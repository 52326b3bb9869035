#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zforge/compile.hpp"
#include "zforge/engine.hpp"
#include "zforge/errors.hpp"
#include "zforge/formula.hpp"
#include "zforge/harness.hpp"

namespace zforge {

// ====================== circuit evaluation ========================

struct EvalResult {
    ForcingTrace trace;
    std::vector<bool> outputs;
    // Internal step at which the decisive output vertex turned black:
    // the monotone output or the winning rail. 0 when it stayed white
    // (a false monotone output).
    std::vector<int> output_steps;
};

inline EvalResult evaluate(const CompiledCircuit& c,
                           const std::map<std::string, bool>& bits) {
    EvalResult r;
    r.trace = run_to_fixpoint(apply_inputs(c, bits));
    for (std::size_t i = 0; i < c.outputs.size(); ++i) {
        bool v = decode_output(c, r.trace.final, i);
        r.outputs.push_back(v);
        const std::vector<VertexId>& vs = c.outputs[i];
        VertexId decisive = vs.size() == 1 ? vs[0] : (v ? vs[1] : vs[0]);
        r.output_steps.push_back(r.trace.black_step(decisive));
    }
    return r;
}

namespace detail {

constexpr std::size_t max_enumerated_inputs = 16;

inline void check_enumerable(const CompiledCircuit& c) {
    if (c.input_order.size() > max_enumerated_inputs)
        throw LimitError("refusing to enumerate more than 2^" +
                         std::to_string(max_enumerated_inputs) + " assignments");
}

// Assignment `index` in binary counting order: the first variable is
// the most significant bit, matching the gadget truth tables.
inline std::map<std::string, bool> nth_assignment(const std::vector<std::string>& vars,
                                                  std::size_t index) {
    std::map<std::string, bool> bits;
    for (std::size_t i = 0; i < vars.size(); ++i)
        bits[vars[i]] = (index >> (vars.size() - 1 - i)) & 1;
    return bits;
}

inline std::vector<bool> bits_in_order(const std::vector<std::string>& vars,
                                       const std::map<std::string, bool>& bits) {
    std::vector<bool> out;
    for (const std::string& v : vars) out.push_back(bits.at(v));
    return out;
}

} // namespace detail

// "0110"-style rendering used by reports and the CLI.
inline std::string bit_string(const std::vector<bool>& bits) {
    std::string s;
    s.reserve(bits.size());
    for (bool b : bits) s.push_back(b ? '1' : '0');
    return s;
}

// Input vector in input_order -> named assignment.
inline std::map<std::string, bool> bits_to_assignment(const CompiledCircuit& c,
                                                      const std::vector<bool>& bits) {
    if (bits.size() != c.input_order.size())
        throw ShapeError("expected " + std::to_string(c.input_order.size()) +
                         " input bits, got " + std::to_string(bits.size()));
    std::map<std::string, bool> m;
    for (std::size_t i = 0; i < bits.size(); ++i) m[c.input_order[i]] = bits[i];
    return m;
}

// Evaluates the circuit on an input vector given in input_order.
inline EvalResult evaluate_bits(const CompiledCircuit& c, const std::vector<bool>& bits) {
    return evaluate(c, bits_to_assignment(c, bits));
}

// ========================= truth tables ===========================

struct CircuitTableRow {
    std::vector<bool> inputs;
    std::vector<bool> outputs;
    std::vector<bool> expected;
    std::vector<int> output_steps;
    bool matches = false;
};

struct CircuitTable {
    std::vector<CircuitTableRow> rows;
    bool all_match = true;
};

// `oracle` gets the input bits in input_order and returns the expected
// output bits; pass formula_oracle(...) for single-output circuits.
inline CircuitTable circuit_truth_table(const CompiledCircuit& c, const BoolFn& oracle) {
    detail::check_enumerable(c);
    CircuitTable table;
    const std::size_t n = c.input_order.size();
    for (std::size_t index = 0; index < (std::size_t(1) << n); ++index) {
        auto bits = detail::nth_assignment(c.input_order, index);
        EvalResult ev = evaluate(c, bits);
        CircuitTableRow row;
        row.inputs = detail::bits_in_order(c.input_order, bits);
        row.outputs = ev.outputs;
        row.expected = oracle(row.inputs);
        row.output_steps = ev.output_steps;
        row.matches = row.outputs == row.expected;
        if (!row.matches) table.all_match = false;
        table.rows.push_back(std::move(row));
    }
    return table;
}

inline BoolFn formula_oracle(const FormulaPtr& f, std::vector<std::string> order) {
    return [f, order = std::move(order)](const std::vector<bool>& in) {
        std::map<std::string, bool> bits;
        for (std::size_t i = 0; i < order.size(); ++i) bits[order[i]] = in[i];
        return std::vector<bool>{eval_formula(f, bits)};
    };
}

// ====================== force classification ======================
//
// Events are classified by the layer map: a force into a deeper layer
// is forward, into a shallower one backward, within a layer internal.

enum class ForceDirection { forward, backward, internal };

inline const char* direction_name(ForceDirection d) {
    switch (d) {
    case ForceDirection::forward: return "forward";
    case ForceDirection::backward: return "backward";
    case ForceDirection::internal: return "internal";
    }
    return "?";
}

struct ClassifiedForce {
    ForceEvent event;
    ForceDirection direction = ForceDirection::internal;
    int from_layer = 0;
    int to_layer = 0;
};

struct ForceClassification {
    std::vector<ClassifiedForce> events; // trace order
    int forward = 0;
    int backward = 0;
    int internal = 0;
};

inline ForceDirection classify_event(const CompiledCircuit& c, const ForceEvent& ev) {
    int from = c.layers.at(ev.forcer);
    int to = c.layers.at(ev.forced);
    if (from < to) return ForceDirection::forward;
    if (from > to) return ForceDirection::backward;
    return ForceDirection::internal;
}

inline ForceClassification classify_forces(const CompiledCircuit& c,
                                           const ForcingTrace& trace) {
    ForceClassification out;
    for (const StepRecord& rec : trace.steps) {
        for (const ForceEvent& ev : rec.events) {
            ClassifiedForce cf{ev, classify_event(c, ev), c.layers.at(ev.forcer),
                               c.layers.at(ev.forced)};
            switch (cf.direction) {
            case ForceDirection::forward: ++out.forward; break;
            case ForceDirection::backward: ++out.backward; break;
            case ForceDirection::internal: ++out.internal; break;
            }
            out.events.push_back(cf);
        }
    }
    return out;
}

// A backward event that re-enters a filter from its output side and
// comes out of the input port. The filter exists to make these
// impossible; the count is reported so that claim stays checkable.
inline bool crosses_filter_backward(const CompiledCircuit& c, const ForceEvent& ev) {
    for (const GadgetInstance& inst : c.instances) {
        if (inst.kind != GateKind::filter) continue;
        if (ev.forced != inst.input_ports[0]) continue;
        if (std::binary_search(inst.interior.begin(), inst.interior.end(), ev.forcer))
            return true;
    }
    return false;
}

// ======================= back-forcing report ======================

struct BackForceRow {
    std::vector<bool> inputs;
    std::vector<bool> outputs;
    std::vector<ClassifiedForce> backward; // backward events, trace order
    bool inputs_all_black = false;         // every input vertex black at fixpoint
    bool all_black = false;                // whole graph black at fixpoint
    int filter_backward_crossings = 0;
};

struct BackForceReport {
    std::vector<BackForceRow> rows; // binary counting over input_order
    int total_backward = 0;
    int total_filter_backward_crossings = 0;
};

inline BackForceReport back_forcing_report(const CompiledCircuit& c) {
    detail::check_enumerable(c);
    BackForceReport report;
    const std::size_t n = c.input_order.size();
    for (std::size_t index = 0; index < (std::size_t(1) << n); ++index) {
        auto bits = detail::nth_assignment(c.input_order, index);
        EvalResult ev = evaluate(c, bits);
        ForceClassification cls = classify_forces(c, ev.trace);

        BackForceRow row;
        row.inputs = detail::bits_in_order(c.input_order, bits);
        row.outputs = ev.outputs;
        for (const ClassifiedForce& cf : cls.events) {
            if (cf.direction != ForceDirection::backward) continue;
            row.backward.push_back(cf);
            if (crosses_filter_backward(c, cf.event)) ++row.filter_backward_crossings;
        }
        row.inputs_all_black = true;
        for (const auto& [name, vs] : c.inputs)
            for (VertexId v : vs)
                if (!ev.trace.final.black(v)) row.inputs_all_black = false;
        row.all_black = ev.trace.final.all_black();

        report.total_backward += int(row.backward.size());
        report.total_filter_backward_crossings += row.filter_backward_crossings;
        report.rows.push_back(std::move(row));
    }
    return report;
}

// ========================== leakage ===============================
//
// A party holds some input variables, learns the final colors of its
// own input vertices, and tries to infer the output. For each of the
// party's own assignments we group the completions of the remaining
// variables by what the party observes; the verdict says whether the
// observation determines the output in every class, in none, or only
// sometimes.

struct Party {
    std::string name;
    std::vector<std::string> variables;
};

namespace detail {

// Transitive primary-input support of every gadget instance, as sets
// of variable names. Wires, copies and filters inherit the support of
// whatever feeds them.
inline std::vector<std::set<std::string>>
instance_supports(const CompiledCircuit& c) {
    std::map<VertexId, std::size_t> producer;
    for (std::size_t i = 0; i < c.instances.size(); ++i)
        for (VertexId o : c.instances[i].output_ports) producer[o] = i;
    std::map<VertexId, std::string> input_var;
    for (const auto& [name, vs] : c.inputs)
        for (VertexId v : vs) input_var[v] = name;

    std::vector<std::optional<std::set<std::string>>> memo(c.instances.size());
    auto support = [&](auto&& self, std::size_t i) -> const std::set<std::string>& {
        if (memo[i]) return *memo[i];
        std::set<std::string> s;
        for (VertexId in : c.instances[i].input_ports) {
            if (auto iv = input_var.find(in); iv != input_var.end()) {
                s.insert(iv->second);
                continue;
            }
            if (auto pr = producer.find(in); pr != producer.end()) {
                const std::set<std::string>& sub = self(self, pr->second);
                s.insert(sub.begin(), sub.end());
            }
        }
        memo[i] = std::move(s);
        return *memo[i];
    };
    std::vector<std::set<std::string>> out;
    out.reserve(c.instances.size());
    for (std::size_t i = 0; i < c.instances.size(); ++i)
        out.push_back(support(support, i));
    return out;
}

} // namespace detail

// Vertices whose final color the party can read: its own input
// vertices plus everything owned by instances fed exclusively from its
// variables. Ownership follows consumption: an instance owns its
// interior and its input ports, and an output port belongs to the
// instance that consumes it, so it stays with the producer only when
// nothing does.
inline std::vector<VertexId> party_observed(const CompiledCircuit& c, const Party& p) {
    std::set<std::string> held(p.variables.begin(), p.variables.end());
    std::set<VertexId> obs;
    for (const std::string& v : p.variables) {
        auto it = c.inputs.find(v);
        if (it == c.inputs.end())
            throw ShapeError("party '" + p.name + "' holds unknown variable '" + v +
                             "'");
        obs.insert(it->second.begin(), it->second.end());
    }

    auto supports = detail::instance_supports(c);
    std::set<VertexId> consumed;
    for (const GadgetInstance& inst : c.instances)
        consumed.insert(inst.input_ports.begin(), inst.input_ports.end());

    for (std::size_t i = 0; i < c.instances.size(); ++i) {
        if (supports[i].empty()) continue;
        bool mine = true;
        for (const std::string& v : supports[i])
            if (!held.count(v)) {
                mine = false;
                break;
            }
        if (!mine) continue;
        const GadgetInstance& inst = c.instances[i];
        obs.insert(inst.interior.begin(), inst.interior.end());
        obs.insert(inst.input_ports.begin(), inst.input_ports.end());
        for (VertexId v : inst.output_ports)
            if (!consumed.count(v)) obs.insert(v);
    }
    return {obs.begin(), obs.end()};
}

enum class LeakVerdict { always_inferable, never_inferable, depends };

inline const char* verdict_name(LeakVerdict v) {
    switch (v) {
    case LeakVerdict::always_inferable: return "always_inferable";
    case LeakVerdict::never_inferable: return "never_inferable";
    case LeakVerdict::depends: return "depends";
    }
    return "?";
}

struct ObservationClass {
    std::vector<bool> observation; // black flags on observed vertices
    std::vector<std::vector<bool>> completions; // bits of other variables
    std::vector<std::vector<bool>> outputs;     // distinct output tuples, sorted
};

struct LeakCase {
    std::vector<bool> own; // party's bits, in party variable order
    LeakVerdict verdict = LeakVerdict::depends;
    std::vector<ObservationClass> classes; // ordered by observation
};

struct PartyLeakage {
    std::string party;
    std::vector<std::string> variables;
    std::vector<std::string> others;
    std::vector<VertexId> observed; // sorted
    std::vector<LeakCase> cases;    // binary counting over `variables`
};

struct LeakageReport {
    std::vector<PartyLeakage> parties;
};

inline LeakageReport leakage_analysis(const CompiledCircuit& c,
                                      const std::vector<Party>& parties) {
    detail::check_enumerable(c);

    // The parties must partition the inputs: pairwise disjoint and
    // jointly covering every variable.
    std::set<std::string> claimed;
    for (const Party& p : parties) {
        if (p.variables.empty())
            throw ShapeError("party '" + p.name + "' holds no variables");
        for (const std::string& v : p.variables) {
            if (!c.inputs.count(v))
                throw ShapeError("party '" + p.name + "' holds unknown variable '" +
                                 v + "'");
            if (!claimed.insert(v).second)
                throw ShapeError("variable '" + v +
                                 "' is assigned to more than one party");
        }
    }
    if (claimed.size() != c.input_order.size())
        throw ShapeError("parties must cover every input variable");

    LeakageReport report;
    for (const Party& p : parties) {
        PartyLeakage pl;
        pl.party = p.name;
        pl.variables = p.variables;
        pl.observed = party_observed(c, p);
        for (const std::string& v : c.input_order) {
            if (std::find(p.variables.begin(), p.variables.end(), v) ==
                p.variables.end())
                pl.others.push_back(v);
        }

        const std::size_t n_own = p.variables.size();
        const std::size_t n_other = pl.others.size();
        for (std::size_t oi = 0; oi < (std::size_t(1) << n_own); ++oi) {
            auto own_bits = detail::nth_assignment(p.variables, oi);
            LeakCase lc;
            lc.own = detail::bits_in_order(p.variables, own_bits);

            std::map<std::vector<bool>, ObservationClass> classes;
            for (std::size_t ci = 0; ci < (std::size_t(1) << n_other); ++ci) {
                auto bits = own_bits;
                auto completion = detail::nth_assignment(pl.others, ci);
                bits.insert(completion.begin(), completion.end());
                EvalResult ev = evaluate(c, bits);

                std::vector<bool> obs;
                for (VertexId v : pl.observed) obs.push_back(ev.trace.final.black(v));
                ObservationClass& oc = classes[obs];
                oc.observation = obs;
                oc.completions.push_back(detail::bits_in_order(pl.others, completion));
                if (std::find(oc.outputs.begin(), oc.outputs.end(), ev.outputs) ==
                    oc.outputs.end())
                    oc.outputs.push_back(ev.outputs);
            }

            bool all_uniform = true;
            bool all_mixed = true;
            for (auto& [obs, oc] : classes) {
                std::sort(oc.outputs.begin(), oc.outputs.end());
                if (oc.outputs.size() == 1) all_mixed = false;
                else all_uniform = false;
                lc.classes.push_back(std::move(oc));
            }
            lc.verdict = all_uniform  ? LeakVerdict::always_inferable
                         : all_mixed ? LeakVerdict::never_inferable
                                     : LeakVerdict::depends;
            pl.cases.push_back(std::move(lc));
        }
        report.parties.push_back(std::move(pl));
    }
    return report;
}

} // namespace zforge
