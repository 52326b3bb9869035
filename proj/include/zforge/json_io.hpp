#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "zforge/analysis.hpp"
#include "zforge/compile.hpp"
#include "zforge/engine.hpp"
#include "zforge/errors.hpp"
#include "zforge/gadget.hpp"
#include "zforge/graph.hpp"
#include "zforge/netlist.hpp"

namespace zforge {

using Json = nlohmann::json;

// nlohmann's default object stores keys sorted, so dump() output is
// canonical: serializing the same value always yields the same bytes.

inline Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ShapeError(std::string("invalid JSON: ") + e.what());
    }
}

namespace detail {

inline const Json& need(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ShapeError(std::string("missing key '") + key + "'");
    return j.at(key);
}

inline std::string need_string(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_string())
        throw ShapeError(std::string("key '") + key + "' must be a string");
    return v.get<std::string>();
}

inline int need_int(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_number_integer())
        throw ShapeError(std::string("key '") + key + "' must be an integer");
    return v.get<int>();
}

inline const Json& need_array(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_array())
        throw ShapeError(std::string("key '") + key + "' must be an array");
    return v;
}

inline const Json& need_object(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_object())
        throw ShapeError(std::string("key '") + key + "' must be an object");
    return v;
}

} // namespace detail

// ============================ graphs ==============================

inline Json graph_to_json(const ColoredGraph& g) {
    Json vertices = Json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        vertices.push_back({{"id", g.name(v)},
                            {"color", g.black(v) ? "black" : "white"}});
    Json edges = Json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (VertexId w : g.neighbors(v))
            if (v < w) edges.push_back(Json::array({g.name(v), g.name(w)}));
    return Json{{"vertices", vertices}, {"edges", edges}};
}

inline ColoredGraph graph_from_json(const Json& j) {
    ColoredGraph g;
    for (const Json& v : detail::need_array(j, "vertices")) {
        std::string id = detail::need_string(v, "id");
        std::string color = v.contains("color") ? detail::need_string(v, "color")
                                                : std::string("white");
        if (color != "white" && color != "black")
            throw ShapeError("vertex color must be \"white\" or \"black\", got \"" +
                             color + "\"");
        g.add_vertex(std::move(id), color == "black" ? Color::black : Color::white);
    }
    for (const Json& e : detail::need_array(j, "edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw ShapeError("each edge must be a pair of vertex ids");
        g.add_edge(g.vertex(e[0].get<std::string>()),
                   g.vertex(e[1].get<std::string>()));
    }
    return g;
}

// ============================ traces ==============================

inline Json trace_to_json(const ForcingTrace& t) {
    const ColoredGraph& g = t.final;
    Json steps = Json::array();
    for (const StepRecord& rec : t.steps) {
        Json events = Json::array();
        for (const ForceEvent& ev : rec.events)
            events.push_back({{"forcer", g.name(ev.forcer)},
                              {"forced", g.name(ev.forced)}});
        steps.push_back({{"step", rec.step}, {"events", events}});
    }
    Json initial = Json::array();
    Json final_black = Json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (t.black_step(v) == 1) initial.push_back(g.name(v));
        if (g.black(v)) final_black.push_back(g.name(v));
    }
    return Json{{"initial_black", initial},
                {"steps", steps},
                {"final_black", final_black},
                {"fixpoint_step", t.fixpoint_step}};
}

// ============================ gadgets =============================

inline Json gadget_to_json(const Gadget& g) {
    Json j = graph_to_json(g.fragment);
    j["name"] = g.name;
    Json ins = Json::array();
    for (VertexId v : g.inputs) ins.push_back(g.fragment.name(v));
    Json outs = Json::array();
    for (VertexId v : g.outputs) outs.push_back(g.fragment.name(v));
    j["input_ports"] = ins;
    j["output_ports"] = outs;
    j["latency"] = g.latency;
    j["output_latencies"] = g.output_latencies;
    return j;
}

// ============================ netlists ============================

inline Json netlist_to_json(const Netlist& nl) {
    Json gates = Json::array();
    for (const Gate& g : nl.gates) {
        Json jg{{"id", g.id},
                {"kind", kind_name(g.kind)},
                {"inputs", g.inputs},
                {"outputs", g.outputs},
                {"layer", g.layer}};
        if (g.kind == GateKind::wire) jg["delay"] = g.wire_k;
        gates.push_back(std::move(jg));
    }
    Json inputs = Json::object();
    Json order = Json::array();
    for (const auto& [name, net] : nl.primary_inputs) {
        inputs[name] = net;
        order.push_back(name);
    }
    Json j{{"gates", gates},
           {"primary_inputs", inputs},
           {"primary_input_order", order},
           {"net_count", nl.net_count}};
    if (nl.primary_outputs.size() == 1) j["primary_output"] = nl.primary_outputs[0];
    else j["primary_outputs"] = nl.primary_outputs;
    return j;
}

// ============================ circuits ============================

inline GateKind kind_from_name(const std::string& s) {
    if (s == "AND") return GateKind::and_;
    if (s == "OR") return GateKind::or_;
    if (s == "COPY") return GateKind::copy;
    if (s == "WIRE") return GateKind::wire;
    if (s == "FILTER") return GateKind::filter;
    throw ShapeError("unknown gate kind \"" + s + "\"");
}

inline Json circuit_to_json(const CompiledCircuit& c) {
    Json j = graph_to_json(c.graph);
    j["mode"] = c.mode == FormulaMode::monotone ? "monotone" : "dual_rail";
    j["formula"] = c.formula;

    Json inputs = Json::object();
    for (const auto& [name, vs] : c.inputs) {
        if (vs.size() == 1) inputs[name] = c.graph.name(vs[0]);
        else inputs[name] = Json::array({c.graph.name(vs[0]), c.graph.name(vs[1])});
    }
    j["inputs"] = inputs;
    j["input_order"] = c.input_order;

    auto output_json = [&](const std::vector<VertexId>& vs) -> Json {
        if (vs.size() == 1) return c.graph.name(vs[0]);
        return Json::array({c.graph.name(vs[0]), c.graph.name(vs[1])});
    };
    if (c.outputs.size() == 1) j["output"] = output_json(c.outputs[0]);
    else {
        Json outs = Json::array();
        for (const auto& vs : c.outputs) outs.push_back(output_json(vs));
        j["outputs"] = outs;
    }

    Json layers = Json::object();
    for (const auto& [v, layer] : c.layers) layers[c.graph.name(v)] = layer;
    j["layers"] = layers;

    if (c.expected_output_step) j["expected_output_step"] = *c.expected_output_step;
    else j["expected_output_step"] = nullptr;

    Json instances = Json::array();
    for (const GadgetInstance& inst : c.instances) {
        Json ji{{"label", inst.label},
                {"kind", kind_name(inst.kind)},
                {"gate", inst.gate_id},
                {"layer", inst.layer}};
        if (inst.kind == GateKind::wire) ji["delay"] = inst.wire_k;
        Json ins = Json::array();
        for (VertexId v : inst.input_ports) ins.push_back(c.graph.name(v));
        Json outs = Json::array();
        for (VertexId v : inst.output_ports) outs.push_back(c.graph.name(v));
        Json interior = Json::array();
        for (VertexId v : inst.interior) interior.push_back(c.graph.name(v));
        ji["inputs"] = ins;
        ji["outputs"] = outs;
        ji["interior"] = interior;
        instances.push_back(std::move(ji));
    }
    j["instances"] = instances;
    return j;
}

inline CompiledCircuit circuit_from_json(const Json& j) {
    CompiledCircuit c;
    c.graph = graph_from_json(j);

    std::string mode = detail::need_string(j, "mode");
    if (mode == "monotone") c.mode = FormulaMode::monotone;
    else if (mode == "dual_rail") c.mode = FormulaMode::dual_rail;
    else throw ShapeError("mode must be \"monotone\" or \"dual_rail\"");
    c.formula = detail::need_string(j, "formula");

    for (const Json& n : detail::need_array(j, "input_order")) {
        if (!n.is_string()) throw ShapeError("input_order entries must be strings");
        c.input_order.push_back(n.get<std::string>());
    }

    auto vertex_list = [&](const Json& v, const char* what) {
        std::vector<VertexId> vs;
        if (v.is_string()) vs.push_back(c.graph.vertex(v.get<std::string>()));
        else if (v.is_array() && v.size() == 2 && v[0].is_string() && v[1].is_string()) {
            vs.push_back(c.graph.vertex(v[0].get<std::string>()));
            vs.push_back(c.graph.vertex(v[1].get<std::string>()));
        } else {
            throw ShapeError(std::string(what) +
                             " must be a vertex id or a pair of vertex ids");
        }
        return vs;
    };

    const Json& inputs = detail::need_object(j, "inputs");
    for (const std::string& name : c.input_order) {
        if (!inputs.contains(name))
            throw ShapeError("inputs is missing variable '" + name + "'");
        std::vector<VertexId> vs = vertex_list(inputs.at(name), "input");
        std::size_t want = c.mode == FormulaMode::monotone ? 1 : 2;
        if (vs.size() != want)
            throw ShapeError("input '" + name + "' has the wrong rail count for " +
                             mode + " mode");
        c.inputs.emplace(name, std::move(vs));
    }
    if (inputs.size() != c.input_order.size())
        throw ShapeError("inputs and input_order disagree");

    if (j.contains("outputs")) {
        for (const Json& o : detail::need_array(j, "outputs"))
            c.outputs.push_back(vertex_list(o, "output"));
    } else {
        c.outputs.push_back(vertex_list(detail::need(j, "output"), "output"));
    }
    for (const auto& vs : c.outputs) {
        std::size_t want = c.mode == FormulaMode::monotone ? 1 : 2;
        if (vs.size() != want)
            throw ShapeError("output has the wrong rail count for " + mode + " mode");
    }

    const Json& layers = detail::need_object(j, "layers");
    for (auto it = layers.begin(); it != layers.end(); ++it) {
        if (!it.value().is_number_integer())
            throw ShapeError("layers values must be integers");
        c.layers[c.graph.vertex(it.key())] = it.value().get<int>();
    }
    for (VertexId v = 0; v < c.graph.vertex_count(); ++v)
        if (!c.layers.count(v))
            throw ShapeError("layers is missing vertex '" + c.graph.name(v) + "'");

    const Json& step = detail::need(j, "expected_output_step");
    if (step.is_null()) c.expected_output_step = std::nullopt;
    else if (step.is_number_integer()) c.expected_output_step = step.get<int>();
    else throw ShapeError("expected_output_step must be an integer or null");

    for (const Json& ji : detail::need_array(j, "instances")) {
        GadgetInstance inst;
        inst.label = detail::need_string(ji, "label");
        inst.kind = kind_from_name(detail::need_string(ji, "kind"));
        inst.gate_id = detail::need_int(ji, "gate");
        inst.layer = detail::need_int(ji, "layer");
        inst.wire_k = ji.contains("delay") ? detail::need_int(ji, "delay") : 0;
        for (const Json& v : detail::need_array(ji, "inputs"))
            inst.input_ports.push_back(c.graph.vertex(v.get<std::string>()));
        for (const Json& v : detail::need_array(ji, "outputs"))
            inst.output_ports.push_back(c.graph.vertex(v.get<std::string>()));
        for (const Json& v : detail::need_array(ji, "interior"))
            inst.interior.push_back(c.graph.vertex(v.get<std::string>()));
        std::sort(inst.interior.begin(), inst.interior.end());
        inst.vertices = inst.interior;
        inst.vertices.insert(inst.vertices.end(), inst.input_ports.begin(),
                             inst.input_ports.end());
        inst.vertices.insert(inst.vertices.end(), inst.output_ports.begin(),
                             inst.output_ports.end());
        std::sort(inst.vertices.begin(), inst.vertices.end());
        c.instances.push_back(std::move(inst));
    }
    return c;
}

// ============================ reports =============================

namespace detail {

// Single-output reports say {"output": 0|1}; multi-output ones say
// {"outputs": "10"} with one character per output in order.
inline void put_output_bits(Json& row, const char* singular, const char* plural,
                            const std::vector<bool>& bits) {
    if (bits.size() == 1) row[singular] = bits[0] ? 1 : 0;
    else row[plural] = bit_string(bits);
}

} // namespace detail

inline Json table_to_json(const CompiledCircuit& c, const CircuitTable& t) {
    Json rows = Json::array();
    for (const CircuitTableRow& r : t.rows) {
        Json row{{"input", bit_string(r.inputs)},
                 {"output_steps", r.output_steps},
                 {"matches", r.matches}};
        detail::put_output_bits(row, "output", "outputs", r.outputs);
        detail::put_output_bits(row, "expected", "expected_outputs", r.expected);
        rows.push_back(std::move(row));
    }
    return Json{{"formula", c.formula},
                {"mode", c.mode == FormulaMode::monotone ? "monotone" : "dual_rail"},
                {"input_order", c.input_order},
                {"rows", rows},
                {"all_match", t.all_match}};
}

inline Json backforce_to_json(const CompiledCircuit& c, const BackForceReport& rep) {
    Json assignments = Json::array();
    for (const BackForceRow& r : rep.rows) {
        Json events = Json::array();
        for (const ClassifiedForce& cf : r.backward)
            events.push_back({{"step", cf.event.step},
                              {"forcer", c.graph.name(cf.event.forcer)},
                              {"forced", c.graph.name(cf.event.forced)},
                              {"from_layer", cf.from_layer},
                              {"to_layer", cf.to_layer}});
        Json row{{"input", bit_string(r.inputs)},
                 {"backward_events", int(r.backward.size())},
                 {"backward_detail", events},
                 {"inputs_all_black", r.inputs_all_black},
                 {"all_black", r.all_black},
                 {"filter_backward_crossings", r.filter_backward_crossings}};
        detail::put_output_bits(row, "output", "outputs", r.outputs);
        assignments.push_back(std::move(row));
    }
    return Json{{"formula", c.formula},
                {"input_order", c.input_order},
                {"assignments", assignments},
                {"total_backward", rep.total_backward},
                {"total_filter_backward_crossings",
                 rep.total_filter_backward_crossings}};
}

inline Json leakage_to_json(const CompiledCircuit& c, const LeakageReport& rep) {
    Json parties = Json::object();
    for (const PartyLeakage& pl : rep.parties) {
        Json cases = Json::object();
        for (const LeakCase& lc : pl.cases) {
            Json classes = Json::array();
            for (const ObservationClass& oc : lc.classes) {
                Json completions = Json::array();
                for (const auto& comp : oc.completions)
                    completions.push_back(bit_string(comp));
                Json outputs = Json::array();
                for (const auto& out : oc.outputs) outputs.push_back(bit_string(out));
                classes.push_back({{"observation", bit_string(oc.observation)},
                                   {"completions", completions},
                                   {"outputs", outputs}});
            }
            cases[bit_string(lc.own)] = Json{{"verdict", verdict_name(lc.verdict)},
                                             {"classes", classes}};
        }
        Json observed = Json::array();
        for (VertexId v : pl.observed) observed.push_back(c.graph.name(v));
        parties[pl.party] = Json{{"variables", pl.variables},
                                 {"others", pl.others},
                                 {"observed", observed},
                                 {"cases", cases}};
    }
    return Json{{"formula", c.formula},
                {"input_order", c.input_order},
                {"parties", parties}};
}

} // namespace zforge
