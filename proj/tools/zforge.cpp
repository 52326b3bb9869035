// zforge: compile Boolean formulas to zero forcing circuits, run the
// color-change rule, and analyze the results. Every subcommand prints
// JSON (or DOT) on stdout; inputs come from flags and files.
//
// Exit codes: 0 ok, 1 usage, 2 formula syntax, 3 mode violation,
// 4 shape error (bad arity, files, variables), 5 enumeration limit.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "zforge/zforge.hpp"

namespace {

using namespace zforge;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ShapeError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ShapeError("cannot write file: " + out_path);
    out << text << "\n";
}

void emit(const Json& j, const std::string& out_path) { emit(j.dump(2), out_path); }

FormulaMode parse_mode(const std::string& s) {
    if (s == "monotone") return FormulaMode::monotone;
    if (s == "dual_rail" || s == "dual-rail" || s == "dual")
        return FormulaMode::dual_rail;
    throw ShapeError("mode must be \"monotone\" or \"dual_rail\"");
}

std::vector<bool> parse_bits(const std::string& s) {
    std::vector<bool> bits;
    for (char c : s) {
        if (c == '0') bits.push_back(false);
        else if (c == '1') bits.push_back(true);
        else throw ShapeError("bits must be a string of 0s and 1s");
    }
    return bits;
}

// Where a circuit comes from: a compiled circuit file (positional or
// --circuit), a formula to compile on the fly, or the built-in Toffoli
// construction.
struct Source {
    std::string file; // positional
    std::string formula;
    std::string circuit_file;
    bool toffoli = false;
    std::string mode = "monotone";
    bool no_balance = false;
    bool filters = false;
};

void add_source_options(CLI::App* cmd, Source& s, bool allow_file = true) {
    if (allow_file) {
        cmd->add_option("file", s.file, "compiled circuit (JSON file)");
        cmd->add_option("-c,--circuit", s.circuit_file,
                        "compiled circuit (JSON file)");
    }
    cmd->add_option("-f,--formula", s.formula, "formula text to compile");
    cmd->add_flag("--toffoli", s.toffoli, "use the built-in Toffoli circuit");
    cmd->add_option("-m,--mode", s.mode, "monotone or dual_rail")
        ->default_str("monotone");
    cmd->add_flag("--no-balance", s.no_balance, "skip delay balancing");
    cmd->add_flag("--filters", s.filters, "add a filter on every inter-gate net");
}

CompiledCircuit load_circuit(const Source& s) {
    std::string file = !s.file.empty() ? s.file : s.circuit_file;
    if (!s.file.empty() && !s.circuit_file.empty())
        throw ShapeError("give the circuit file once, not both ways");
    int given = int(!file.empty()) + int(!s.formula.empty()) + int(s.toffoli);
    if (given != 1)
        throw ShapeError(
            "give exactly one circuit source: a circuit file, --formula, or --toffoli");
    if (!file.empty()) return circuit_from_json(parse_json(read_file(file)));
    CompileOptions opts{!s.no_balance, s.filters};
    if (s.toffoli) return build_toffoli(opts);
    FormulaMode mode = parse_mode(s.mode);
    return compile_formula(parse_formula(s.formula, mode), mode, opts);
}

const char* toffoli_formula_text = "toffoli(a, b, c)";

std::vector<bool> toffoli_fn(const std::vector<bool>& in) {
    return {in[0], in[1], in[2] != (in[0] && in[1])};
}

// Expected outputs for a circuit: the built-in semantics for Toffoli,
// otherwise the circuit's own formula evaluated directly.
BoolFn circuit_oracle(const CompiledCircuit& c) {
    if (c.formula == toffoli_formula_text) return toffoli_fn;
    FormulaPtr ast = parse_formula(c.formula, c.mode);
    return formula_oracle(ast, c.input_order);
}

Gadget gadget_by_name(const std::string& name, int k) {
    if (name == "and") return and_gadget();
    if (name == "or") return or_gadget();
    if (name == "or3") return or_gadget_nonpropagating();
    if (name == "copy") return copy_gadget();
    if (name == "wire") return wire_gadget(k);
    if (name == "filter") return filter_gadget();
    throw ShapeError("unknown gadget \"" + name +
                     "\" (expected and, or, or3, copy, wire, filter)");
}

BoolFn gadget_fn(const std::string& name) {
    if (name == "and") return [](const std::vector<bool>& in) {
        return std::vector<bool>{in[0] && in[1]};
    };
    if (name == "or" || name == "or3") return [](const std::vector<bool>& in) {
        return std::vector<bool>{in[0] || in[1]};
    };
    if (name == "copy") return [](const std::vector<bool>& in) {
        return std::vector<bool>{in[0], in[0]};
    };
    // wire, filter
    return [](const std::vector<bool>& in) { return std::vector<bool>{in[0]}; };
}

int run(int argc, char** argv) {
    CLI::App app{"zero forcing circuit toolkit"};
    app.require_subcommand(1);
    int exit_code = 0;

    // ---- compile ----
    Source compile_src;
    std::string compile_file;
    std::string compile_emit = "circuit";
    std::string compile_out;
    auto* compile_cmd = app.add_subcommand("compile", "compile a formula to a circuit");
    compile_cmd->add_option("file", compile_file, "file containing the formula");
    add_source_options(compile_cmd, compile_src, false);
    compile_cmd->add_option("--emit", compile_emit, "circuit, netlist, or dot")
        ->default_str("circuit");
    compile_cmd->add_option("-o,--output", compile_out, "output file (default stdout)");
    compile_cmd->callback([&] {
        if (!compile_file.empty()) {
            if (!compile_src.formula.empty() || compile_src.toffoli)
                throw ShapeError("give the formula once: a file, --formula, or --toffoli");
            compile_src.formula = read_file(compile_file);
        }
        if (compile_emit == "netlist") {
            int given = int(!compile_src.formula.empty()) + int(compile_src.toffoli);
            if (given != 1)
                throw ShapeError("give exactly one of: a formula file, --formula, --toffoli");
            CompileOptions opts{!compile_src.no_balance, compile_src.filters};
            Netlist nl;
            if (compile_src.toffoli) {
                nl = lower_toffoli_netlist().netlist;
            } else {
                FormulaMode mode = parse_mode(compile_src.mode);
                FormulaPtr ast = parse_formula(compile_src.formula, mode);
                nl = mode == FormulaMode::monotone
                         ? lower_to_netlist(ast)
                         : lower_to_netlist_dual(ast).netlist;
            }
            run_passes(nl, opts);
            emit(netlist_to_json(nl), compile_out);
            return;
        }
        CompiledCircuit c = load_circuit(compile_src);
        if (compile_emit == "circuit") emit(circuit_to_json(c), compile_out);
        else if (compile_emit == "dot") emit(to_dot(c.graph, c.formula), compile_out);
        else throw ShapeError("--emit must be circuit, netlist, or dot");
    });

    // ---- simulate ----
    Source sim_src;
    std::string sim_bits;
    std::string sim_graph;
    std::string sim_out;
    std::uint64_t sim_seed = 0;
    bool sim_seeded = false;
    auto* sim_cmd = app.add_subcommand("simulate", "run the color-change rule");
    add_source_options(sim_cmd, sim_src);
    sim_cmd->add_option("-i,--input,--bits", sim_bits,
                        "input bits in input order, e.g. 1100");
    sim_cmd->add_option("-g,--graph", sim_graph, "colored graph (JSON file) to run as-is");
    sim_cmd->add_option("--seed", sim_seed, "also run a seeded sequential schedule")
        ->each([&](const std::string&) { sim_seeded = true; });
    sim_cmd->add_option("-o,--output", sim_out, "output file (default stdout)");
    sim_cmd->callback([&] {
        if (!sim_graph.empty()) {
            ColoredGraph g = graph_from_json(parse_json(read_file(sim_graph)));
            ForcingTrace trace = run_to_fixpoint(g);
            Json out = trace_to_json(trace);
            if (sim_seeded) {
                ColoredGraph seq = run_sequential(g, sim_seed);
                bool same = true;
                for (VertexId v = 0; v < seq.vertex_count(); ++v)
                    if (seq.black(v) != trace.final.black(v)) same = false;
                out["sequential_matches"] = same;
            }
            emit(out, sim_out);
            return;
        }
        CompiledCircuit c = load_circuit(sim_src);
        EvalResult ev = evaluate_bits(c, parse_bits(sim_bits));
        Json out = trace_to_json(ev.trace);
        if (ev.outputs.size() == 1) out["output"] = ev.outputs[0] ? 1 : 0;
        else out["outputs"] = bit_string(ev.outputs);
        out["output_steps"] = ev.output_steps;
        out["expected_output_step"] =
            c.expected_output_step ? Json(*c.expected_output_step) : Json(nullptr);
        if (sim_seeded) {
            ColoredGraph start = apply_inputs(c, bits_to_assignment(c, parse_bits(sim_bits)));
            ColoredGraph seq = run_sequential(start, sim_seed);
            bool same = true;
            for (VertexId v = 0; v < seq.vertex_count(); ++v)
                if (seq.black(v) != ev.trace.final.black(v)) same = false;
            out["sequential_matches"] = same;
        }
        emit(out, sim_out);
    });

    // ---- table ----
    Source table_src;
    bool table_check = false;
    std::string table_out;
    auto* table_cmd =
        app.add_subcommand("table", "evaluate a circuit on every assignment");
    add_source_options(table_cmd, table_src);
    table_cmd->add_flag("--check-oracle", table_check,
                        "exit nonzero if any row disagrees with the formula");
    table_cmd->add_option("-o,--output", table_out, "output file (default stdout)");
    table_cmd->callback([&] {
        CompiledCircuit c = load_circuit(table_src);
        CircuitTable t = circuit_truth_table(c, circuit_oracle(c));
        emit(table_to_json(c, t), table_out);
        if (table_check && !t.all_match) {
            std::cerr << "table disagrees with the formula\n";
            exit_code = 1;
        }
    });

    // ---- backforce ----
    Source back_src;
    std::string back_out;
    auto* back_cmd =
        app.add_subcommand("backforce", "report backward forces per assignment");
    add_source_options(back_cmd, back_src);
    back_cmd->add_option("-o,--output", back_out, "output file (default stdout)");
    back_cmd->callback([&] {
        CompiledCircuit c = load_circuit(back_src);
        emit(backforce_to_json(c, back_forcing_report(c)), back_out);
    });

    // ---- leakage ----
    Source leak_src;
    std::vector<std::string> leak_parties;
    std::string leak_out;
    auto* leak_cmd = app.add_subcommand(
        "leakage", "what parties can infer about the output from their inputs");
    add_source_options(leak_cmd, leak_src);
    leak_cmd
        ->add_option("-p,--party,--parties", leak_parties,
                     "party specs NAME=var1,var2 (one or more)")
        ->required();
    leak_cmd->add_option("-o,--output", leak_out, "output file (default stdout)");
    leak_cmd->callback([&] {
        CompiledCircuit c = load_circuit(leak_src);
        std::vector<Party> parties;
        for (const std::string& spec : leak_parties) {
            auto eq = spec.find('=');
            if (eq == std::string::npos || eq == 0 || eq + 1 >= spec.size())
                throw ShapeError("party spec must look like NAME=var1,var2");
            Party p;
            p.name = spec.substr(0, eq);
            std::stringstream vars(spec.substr(eq + 1));
            std::string v;
            while (std::getline(vars, v, ','))
                if (!v.empty()) p.variables.push_back(v);
            if (p.variables.empty())
                throw ShapeError("party '" + p.name + "' holds no variables");
            parties.push_back(std::move(p));
        }
        emit(leakage_to_json(c, leakage_analysis(c, parties)), leak_out);
    });

    // ---- minzfs ----
    std::string zfs_file;
    std::string zfs_graph;
    std::size_t zfs_limit = MinZfsOptions{}.limit;
    std::string zfs_out;
    auto* zfs_cmd =
        app.add_subcommand("minzfs", "minimum zero forcing set of a graph");
    zfs_cmd->add_option("file", zfs_file, "graph (JSON file)");
    zfs_cmd->add_option("-g,--graph", zfs_graph, "graph (JSON file)");
    zfs_cmd->add_option("--limit", zfs_limit, "largest vertex count to accept");
    zfs_cmd->add_option("-o,--output", zfs_out, "output file (default stdout)");
    zfs_cmd->callback([&] {
        if (zfs_file.empty() == zfs_graph.empty())
            throw ShapeError("give the graph file exactly once");
        ColoredGraph g = graph_from_json(
            parse_json(read_file(zfs_file.empty() ? zfs_graph : zfs_file)));
        VertexSet z = minimum_zero_forcing_set(g, MinZfsOptions{zfs_limit});
        Json names = Json::array();
        for (VertexId v : z) names.push_back(g.name(v));
        emit(Json{{"set", names}, {"size", z.size()}}, zfs_out);
    });

    // ---- gadget ----
    std::string gadget_name;
    int gadget_k = 1;
    std::string gadget_export = "json";
    bool gadget_table = false;
    std::string gadget_out;
    auto* gadget_cmd = app.add_subcommand("gadget", "inspect a library gadget");
    gadget_cmd->add_option("name", gadget_name, "and, or, or3, copy, wire, filter")
        ->required();
    gadget_cmd->add_option("-k", gadget_k, "wire delay (wire gadget only)");
    gadget_cmd->add_option("--export", gadget_export, "json or dot")
        ->default_str("json");
    gadget_cmd->add_flag("--table", gadget_table,
                         "include the harness truth table in the JSON");
    gadget_cmd->add_option("-o,--output", gadget_out, "output file (default stdout)");
    gadget_cmd->callback([&] {
        Gadget g = gadget_by_name(gadget_name, gadget_k);
        if (gadget_export == "dot") {
            emit(to_dot(g.fragment, g.name), gadget_out);
            return;
        }
        if (gadget_export != "json")
            throw ShapeError("--export must be json or dot");
        Json j = gadget_to_json(g);
        if (gadget_table) {
            TruthTableReport rep = verify_gadget(g, gadget_fn(gadget_name));
            Json rows = Json::array();
            for (const TruthTableRow& r : rep.rows) {
                Json row{{"inputs", r.inputs},
                         {"outputs", r.outputs},
                         {"expected", r.expected},
                         {"propagates_forward", r.propagates_forward},
                         {"matches", r.matches}};
                row["output_ready_step"] =
                    r.output_ready_step ? Json(*r.output_ready_step) : Json(nullptr);
                auto lat = measured_latency(r);
                row["measured_latency"] = lat ? Json(*lat) : Json(nullptr);
                rows.push_back(std::move(row));
            }
            j["table"] = rows;
            j["all_match"] = rep.all_match();
            j["passes"] = rep.passes();
        }
        emit(j, gadget_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Collapse CLI11's many parse-error codes onto the documented
        // usage exit; --help stays 0.
        return app.exit(e) == 0 ? 0 : 1;
    }
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const ModeViolation& e) {
        std::cerr << "mode violation: " << e.what() << "\n";
        return 3;
    } catch (const ShapeError& e) {
        std::cerr << "shape error: " << e.what() << "\n";
        return 4;
    } catch (const LimitError& e) {
        std::cerr << "limit exceeded: " << e.what() << "\n";
        return 5;
    }
}
