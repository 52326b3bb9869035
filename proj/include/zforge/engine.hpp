#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "zforge/graph.hpp"

namespace zforge {

// ======================= color-change rule =======================
//
// A black vertex u with exactly one white neighbor v forces v black.
// Synchronous semantics: in one step, every applicable force fires
// at once. Internal time starts at 1 for the initial black vertices,
// so a vertex forced in round r carries step r+1.

struct ForceEvent {
    int step = 0; // internal time at which `forced` turned black
    VertexId forcer = 0;
    VertexId forced = 0;

    friend bool operator==(const ForceEvent&, const ForceEvent&) = default;
};

struct StepRecord {
    int step = 0;
    std::vector<ForceEvent> events; // sorted by (forcer, forced)
};

struct ForcingTrace {
    std::vector<StepRecord> steps; // consecutive, first step is 2
    ColoredGraph final;            // coloring at the fixpoint
    int fixpoint_step = 0;         // number of non-empty rounds

    // Internal time at which v became black: 1 for initial blacks,
    // the event step for forced vertices, 0 if still white.
    int black_step(VertexId v) const {
        for (const auto& rec : steps)
            for (const auto& ev : rec.events)
                if (ev.forced == v) return ev.step;
        return final.black(v) ? 1 : 0;
    }
};

// All forces applicable to the current coloring, in (forcer, forced)
// index order. The same vertex may appear as `forced` more than once
// when two neighbors can force it in the same round.
inline std::vector<std::pair<VertexId, VertexId>>
forcing_candidates(const ColoredGraph& g) {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        if (!g.black(u)) continue;
        VertexId white = 0;
        int count = 0;
        for (VertexId w : g.neighbors(u)) {
            if (!g.black(w)) {
                white = w;
                if (++count > 1) break;
            }
        }
        if (count == 1) out.emplace_back(u, white);
    }
    return out;
}

// Applies one synchronous round in place and returns what fired.
inline std::vector<std::pair<VertexId, VertexId>>
step_synchronous(ColoredGraph& g) {
    auto fired = forcing_candidates(g);
    for (const auto& [u, w] : fired) g.set_color(w, Color::black);
    return fired;
}

// Runs rounds until nothing fires. Terminates within |V| rounds since
// every non-empty round blackens at least one vertex.
inline ForcingTrace run_to_fixpoint(ColoredGraph g) {
    ForcingTrace trace;
    for (int round = 1;; ++round) {
        auto fired = step_synchronous(g);
        if (fired.empty()) break;
        StepRecord rec;
        rec.step = round + 1;
        rec.events.reserve(fired.size());
        for (const auto& [u, w] : fired)
            rec.events.push_back(ForceEvent{round + 1, u, w});
        trace.steps.push_back(std::move(rec));
        trace.fixpoint_step = round;
    }
    trace.final = std::move(g);
    return trace;
}

// Seeded sequential schedule: applies one applicable force at a time,
// chosen pseudo-randomly. Used as an independent oracle for the
// confluence of the synchronous engine. Index choice uses modulo so
// runs are reproducible across standard library implementations.
inline ColoredGraph run_sequential(ColoredGraph g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (;;) {
        auto candidates = forcing_candidates(g);
        if (candidates.empty()) return g;
        const auto& [u, w] = candidates[rng() % candidates.size()];
        (void)u;
        g.set_color(w, Color::black);
    }
}

// Whether coloring exactly `z` black (structure taken from g, colors
// ignored) forces the whole graph.
inline bool is_zero_forcing_set(const ColoredGraph& g, const VertexSet& z) {
    ColoredGraph start = g.blank();
    for (VertexId v : z) start.set_color(v, Color::black);
    return run_to_fixpoint(std::move(start)).final.all_black();
}

} // namespace zforge
