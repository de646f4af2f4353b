#include "loosepath/extract.hpp"

#include "json.hpp"
#include "loosepath/search.hpp"

namespace loosepath {

namespace {

void record(Trace* trace, std::string routine, int blocks, Color color, std::string note = {}) {
    if (trace != nullptr) trace->steps.push_back({std::move(routine), blocks, color, std::move(note)});
}

Witness finish(const Coloring& coloring, Witness w, const Params& params, Trace* trace) {
    if (auto defect = witness_defect(coloring, w, params))
        throw SoundnessError("final witness rejected by the checker: " + *defect);
    record(trace, "result", w.path.length(), w.color, std::string(to_string(w.color)));
    return w;
}

void require_dimensions(const Coloring& coloring, const Params& params) {
    if (coloring.n_vertices() != params.n_vertices || coloring.r() != params.r)
        throw std::invalid_argument("coloring has N=" + std::to_string(coloring.n_vertices()) +
                                    ", r=" + std::to_string(coloring.r()) + "; expected N=" +
                                    std::to_string(params.n_vertices) + ", r=" + std::to_string(params.r));
}

// Grows a path-colored block path one block at a time over nested prefixes of
// [N] until it has n+1 blocks or a step returns a witness.
template <typename Step>
Witness grow(const Coloring& coloring, BlockPath path, int n, int s, Engine& engine, Step step,
             const Params& params, Trace* trace) {
    while (path.m() < n + 1) {
        path.universe = VertexSet::prefix((path.m() + 1) * s + 1);
        Outcome o = step(engine, path);
        if (o.is_witness()) return finish(coloring, {engine.target_color(), o.witness}, params, trace);
        path = std::move(o.upgraded);
    }
    return finish(coloring, {engine.path_color(), path.to_spath(s)}, params, trace);
}

}  // namespace

Witness extract_p2(const Coloring& coloring, int n, int s, Trace* trace) {
    Params params{s, 2 * s, n, 2, (n + 1) * s};
    params.validate();
    require_dimensions(coloring, params);
    record(trace, "extract_p2", 0, Color::Red, "search");
    auto red = find_mono_path(coloring, Color::Red, s, n);
    if (red.status == SearchStatus::Found) return finish(coloring, {Color::Red, *red.path}, params, trace);
    auto blue = find_mono_path(coloring, Color::Blue, s, 2);
    if (blue.status == SearchStatus::Found) return finish(coloring, {Color::Blue, *blue.path}, params, trace);
    if (red.status == SearchStatus::Exhausted || blue.status == SearchStatus::Exhausted)
        throw SoundnessError("extract_p2: search budget exhausted");
    throw SoundnessError("extract_p2: neither a red path of length " + std::to_string(n) + " nor a blue path of length 2");
}

Witness extract_p3(const Coloring& coloring, int n, int s, Trace* trace) {
    const Params params = Params::for_extraction(s, n, 3);
    require_dimensions(coloring, params);
    const VertexSet base_universe = VertexSet::prefix(4 * s + 1);

    // Base: a red P_3 or a blue P_2 on the first 4s vertices.
    const Witness first = extract_p2(coloring.restricted(4 * s), 3, s, trace);
    Engine normal(coloring, s, Color::Red, 3, trace);
    BlockPath red_path;
    if (first.color == Color::Red) {
        red_path = block_path_from(first.path, base_universe);
    } else {
        // A blue outcome is final; a red one is a red P_3 to grow from.
        const BlockPath blue_path = block_path_from(first.path, base_universe);
        Engine swapped(coloring, s, Color::Blue, 3, trace);
        std::optional<Outcome> o = swapped.probe_end_extensions(blue_path);
        if (!o && coloring.color(blue_path.pair_edge(0, 2)) == Color::Blue) o = swapped.all_pairs_red_p3(blue_path);
        if (o) {
            if (!o->is_witness()) return finish(coloring, {Color::Blue, o->upgraded.to_spath(s)}, params, trace);
            red_path = block_path_from(o->witness, base_universe);
        } else {
            // {b0, b2} is red and every {B', b0}, {B', b2} is red: a red
            // triangle through the reservoir, opened into a red path.
            const auto& b = blue_path.blocks;
            const BlockPath triangle{{Block(blue_path.reservoir().smallest(s)), b[0], b[2]}, base_universe};
            record(trace, "base_triangle", 3, Color::Red);
            o = normal.probe_end_extensions(triangle);
            if (!o) o = normal.all_pairs_red_p3(triangle);
            if (o->is_witness()) return finish(coloring, {Color::Blue, o->witness}, params, trace);
            red_path = std::move(o->upgraded);
        }
    }
    return grow(coloring, std::move(red_path), n, s, normal,
                [](Engine& e, const BlockPath& p) { return e.step_p3(p); }, params, trace);
}

Witness extract_p4(const Coloring& coloring, int n, int s, Trace* trace) {
    const Params params = Params::for_extraction(s, n, 4);
    require_dimensions(coloring, params);
    const VertexSet base_universe = VertexSet::prefix(5 * s + 1);

    // Base: a red P_4 or a blue P_3 on the first 5s + 1 vertices.
    const Witness first = extract_p3(coloring.restricted(5 * s + 1), 4, s, trace);
    Engine normal(coloring, s, Color::Red, 4, trace);
    BlockPath red_path;
    if (first.color == Color::Red) {
        red_path = block_path_from(first.path, base_universe);
    } else {
        Engine swapped(coloring, s, Color::Blue, 4, trace);
        Outcome o = swapped.step_p4(block_path_from(first.path, base_universe));
        if (!o.is_witness()) return finish(coloring, {Color::Blue, o.upgraded.to_spath(s)}, params, trace);
        red_path = block_path_from(o.witness, base_universe);
    }
    return grow(coloring, std::move(red_path), n, s, normal,
                [](Engine& e, const BlockPath& p) { return e.step_p4(p); }, params, trace);
}

Witness extract(const Coloring& coloring, int n, int s, int target, Trace* trace) {
    switch (target) {
        case 2: return extract_p2(coloring, n, s, trace);
        case 3: return extract_p3(coloring, n, s, trace);
        case 4: return extract_p4(coloring, n, s, trace);
        default: throw std::invalid_argument("target must be 2, 3 or 4");
    }
}

std::string Trace::to_json() const {
    nlohmann::ordered_json j;
    j["steps"] = nlohmann::ordered_json::array();
    for (const auto& st : steps) {
        nlohmann::ordered_json e;
        e["routine"] = st.routine;
        e["blocks"] = st.blocks;
        e["path_color"] = std::string(to_string(st.path_color));
        if (!st.note.empty()) e["note"] = st.note;
        j["steps"].push_back(std::move(e));
    }
    j["probes"] = nlohmann::ordered_json::array();
    for (const auto& p : probes) {
        nlohmann::ordered_json e;
        e["edge"] = p.edge.to_vector();
        e["color"] = std::string(to_string(p.color));
        j["probes"].push_back(std::move(e));
    }
    return j.dump() + "\n";
}

}  // namespace loosepath
