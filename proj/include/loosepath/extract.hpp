#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "loosepath/core.hpp"

namespace loosepath {

/// Raised when a construction the engine relies on does not hold under the
/// coloring. On a correct implementation this never happens; if it does, it is
/// either a bug or a counterexample and must not be swallowed.
class SoundnessError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TraceStep {
    std::string routine;
    int blocks = 0;            ///< blocks of the working path when the step ran
    Color path_color = Color::Red;
    std::string note;
};

struct Probe {
    VertexSet edge;
    Color color = Color::Red;
};

struct Trace {
    std::vector<TraceStep> steps;
    std::vector<Probe> probes;

    std::string to_json() const;
};

/// Either a target-colored path of the target length, or a path-colored block
/// path with one more block than the input.
struct Outcome {
    enum class Kind { Witness, Upgrade };
    Kind kind = Kind::Witness;
    SPath witness;
    BlockPath upgraded;

    bool is_witness() const { return kind == Kind::Witness; }
};

/// The lemma routines, parameterized by orientation: `path_color` is the color
/// of the working block path (Red in the normal orientation) and the witness
/// color is its opposite. Routine names use the normal orientation. All
/// routines expect a valid block path whose reservoir has exactly s + 1
/// vertices, and throw std::invalid_argument on violated preconditions.
class Engine {
public:
    Engine(const Coloring& coloring, int s, Color path_color, int target_length, Trace* trace = nullptr);
    /// The engine keeps a reference to the coloring.
    Engine(Coloring&&, int, Color, int, Trace* = nullptr) = delete;

    Color path_color() const { return path_color_; }
    Color target_color() const { return opposite(path_color_); }

    /// Every {A_1, B'} and {A_m, B'} must have the target color; the first
    /// one that does not yields an upgrade with B' as a new end block.
    std::optional<Outcome> probe_end_extensions(const BlockPath& path);

    /// Queries an edge of type (s-l, s, l). Target-colored: nullopt. Otherwise
    /// returns the upgrade that rebuilds the path around it; this needs every
    /// type-(l, s, s-l) edge with center A_1, A_3 or A_m path-colored, and for
    /// centers 4..m-1 the pair {A_{c-1}, A_m} path-colored.
    std::optional<Outcome> demand_mirror_type_blue(const BlockPath& path, int l, VertexSet edge);

    // Target length 3.
    Outcome blue_p3_from_type_edge(const BlockPath& path, int l, VertexSet g1);
    Outcome all_pairs_red_p3(const BlockPath& path);
    Outcome step_p3(const BlockPath& path);

    // Target length 4. Block indices are 0-based.
    Outcome blue_p4_from_type_edge(const BlockPath& path, int p, int l, VertexSet g1);
    Outcome single_end_pair_p4(const BlockPath& path, int p);
    Outcome five_block_triangle_p4(const BlockPath& path);
    Outcome end_pair_p4(const BlockPath& path, int p);
    Outcome block_pair_p4(const BlockPath& path, int i, int j);
    Outcome interior_edge_p4(const BlockPath& path, VertexSet f);
    Outcome red_split_edge_p4(const BlockPath& path, int l, VertexSet f);
    Outcome all_interior_red_p4(const BlockPath& path);
    Outcome step_p4(const BlockPath& path);

private:
    Color query(VertexSet edge);
    bool red(VertexSet edge) { return query(edge) == path_color_; }
    bool blue(VertexSet edge) { return !red(edge); }

    void require_state(const BlockPath& path, int min_blocks, const char* routine) const;
    void log(const char* routine, const BlockPath& path, std::string note = {});

    Outcome upgrade(const BlockPath& path, std::vector<Block> blocks, const char* routine);
    Outcome witness(std::vector<Block> blocks, const char* routine);
    BlockPath rearranged(const BlockPath& path, std::vector<Block> blocks, const char* routine);
    BlockPath reordered(const BlockPath& path, const std::vector<int>& order, const char* routine);

    std::optional<VertexSet> first_type_edge(const BlockPath& path, int l, Color color,
                                             const std::vector<int>& centers);
    std::optional<Outcome> even_probe(const BlockPath& path, const char* routine);
    Outcome triangle_type_edge(const BlockPath& path, int l, VertexSet g1);

    const Coloring& coloring_;
    int s_;
    Color path_color_;
    int target_length_;
    Trace* trace_;
};

/// Red P_n or blue P_2 on N = (n+1)s vertices, by search.
Witness extract_p2(const Coloring& coloring, int n, int s, Trace* trace = nullptr);
/// Red P_n or blue P_3 on N = (n+1)s + 1 vertices.
Witness extract_p3(const Coloring& coloring, int n, int s, Trace* trace = nullptr);
/// Red P_n or blue P_4 on N = (n+1)s + 1 vertices.
Witness extract_p4(const Coloring& coloring, int n, int s, Trace* trace = nullptr);

/// Dispatch on target in {2, 3, 4}.
Witness extract(const Coloring& coloring, int n, int s, int target, Trace* trace = nullptr);

}  // namespace loosepath
