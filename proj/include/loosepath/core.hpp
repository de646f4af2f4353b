#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "loosepath/vertex_set.hpp"

namespace loosepath {

enum class Color : std::uint8_t { Red = 0, Blue = 1 };

constexpr Color opposite(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
std::string_view to_string(Color c);
Color color_from_string(std::string_view name);

/// Binomial coefficient C(n, k) for 0 <= n <= 64; zero when k < 0 or k > n.
std::uint64_t binomial(int n, int k);

/// Number of vertices of an s-path of length k in an r-uniform hypergraph.
int path_vertex_count(int r, int s, int k);

/// Colex rank of an r-edge over [N]: sum over sorted v_1 < ... < v_r of C(v_i - 1, i).
std::uint64_t edge_rank(VertexSet edge, int n_vertices, int r);
VertexSet edge_unrank(std::uint64_t rank, int n_vertices, int r);

/// Total red/blue assignment on the r-subsets of [N], one bit per colex rank
/// (0 = Red, 1 = Blue). Ranks are prefix-stable, so the coloring induced on
/// [N'] for N' < N is the first C(N', r) bits.
class Coloring {
public:
    Coloring(int n_vertices, int r, Color fill = Color::Red);

    int n_vertices() const { return n_; }
    int r() const { return r_; }
    std::uint64_t edge_count() const { return edges_; }

    Color at_rank(std::uint64_t rank) const {
        return ((words_[rank >> 6] >> (rank & 63)) & 1U) ? Color::Blue : Color::Red;
    }
    void set_rank(std::uint64_t rank, Color c);
    void flip_rank(std::uint64_t rank) { words_[rank >> 6] ^= std::uint64_t{1} << (rank & 63); }

    /// Color of an edge given as a vertex set. The edge must have r vertices in [N].
    Color color(VertexSet edge) const;
    void set(VertexSet edge, Color c) { set_rank(rank_of(edge), c); }

    std::uint64_t rank_of(VertexSet edge) const;

    /// The coloring induced on [n] (a prefix of the rank table).
    Coloring restricted(int n) const;
    /// Same edges, colors exchanged.
    Coloring swapped() const;

    const std::vector<std::uint64_t>& words() const { return words_; }
    void assign_words(std::vector<std::uint64_t> words);

    bool operator==(const Coloring&) const = default;

private:
    int n_;
    int r_;
    std::uint64_t edges_;
    std::vector<std::uint64_t> words_;
};

struct SPath {
    int s = 0;
    int r = 0;
    std::vector<Vertex> vertices;

    /// Number of windows; -1 when the vertex count does not fit s + k(r - s).
    int length() const;
    SPath reversed() const;
    bool operator==(const SPath&) const = default;
};

/// Cyclic s-path: vertices holds the k(r-s) distinct vertices, windows wrap.
struct SCycle {
    int s = 0;
    int r = 0;
    std::vector<Vertex> vertices;

    int length() const;
    bool operator==(const SCycle&) const = default;
};

/// Window edges of a path, in order. Throws if the vertex count is malformed.
std::vector<VertexSet> windows_of(const SPath& path);
std::vector<VertexSet> windows_of(const SCycle& cycle);

/// An s-set of a block path. The vertex order is kept so that witness
/// sequences reproduce the order in which pieces were assembled.
class Block {
public:
    Block() = default;
    /// Ascending order.
    explicit Block(VertexSet set);
    /// The vertices of `first` (ascending) followed by those of `second`.
    static Block join(VertexSet first, VertexSet second);
    static Block from_vertices(std::vector<Vertex> order);

    VertexSet set() const { return set_; }
    const std::vector<Vertex>& vertices() const { return order_; }
    int size() const { return static_cast<int>(order_.size()); }

    bool operator==(const Block&) const = default;

private:
    std::vector<Vertex> order_;
    VertexSet set_;
};

/// A path A_1, ..., A_m of disjoint s-sets inside `universe`; the reservoir is
/// everything in the universe outside the blocks.
struct BlockPath {
    std::vector<Block> blocks;
    VertexSet universe;

    int m() const { return static_cast<int>(blocks.size()); }
    VertexSet covered() const;
    VertexSet reservoir() const { return universe - covered(); }
    /// A_i ∪ A_{i+1} (0-based i).
    VertexSet pair_edge(int i, int j) const { return blocks.at(i).set() | blocks.at(j).set(); }
    BlockPath reversed() const;
    /// The vertex sequence A_1 A_2 ... A_m as an s-path of length m - 1.
    SPath to_spath(int s) const;
};

/// Splits an s-path with r = 2s into its m = length + 1 blocks.
BlockPath block_path_from(const SPath& path, VertexSet universe);

/// Structural check (sizes, disjointness, containment) plus every consecutive
/// union having `color`.
bool is_valid_block_path(const BlockPath& path, const Coloring& coloring, int s, Color color);

struct Params {
    int s = 1;
    int r = 2;
    int n = 3;
    int target_m = 3;
    int n_vertices = 0;

    /// r = 2s, n >= target_m, target in {2,3,4}; extraction vertex count.
    static Params for_extraction(int s, int n, int target_m);
    void validate() const;
};

struct Witness {
    Color color = Color::Red;
    SPath path;
    bool operator==(const Witness&) const = default;
};

/// Independent certificate check. Returns false for any structural defect
/// (duplicates, wrong length, out-of-range vertices) or a window of the wrong
/// color; throws std::invalid_argument only on dimension mismatch.
bool check_witness(const Coloring& coloring, const Witness& witness, const Params& params);

/// Same check, reporting the first defect found (nullopt when valid).
std::optional<std::string> witness_defect(const Coloring& coloring, const Witness& witness,
                                          const Params& params);

/// Checks a path of any length k >= 1 against a color (no target length).
bool is_mono_path(const Coloring& coloring, const SPath& path, Color color);
bool is_mono_cycle(const Coloring& coloring, const SCycle& cycle, Color color);

}  // namespace loosepath
