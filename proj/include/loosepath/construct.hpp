#pragma once

#include <optional>
#include <vector>

#include "loosepath/core.hpp"

namespace loosepath {

/// Extremal coloring on N = s + n(r-s) + floor((m+1)/2) - 2 vertices with
/// A = {1, ..., s + n(r-s) - 1} and B the rest: an edge is Red iff it lies
/// inside A or inside B.
Coloring lower_bound_coloring(int r, int s, int n, int m);

/// Size of the A side of lower_bound_coloring.
int lower_bound_a_size(int r, int s, int n);

/// lower_bound_coloring with one more vertex, N + 1, placed on the A side
/// (`joins_a`) or the B side; the same inside-a-side rule colors every edge.
Coloring extended_lower_bound_coloring(int r, int s, int n, int m, bool joins_a);

/// Edge made of l reservoir vertices, one full block (the center, never the
/// second block) and s - l vertices of the second block. Indices are 0-based.
struct EdgeTypeLSS {
    int l = 0;
    int center = 0;
    bool operator==(const EdgeTypeLSS&) const = default;
};

std::optional<EdgeTypeLSS> classify_lss(const BlockPath& path, VertexSet edge);

/// l in 1..s-1 such that the edge has s - l reservoir vertices and s + l block
/// vertices. Edges entirely inside the blocks or with s reservoir vertices are
/// handled by other routines and yield nullopt.
std::optional<int> classify_split(const BlockPath& path, VertexSet edge);

/// Reassembles a block path from new blocks over the same universe. Returns
/// nullopt unless the blocks are disjoint s-sets of the universe and every
/// consecutive union has `color`.
std::optional<BlockPath> surgery(const BlockPath& path, std::vector<Block> blocks, const Coloring& coloring,
                                 Color color);

/// The blocks of `path` in the order given by `order` (0-based indices).
std::optional<BlockPath> reorder(const BlockPath& path, const std::vector<int>& order, const Coloring& coloring,
                                 Color color);

}  // namespace loosepath
