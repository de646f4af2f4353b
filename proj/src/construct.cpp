#include "loosepath/construct.hpp"

#include <stdexcept>

namespace loosepath {

int lower_bound_a_size(int r, int s, int n) { return s + n * (r - s) - 1; }

namespace {

Coloring two_sided(int n_vertices, int r, VertexSet a) {
    if (n_vertices > kMaxVertices) throw std::invalid_argument("lower_bound_coloring: N exceeds 64");
    Coloring out(n_vertices, r, Color::Blue);
    const VertexSet b = VertexSet::prefix(n_vertices) - a;
    for (std::uint64_t rank = 0; rank < out.edge_count(); ++rank) {
        const VertexSet e = edge_unrank(rank, n_vertices, r);
        if (a.contains(e) || b.contains(e)) out.set_rank(rank, Color::Red);
    }
    return out;
}

void check_lower_bound_params(int r, int s, int n, int m) {
    if (m < 1 || n < m) throw std::invalid_argument("lower_bound_coloring: need n >= m >= 1");
    if (s < 1 || 2 * s > r) throw std::invalid_argument("lower_bound_coloring: need 1 <= s <= r/2");
}

}  // namespace

Coloring lower_bound_coloring(int r, int s, int n, int m) {
    check_lower_bound_params(r, s, n, m);
    const int a_size = lower_bound_a_size(r, s, n);
    return two_sided(a_size + (m + 1) / 2 - 1, r, VertexSet::prefix(a_size));
}

Coloring extended_lower_bound_coloring(int r, int s, int n, int m, bool joins_a) {
    check_lower_bound_params(r, s, n, m);
    const int a_size = lower_bound_a_size(r, s, n);
    const int n_vertices = a_size + (m + 1) / 2;
    VertexSet a = VertexSet::prefix(a_size);
    if (joins_a) a.insert(n_vertices);
    return two_sided(n_vertices, r, a);
}

std::optional<EdgeTypeLSS> classify_lss(const BlockPath& path, VertexSet edge) {
    if (path.m() < 3) throw std::invalid_argument("classify_lss: need at least 3 blocks");
    const int s = path.blocks[0].size();
    const VertexSet reservoir = path.reservoir();
    const VertexSet second = path.blocks[1].set();
    for (int p = 0; p < path.m(); ++p) {
        if (p == 1 || !edge.contains(path.blocks[p].set())) continue;
        const VertexSet rest = edge - path.blocks[p].set();
        const int l = (rest & reservoir).size();
        if ((rest & second).size() == s - l && (rest - reservoir - second).empty())
            return EdgeTypeLSS{l, p};
    }
    return std::nullopt;
}

std::optional<int> classify_split(const BlockPath& path, VertexSet edge) {
    const int s = path.m() > 0 ? path.blocks[0].size() : 0;
    if (!path.universe.contains(edge) || edge.size() != 2 * s) return std::nullopt;
    const int outside = (edge & path.reservoir()).size();
    const int l = s - outside;
    if (l >= 1 && l <= s - 1) return l;
    return std::nullopt;
}

std::optional<BlockPath> surgery(const BlockPath& path, std::vector<Block> blocks, const Coloring& coloring,
                                 Color color) {
    BlockPath out{std::move(blocks), path.universe};
    const int s = path.m() > 0 ? path.blocks[0].size() : 0;
    if (!is_valid_block_path(out, coloring, s, color)) return std::nullopt;
    return out;
}

std::optional<BlockPath> reorder(const BlockPath& path, const std::vector<int>& order, const Coloring& coloring,
                                 Color color) {
    std::vector<Block> blocks;
    for (int i : order) {
        if (i < 0 || i >= path.m()) throw std::out_of_range("reorder: block index out of range");
        blocks.push_back(path.blocks[i]);
    }
    return surgery(path, std::move(blocks), coloring, color);
}

}  // namespace loosepath
