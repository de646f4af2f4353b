#include "loosepath/construct.hpp"
#include "loosepath/extract.hpp"

#include <algorithm>
#include <numeric>

namespace loosepath {

namespace {

std::string describe(const std::vector<Block>& blocks) {
    std::string out;
    for (const auto& b : blocks) {
        out += out.empty() ? "[" : " | ";
        bool first = true;
        for (Vertex v : b.vertices()) {
            out += (first ? "" : ",") + std::to_string(v);
            first = false;
        }
    }
    return out + "]";
}

std::string describe(VertexSet e) {
    std::string out = "{";
    for (Vertex v : e) out += (out.size() > 1 ? "," : "") + std::to_string(v);
    return out + "}";
}

bool adjacent(int i, int j) { return i - j == 1 || j - i == 1; }

}  // namespace

Engine::Engine(const Coloring& coloring, int s, Color path_color, int target_length, Trace* trace)
    : coloring_(coloring), s_(s), path_color_(path_color), target_length_(target_length), trace_(trace) {
    if (coloring.r() != 2 * s) throw std::invalid_argument("Engine: coloring must be 2s-uniform");
    if (target_length < 2) throw std::invalid_argument("Engine: target length must be at least 2");
}

Color Engine::query(VertexSet edge) {
    const Color c = coloring_.color(edge);
    if (trace_ != nullptr) trace_->probes.push_back({edge, c});
    return c;
}

void Engine::require_state(const BlockPath& path, int min_blocks, const char* routine) const {
    const std::string name(routine);
    if (path.m() < min_blocks) throw std::invalid_argument(name + ": need at least " + std::to_string(min_blocks) + " blocks");
    if (!is_valid_block_path(path, coloring_, s_, path_color_))
        throw std::invalid_argument(name + ": not a valid " + std::string(to_string(path_color_)) + " block path");
    if (path.reservoir().size() != s_ + 1) throw std::invalid_argument(name + ": reservoir must have s+1 vertices");
}

void Engine::log(const char* routine, const BlockPath& path, std::string note) {
    if (trace_ != nullptr) trace_->steps.push_back({routine, path.m(), path_color_, std::move(note)});
}

Outcome Engine::upgrade(const BlockPath& path, std::vector<Block> blocks, const char* routine) {
    const std::string shape = describe(blocks);
    auto longer = surgery(path, std::move(blocks), coloring_, path_color_);
    if (!longer || longer->m() != path.m() + 1)
        throw SoundnessError(std::string(routine) + ": upgrade " + shape + " is not a longer " +
                             std::string(to_string(path_color_)) + " path");
    if (trace_ != nullptr) trace_->steps.push_back({routine, path.m(), path_color_, "upgrade " + shape});
    Outcome out;
    out.kind = Outcome::Kind::Upgrade;
    out.upgraded = std::move(*longer);
    return out;
}

Outcome Engine::witness(std::vector<Block> blocks, const char* routine) {
    const std::string shape = describe(blocks);
    BlockPath as_path{std::move(blocks), VertexSet::prefix(coloring_.n_vertices())};
    if (as_path.m() != target_length_ + 1 || !is_valid_block_path(as_path, coloring_, s_, target_color()))
        throw SoundnessError(std::string(routine) + ": witness " + shape + " is not a " +
                             std::string(to_string(target_color())) + " path of length " +
                             std::to_string(target_length_));
    if (trace_ != nullptr) trace_->steps.push_back({routine, 0, path_color_, "witness " + shape});
    Outcome out;
    out.kind = Outcome::Kind::Witness;
    out.witness = as_path.to_spath(s_);
    return out;
}

BlockPath Engine::rearranged(const BlockPath& path, std::vector<Block> blocks, const char* routine) {
    const std::string shape = describe(blocks);
    auto next = surgery(path, std::move(blocks), coloring_, path_color_);
    if (!next || next->m() != path.m() || next->covered() != path.covered())
        throw SoundnessError(std::string(routine) + ": rearrangement " + shape + " is not a valid path");
    if (trace_ != nullptr) trace_->steps.push_back({routine, path.m(), path_color_, "rearrange " + shape});
    return *next;
}

BlockPath Engine::reordered(const BlockPath& path, const std::vector<int>& order, const char* routine) {
    std::vector<Block> blocks;
    for (int i : order) blocks.push_back(path.blocks.at(i));
    return rearranged(path, std::move(blocks), routine);
}

std::optional<Outcome> Engine::probe_end_extensions(const BlockPath& path) {
    require_state(path, 2, "probe_end_extensions");
    const int m = path.m();
    std::optional<Outcome> out;
    for_each_subset(path.reservoir(), s_, [&](VertexSet b) {
        if (red(path.blocks[0].set() | b)) {
            std::vector<Block> blocks{Block(b)};
            blocks.insert(blocks.end(), path.blocks.begin(), path.blocks.end());
            out = upgrade(path, std::move(blocks), "probe_end_extensions");
            return true;
        }
        if (red(path.blocks[m - 1].set() | b)) {
            std::vector<Block> blocks = path.blocks;
            blocks.push_back(Block(b));
            out = upgrade(path, std::move(blocks), "probe_end_extensions");
            return true;
        }
        return false;
    });
    return out;
}

std::optional<Outcome> Engine::demand_mirror_type_blue(const BlockPath& path, int l, VertexSet edge) {
    require_state(path, 3, "demand_mirror_type_blue");
    if (l < 0 || l > s_) throw std::invalid_argument("demand_mirror_type_blue: level out of range");
    const auto type = classify_lss(path, edge);
    if (!type || type->l != s_ - l) throw std::invalid_argument("demand_mirror_type_blue: edge is not of type (s-l, s, l)");
    if (blue(edge)) return std::nullopt;
    log("demand_mirror_type_blue", path, "found " + describe(edge));

    const int m = path.m();
    const int c = type->center;
    const VertexSet reservoir = path.reservoir();
    const VertexSet second = path.blocks[1].set();
    const VertexSet b1 = edge & reservoir;
    const VertexSet a2 = edge & second;
    const VertexSet b2 = (reservoir - b1).smallest(l);
    const Block x = Block::join(b2, second - a2);
    const Block y = Block::join(b1, a2);
    const auto& a = path.blocks;

    std::vector<Block> blocks;
    if (c == 0) {
        blocks = {y, a[0], x};
        blocks.insert(blocks.end(), a.begin() + 2, a.end());
    } else {
        blocks = {a[0], x};
        blocks.insert(blocks.end(), a.begin() + 2, a.begin() + c);
        for (int i = m - 1; i >= c; --i) blocks.push_back(a[i]);
        blocks.push_back(y);
    }
    return upgrade(path, std::move(blocks), "demand_mirror_type_blue");
}

std::optional<VertexSet> Engine::first_type_edge(const BlockPath& path, int l, Color color,
                                                 const std::vector<int>& centers) {
    const VertexSet reservoir = path.reservoir();
    const VertexSet second = path.blocks[1].set();
    std::optional<VertexSet> found;
    for (int c : centers) {
        for_each_subset(reservoir, l, [&](VertexSet b) {
            return for_each_subset(second, s_ - l, [&](VertexSet part) {
                const VertexSet e = b | path.blocks[c].set() | part;
                if (query(e) == color) {
                    found = e;
                    return true;
                }
                return false;
            });
        });
        if (found) return found;
    }
    return std::nullopt;
}

namespace {

std::vector<int> all_centers(int m) {
    std::vector<int> out{0};
    for (int c = 2; c < m; ++c) out.push_back(c);
    return out;
}

}  // namespace

// Even s: the three type-(s/2) edges through A_1, A_2 and A_3 cannot all be
// path-colored, or they splice a reservoir half into the path.
std::optional<Outcome> Engine::even_probe(const BlockPath& path, const char* routine) {
    if (s_ % 2 != 0) return std::nullopt;
    const int h = s_ / 2;
    const VertexSet reservoir = path.reservoir();
    const VertexSet second = path.blocks[1].set();
    const VertexSet b1 = reservoir.smallest(h);
    const VertexSet b2 = (reservoir - b1).smallest(h);
    const VertexSet a2 = second.smallest(h);
    const auto& a = path.blocks;
    if (red(b1 | a2 | a[0].set()) && red(a[0].set() | b2 | (second - a2)) && red(b2 | (second - a2) | a[2].set())) {
        std::vector<Block> blocks{Block::join(b1, a2), a[0], Block::join(b2, second - a2)};
        blocks.insert(blocks.end(), a.begin() + 2, a.end());
        return upgrade(path, std::move(blocks), routine);
    }
    return std::nullopt;
}

Outcome Engine::blue_p3_from_type_edge(const BlockPath& path, int l, VertexSet g1) {
    require_state(path, 3, "blue_p3_from_type_edge");
    if (l < 1 || l > s_ / 2)
        throw std::invalid_argument("blue_p3_from_type_edge: need 1 <= l <= floor(s/2)");
    const auto type = classify_lss(path, g1);
    if (!type || type->l != l) throw std::invalid_argument("blue_p3_from_type_edge: edge is not of type (l, s, s-l)");
    if (!blue(g1)) throw std::invalid_argument("blue_p3_from_type_edge: edge does not have the target color");
    log("blue_p3_from_type_edge", path, describe(g1));

    const int m = path.m();
    const int i = type->center;
    const int j = i == 0 ? m - 1 : 0;
    const VertexSet reservoir = path.reservoir();
    const VertexSet second = path.blocks[1].set();
    const VertexSet b1 = g1 & reservoir;
    const VertexSet a2 = g1 & second;
    const VertexSet a2b = (second - a2).smallest(l - 1);
    const VertexSet rest = (reservoir - b1) | a2b;
    const auto& a = path.blocks;
    if (auto o = demand_mirror_type_blue(path, l - 1, a[j].set() | rest)) return *o;
    if (auto o = demand_mirror_type_blue(path, l - 1, rest | a[i].set())) return *o;
    return witness({Block::join(b1, a2), a[i], Block::join(reservoir - b1, a2b), a[j]}, "blue_p3_from_type_edge");
}

Outcome Engine::all_pairs_red_p3(const BlockPath& path) {
    require_state(path, 3, "all_pairs_red_p3");
    const int m = path.m();
    for (int i = 0; i < m; ++i)
        for (int j = i + 2; j < m; ++j)
            if (coloring_.color(path.pair_edge(i, j)) != path_color_)
                throw std::invalid_argument("all_pairs_red_p3: some pair of blocks has the target color");
    log("all_pairs_red_p3", path);
    if (auto o = probe_end_extensions(path)) return *o;
    if (auto o = even_probe(path, "all_pairs_red_p3")) return *o;

    const std::vector<int> centers = all_centers(m);
    for (int j = 1; j <= s_ / 2; ++j)
        if (auto g = first_type_edge(path, j, target_color(), centers)) return blue_p3_from_type_edge(path, j, *g);
    if (s_ % 2 == 0) throw SoundnessError("all_pairs_red_p3: no target-colored type edge after the even probe");

    const int h = (s_ - 1) / 2;
    const VertexSet reservoir = path.reservoir();
    const VertexSet second = path.blocks[1].set();
    const VertexSet b1 = reservoir.smallest(h + 1);
    const VertexSet a2 = second.smallest(h);
    const VertexSet a2b = (second - a2).smallest(h);
    const auto& a = path.blocks;
    for (VertexSet e : {a[0].set() | b1 | a2, a[0].set() | (reservoir - b1) | a2b, (reservoir - b1) | a2b | a[m - 1].set()})
        if (auto o = demand_mirror_type_blue(path, h, e)) return *o;
    return witness({Block::join(b1, a2), a[0], Block::join(reservoir - b1, a2b), a[m - 1]}, "all_pairs_red_p3");
}

Outcome Engine::step_p3(const BlockPath& path) {
    require_state(path, 4, "step_p3");
    log("step_p3", path);
    if (auto o = probe_end_extensions(path)) return *o;
    const int m = path.m();
    const auto& a = path.blocks;
    const Block b0(path.reservoir().smallest(s_));

    for (int j = 2; j <= m - 2; ++j)
        if (blue(path.pair_edge(0, j))) return witness({a[m - 1], b0, a[0], a[j]}, "step_p3");
    for (int k = 1; k <= m - 3; ++k)
        if (blue(path.pair_edge(k, m - 1))) return witness({a[0], b0, a[m - 1], a[k]}, "step_p3");

    for (int j = 1; j <= m - 2; ++j) {
        for (int k = j + 2; k <= m - 2; ++k) {
            if (!blue(path.pair_edge(j, k))) continue;
            std::vector<int> order(static_cast<std::size_t>(k));
            std::iota(order.begin(), order.end(), 0);
            for (int q = m - 1; q >= k; --q) order.push_back(q);
            const BlockPath q_path = reordered(path, order, "step_p3");
            if (auto o = probe_end_extensions(q_path)) return *o;
            return witness({a[0], b0, a[k], a[j]}, "step_p3");
        }
    }

    if (blue(path.pair_edge(0, m - 1))) {
        std::vector<int> order{1, 0};
        for (int q = 2; q < m; ++q) order.push_back(q);
        const BlockPath q_path = reordered(path, order, "step_p3");
        if (auto o = probe_end_extensions(q_path)) return *o;
        return witness({a[1], b0, a[m - 1], a[0]}, "step_p3");
    }
    return all_pairs_red_p3(path);
}

Outcome Engine::blue_p4_from_type_edge(const BlockPath& path, int p, int l, VertexSet g1) {
    require_state(path, 4, "blue_p4_from_type_edge");
    const int m = path.m();
    if (p < 2 || p > m - 2) throw std::invalid_argument("blue_p4_from_type_edge: p must be an interior non-neighbour of A_1");
    if (l < 1 || l > s_ / 2) throw std::invalid_argument("blue_p4_from_type_edge: need 1 <= l <= floor(s/2)");
    const auto type = classify_lss(path, g1);
    if (!type || type->l != l) throw std::invalid_argument("blue_p4_from_type_edge: edge is not of type (l, s, s-l)");
    if (!blue(g1)) throw std::invalid_argument("blue_p4_from_type_edge: edge does not have the target color");
    log("blue_p4_from_type_edge", path, describe(g1));

    const int j = type->center;
    const VertexSet reservoir = path.reservoir();
    const VertexSet second = path.blocks[1].set();
    const VertexSet b1 = g1 & reservoir;
    const VertexSet a2 = g1 & second;
    const VertexSet a2b = (second - a2).smallest(l - 1);
    const VertexSet rest = (reservoir - b1) | a2b;
    const Block x = Block::join(reservoir - b1, a2b);
    const Block y = Block::join(b1, a2);
    const auto& a = path.blocks;

    std::vector<int> touched;
    std::vector<Block> blocks;
    if (j == p) {
        touched = {0, m - 1};
        blocks = {y, a[p], a[0], x, a[m - 1]};
    } else if (j == 0) {
        touched = {p, m - 1};
        blocks = {y, a[0], a[p], x, a[m - 1]};
    } else {
        touched = {j, 0};
        blocks = {y, a[j], x, a[0], a[p]};
    }
    for (int c : touched)
        if (auto o = demand_mirror_type_blue(path, l - 1, rest | a[c].set())) return *o;
    return witness(std::move(blocks), "blue_p4_from_type_edge");
}

Outcome Engine::single_end_pair_p4(const BlockPath& path, int p) {
    require_state(path, 4, "single_end_pair_p4");
    const int m = path.m();
    if (p < 2 || p > m - 2) throw std::invalid_argument("single_end_pair_p4: p must be an interior non-neighbour of A_1");
    if (coloring_.color(path.pair_edge(0, p)) == path_color_)
        throw std::invalid_argument("single_end_pair_p4: {A_1, A_p} must have the target color");
    for (int q = 1; q <= m - 3; ++q)
        if (coloring_.color(path.pair_edge(q, m - 1)) != path_color_)
            throw std::invalid_argument("single_end_pair_p4: some {A_q, A_m} has the target color");
    log("single_end_pair_p4", path, "p=" + std::to_string(p));
    if (auto o = probe_end_extensions(path)) return *o;
    if (auto o = even_probe(path, "single_end_pair_p4")) return *o;

    const std::vector<int> centers = all_centers(m);
    for (int j = 1; j <= s_ / 2; ++j)
        if (auto g = first_type_edge(path, j, target_color(), centers)) return blue_p4_from_type_edge(path, p, j, *g);
    if (s_ % 2 == 0) throw SoundnessError("single_end_pair_p4: no target-colored type edge after the even probe");

    const int h = (s_ - 1) / 2;
    const VertexSet reservoir = path.reservoir();
    const VertexSet second = path.blocks[1].set();
    const VertexSet b1 = reservoir.smallest(h + 1);
    const VertexSet a2 = second.smallest(h);
    const VertexSet a2b = (second - a2).smallest(h);
    const auto& a = path.blocks;
    for (VertexSet e : {a[0].set() | b1 | a2, b1 | a2 | a[m - 1].set(), a[m - 1].set() | (reservoir - b1) | a2b})
        if (auto o = demand_mirror_type_blue(path, h, e)) return *o;
    return witness({a[p], a[0], Block::join(b1, a2), a[m - 1], Block::join(reservoir - b1, a2b)},
                   "single_end_pair_p4");
}

Outcome Engine::triangle_type_edge(const BlockPath& path, int l, VertexSet g1) {
    const auto type = classify_lss(path, g1);
    const int c = type->center;
    std::vector<int> others;
    for (int t : {0, 2, 4})
        if (t != c) others.push_back(t);
    const VertexSet reservoir = path.reservoir();
    const VertexSet second = path.blocks[1].set();
    const VertexSet b1 = g1 & reservoir;
    const VertexSet a2 = g1 & second;
    const VertexSet a2b = (second - a2).smallest(l - 1);
    const VertexSet rest = (reservoir - b1) | a2b;
    const auto& a = path.blocks;
    for (int t : {c, others[0]})
        if (auto o = demand_mirror_type_blue(path, l - 1, rest | a[t].set())) return *o;
    return witness({Block::join(b1, a2), a[c], Block::join(reservoir - b1, a2b), a[others[0]], a[others[1]]},
                   "five_block_triangle_p4");
}

Outcome Engine::five_block_triangle_p4(const BlockPath& path) {
    require_state(path, 5, "five_block_triangle_p4");
    if (path.m() != 5) throw std::invalid_argument("five_block_triangle_p4: needs exactly five blocks");
    auto colored = [&](int i, int j) { return coloring_.color(path.pair_edge(i, j)); };
    if (colored(0, 2) == path_color_ || colored(2, 4) == path_color_ || colored(0, 3) != path_color_ ||
        colored(1, 4) != path_color_)
        throw std::invalid_argument("five_block_triangle_p4: pair colors do not match the hypothesis");
    log("five_block_triangle_p4", path);
    if (auto o = probe_end_extensions(path)) return *o;
    const auto& a = path.blocks;
    const VertexSet reservoir = path.reservoir();

    if (red(path.pair_edge(0, 4))) {
        const BlockPath q_path = reordered(path, {0, 4, 1, 2, 3}, "five_block_triangle_p4");
        if (auto o = probe_end_extensions(q_path)) return *o;
        return witness({a[4], a[2], a[0], Block(reservoir.smallest(s_)), a[3]}, "five_block_triangle_p4");
    }

    std::optional<Outcome> out;
    for_each_subset(reservoir, s_, [&](VertexSet b) {
        if (blue(b | a[1].set())) {
            out = witness({a[1], Block(b), a[0], a[2], a[4]}, "five_block_triangle_p4");
            return true;
        }
        if (blue(b | a[3].set())) {
            out = witness({a[3], Block(b), a[4], a[2], a[0]}, "five_block_triangle_p4");
            return true;
        }
        return false;
    });
    if (out) return *out;
    if (auto o = even_probe(path, "five_block_triangle_p4")) return *o;

    const std::vector<int> triangle{0, 2, 4};
    for (int j = 1; j <= s_ / 2; ++j)
        if (auto g = first_type_edge(path, j, target_color(), triangle)) return triangle_type_edge(path, j, *g);
    if (s_ % 2 == 0) throw SoundnessError("five_block_triangle_p4: no target-colored type edge after the even probe");

    const int h = (s_ - 1) / 2;
    const VertexSet second = path.blocks[1].set();
    const VertexSet b1 = reservoir.smallest(h + 1);
    const VertexSet a2 = second.smallest(h);
    const VertexSet a2b = (second - a2).smallest(h);
    for (VertexSet e : {a[0].set() | b1 | a2, a[0].set() | (reservoir - b1) | a2b, (reservoir - b1) | a2b | a[2].set()})
        if (auto o = demand_mirror_type_blue(path, h, e)) return *o;
    return witness({Block::join(b1, a2), a[0], Block::join(reservoir - b1, a2b), a[2], a[4]}, "five_block_triangle_p4");
}

Outcome Engine::end_pair_p4(const BlockPath& path, int p) {
    require_state(path, 4, "end_pair_p4");
    const int m = path.m();
    if (p < 2 || p > m - 2) throw std::invalid_argument("end_pair_p4: p must be an interior non-neighbour of A_1");
    if (coloring_.color(path.pair_edge(0, p)) == path_color_)
        throw std::invalid_argument("end_pair_p4: {A_1, A_p} must have the target color");
    log("end_pair_p4", path, "p=" + std::to_string(p));
    if (auto o = probe_end_extensions(path)) return *o;
    const auto& a = path.blocks;
    const Block b0(path.reservoir().smallest(s_));

    std::vector<int> from_first{p};
    for (int x = 2; x <= m - 2; ++x)
        if (x != p && blue(path.pair_edge(0, x))) from_first.push_back(x);
    std::vector<int> from_last;
    for (int y = 1; y <= m - 3; ++y)
        if (blue(path.pair_edge(y, m - 1))) from_last.push_back(y);
    for (int x : from_first)
        for (int y : from_last)
            if (x != y) return witness({a[x], a[0], b0, a[m - 1], a[y]}, "end_pair_p4");

    if (from_last.empty()) return single_end_pair_p4(path, p);
    if (from_last != std::vector<int>{p} || from_first.size() != 1)
        throw SoundnessError("end_pair_p4: pair pattern left after the two-sided search is impossible");

    if (p >= 3) {
        std::vector<int> order{0, 1, m - 1};
        for (int q = 2; q <= m - 2; ++q) order.push_back(q);
        const BlockPath q_path = reordered(path, order, "end_pair_p4");
        if (auto o = probe_end_extensions(q_path)) return *o;
        return witness({a[m - 1], a[p], a[0], b0, a[m - 2]}, "end_pair_p4");
    }
    if (m - 1 - p >= 3) {
        std::vector<int> order;
        for (int q = 0; q <= p + 1; ++q) order.push_back(q);
        for (int q = m - 1; q >= p + 2; --q) order.push_back(q);
        const BlockPath q_path = reordered(path, order, "end_pair_p4");
        if (auto o = probe_end_extensions(q_path)) return *o;
        return witness({a[m - 1], a[p], a[0], b0, a[p + 2]}, "end_pair_p4");
    }
    return five_block_triangle_p4(path);
}

Outcome Engine::block_pair_p4(const BlockPath& path, int i, int j) {
    require_state(path, 4, "block_pair_p4");
    const int m = path.m();
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= m || adjacent(i, j) || i == j) throw std::invalid_argument("block_pair_p4: need two non-consecutive blocks");
    if (coloring_.color(path.pair_edge(i, j)) == path_color_)
        throw std::invalid_argument("block_pair_p4: the pair must have the target color");
    log("block_pair_p4", path, std::to_string(i) + "," + std::to_string(j));

    const int ends = (i == 0 ? 1 : 0) + (j == m - 1 ? 1 : 0);
    if (ends == 1) {
        if (j == m - 1) return end_pair_p4(path.reversed(), m - 1 - i);
        return end_pair_p4(path, j);
    }
    if (ends == 2) {
        for (int x = 0; x < m; ++x)
            for (int y = x + 2; y < m; ++y)
                if (!(x == 0 && y == m - 1) && blue(path.pair_edge(x, y))) return block_pair_p4(path, x, y);
        std::vector<int> order{0, 1};
        for (int q = m - 1; q >= 2; --q) order.push_back(q);
        return end_pair_p4(reordered(path, order, "block_pair_p4"), 2);
    }
    for (int x = 0; x < m; ++x)
        for (int y = x + 2; y < m; ++y)
            if ((x == 0) != (y == m - 1) && blue(path.pair_edge(x, y))) return block_pair_p4(path, x, y);
    std::vector<int> order;
    for (int q = j; q < m; ++q) order.push_back(q);
    for (int q = j - 1; q >= 0; --q) order.push_back(q);
    return end_pair_p4(reordered(path, order, "block_pair_p4"), m - 1 - i);
}

Outcome Engine::interior_edge_p4(const BlockPath& path, VertexSet f) {
    require_state(path, 4, "interior_edge_p4");
    const int m = path.m();
    if (f.size() != 2 * s_ || !path.covered().contains(f))
        throw std::invalid_argument("interior_edge_p4: edge must lie inside the blocks");
    if (coloring_.color(f) == path_color_) throw std::invalid_argument("interior_edge_p4: edge must have the target color");
    log("interior_edge_p4", path, describe(f));
    if (auto o = probe_end_extensions(path)) return *o;
    const auto& a = path.blocks;

    std::vector<int> met;
    for (int i = 0; i < m; ++i)
        if (a[i].set().intersects(f)) met.push_back(i);
    const int k = static_cast<int>(met.size());
    if (k == 2) return block_pair_p4(path, met[0], met[1]);

    for (int x = 0; x < m; ++x)
        for (int y = x + 2; y < m; ++y)
            if (blue(path.pair_edge(x, y))) return block_pair_p4(path, x, y);
    // From here on every pair of blocks is path-colored, so blocks can be
    // listed in any order.

    auto is_met = [&](int i) { return std::find(met.begin(), met.end(), i) != met.end(); };

    if (k >= 4) {
        std::vector<int> by_size = met;
        std::stable_sort(by_size.begin(), by_size.end(),
                         [&](int x, int y) { return (a[x].set() & f).size() < (a[y].set() & f).size(); });
        const int x1 = by_size[0], x2 = by_size[1], x3 = by_size[2];
        const VertexSet pair = a[x1].set() | a[x2].set();
        VertexSet c = pair & f;
        c |= (pair - c).smallest(s_ - c.size());
        const VertexSet g = a[x3].set() | c;
        if (blue(g)) return interior_edge_p4(path, g);
        std::vector<Block> blocks;
        for (int i = 0; i < m; ++i)
            if (i != x1 && i != x2 && i != x3) blocks.push_back(a[i]);
        blocks.push_back(a[x3]);
        blocks.push_back(Block(c));
        blocks.push_back(Block(pair - c));
        return interior_edge_p4(rearranged(path, std::move(blocks), "interior_edge_p4"), f);
    }

    int full = -1;
    for (int i : met)
        if (f.contains(a[i].set())) {
            full = i;
            break;
        }

    if (full >= 0) {
        int last_free = -1;
        for (int i = 0; i < m; ++i)
            if (!is_met(i)) last_free = i;
        VertexSet rest_pair;
        for (int i : met)
            if (i != full) rest_pair |= a[i].set();
        const VertexSet c = f & rest_pair;
        const VertexSet c2 = rest_pair - c;

        std::vector<Block> ends_first{a[full]};
        for (int i = 0; i < m; ++i)
            if (i != full && i != last_free) ends_first.push_back(a[i]);
        ends_first.push_back(a[last_free]);
        const BlockPath r_path = rearranged(path, std::move(ends_first), "interior_edge_p4");
        if (auto o = probe_end_extensions(r_path)) return *o;
        if (blue(c2 | a[last_free].set()))
            return witness({Block(c2), a[last_free], Block(path.reservoir().smallest(s_)), a[full], Block(c)},
                           "interior_edge_p4");
        std::vector<Block> blocks{Block(c), Block(c2), a[last_free]};
        for (int i = 0; i < m; ++i)
            if (!is_met(i) && i != last_free) blocks.push_back(a[i]);
        blocks.push_back(a[full]);
        return block_pair_p4(rearranged(path, std::move(blocks), "interior_edge_p4"), 0, m - 1);
    }

    const int x = met[0], y = met[1], z = met[2];
    int first_free = -1;
    for (int i = 0; i < m && first_free < 0; ++i)
        if (!is_met(i)) first_free = i;
    const VertexSet fz = f & a[z].set();
    const VertexSet a2b = (f & a[y].set()).smallest(s_ - fz.size());
    const VertexSet c = a2b | fz;
    const VertexSet c2 = (a[y].set() | a[z].set()) - c;
    const VertexSet g = c2 | a[first_free].set();
    if (blue(g)) return interior_edge_p4(path, g);
    const VertexSet g2 = a[x].set() | c;
    if (blue(g2)) return interior_edge_p4(path, g2);
    std::vector<Block> blocks{Block(c2), a[first_free]};
    for (int i = 0; i < m; ++i)
        if (!is_met(i) && i != first_free) blocks.push_back(a[i]);
    blocks.push_back(a[x]);
    blocks.push_back(Block(c));
    return interior_edge_p4(rearranged(path, std::move(blocks), "interior_edge_p4"), f);
}

Outcome Engine::red_split_edge_p4(const BlockPath& path, int l, VertexSet f) {
    require_state(path, 4, "red_split_edge_p4");
    if (l < 1 || l > s_ / 2) throw std::invalid_argument("red_split_edge_p4: need 1 <= l <= floor(s/2)");
    const VertexSet reservoir = path.reservoir();
    const VertexSet inside = path.covered();
    if (f.size() != 2 * s_ || (f & reservoir).size() != s_ - l || !path.universe.contains(f))
        throw std::invalid_argument("red_split_edge_p4: edge is not of type (s-l, s+l)");
    if (coloring_.color(f) != path_color_) throw std::invalid_argument("red_split_edge_p4: edge must have the path color");
    log("red_split_edge_p4", path, describe(f));

    // Every edge inside the blocks has the path color, so any partition of
    // them into s-sets is a path; pick one where f looks like {A_1, A_2', B'}.
    const VertexSet d = f & inside;
    const VertexSet a1 = d.smallest(s_);
    const VertexSet a2_in = d - a1;
    const VertexSet a2 = a2_in | (inside - d).smallest(s_ - l);
    std::vector<Block> blocks{Block(a1), Block(a2)};
    VertexSet left = inside - a1 - a2;
    while (!left.empty()) {
        blocks.push_back(Block(left.smallest(s_)));
        left -= left.smallest(s_);
    }
    const BlockPath p = rearranged(path, std::move(blocks), "red_split_edge_p4");
    const auto& a = p.blocks;

    const VertexSet b1 = f & reservoir;
    const VertexSet b2 = (reservoir - b1).smallest(l);
    const VertexSet a2_out = a2 - a2_in;
    const Block x = Block::join(b2, a2_out);
    const Block y = Block::join(b1, a2_in);
    if (red(a[2].set() | b2 | a2_out)) {
        std::vector<Block> up{x};
        up.insert(up.end(), a.begin() + 2, a.end());
        up.push_back(a[0]);
        up.push_back(y);
        return upgrade(p, std::move(up), "red_split_edge_p4");
    }
    if (red(b2 | a2_out | a[3].set())) {
        std::vector<Block> up{x, a[3], a[2]};
        up.insert(up.end(), a.begin() + 4, a.end());
        up.push_back(a[0]);
        up.push_back(y);
        return upgrade(p, std::move(up), "red_split_edge_p4");
    }
    const VertexSet a2b = a2_in.smallest(l - 1);
    return witness({a[0], Block::join(a2b, reservoir - b2), a[2], x, a[3]}, "red_split_edge_p4");
}

Outcome Engine::all_interior_red_p4(const BlockPath& path) {
    require_state(path, 4, "all_interior_red_p4");
    const VertexSet inside = path.covered();
    const VertexSet reservoir = path.reservoir();
    const bool has_target = for_each_subset(inside, 2 * s_, [&](VertexSet e) { return coloring_.color(e) != path_color_; });
    if (has_target) throw std::invalid_argument("all_interior_red_p4: some edge inside the blocks has the target color");
    log("all_interior_red_p4", path);
    if (auto o = probe_end_extensions(path)) return *o;

    std::optional<Outcome> out;
    for_each_subset(inside, s_, [&](VertexSet d) {
        return for_each_subset(reservoir, s_, [&](VertexSet b) {
            if (!red(d | b)) return false;
            std::vector<Block> blocks{Block(b), Block(d)};
            VertexSet left = inside - d;
            while (!left.empty()) {
                blocks.push_back(Block(left.smallest(s_)));
                left -= left.smallest(s_);
            }
            out = upgrade(path, std::move(blocks), "all_interior_red_p4");
            return true;
        });
    });
    if (out) return *out;

    for (int j = 1; j <= s_ / 2; ++j) {
        std::optional<VertexSet> found;
        for_each_subset(inside, s_ + j, [&](VertexSet d) {
            return for_each_subset(reservoir, s_ - j, [&](VertexSet b) {
                if (red(d | b)) {
                    found = d | b;
                    return true;
                }
                return false;
            });
        });
        if (found) return red_split_edge_p4(path, j, *found);
    }

    const auto& a = path.blocks;
    if (s_ % 2 == 1) {
        const int h = (s_ - 1) / 2;
        const VertexSet b1 = reservoir.smallest(h + 1);
        const VertexSet p1 = a[0].set().smallest(h);
        const VertexSet p2 = (a[0].set() - p1).smallest(h);
        return witness({a[1], Block::join(p1, b1), a[2], Block::join(p2, reservoir - b1), a[3]}, "all_interior_red_p4");
    }
    const int h = s_ / 2;
    const VertexSet b1 = reservoir.smallest(h);
    const VertexSet b2 = (reservoir - b1).smallest(h);
    const VertexSet a2 = a[1].set().smallest(h);
    return witness({a[0], Block::join(a2, b1), a[2], Block::join(a[1].set() - a2, b2), a[3]}, "all_interior_red_p4");
}

Outcome Engine::step_p4(const BlockPath& path) {
    require_state(path, 4, "step_p4");
    log("step_p4", path);
    if (auto o = probe_end_extensions(path)) return *o;
    const int m = path.m();
    for (int i = 0; i < m; ++i)
        for (int j = i + 2; j < m; ++j)
            if (blue(path.pair_edge(i, j))) return block_pair_p4(path, i, j);
    std::optional<VertexSet> f;
    for_each_subset(path.covered(), 2 * s_, [&](VertexSet e) {
        if (blue(e)) {
            f = e;
            return true;
        }
        return false;
    });
    if (f) return interior_edge_p4(path, *f);
    return all_interior_red_p4(path);
}

}  // namespace loosepath
