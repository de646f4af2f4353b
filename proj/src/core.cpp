#include "loosepath/core.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace loosepath {

namespace {

constexpr std::uint64_t kMaxEdges = std::uint64_t{1} << 34;

const std::array<std::array<std::uint64_t, 65>, 65>& binomial_table() {
    static const auto table = [] {
        std::array<std::array<std::uint64_t, 65>, 65> t{};
        for (int n = 0; n <= 64; ++n) {
            t[n][0] = 1;
            for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
        }
        return t;
    }();
    return table;
}

}  // namespace

std::string_view to_string(Color c) { return c == Color::Red ? "red" : "blue"; }

Color color_from_string(std::string_view name) {
    if (name == "red") return Color::Red;
    if (name == "blue") return Color::Blue;
    throw std::invalid_argument("unknown color '" + std::string(name) + "'");
}

std::uint64_t binomial(int n, int k) {
    if (n < 0 || n > 64) throw std::out_of_range("binomial: n outside 0..64");
    if (k < 0 || k > n) return 0;
    return binomial_table()[n][k];
}

int path_vertex_count(int r, int s, int k) {
    if (s < 1 || s > r - 1) throw std::invalid_argument("path_vertex_count: need 1 <= s <= r-1");
    if (k < 1) throw std::invalid_argument("path_vertex_count: need k >= 1");
    return s + k * (r - s);
}

std::uint64_t edge_rank(VertexSet edge, int n_vertices, int r) {
    if (n_vertices < 1 || n_vertices > kMaxVertices || r < 1 || r > n_vertices)
        throw std::invalid_argument("edge_rank: bad dimensions");
    if (edge.size() != r || (edge - VertexSet::prefix(n_vertices)).size() != 0)
        throw std::invalid_argument("edge_rank: malformed edge");
    std::uint64_t rank = 0;
    int i = 1;
    for (Vertex v : edge) rank += binomial(v - 1, i++);
    return rank;
}

VertexSet edge_unrank(std::uint64_t rank, int n_vertices, int r) {
    if (n_vertices < 1 || n_vertices > kMaxVertices || r < 1 || r > n_vertices)
        throw std::invalid_argument("edge_unrank: bad dimensions");
    if (rank >= binomial(n_vertices, r)) throw std::out_of_range("edge_unrank: rank out of range");
    VertexSet out;
    int top = n_vertices;
    for (int i = r; i >= 1; --i) {
        // largest v with C(v-1, i) <= rank
        int v = top;
        while (binomial(v - 1, i) > rank) --v;
        out.insert(v);
        rank -= binomial(v - 1, i);
        top = v - 1;
    }
    return out;
}

Coloring::Coloring(int n_vertices, int r, Color fill) : n_(n_vertices), r_(r) {
    if (n_vertices < 1 || n_vertices > kMaxVertices) throw std::invalid_argument("Coloring: N outside 1..64");
    if (r < 1 || r > n_vertices) throw std::invalid_argument("Coloring: need 1 <= r <= N");
    edges_ = binomial(n_vertices, r);
    if (edges_ > kMaxEdges) throw std::invalid_argument("Coloring: too many edges to store");
    words_.assign((edges_ + 63) / 64, fill == Color::Blue ? ~std::uint64_t{0} : 0);
    if (fill == Color::Blue && (edges_ & 63) != 0) words_.back() &= (std::uint64_t{1} << (edges_ & 63)) - 1;
}

void Coloring::set_rank(std::uint64_t rank, Color c) {
    const std::uint64_t bit = std::uint64_t{1} << (rank & 63);
    if (c == Color::Blue)
        words_[rank >> 6] |= bit;
    else
        words_[rank >> 6] &= ~bit;
}

std::uint64_t Coloring::rank_of(VertexSet edge) const {
    std::uint64_t rank = 0;
    int i = 1;
    for (Vertex v : edge) rank += binomial(v - 1, i++);
    if (i - 1 != r_ || edge.max() > n_) throw std::invalid_argument("Coloring: edge is not an r-subset of [N]");
    return rank;
}

Color Coloring::color(VertexSet edge) const { return at_rank(rank_of(edge)); }

Coloring Coloring::restricted(int n) const {
    if (n < r_ || n > n_) throw std::invalid_argument("Coloring::restricted: need r <= n <= N");
    Coloring out(n, r_);
    for (std::size_t w = 0; w < out.words_.size(); ++w) out.words_[w] = words_[w];
    if ((out.edges_ & 63) != 0) out.words_.back() &= (std::uint64_t{1} << (out.edges_ & 63)) - 1;
    return out;
}

Coloring Coloring::swapped() const {
    Coloring out = *this;
    for (auto& w : out.words_) w = ~w;
    if ((edges_ & 63) != 0) out.words_.back() &= (std::uint64_t{1} << (edges_ & 63)) - 1;
    return out;
}

void Coloring::assign_words(std::vector<std::uint64_t> words) {
    if (words.size() != words_.size()) throw std::invalid_argument("Coloring: word count mismatch");
    if ((edges_ & 63) != 0 && (words.back() >> (edges_ & 63)) != 0)
        throw std::invalid_argument("Coloring: bits set beyond the last edge");
    words_ = std::move(words);
}

int SPath::length() const {
    const int span = r - s;
    if (s < 1 || span < 1) return -1;
    const int count = static_cast<int>(vertices.size());
    if (count < s + span || (count - s) % span != 0) return -1;
    return (count - s) / span;
}

SPath SPath::reversed() const {
    SPath out = *this;
    std::reverse(out.vertices.begin(), out.vertices.end());
    return out;
}

int SCycle::length() const {
    const int span = r - s;
    if (s < 1 || span < 1) return -1;
    const int count = static_cast<int>(vertices.size());
    if (count == 0 || count % span != 0) return -1;
    return count / span;
}

std::vector<VertexSet> windows_of(const SPath& path) {
    const int k = path.length();
    if (k < 1) throw std::invalid_argument("windows_of: malformed s-path");
    const int span = path.r - path.s;
    std::vector<VertexSet> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        VertexSet w;
        for (int j = 0; j < path.r; ++j) w.insert(path.vertices[i * span + j]);
        out.push_back(w);
    }
    return out;
}

std::vector<VertexSet> windows_of(const SCycle& cycle) {
    const int k = cycle.length();
    if (k < 1) throw std::invalid_argument("windows_of: malformed s-cycle");
    const int span = cycle.r - cycle.s;
    const int count = static_cast<int>(cycle.vertices.size());
    std::vector<VertexSet> out;
    for (int i = 0; i < k; ++i) {
        VertexSet w;
        for (int j = 0; j < cycle.r; ++j) w.insert(cycle.vertices[(i * span + j) % count]);
        out.push_back(w);
    }
    return out;
}

Block::Block(VertexSet set) : order_(set.to_vector()), set_(set) {}

Block Block::join(VertexSet first, VertexSet second) {
    if (first.intersects(second)) throw std::invalid_argument("Block::join: overlapping pieces");
    Block b;
    b.order_ = first.to_vector();
    for (Vertex v : second) b.order_.push_back(v);
    b.set_ = first | second;
    return b;
}

Block Block::from_vertices(std::vector<Vertex> order) {
    Block b;
    b.set_ = VertexSet::from_vector(order);
    if (b.set_.size() != static_cast<int>(order.size())) throw std::invalid_argument("Block: repeated vertex");
    b.order_ = std::move(order);
    return b;
}

VertexSet BlockPath::covered() const {
    VertexSet out;
    for (const auto& b : blocks) out |= b.set();
    return out;
}

BlockPath BlockPath::reversed() const {
    BlockPath out = *this;
    std::reverse(out.blocks.begin(), out.blocks.end());
    return out;
}

SPath BlockPath::to_spath(int s) const {
    SPath p{s, 2 * s, {}};
    for (const auto& b : blocks) p.vertices.insert(p.vertices.end(), b.vertices().begin(), b.vertices().end());
    return p;
}

BlockPath block_path_from(const SPath& path, VertexSet universe) {
    if (path.r != 2 * path.s || path.length() < 1) throw std::invalid_argument("block_path_from: need r = 2s");
    BlockPath out;
    out.universe = universe;
    for (std::size_t i = 0; i < path.vertices.size(); i += static_cast<std::size_t>(path.s)) {
        out.blocks.push_back(Block::from_vertices(
            std::vector<Vertex>(path.vertices.begin() + static_cast<std::ptrdiff_t>(i),
                                path.vertices.begin() + static_cast<std::ptrdiff_t>(i) + path.s)));
    }
    return out;
}

bool is_valid_block_path(const BlockPath& path, const Coloring& coloring, int s, Color color) {
    if (path.m() < 1) return false;
    if (!VertexSet::prefix(coloring.n_vertices()).contains(path.universe)) return false;
    VertexSet seen;
    for (const auto& b : path.blocks) {
        if (b.size() != s || b.set().size() != s) return false;
        if (seen.intersects(b.set()) || !path.universe.contains(b.set())) return false;
        seen |= b.set();
    }
    for (int i = 0; i + 1 < path.m(); ++i)
        if (coloring.color(path.pair_edge(i, i + 1)) != color) return false;
    return true;
}

Params Params::for_extraction(int s, int n, int target_m) {
    Params p{s, 2 * s, n, target_m, 0};
    p.n_vertices = target_m == 2 ? (n + 1) * s : (n + 1) * s + 1;
    p.validate();
    return p;
}

void Params::validate() const {
    if (s < 1) throw std::invalid_argument("params: s must be positive");
    if (r != 2 * s) throw std::invalid_argument("params: r must equal 2s");
    if (target_m < 2 || target_m > 4) throw std::invalid_argument("params: target must be 2, 3 or 4");
    if (n < target_m) throw std::invalid_argument("params: need n >= target length");
    if (n_vertices < r || n_vertices > kMaxVertices) throw std::invalid_argument("params: N out of range");
}

// The checker works from the raw vertex sequence with its own window
// arithmetic; it does not reuse Block/BlockPath or VertexSet unions.
std::optional<std::string> witness_defect(const Coloring& coloring, const Witness& witness, const Params& params) {
    const SPath& path = witness.path;
    if (coloring.n_vertices() != params.n_vertices || coloring.r() != params.r)
        throw std::invalid_argument("check_witness: coloring dimensions do not match params");
    if (path.s != params.s || path.r != params.r)
        throw std::invalid_argument("check_witness: witness dimensions do not match params");
    const int want = witness.color == Color::Red ? params.n : params.target_m;
    const int span = path.r - path.s;
    const auto count = static_cast<int>(path.vertices.size());
    if (count != path.s + want * span)
        return "vertex count " + std::to_string(count) + " does not match length " + std::to_string(want);
    std::set<Vertex> distinct;
    for (Vertex v : path.vertices) {
        if (v < 1 || v > params.n_vertices) return "vertex " + std::to_string(v) + " outside [N]";
        if (!distinct.insert(v).second) return "repeated vertex " + std::to_string(v);
    }
    for (int i = 0; i < want; ++i) {
        std::vector<Vertex> window(path.vertices.begin() + i * span, path.vertices.begin() + i * span + path.r);
        std::sort(window.begin(), window.end());
        std::uint64_t rank = 0;
        for (int j = 0; j < path.r; ++j) rank += binomial(window[j] - 1, j + 1);
        if (coloring.at_rank(rank) != witness.color)
            return "window " + std::to_string(i) + " is " + std::string(to_string(coloring.at_rank(rank)));
    }
    return std::nullopt;
}

bool check_witness(const Coloring& coloring, const Witness& witness, const Params& params) {
    return !witness_defect(coloring, witness, params).has_value();
}

bool is_mono_path(const Coloring& coloring, const SPath& path, Color color) {
    if (path.r != coloring.r() || path.length() < 1) return false;
    std::set<Vertex> distinct;
    for (Vertex v : path.vertices)
        if (v < 1 || v > coloring.n_vertices() || !distinct.insert(v).second) return false;
    for (VertexSet w : windows_of(path))
        if (coloring.color(w) != color) return false;
    return true;
}

bool is_mono_cycle(const Coloring& coloring, const SCycle& cycle, Color color) {
    if (cycle.r != coloring.r() || cycle.length() < 1) return false;
    if (static_cast<int>(cycle.vertices.size()) < cycle.r) return false;
    std::set<Vertex> distinct;
    for (Vertex v : cycle.vertices)
        if (v < 1 || v > coloring.n_vertices() || !distinct.insert(v).second) return false;
    for (VertexSet w : windows_of(cycle))
        if (w.size() != cycle.r || coloring.color(w) != color) return false;
    return true;
}

}  // namespace loosepath
