#include "loosepath/search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

namespace loosepath {

namespace {

// Positions of the vertex sequence split into maximal runs that lie in the
// same set of windows. Vertices of one run are interchangeable, so the search
// picks a set per run (listed ascending) instead of an ordered tuple.
struct Layout {
    int length = 0;                     // number of positions
    std::vector<int> seg_start;         // first position of each run
    std::vector<int> seg_size;
    std::vector<std::vector<int>> windows;  // run indices of each window
    std::vector<std::vector<int>> due;      // windows completed by each run
};

Layout make_layout(int length, int r, int span, int k, bool cyclic) {
    Layout lay;
    lay.length = length;
    std::vector<int> cuts{0, length};
    for (int i = 0; i < k; ++i) {
        cuts.push_back((i * span) % length);
        const int end = i * span + r;
        cuts.push_back(cyclic ? end % length : std::min(end, length));
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<int> seg_of(static_cast<std::size_t>(length));
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
        lay.seg_start.push_back(cuts[c]);
        lay.seg_size.push_back(cuts[c + 1] - cuts[c]);
        for (int p = cuts[c]; p < cuts[c + 1]; ++p) seg_of[p] = static_cast<int>(c);
    }
    lay.due.resize(lay.seg_size.size());
    for (int i = 0; i < k; ++i) {
        std::vector<int> segs;
        for (int j = 0; j < r; ++j) segs.push_back(seg_of[(i * span + j) % length]);
        std::sort(segs.begin(), segs.end());
        segs.erase(std::unique(segs.begin(), segs.end()), segs.end());
        lay.due[segs.back()].push_back(i);
        lay.windows.push_back(std::move(segs));
    }
    return lay;
}

class Searcher {
public:
    Searcher(const Coloring& coloring, Color color, const Layout& lay, const SearchBudget& budget,
             const std::vector<VertexSet>* classes)
        : coloring_(coloring), color_(color), lay_(lay), budget_(budget), classes_(classes),
          chosen_(lay.seg_size.size()), start_(std::chrono::steady_clock::now()) {}

    SearchStatus run() {
        if (lay_.length > coloring_.n_vertices()) return SearchStatus::Absent;
        const bool found = descend(0, VertexSet());
        if (found) return SearchStatus::Found;
        return exhausted_ ? SearchStatus::Exhausted : SearchStatus::Absent;
    }

    std::vector<Vertex> sequence() const {
        std::vector<Vertex> out;
        for (VertexSet seg : chosen_)
            for (Vertex v : seg) out.push_back(v);
        return out;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    bool out_of_budget() {
        if (nodes_ >= budget_.node_limit) return true;
        if (budget_.time_limit > 0 && (nodes_ & 0xFFFF) == 0) {
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
            if (elapsed.count() > budget_.time_limit) return true;
        }
        return false;
    }

    bool windows_ok(std::size_t seg) const {
        for (int w : lay_.due[seg]) {
            VertexSet edge;
            for (int piece : lay_.windows[w]) edge |= chosen_[piece];
            if (coloring_.color(edge) != color_) return false;
        }
        return true;
    }

    bool descend(std::size_t seg, VertexSet used) {
        if (seg == chosen_.size()) return true;
        const VertexSet pool = VertexSet::prefix(coloring_.n_vertices()) - used;
        auto try_piece = [&](VertexSet piece) {
            if (exhausted_) return true;
            if (out_of_budget()) {
                exhausted_ = true;
                return true;
            }
            ++nodes_;
            chosen_[seg] = piece;
            return windows_ok(seg) && descend(seg + 1, used | piece);
        };
        const int size = lay_.seg_size[seg];
        if (classes_ == nullptr) {
            const bool stop = for_each_subset(pool, size, try_piece);
            return stop && !exhausted_;
        }
        return by_classes(pool, size, 0, VertexSet(), try_piece) && !exhausted_;
    }

    // Splits `size` among the classes, drawing the smallest unused vertices.
    template <typename Fn>
    bool by_classes(VertexSet pool, int size, std::size_t cls, VertexSet acc, Fn& fn) {
        if (cls == classes_->size()) return size == 0 && fn(acc);
        const VertexSet avail = pool & (*classes_)[cls];
        for (int take = std::min(size, avail.size()); take >= 0; --take)
            if (by_classes(pool, size - take, cls + 1, acc | avail.smallest(take), fn)) return true;
        return false;
    }

    const Coloring& coloring_;
    Color color_;
    const Layout& lay_;
    SearchBudget budget_;
    const std::vector<VertexSet>* classes_;
    std::vector<VertexSet> chosen_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

void check_shape(const Coloring& coloring, int s, int k) {
    if (s < 1 || s >= coloring.r()) throw std::invalid_argument("search: need 1 <= s <= r-1");
    if (k < 1) throw std::invalid_argument("search: need k >= 1");
}

PathSearchResult path_search(const Coloring& coloring, Color color, int s, int k, const SearchBudget& budget,
                             const std::vector<VertexSet>* classes) {
    check_shape(coloring, s, k);
    const int r = coloring.r();
    const Layout lay = make_layout(path_vertex_count(r, s, k), r, r - s, k, false);
    Searcher searcher(coloring, color, lay, budget, classes);
    PathSearchResult out;
    out.status = searcher.run();
    out.nodes = searcher.nodes();
    if (out.status == SearchStatus::Found) out.path = SPath{s, r, searcher.sequence()};
    return out;
}

}  // namespace

PathSearchResult find_mono_path(const Coloring& coloring, Color color, int s, int k, const SearchBudget& budget) {
    return path_search(coloring, color, s, k, budget, nullptr);
}

PathSearchResult find_mono_path_by_classes(const Coloring& coloring, Color color, int s, int k,
                                           const std::vector<VertexSet>& classes, const SearchBudget& budget) {
    return path_search(coloring, color, s, k, budget, &classes);
}

CycleSearchResult find_mono_cycle(const Coloring& coloring, Color color, int s, int k, const SearchBudget& budget) {
    check_shape(coloring, s, k);
    const int r = coloring.r();
    const int length = k * (r - s);
    if (length < r) throw std::invalid_argument("find_mono_cycle: cycle too short to realize");
    const Layout lay = make_layout(length, r, r - s, k, true);
    Searcher searcher(coloring, color, lay, budget, nullptr);
    CycleSearchResult out;
    out.status = searcher.run();
    out.nodes = searcher.nodes();
    if (out.status == SearchStatus::Found) out.cycle = SCycle{s, r, searcher.sequence()};
    return out;
}

LongestPathResult longest_mono_path(const Coloring& coloring, Color color, int s, const SearchBudget& budget) {
    const int r = coloring.r();
    LongestPathResult out;
    SearchBudget left = budget;
    for (int k = 1; path_vertex_count(r, s, k) <= coloring.n_vertices(); ++k) {
        PathSearchResult step = find_mono_path(coloring, color, s, k, left);
        out.nodes += step.nodes;
        left.node_limit = budget.node_limit > out.nodes ? budget.node_limit - out.nodes : 0;
        if (step.status == SearchStatus::Exhausted) {
            out.status = SearchStatus::Exhausted;
            return out;
        }
        if (step.status == SearchStatus::Absent) break;
        out.status = SearchStatus::Found;
        out.path = std::move(step.path);
    }
    return out;
}

bool is_class_invariant(const Coloring& coloring, const std::vector<VertexSet>& classes) {
    VertexSet all;
    for (VertexSet c : classes) {
        if (all.intersects(c)) throw std::invalid_argument("is_class_invariant: classes overlap");
        all |= c;
    }
    if (all != VertexSet::prefix(coloring.n_vertices()))
        throw std::invalid_argument("is_class_invariant: classes do not cover [N]");
    std::map<std::vector<int>, Color> seen;
    for (std::uint64_t rank = 0; rank < coloring.edge_count(); ++rank) {
        const VertexSet edge = edge_unrank(rank, coloring.n_vertices(), coloring.r());
        std::vector<int> counts;
        for (VertexSet c : classes) counts.push_back((edge & c).size());
        const auto [it, fresh] = seen.emplace(counts, coloring.at_rank(rank));
        if (!fresh && it->second != coloring.at_rank(rank)) return false;
    }
    return true;
}

}  // namespace loosepath
