#pragma once
// Reference implementations used only by the tests. They share nothing with
// the library beyond Coloring::at_rank and plain vectors, and favor obvious
// code over speed.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "loosepath/core.hpp"

namespace oracle {

using Subset = std::vector<int>;

// All k-subsets of [n] as ascending vectors, in lexicographic order.
inline std::vector<Subset> subsets(int n, int k) {
    std::vector<Subset> out;
    Subset cur;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v <= n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

// Colex position of every r-subset of [n]: sort by the reversed vertex list.
inline std::map<Subset, std::uint64_t> colex_table(int n, int r) {
    auto all = subsets(n, r);
    std::sort(all.begin(), all.end(), [](const Subset& a, const Subset& b) {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    std::map<Subset, std::uint64_t> out;
    for (std::uint64_t i = 0; i < all.size(); ++i) out[all[i]] = i;
    return out;
}

struct Painter {
    int n;
    int r;
    std::map<Subset, std::uint64_t> table;

    Painter(int n_, int r_) : n(n_), r(r_), table(colex_table(n_, r_)) {}

    loosepath::Color color(const loosepath::Coloring& c, Subset e) const {
        std::sort(e.begin(), e.end());
        return c.at_rank(table.at(e));
    }
    void set(loosepath::Coloring& c, Subset e, loosepath::Color col) const {
        std::sort(e.begin(), e.end());
        c.set_rank(table.at(e), col);
    }
};

// Windows of a vertex sequence with overlap s and edge size 2s.
inline std::vector<Subset> windows(const std::vector<int>& v, int s) {
    std::vector<Subset> out;
    for (std::size_t start = 0; start + 2 * s <= v.size(); start += s) {
        Subset w(v.begin() + static_cast<long>(start), v.begin() + static_cast<long>(start) + 2 * s);
        std::sort(w.begin(), w.end());
        out.push_back(w);
    }
    return out;
}

// Witness check from scratch: distinct in-range vertices, (k+1)s of them,
// every window of the claimed color.
inline bool valid_path(const Painter& p, const loosepath::Coloring& c, const std::vector<int>& v, int s, int k,
                       loosepath::Color color) {
    if (static_cast<int>(v.size()) != (k + 1) * s) return false;
    std::vector<int> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    if (sorted.front() < 1 || sorted.back() > p.n) return false;
    for (const auto& w : windows(v, s))
        if (p.color(c, w) != color) return false;
    return true;
}

// First monochromatic path of length k in lexicographic order of the vertex
// sequence, where each block is listed ascending. Exhaustive.
inline std::optional<std::vector<int>> first_path(const Painter& p, const loosepath::Coloring& c, int s, int k,
                                                  loosepath::Color color) {
    const auto blocks = subsets(p.n, s);
    std::vector<int> seq;
    std::vector<bool> used(static_cast<std::size_t>(p.n) + 1, false);
    std::optional<std::vector<int>> found;
    std::function<bool(int)> rec = [&](int placed) {
        if (placed == k + 1) {
            found = seq;
            return true;
        }
        for (const auto& b : blocks) {
            if (std::any_of(b.begin(), b.end(), [&](int v) { return used[v]; })) continue;
            if (placed > 0) {
                Subset e(seq.end() - s, seq.end());
                e.insert(e.end(), b.begin(), b.end());
                if (p.color(c, e) != color) continue;
            }
            for (int v : b) used[v] = true;
            seq.insert(seq.end(), b.begin(), b.end());
            if (rec(placed + 1)) return true;
            seq.resize(seq.size() - s);
            for (int v : b) used[v] = false;
        }
        return false;
    };
    rec(0);
    return found;
}

// Longest monochromatic path length, 0 when the color has no edge.
inline int longest(const Painter& p, const loosepath::Coloring& c, int s, loosepath::Color color) {
    int best = 0;
    for (int k = 1; (k + 1) * s <= p.n; ++k) {
        if (!first_path(p, c, s, k, color)) break;
        best = k;
    }
    return best;
}

// Graph case only: a monochromatic cycle on k distinct vertices.
inline bool has_cycle(const Painter& p, const loosepath::Coloring& c, int k, loosepath::Color color) {
    for (const auto& set : subsets(p.n, k)) {
        std::vector<int> perm = set;
        do {
            if (perm[0] != set[0]) break;
            bool ok = true;
            for (int i = 0; i < k && ok; ++i) ok = p.color(c, {perm[i], perm[(i + 1) % k]}) == color;
            if (ok) return true;
        } while (std::next_permutation(perm.begin() + 1, perm.end()));
    }
    return false;
}

}  // namespace oracle
