#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "loosepath/core.hpp"

namespace loosepath {

struct SearchBudget {
    std::uint64_t node_limit = 100'000'000;
    /// Seconds; 0 means no time limit.
    double time_limit = 0.0;
};

enum class SearchStatus { Found, Absent, Exhausted };

struct PathSearchResult {
    SearchStatus status = SearchStatus::Absent;
    std::optional<SPath> path;
    std::uint64_t nodes = 0;
};

struct CycleSearchResult {
    SearchStatus status = SearchStatus::Absent;
    std::optional<SCycle> cycle;
    std::uint64_t nodes = 0;
};

/// Lexicographically first monochromatic s-path of length k, where s is the
/// overlap of consecutive windows (r is taken from the coloring).
PathSearchResult find_mono_path(const Coloring& coloring, Color color, int s, int k,
                                const SearchBudget& budget = {});

CycleSearchResult find_mono_cycle(const Coloring& coloring, Color color, int s, int k,
                                  const SearchBudget& budget = {});

struct LongestPathResult {
    SearchStatus status = SearchStatus::Absent;  ///< Absent means "no edge of this color".
    std::optional<SPath> path;
    std::uint64_t nodes = 0;
};

LongestPathResult longest_mono_path(const Coloring& coloring, Color color, int s,
                                    const SearchBudget& budget = {});

/// Path search that treats vertices inside each class as interchangeable: each
/// piece only chooses how many vertices to draw from each class and takes the
/// smallest unused ones. Only meaningful when the coloring is invariant under
/// class-preserving permutations, see is_class_invariant.
PathSearchResult find_mono_path_by_classes(const Coloring& coloring, Color color, int s, int k,
                                           const std::vector<VertexSet>& classes,
                                           const SearchBudget& budget = {});

/// True when every edge's color depends only on how many vertices it takes
/// from each class. The classes must partition [N].
bool is_class_invariant(const Coloring& coloring, const std::vector<VertexSet>& classes);

}  // namespace loosepath
