#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "loosepath/core.hpp"
#include "loosepath/search.hpp"

namespace loosepath {

struct Exemplar {
    Coloring coloring;
    std::string reason;
};

struct Report {
    std::string campaign;
    std::vector<std::pair<std::string, std::int64_t>> params;
    std::uint64_t tested = 0;
    std::uint64_t failures = 0;
    /// Ordered by coloring index (exhaustive) or trial number; at most the cap.
    std::vector<Exemplar> exemplars;
    /// "pass", "fail" or "inconclusive".
    std::string status = "pass";
    std::vector<std::pair<std::string, std::string>> notes;
    double wall_seconds = 0.0;

    bool passed() const { return status == "pass"; }
    /// Wall time is only written when asked for, so that reports of identical
    /// runs compare byte-for-byte.
    std::string to_json(bool with_timing = false) const;
};

struct CampaignOptions {
    int threads = 0;  ///< 0: hardware concurrency
    std::size_t exemplar_cap = 16;
};

/// The coloring of K^2_N whose blue edges are the set bits of `index` (bit i =
/// colex rank i). Requires C(N, 2) <= 63.
Coloring graph_coloring_from_index(int n_vertices, std::uint64_t index);

/// Every 2-coloring of K^2_{n+2}, extractor plus independent checker.
Report exhaustive_verify(int n, int target, const CampaignOptions& options = {});

/// Uniform colorings of K^{2s}_N drawn from std::mt19937_64(seed); each
/// 64-bit output fills the next 64 colex ranks, low bit first.
Report random_trials(int s, int n, int target, std::uint64_t trials, std::uint64_t seed,
                     const CampaignOptions& options = {});
Coloring random_coloring(int n_vertices, int r, std::mt19937_64& gen);

/// No red P_n and no blue P_m in lower_bound_coloring(r, s, n, m).
Report lower_bound_check(int r, int s, int n, int m, const SearchBudget& budget = {1'000'000, 0.0});

/// Every single-edge flip of both one-vertex extensions of
/// lower_bound_coloring(2s, s, n, m), extracted with target m (3 or 4).
/// Exemplars list the extension side and flipped rank in the reason.
Report perturbation_check(int s, int n, int m, const CampaignOptions& options = {});

/// Extractor colors against brute-force existence for every coloring of K^2_{n+2}.
Report oracle_consistency(int n, int target, const CampaignOptions& options = {});

}  // namespace loosepath
