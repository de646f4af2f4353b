#include "doctest.h"
#include "oracles.hpp"

#include <random>

#include "loosepath/construct.hpp"
#include "loosepath/search.hpp"

using namespace loosepath;

namespace {

Coloring random_graph(int n, int r, std::mt19937_64& gen, double blue) {
    std::bernoulli_distribution coin(blue);
    Coloring c(n, r);
    for (std::uint64_t i = 0; i < c.edge_count(); ++i) c.set_rank(i, coin(gen) ? Color::Blue : Color::Red);
    return c;
}

}  // namespace

TEST_CASE("path search examples") {
    const auto first = find_mono_path(Coloring(5, 2), Color::Red, 1, 3);
    REQUIRE(first.status == SearchStatus::Found);
    CHECK(first.path->vertices == std::vector<Vertex>{1, 2, 3, 4});

    const Coloring lb = lower_bound_coloring(2, 1, 3, 3);
    CHECK(find_mono_path(lb, Color::Red, 1, 3).status == SearchStatus::Absent);
    CHECK(find_mono_path(lb, Color::Blue, 1, 3).status == SearchStatus::Absent);

    CHECK(find_mono_path(Coloring(5, 2), Color::Red, 1, 5).status == SearchStatus::Absent);
}

TEST_CASE("path search matches the reference, first path included") {
    std::mt19937_64 gen(1);
    for (int round = 0; round < 200; ++round) {
        const int n = 5 + round % 3;
        const oracle::Painter painter(n, 2);
        const Coloring c = random_graph(n, 2, gen, 0.25 + 0.5 * (round % 2));
        for (Color col : {Color::Red, Color::Blue}) {
            for (int k = 1; k < n; ++k) {
                const auto expected = oracle::first_path(painter, c, 1, k, col);
                const auto got = find_mono_path(c, col, 1, k);
                REQUIRE((got.status == SearchStatus::Found) == expected.has_value());
                if (expected) REQUIRE(got.path->vertices == *expected);
            }
        }
    }
}

TEST_CASE("path search matches the reference for r = 4") {
    std::mt19937_64 gen(2);
    const oracle::Painter painter(8, 4);
    for (int round = 0; round < 40; ++round) {
        const Coloring c = random_graph(8, 4, gen, round % 2 ? 0.3 : 0.7);
        for (Color col : {Color::Red, Color::Blue}) {
            for (int k = 1; k <= 3; ++k) {
                const auto expected = oracle::first_path(painter, c, 2, k, col);
                const auto got = find_mono_path(c, col, 2, k);
                REQUIRE((got.status == SearchStatus::Found) == expected.has_value());
                if (got.path) REQUIRE(oracle::valid_path(painter, c, got.path->vertices, 2, k, col));
            }
        }
    }
}

TEST_CASE("exhausted budget is reported") {
    const Coloring lb = lower_bound_coloring(4, 2, 4, 4);
    const auto res = find_mono_path(lb, Color::Red, 2, 4, SearchBudget{10, 0.0});
    CHECK(res.status == SearchStatus::Exhausted);
    CHECK_FALSE(res.path.has_value());
}

TEST_CASE("longest path examples") {
    CHECK(longest_mono_path(Coloring(9, 4, Color::Blue), Color::Red, 2).status == SearchStatus::Absent);

    const auto all_red = longest_mono_path(Coloring(5, 2), Color::Red, 1);
    REQUIRE(all_red.path.has_value());
    CHECK(all_red.path->length() == 4);

    const auto lb = longest_mono_path(lower_bound_coloring(2, 1, 4, 3), Color::Red, 1);
    REQUIRE(lb.path.has_value());
    CHECK(lb.path->length() == 3);
}

TEST_CASE("longest path matches the reference") {
    std::mt19937_64 gen(3);
    for (int round = 0; round < 60; ++round) {
        const oracle::Painter painter(6, 2);
        const Coloring c = random_graph(6, 2, gen, 0.2 + 0.1 * (round % 7));
        for (Color col : {Color::Red, Color::Blue}) {
            const auto got = longest_mono_path(c, col, 1);
            const int expected = oracle::longest(painter, c, 1, col);
            REQUIRE((got.path ? got.path->length() : 0) == expected);
            if (got.path) REQUIRE(oracle::valid_path(painter, c, got.path->vertices, 1, expected, col));
        }
    }
}

TEST_CASE("cycle search examples") {
    const auto tri = find_mono_cycle(Coloring(5, 2), Color::Red, 1, 3);
    REQUIRE(tri.status == SearchStatus::Found);
    CHECK(tri.cycle->vertices == std::vector<Vertex>{1, 2, 3});

    CHECK(find_mono_cycle(Coloring(5, 2, Color::Blue), Color::Red, 1, 3).status == SearchStatus::Absent);

    Coloring only(5, 2, Color::Blue);
    only.set({1, 2}, Color::Red);
    only.set({2, 3}, Color::Red);
    only.set({1, 3}, Color::Red);
    const auto one = find_mono_cycle(only, Color::Red, 1, 3);
    REQUIRE(one.status == SearchStatus::Found);
    CHECK(one.cycle->vertices == std::vector<Vertex>{1, 2, 3});
    CHECK(is_mono_cycle(only, *one.cycle, Color::Red));
}

TEST_CASE("cycle search matches the reference") {
    std::mt19937_64 gen(4);
    const oracle::Painter painter(6, 2);
    for (int round = 0; round < 60; ++round) {
        const Coloring c = random_graph(6, 2, gen, 0.5);
        for (Color col : {Color::Red, Color::Blue}) {
            for (int k = 3; k <= 6; ++k) {
                const auto got = find_mono_cycle(c, col, 1, k);
                REQUIRE((got.status == SearchStatus::Found) == oracle::has_cycle(painter, c, k, col));
                if (got.cycle) REQUIRE(is_mono_cycle(c, *got.cycle, col));
            }
        }
    }
}

TEST_CASE("class-reduced search agrees with plain search on invariant colorings") {
    for (int n = 3; n <= 5; ++n) {
        for (int m = 3; m <= std::min(n, 4); ++m) {
            const Coloring c = lower_bound_coloring(4, 2, n, m);
            const int a = lower_bound_a_size(4, 2, n);
            const std::vector<VertexSet> classes{VertexSet::prefix(a), VertexSet::prefix(c.n_vertices()) - VertexSet::prefix(a)};
            REQUIRE(is_class_invariant(c, classes));
            for (Color col : {Color::Red, Color::Blue}) {
                for (int k = 1; k <= 3; ++k) {
                    const auto plain = find_mono_path(c, col, 2, k);
                    const auto reduced = find_mono_path_by_classes(c, col, 2, k, classes);
                    CHECK(plain.status == reduced.status);
                    if (reduced.path) CHECK(is_mono_path(c, *reduced.path, col));
                }
            }
        }
    }
    Coloring broken = lower_bound_coloring(4, 2, 3, 3);
    broken.flip_rank(0);
    CHECK_FALSE(is_class_invariant(broken, {VertexSet::prefix(7), VertexSet{8}}));
}
