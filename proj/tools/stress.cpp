// Stress driver for the extractor: biased random colorings and relabeled,
// multiply perturbed extremal colorings. Prints failures and how often each
// routine produced an upgrade or a witness.
#include <algorithm>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "loosepath/construct.hpp"
#include "loosepath/extract.hpp"
#include "loosepath/io.hpp"

using namespace loosepath;

namespace {

Coloring relabeled(const Coloring& c, const std::vector<Vertex>& perm) {
    Coloring out(c.n_vertices(), c.r());
    for (std::uint64_t rank = 0; rank < c.edge_count(); ++rank) {
        VertexSet image;
        for (Vertex v : edge_unrank(rank, c.n_vertices(), c.r())) image.insert(perm[v - 1]);
        out.set(image, c.at_rank(rank));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"extractor stress driver"};
    int s = 2;
    int n = 4;
    int target = 4;
    int rounds = 200;
    std::uint64_t seed = 0;
    int max_flips = 4;
    app.add_option("--s", s);
    app.add_option("--n", n);
    app.add_option("--target", target)->check(CLI::Range(3, 4));
    app.add_option("--rounds", rounds);
    app.add_option("--seed", seed);
    app.add_option("--max-flips", max_flips);
    CLI11_PARSE(app, argc, argv);

    const Params params = Params::for_extraction(s, n, target);
    std::mt19937_64 gen(seed);
    std::map<std::string, long> coverage;
    long tested = 0;
    long failures = 0;

    auto run = [&](const Coloring& c, const std::string& label) {
        ++tested;
        Trace trace;
        try {
            const Witness w = extract(c, n, s, target, &trace);
            if (auto defect = witness_defect(c, w, params)) throw SoundnessError(*defect);
        } catch (const std::exception& e) {
            if (++failures <= 5) std::cout << "FAIL " << label << ": " << e.what() << "\n" << coloring_to_json(c);
            return;
        }
        for (const auto& st : trace.steps) {
            if (st.note.rfind("upgrade", 0) == 0 || st.note.rfind("witness", 0) == 0)
                ++coverage[st.routine + " " + st.note.substr(0, 7) + " " + std::string(to_string(st.path_color))];
        }
    };

    const double densities[] = {0.02, 0.05, 0.1, 0.2, 0.35, 0.5, 0.65, 0.8, 0.9, 0.95, 0.98};
    std::vector<Vertex> perm(static_cast<std::size_t>(params.n_vertices));
    std::iota(perm.begin(), perm.end(), 1);
    for (int round = 0; round < rounds; ++round) {
        for (double p : densities) {
            std::bernoulli_distribution blue(p);
            Coloring c(params.n_vertices, params.r);
            for (std::uint64_t rank = 0; rank < c.edge_count(); ++rank)
                c.set_rank(rank, blue(gen) ? Color::Blue : Color::Red);
            run(c, "density " + std::to_string(p));
        }
        for (bool joins_a : {true, false}) {
            Coloring c = extended_lower_bound_coloring(params.r, s, n, target, joins_a);
            std::uniform_int_distribution<std::uint64_t> pick(0, c.edge_count() - 1);
            const int flips = std::uniform_int_distribution<int>(1, max_flips)(gen);
            for (int f = 0; f < flips; ++f) c.flip_rank(pick(gen));
            std::shuffle(perm.begin(), perm.end(), gen);
            run(relabeled(c, perm), "extremal " + std::string(joins_a ? "A" : "B") + " flips " + std::to_string(flips));
            run(relabeled(c.swapped(), perm), "swapped extremal");
        }
    }
    std::cout << "tested " << tested << " failures " << failures << "\n";
    for (const auto& [key, count] : coverage) std::cout << "  " << count << "\t" << key << "\n";
    return failures == 0 ? 0 : 1;
}
