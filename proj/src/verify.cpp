#include "loosepath/verify.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "loosepath/construct.hpp"
#include "loosepath/extract.hpp"
#include "loosepath/io.hpp"

namespace loosepath {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Failure {
    std::uint64_t index;
    std::string reason;
};

// Runs check(index) over [0, count) split into contiguous slices, one per
// worker. Failures are merged and ordered by index.
template <typename Check>
std::vector<Failure> sweep(std::uint64_t count, const CampaignOptions& options, Check check) {
    unsigned workers = options.threads > 0 ? static_cast<unsigned>(options.threads) : std::thread::hardware_concurrency();
    workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::uint64_t>(count, 64))));
    std::vector<std::vector<Failure>> found(workers);
    auto work = [&](unsigned w) {
        const std::uint64_t lo = count * w / workers;
        const std::uint64_t hi = count * (w + 1) / workers;
        for (std::uint64_t i = lo; i < hi; ++i) {
            std::string reason = check(i);
            if (!reason.empty()) found[w].push_back({i, std::move(reason)});
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    std::vector<Failure> out;
    for (auto& f : found) out.insert(out.end(), std::make_move_iterator(f.begin()), std::make_move_iterator(f.end()));
    return out;
}

std::string run_extraction(const Coloring& coloring, int n, int s, int target, Color* color_out = nullptr) {
    try {
        const Witness w = extract(coloring, n, s, target);
        const Params params = target == 2 ? Params{s, 2 * s, n, 2, (n + 1) * s} : Params::for_extraction(s, n, target);
        if (auto defect = witness_defect(coloring, w, params)) return "checker rejected witness: " + *defect;
        if (color_out != nullptr) *color_out = w.color;
        return {};
    } catch (const SoundnessError& e) {
        return std::string("soundness: ") + e.what();
    } catch (const std::exception& e) {
        return std::string("error: ") + e.what();
    }
}

void check_exhaustive_params(int n, int target) {
    if (target == 3 && (n < 3 || n > 5)) throw std::invalid_argument("exhaustive p3 needs 3 <= n <= 5");
    if (target == 4 && (n < 4 || n > 5)) throw std::invalid_argument("exhaustive p4 needs n in {4, 5}");
    if (target != 3 && target != 4) throw std::invalid_argument("exhaustive target must be p3 or p4");
}

}  // namespace

Coloring graph_coloring_from_index(int n_vertices, std::uint64_t index) {
    Coloring c(n_vertices, 2);
    if (c.edge_count() > 63) throw std::invalid_argument("graph_coloring_from_index: too many edges");
    if (index >> c.edge_count()) throw std::out_of_range("graph_coloring_from_index: index out of range");
    c.assign_words({index});
    return c;
}

Coloring random_coloring(int n_vertices, int r, std::mt19937_64& gen) {
    Coloring c(n_vertices, r);
    std::vector<std::uint64_t> words(c.words().size());
    for (auto& w : words) w = gen();
    if ((c.edge_count() & 63) != 0) words.back() &= (std::uint64_t{1} << (c.edge_count() & 63)) - 1;
    c.assign_words(std::move(words));
    return c;
}

Report exhaustive_verify(int n, int target, const CampaignOptions& options) {
    check_exhaustive_params(n, target);
    const auto start = Clock::now();
    const int nv = n + 2;
    const std::uint64_t count = std::uint64_t{1} << binomial(nv, 2);
    Report report;
    report.campaign = "exhaustive";
    report.params = {{"s", 1}, {"n", n}, {"target", target}, {"n_vertices", nv}};
    auto failures = sweep(count, options, [&](std::uint64_t i) {
        return run_extraction(graph_coloring_from_index(nv, i), n, 1, target);
    });
    report.tested = count;
    report.failures = failures.size();
    report.status = failures.empty() ? "pass" : "fail";
    for (std::size_t k = 0; k < failures.size() && k < options.exemplar_cap; ++k)
        report.exemplars.push_back({graph_coloring_from_index(nv, failures[k].index), failures[k].reason});
    report.wall_seconds = seconds_since(start);
    return report;
}

Report random_trials(int s, int n, int target, std::uint64_t trials, std::uint64_t seed, const CampaignOptions& options) {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (target < 2 || target > 4) throw std::invalid_argument("target must be p2, p3 or p4");
    const Params params = target == 2 ? Params{s, 2 * s, n, 2, (n + 1) * s} : Params::for_extraction(s, n, target);
    params.validate();
    const auto start = Clock::now();
    std::mt19937_64 gen(seed);
    std::vector<Coloring> colorings;
    colorings.reserve(trials);
    for (std::uint64_t t = 0; t < trials; ++t) colorings.push_back(random_coloring(params.n_vertices, params.r, gen));
    Report report;
    report.campaign = "trials";
    report.params = {{"s", s}, {"n", n}, {"target", target}, {"trials", static_cast<std::int64_t>(trials)},
                     {"seed", static_cast<std::int64_t>(seed)}};
    auto failures = sweep(trials, options, [&](std::uint64_t t) { return run_extraction(colorings[t], n, s, target); });
    report.tested = trials;
    report.failures = failures.size();
    report.status = failures.empty() ? "pass" : "fail";
    for (std::size_t k = 0; k < failures.size() && k < options.exemplar_cap; ++k)
        report.exemplars.push_back({colorings[failures[k].index], failures[k].reason});
    report.wall_seconds = seconds_since(start);
    return report;
}

Report lower_bound_check(int r, int s, int n, int m, const SearchBudget& budget) {
    const auto start = Clock::now();
    const Coloring coloring = lower_bound_coloring(r, s, n, m);
    const int a_size = lower_bound_a_size(r, s, n);
    const std::vector<VertexSet> classes{VertexSet::prefix(a_size),
                                         VertexSet::prefix(coloring.n_vertices()) - VertexSet::prefix(a_size)};
    Report report;
    report.campaign = "lower-bound";
    report.params = {{"r", r}, {"s", s}, {"n", n}, {"m", m}, {"n_vertices", coloring.n_vertices()}};
    report.tested = 1;
    bool inconclusive = false;
    bool symmetric = false;

    auto absent = [&](Color color, int k, const char* label) {
        PathSearchResult res = find_mono_path(coloring, color, s, k, budget);
        std::string method = "plain";
        if (res.status == SearchStatus::Exhausted) {
            // The coloring only depends on how many vertices an edge takes
            // from A and from B; confirm that, then search up to that symmetry.
            if (!symmetric) symmetric = is_class_invariant(coloring, classes);
            if (symmetric) {
                res = find_mono_path_by_classes(coloring, color, s, k, classes, SearchBudget{});
                method = "class-reduced";
            }
        }
        report.notes.emplace_back(std::string(label) + "_method", method);
        if (res.status == SearchStatus::Found) {
            report.failures += 1;
            report.exemplars.push_back({coloring, std::string("found a ") + std::string(to_string(color)) +
                                                      " path of length " + std::to_string(k)});
        } else if (res.status == SearchStatus::Exhausted) {
            inconclusive = true;
            report.notes.emplace_back(std::string(label) + "_result", "budget exhausted");
        }
    };
    absent(Color::Red, n, "red");
    absent(Color::Blue, m, "blue");
    report.status = report.failures > 0 ? "fail" : inconclusive ? "inconclusive" : "pass";
    report.wall_seconds = seconds_since(start);
    return report;
}

Report perturbation_check(int s, int n, int m, const CampaignOptions& options) {
    if (m != 3 && m != 4) throw std::invalid_argument("perturbation target m must be 3 or 4");
    const Params params = Params::for_extraction(s, n, m);
    params.validate();
    const auto start = Clock::now();
    const Coloring bases[2] = {extended_lower_bound_coloring(2 * s, s, n, m, true),
                               extended_lower_bound_coloring(2 * s, s, n, m, false)};
    if (bases[0].n_vertices() != params.n_vertices)
        throw std::invalid_argument("extended construction does not have the extraction vertex count");
    const std::uint64_t edges = bases[0].edge_count();
    Report report;
    report.campaign = "perturbation";
    report.params = {{"s", s}, {"n", n}, {"m", m}, {"n_vertices", params.n_vertices}};
    auto flipped = [&](std::uint64_t i) {
        Coloring c = bases[i / edges];
        c.flip_rank(i % edges);
        return c;
    };
    auto failures = sweep(2 * edges, options, [&](std::uint64_t i) -> std::string {
        std::string err = run_extraction(flipped(i), n, s, m);
        if (err.empty()) return err;
        return std::string(i < edges ? "joins A" : "joins B") + ", flip rank " + std::to_string(i % edges) + ": " + err;
    });
    report.tested = 2 * edges;
    report.failures = failures.size();
    report.status = failures.empty() ? "pass" : "fail";
    for (std::size_t k = 0; k < failures.size() && k < options.exemplar_cap; ++k)
        report.exemplars.push_back({flipped(failures[k].index), failures[k].reason});
    report.wall_seconds = seconds_since(start);
    return report;
}

Report oracle_consistency(int n, int target, const CampaignOptions& options) {
    check_exhaustive_params(n, target);
    const int nv = n + 2;
    if (nv > 7) throw std::invalid_argument("oracle consistency needs N <= 7");
    const auto start = Clock::now();
    const std::uint64_t count = std::uint64_t{1} << binomial(nv, 2);
    Report report;
    report.campaign = "oracle";
    report.params = {{"s", 1}, {"n", n}, {"target", target}, {"n_vertices", nv}};
    auto failures = sweep(count, options, [&](std::uint64_t i) -> std::string {
        const Coloring c = graph_coloring_from_index(nv, i);
        Color got = Color::Red;
        std::string err = run_extraction(c, n, 1, target, &got);
        if (!err.empty()) return err;
        const bool red_exists = find_mono_path(c, Color::Red, 1, n).status == SearchStatus::Found;
        const bool blue_exists = find_mono_path(c, Color::Blue, 1, target).status == SearchStatus::Found;
        if (!red_exists && got != Color::Blue) return "oracle finds no red path but extractor returned red";
        if (!blue_exists && got != Color::Red) return "oracle finds no blue path but extractor returned blue";
        return {};
    });
    report.tested = count;
    report.failures = failures.size();
    report.status = failures.empty() ? "pass" : "fail";
    for (std::size_t k = 0; k < failures.size() && k < options.exemplar_cap; ++k)
        report.exemplars.push_back({graph_coloring_from_index(nv, failures[k].index), failures[k].reason});
    report.wall_seconds = seconds_since(start);
    return report;
}

std::string Report::to_json(bool with_timing) const {
    nlohmann::ordered_json j;
    j["campaign"] = campaign;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [k, v] : params) p[k] = v;
    j["params"] = p;
    j["status"] = status;
    j["tested"] = tested;
    j["failures"] = failures;
    j["exemplars"] = nlohmann::ordered_json::array();
    for (const auto& e : exemplars) {
        nlohmann::ordered_json x = nlohmann::ordered_json::parse(coloring_to_json(e.coloring));
        x["reason"] = e.reason;
        j["exemplars"].push_back(std::move(x));
    }
    if (!notes.empty()) {
        nlohmann::ordered_json n = nlohmann::ordered_json::object();
        for (const auto& [k, v] : notes) n[k] = v;
        j["notes"] = n;
    }
    if (with_timing) j["wall_seconds"] = wall_seconds;
    return j.dump(2) + "\n";
}

}  // namespace loosepath
