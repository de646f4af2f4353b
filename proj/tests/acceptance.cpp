// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "loosepath/cli.hpp"
#include "loosepath/io.hpp"
#include "loosepath/verify.hpp"

using namespace loosepath;
namespace fs = std::filesystem;

namespace {

struct Verdict {
    bool ok;
    std::string detail;
};

int failed = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<Verdict()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v{false, ""};
    try {
        v = body();
    } catch (const std::exception& e) {
        v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = limit_seconds <= 0 || secs < limit_seconds;
    const bool ok = v.ok && in_time;
    if (!ok) ++failed;
    std::printf("%s %d %s: %s [%.2fs", ok ? "PASS" : "FAIL", id, title.c_str(), v.detail.c_str(), secs);
    if (limit_seconds > 0) std::printf(" / limit %.0fs", limit_seconds);
    std::printf("]\n");
    std::fflush(stdout);
}

Verdict campaign(const Report& r, std::uint64_t expected_tested) {
    std::ostringstream d;
    d << "tested=" << r.tested << " failures=" << r.failures << " status=" << r.status;
    for (const auto& e : r.exemplars) {
        d << " first_failure=" << coloring_to_hex(e.coloring) << " (" << e.reason << ")";
        break;
    }
    return {r.passed() && r.failures == 0 && r.tested == expected_tested, d.str()};
}

int cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    return run_cli(args, out, err);
}

}  // namespace

int main() {
    criterion(1, "exhaustive K^2_5, red P_3 or blue P_3", 10, [] { return campaign(exhaustive_verify(3, 3), 1024); });
    criterion(2, "exhaustive K^2_6, red P_4 or blue P_3", 60, [] { return campaign(exhaustive_verify(4, 3), 32768); });
    criterion(3, "exhaustive K^2_6, red P_4 or blue P_4", 60, [] { return campaign(exhaustive_verify(4, 4), 32768); });

    criterion(4, "extremal coloring has no red P_n and no blue P_m", 300, [] {
        int cases = 0;
        int bad = 0;
        std::string first;
        for (int s = 1; s <= 3; ++s)
            for (int m = 3; m <= 4; ++m)
                for (int n = m; n <= 5; ++n) {
                    ++cases;
                    const Report r = lower_bound_check(2 * s, s, n, m);
                    if (!r.passed()) {
                        ++bad;
                        if (first.empty())
                            first = " first=(s=" + std::to_string(s) + ",n=" + std::to_string(n) +
                                    ",m=" + std::to_string(m) + ") " + r.status;
                    }
                }
        return Verdict{bad == 0, "cases=" + std::to_string(cases) + " violations_or_inconclusive=" +
                                     std::to_string(bad) + first};
    });

    criterion(5, "random colorings at s=2, seed 42, 1000 each", 300, [] {
        std::uint64_t tested = 0;
        std::uint64_t failures = 0;
        for (auto [n, target] : {std::pair{3, 3}, {4, 3}, {4, 4}, {5, 4}}) {
            const Report r = random_trials(2, n, target, 1000, 42);
            tested += r.tested;
            failures += r.failures;
        }
        return Verdict{failures == 0 && tested == 4000,
                       "tested=" + std::to_string(tested) + " failures=" + std::to_string(failures)};
    });

    criterion(6, "extractor color agrees with brute-force existence", 0, [] {
        std::uint64_t tested = 0;
        std::uint64_t mismatches = 0;
        for (auto [n, target] : {std::pair{3, 3}, {4, 3}, {4, 4}}) {
            const Report r = oracle_consistency(n, target);
            tested += r.tested;
            mismatches += r.failures;
        }
        return Verdict{mismatches == 0 && tested == 1024 + 2 * 32768,
                       "tested=" + std::to_string(tested) + " mismatches=" + std::to_string(mismatches)};
    });

    criterion(7, "single-edge flips of the extended extremal coloring (s=2, n=3, m=3)", 120,
              [] { return campaign(perturbation_check(2, 3, 3), 252); });

    criterion(8, "byte-identical witness, trace and report on repeated runs", 0, [] {
        const fs::path dir = fs::temp_directory_path() / ("loosepath_acceptance_" + std::to_string(::getpid()));
        fs::create_directories(dir);
        auto file = [&](const std::string& name) { return (dir / name).string(); };
        std::mt19937_64 gen(7);
        int compared = 0;
        bool same = true;
        for (int i = 0; i < 4; ++i) {
            const int s = 1 + i % 2;
            const int n = 4;
            const std::string c = file("c" + std::to_string(i) + ".json");
            write_file(c, coloring_to_json(random_coloring((n + 1) * s + 1, 2 * s, gen)));
            std::string outputs[2][2];
            for (int run = 0; run < 2; ++run) {
                const std::string w = file("w" + std::to_string(run) + ".json");
                const std::string t = file("t" + std::to_string(run) + ".json");
                if (cli({"extract", "--coloring", c, "--n", std::to_string(n), "--s", std::to_string(s), "--target",
                         "p4", "--out", w, "--trace", t}) != 0)
                    same = false;
                outputs[run][0] = read_file(w);
                outputs[run][1] = read_file(t);
            }
            same = same && outputs[0][0] == outputs[1][0] && outputs[0][1] == outputs[1][1];
            compared += 2;
        }
        const std::vector<std::vector<std::string>> reports{
            {"verify", "trials", "--s", "2", "--n", "4", "--target", "p4", "--trials", "300", "--seed", "42"},
            {"verify", "exhaustive", "--n", "4", "--target", "p3"},
            {"verify", "perturb", "--s", "2", "--n", "3", "--m", "3"},
        };
        for (const auto& args : reports) {
            std::string text[2];
            for (int run = 0; run < 2; ++run) {
                auto a = args;
                a.push_back("--out");
                a.push_back(file("r" + std::to_string(run) + ".json"));
                a.push_back("--threads");
                a.push_back(run == 0 ? "1" : "3");
                if (cli(a) != 0) same = false;
                text[run] = read_file(file("r" + std::to_string(run) + ".json"));
            }
            same = same && text[0] == text[1];
            ++compared;
        }
        fs::remove_all(dir);
        return Verdict{same, "file_pairs_compared=" + std::to_string(compared)};
    });

    std::printf("%s: %d criteria failed\n", failed == 0 ? "ACCEPTED" : "REJECTED", failed);
    return failed == 0 ? 0 : 1;
}
