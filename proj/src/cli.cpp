#include "loosepath/cli.hpp"

#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "loosepath/construct.hpp"
#include "loosepath/extract.hpp"
#include "loosepath/io.hpp"
#include "loosepath/search.hpp"
#include "loosepath/verify.hpp"

namespace loosepath {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

int parse_target(const std::string& name) {
    if (name == "p2") return 2;
    if (name == "p3") return 3;
    if (name == "p4") return 4;
    throw std::invalid_argument("unknown target '" + name + "' (expected p2, p3 or p4)");
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-")
        out << text;
    else
        write_file(path, text);
}

struct Options {
    // construct
    int r = 0, s = 0, n = 0, m = 0;
    bool verify = false;
    // shared
    std::string coloring_path, out_path, trace_path, target = "p3", color = "red";
    int k = 0;
    bool cycle = false, longest = false, timing = false;
    std::uint64_t budget = SearchBudget{}.node_limit;
    std::uint64_t trials = 0, seed = 0;
    int threads = 0;
    std::string witness_path;
};

int write_report(const Report& report, const Options& o, std::ostream& out) {
    emit(o.out_path, report.to_json(o.timing), out);
    return report.passed() ? kOk : kFailed;
}

int do_construct(const Options& o, std::ostream& out, std::ostream& err) {
    const Coloring c = lower_bound_coloring(o.r, o.s, o.n, o.m);
    if (o.verify) {
        const Report report = lower_bound_check(o.r, o.s, o.n, o.m);
        if (!report.passed()) {
            err << "construct: verification " << report.status << "\n";
            return kFailed;
        }
    }
    emit(o.out_path, coloring_to_json(c), out);
    return kOk;
}

int do_search(const Options& o, std::ostream& out, std::ostream& err) {
    const Coloring c = coloring_from_json(read_file(o.coloring_path));
    const Color color = color_from_string(o.color);
    const SearchBudget budget{o.budget, 0.0};
    nlohmann::ordered_json j;
    std::string status;
    if (o.longest) {
        const auto res = longest_mono_path(c, color, o.s, budget);
        status = res.status == SearchStatus::Exhausted ? "exhausted" : res.path ? "found" : "no-edge";
        j["status"] = status;
        if (res.path) j["witness"] = nlohmann::ordered_json::parse(witness_to_json({color, *res.path}));
    } else if (o.cycle) {
        if (o.k < 1) throw std::invalid_argument("--k is required for cycle search");
        const auto res = find_mono_cycle(c, color, o.s, o.k, budget);
        status = res.status == SearchStatus::Found ? "found" : res.status == SearchStatus::Absent ? "absent" : "exhausted";
        j["status"] = status;
        if (res.cycle) {
            j["cycle"] = {{"color", std::string(to_string(color))}, {"s", res.cycle->s}, {"r", res.cycle->r},
                          {"length", res.cycle->length()}, {"vertices", res.cycle->vertices}};
        }
    } else {
        if (o.k < 1) throw std::invalid_argument("--k is required for path search");
        const auto res = find_mono_path(c, color, o.s, o.k, budget);
        status = res.status == SearchStatus::Found ? "found" : res.status == SearchStatus::Absent ? "absent" : "exhausted";
        j["status"] = status;
        if (res.path) j["witness"] = nlohmann::ordered_json::parse(witness_to_json({color, *res.path}));
    }
    emit(o.out_path, j.dump() + "\n", out);
    if (status == "exhausted") {
        err << "search: node budget exhausted, result inconclusive\n";
        return kFailed;
    }
    return kOk;
}

int do_extract(const Options& o, std::ostream& out, std::ostream& err) {
    const Coloring c = coloring_from_json(read_file(o.coloring_path));
    const int target = parse_target(o.target);
    Trace trace;
    Trace* tp = o.trace_path.empty() ? nullptr : &trace;
    try {
        const Witness w = extract(c, o.n, o.s, target, tp);
        emit(o.out_path, witness_to_json(w), out);
        if (tp != nullptr) write_file(o.trace_path, trace.to_json());
        return kOk;
    } catch (const SoundnessError& e) {
        if (tp != nullptr) write_file(o.trace_path, trace.to_json());
        if (!o.out_path.empty() && o.out_path != "-") {
            nlohmann::ordered_json j;
            j["error"] = "soundness";
            j["message"] = e.what();
            write_file(o.out_path, j.dump() + "\n");
        }
        err << "extract: internal soundness failure: " << e.what() << "\n";
        return kFailed;
    }
}

int do_check(const Options& o, std::ostream& out, std::ostream&) {
    const Coloring c = coloring_from_json(read_file(o.coloring_path));
    const Witness w = witness_from_json(read_file(o.witness_path));
    const int target = parse_target(o.target);
    Params p{w.path.s, w.path.r, o.n, target, c.n_vertices()};
    p.validate();
    const auto defect = witness_defect(c, w, p);
    out << (defect ? "invalid: " + *defect : std::string("valid")) << "\n";
    return defect ? kFailed : kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ramsey witnesses for loose paths in 2s-uniform hypergraphs"};
    app.require_subcommand(1);
    Options o;

    auto* construct = app.add_subcommand("construct", "write the extremal lower-bound coloring");
    construct->add_option("--r", o.r, "edge size")->required();
    construct->add_option("--s", o.s, "overlap")->required();
    construct->add_option("--n", o.n, "red path length")->required();
    construct->add_option("--m", o.m, "blue path length")->required();
    construct->add_flag("--verify", o.verify, "check by search before writing");
    construct->add_option("--out", o.out_path, "output file (default stdout)");

    auto* search = app.add_subcommand("search", "brute-force monochromatic path or cycle search");
    search->add_option("--coloring", o.coloring_path)->required();
    search->add_option("--s", o.s, "overlap")->required();
    search->add_option("--color", o.color, "red or blue");
    search->add_option("--k", o.k, "length");
    search->add_flag("--cycle", o.cycle);
    search->add_flag("--longest", o.longest);
    search->add_option("--budget", o.budget, "node limit");
    search->add_option("--out", o.out_path);

    auto* extract_cmd = app.add_subcommand("extract", "red P_n or blue P_target witness");
    extract_cmd->add_option("--coloring", o.coloring_path)->required();
    extract_cmd->add_option("--n", o.n)->required();
    extract_cmd->add_option("--s", o.s)->required();
    extract_cmd->add_option("--target", o.target, "p2, p3 or p4");
    extract_cmd->add_option("--out", o.out_path, "witness file (default stdout)");
    extract_cmd->add_option("--trace", o.trace_path, "trace file");

    auto* check = app.add_subcommand("check", "check a witness against a coloring");
    check->add_option("--coloring", o.coloring_path)->required();
    check->add_option("--witness", o.witness_path)->required();
    check->add_option("--n", o.n)->required();
    check->add_option("--target", o.target, "p2, p3 or p4");

    auto* verify = app.add_subcommand("verify", "verification campaigns");
    verify->require_subcommand(1);
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", o.out_path, "report file (default stdout)");
        cmd->add_flag("--timing", o.timing, "include wall time in the report");
    };
    auto* exhaustive = verify->add_subcommand("exhaustive", "all colorings of K^2_{n+2}");
    exhaustive->add_option("--s", o.s)->default_val(1)->check(CLI::Range(1, 1));
    exhaustive->add_option("--n", o.n)->required();
    exhaustive->add_option("--target", o.target);
    exhaustive->add_option("--threads", o.threads);
    add_common(exhaustive);
    auto* trials = verify->add_subcommand("trials", "seeded random colorings");
    trials->add_option("--s", o.s)->required();
    trials->add_option("--n", o.n)->required();
    trials->add_option("--target", o.target);
    trials->add_option("--trials", o.trials)->required();
    trials->add_option("--seed", o.seed, "default 0");
    trials->add_option("--threads", o.threads);
    add_common(trials);
    auto* lower = verify->add_subcommand("lower-bound", "the extremal coloring has neither path");
    lower->add_option("--r", o.r)->required();
    lower->add_option("--s", o.s)->required();
    lower->add_option("--n", o.n)->required();
    lower->add_option("--m", o.m)->required();
    add_common(lower);
    auto* oracle = verify->add_subcommand("oracle", "extractor against brute force");
    oracle->add_option("--s", o.s)->default_val(1)->check(CLI::Range(1, 1));
    oracle->add_option("--n", o.n)->required();
    oracle->add_option("--target", o.target);
    oracle->add_option("--threads", o.threads);
    add_common(oracle);
    auto* perturb = verify->add_subcommand("perturb", "single-edge flips of the extended extremal coloring");
    perturb->add_option("--s", o.s)->required();
    perturb->add_option("--n", o.n)->required();
    perturb->add_option("--m", o.m)->required();
    perturb->add_option("--threads", o.threads);
    add_common(perturb);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*construct) return do_construct(o, out, err);
        if (*search) return do_search(o, out, err);
        if (*extract_cmd) return do_extract(o, out, err);
        if (*check) return do_check(o, out, err);
        const CampaignOptions campaign{o.threads, 16};
        if (*exhaustive) return write_report(exhaustive_verify(o.n, parse_target(o.target), campaign), o, out);
        if (*trials) return write_report(random_trials(o.s, o.n, parse_target(o.target), o.trials, o.seed, campaign), o, out);
        if (*lower) return write_report(lower_bound_check(o.r, o.s, o.n, o.m), o, out);
        if (*oracle) return write_report(oracle_consistency(o.n, parse_target(o.target), campaign), o, out);
        if (*perturb) return write_report(perturbation_check(o.s, o.n, o.m, campaign), o, out);
    } catch (const FormatError& e) {
        err << "input error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, std::cout, std::cerr);
}

}  // namespace loosepath
