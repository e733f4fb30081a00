#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pariton/bench.hpp"
#include "pariton/gen.hpp"
#include "pariton/oracle.hpp"
#include "pariton/qp_bound.hpp"
#include "pariton/solvers.hpp"

namespace {

using namespace pariton;

ParityGame load_game(const std::string& path) {
    if (path == "-") return ParityGame::parse_pgsolver(std::cin);
    return ParityGame::parse_pgsolver_file(path);
}

void emit_game(const ParityGame& g, const std::string& out_path) {
    if (out_path.empty()) {
        g.write_pgsolver(std::cout);
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open for writing: " + out_path);
    g.write_pgsolver(out);
}

int cmd_solve(const std::string& file, const std::string& algo, bool validate, bool stats,
              bool trace) {
    const ParityGame g = load_game(file);
    StrictValidator validator;
    SolveOptions opt;
    if (validate) opt.hooks = &validator;
    if (trace) opt.trace = &std::cerr;
    const SolveResult res = solve_with_algorithm(algo, g, opt);

    for (Pos v = 0; v < g.size(); ++v)
        std::cout << g.original_id(v) << ' ' << (res.w0.test(v) ? 0 : 1) << ";\n";

    if (stats) {
        const BigNat bound = qp_call_bound(g.size(), g.distinct_priorities());
        nlohmann::ordered_json j;
        j["calls"] = res.stats.recursive_calls;
        j["hsol_iters"] = res.stats.hsol_iterations;
        j["promotions"] = res.stats.promotions;
        j["bound"] = bound.to_string();
        j["within_bound"] = bound.cmp_u64(res.stats.recursive_calls) >= 0;
        std::cout << j.dump() << '\n';
    }

    if (validate && !validator.report.ok()) {
        for (const auto& v : validator.report.violations) std::cerr << "violation: " << v << '\n';
        std::cerr << validator.report.violations.size() << " violation(s) across "
                  << validator.report.states_checked << " checked states\n";
        return 1;
    }
    return 0;
}

int cmd_verify(const std::string& file, const std::string& against) {
    const ParityGame g = load_game(file);
    const auto [ref0, ref1] =
        against == "brute" ? brute_force_solve(g) : zielonka_solve(g);
    for (const char* algo : {"hpp", "rpp", "parys"}) {
        const SolveResult res = solve_with_algorithm(algo, g, {});
        if (res.w0 == ref0 && res.w1 == ref1) continue;
        for (Pos v = 0; v < g.size(); ++v) {
            if (res.w0.test(v) == ref0.test(v)) continue;
            std::cout << "disagree: " << algo << " gives position " << g.original_id(v)
                      << " to player " << (res.w0.test(v) ? 0 : 1) << ", " << against
                      << " gives it to player " << (ref0.test(v) ? 0 : 1) << "\n";
            return 1;
        }
    }
    std::cout << "agree: hpp, rpp, parys match " << against << " on " << g.size()
              << " positions\n";
    return 0;
}

int cmd_bench(const std::vector<std::string>& files, const std::string& algos_csv,
              double timeout_s, std::string reference, const std::string& out_path) {
    std::vector<std::string> algos;
    for (size_t at = 0; at < algos_csv.size();) {
        size_t comma = algos_csv.find(',', at);
        if (comma == std::string::npos) comma = algos_csv.size();
        algos.push_back(algos_csv.substr(at, comma - at));
        at = comma + 1;
    }
    for (const auto& a : algos)
        if (!is_known_algorithm(a)) throw std::runtime_error("unknown algorithm: " + a);
    if (reference == "none") reference.clear();
    if (!reference.empty() && !is_known_algorithm(reference))
        throw std::runtime_error("unknown reference algorithm: " + reference);

    std::vector<NamedGame> games;
    games.reserve(files.size());
    for (const auto& f : files) games.push_back({f, load_game(f)});

    const auto records = run_bench(games, algos, timeout_s, reference);

    bool need_header = true;
    {
        std::ifstream probe(out_path);
        need_header = !probe.good() || probe.peek() == std::ifstream::traits_type::eof();
    }
    std::ofstream out(out_path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open for writing: " + out_path);
    if (need_header) write_csv_header(out);
    for (const auto& rec : records) write_csv_row(out, rec);
    std::cout << "appended " << records.size() << " records to " << out_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pariton — parity game solvers with priority promotion"};
    app.require_subcommand(1);

    auto* solve = app.add_subcommand("solve", "solve a game, printing '<id> <winner>;' per position");
    std::string solve_algo = "hpp", solve_file;
    bool opt_validate = false, opt_stats = false, opt_trace = false;
    solve->add_option("--algo", solve_algo, "solver")
        ->check(CLI::IsMember({"hpp", "rpp", "parys", "zlk"}))
        ->capture_default_str();
    solve->add_flag("--validate", opt_validate, "run state validators during the solve");
    solve->add_flag("--stats", opt_stats, "append one JSON line of solve counters");
    solve->add_flag("--trace", opt_trace, "dump solver states to stderr");
    solve->add_option("file", solve_file, "game in PGSolver format, or - for stdin")->required();

    auto* verify = app.add_subcommand("verify", "check hpp/rpp/parys against an oracle");
    std::string verify_against, verify_file;
    verify->add_option("--against", verify_against, "oracle")
        ->required()
        ->check(CLI::IsMember({"zlk", "brute"}));
    verify->add_option("file", verify_file, "game in PGSolver format, or - for stdin")->required();

    auto* gen = app.add_subcommand("gen", "generate games");
    gen->require_subcommand(1);
    auto* gen_random = gen->add_subcommand("random", "seeded random game");
    int rn = 0, rmax_prio = 0, rmin_deg = 1, rmax_deg = 1;
    uint64_t rseed = 0;
    std::string rout;
    gen_random->add_option("--n", rn, "positions")->required();
    gen_random->add_option("--max-prio", rmax_prio, "priority ceiling")->required();
    gen_random->add_option("--min-deg", rmin_deg, "minimum out-degree")->required();
    gen_random->add_option("--max-deg", rmax_deg, "maximum out-degree")->required();
    gen_random->add_option("--seed", rseed, "64-bit seed")->required();
    gen_random->add_option("-o,--out", rout, "output file (default stdout)");
    auto* gen_family = gen->add_subcommand("family", "structured family instance");
    std::string fname;
    int fk = 1;
    std::string fout;
    gen_family->add_option("--name", fname, "family")
        ->required()
        ->check(CLI::IsMember({"ladder", "clique"}));
    gen_family->add_option("--k", fk, "family size parameter")->required();
    gen_family->add_option("-o,--out", fout, "output file (default stdout)");

    auto* bench = app.add_subcommand("bench", "time algorithms across games, appending CSV");
    std::string bench_algos = "hpp,rpp,parys,zlk", bench_reference = "zlk",
                bench_out = "results.csv";
    double bench_timeout = 25.0;
    std::vector<std::string> bench_files;
    bench->add_option("--algos", bench_algos, "comma-separated algorithms")
        ->capture_default_str();
    bench->add_option("--timeout", bench_timeout, "seconds per solve (<= 0: unlimited)")
        ->capture_default_str();
    bench->add_option("--reference", bench_reference, "algorithm anchoring 'agreed', or none")
        ->capture_default_str();
    bench->add_option("--out", bench_out, "CSV file (header written only when new)")
        ->capture_default_str();
    bench->add_option("files", bench_files, "games in PGSolver format")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve)
            return cmd_solve(solve_file, solve_algo, opt_validate, opt_stats, opt_trace);
        if (*verify) return cmd_verify(verify_file, verify_against);
        if (*gen_random) {
            emit_game(random_game(rn, rmax_prio, rmin_deg, rmax_deg, rseed), rout);
            return 0;
        }
        if (*gen_family) {
            emit_game(fname == "ladder" ? ladder_game(fk) : clique_game(fk), fout);
            return 0;
        }
        if (*bench)
            return cmd_bench(bench_files, bench_algos, bench_timeout, bench_reference,
                             bench_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
