#include "pariton/bench.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace pariton {

SolveResult solve_with_algorithm(const std::string& algo, const ParityGame& g,
                                 const SolveOptions& opt) {
    if (algo == "hpp") return solve_hpp(g, opt);
    if (algo == "rpp") return solve_rpp(g, opt);
    if (algo == "parys") return solve_parys(g, opt);
    if (algo == "zlk") return solve_zielonka(g, opt);
    throw std::invalid_argument("unknown algorithm: " + algo);
}

bool is_known_algorithm(const std::string& algo) {
    return algo == "hpp" || algo == "rpp" || algo == "parys" || algo == "zlk";
}

TimedSolve solve_with_timeout(const ParityGame& g, const std::string& algo, double timeout_s) {
    std::atomic<bool> cancel{false};
    std::mutex m;
    std::condition_variable cv;
    bool done = false;
    std::thread watchdog;
    if (timeout_s > 0) {
        watchdog = std::thread([&] {
            std::unique_lock<std::mutex> lk(m);
            if (!cv.wait_for(lk, std::chrono::duration<double>(timeout_s), [&] { return done; }))
                cancel.store(true, std::memory_order_relaxed);
        });
    }

    TimedSolve out;
    SolveOptions opt;
    opt.cancel = timeout_s > 0 ? &cancel : nullptr;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        SolveResult res = solve_with_algorithm(algo, g, opt);
        out.w0 = std::move(res.w0);
        out.w1 = std::move(res.w1);
    } catch (const SolveCancelled&) {
        out.timed_out = true;
    }
    const auto t1 = std::chrono::steady_clock::now();
    out.time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    if (watchdog.joinable()) {
        {
            std::lock_guard<std::mutex> lk(m);
            done = true;
        }
        cv.notify_all();
        watchdog.join();
    }
    return out;
}

std::vector<BenchRecord> run_bench(const std::vector<NamedGame>& games,
                                   const std::vector<std::string>& algos, double timeout_s,
                                   const std::string& reference) {
    std::vector<BenchRecord> out;
    out.reserve(games.size() * algos.size());
    for (const auto& ng : games) {
        std::vector<TimedSolve> runs;
        runs.reserve(algos.size());
        const TimedSolve* ref = nullptr;
        for (const auto& algo : algos) {
            runs.push_back(solve_with_timeout(ng.game, algo, timeout_s));
            if (algo == reference && !ref) ref = &runs.back();
        }
        TimedSolve extra_ref;
        if (!reference.empty() && !ref) {
            extra_ref = solve_with_timeout(ng.game, reference, timeout_s);
            ref = &extra_ref;
        }
        for (size_t i = 0; i < algos.size(); ++i) {
            BenchRecord rec;
            rec.game = ng.name;
            rec.algo = algos[i];
            rec.n = ng.game.size();
            rec.priorities = ng.game.distinct_priorities();
            rec.time_ms = runs[i].time_ms;
            rec.timed_out = runs[i].timed_out;
            if (!runs[i].timed_out && ref && !ref->timed_out)
                rec.agreed = runs[i].w0 == ref->w0 && runs[i].w1 == ref->w1;
            out.push_back(std::move(rec));
        }
    }
    return out;
}

namespace {

// RFC-4180 quoting, applied only when the field needs it.
void csv_field(std::ostream& out, const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        out << s;
        return;
    }
    out << '"';
    for (char c : s) {
        if (c == '"') out << '"';
        out << c;
    }
    out << '"';
}

}  // namespace

void write_csv_header(std::ostream& out) {
    out << "game,algo,n,priorities,time_ms,timed_out,agreed\n";
}

void write_csv_row(std::ostream& out, const BenchRecord& rec) {
    csv_field(out, rec.game);
    out << ',';
    csv_field(out, rec.algo);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", rec.time_ms);
    out << ',' << rec.n << ',' << rec.priorities << ',' << buf << ','
        << (rec.timed_out ? "true" : "false") << ',';
    if (rec.agreed) out << (*rec.agreed ? "true" : "false");
    out << '\n';
}

}  // namespace pariton
