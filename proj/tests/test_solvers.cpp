#include "doctest.h"

#include <atomic>
#include <sstream>
#include <string>
#include <vector>

#include "pariton/gen.hpp"
#include "pariton/oracle.hpp"
#include "pariton/solvers.hpp"
#include "support.hpp"

using namespace pariton;
using namespace testutil;

namespace {

using SolveFn = SolveResult (*)(const ParityGame&, const SolveOptions&);

struct NamedSolver {
    const char* name;
    SolveFn fn;
};

const NamedSolver kSolvers[] = {
    {"hpp", &solve_hpp},
    {"rpp", &solve_rpp},
    {"parys", &solve_parys},
    {"zlk", &solve_zielonka},
};

}  // namespace

TEST_CASE("all solvers agree on the pair fixture") {
    ParityGame g = pair_game();
    for (const NamedSolver& s : kSolvers) {
        CAPTURE(s.name);
        SolveResult res = s.fn(g, {});
        CHECK(res.w0 == set_of(2, {0, 1}));
        CHECK(res.w1.empty());
    }
}

TEST_CASE("all solvers agree on single self-loops") {
    for (int prio : {0, 1, 2, 3})
        for (int owner : {0, 1}) {
            ParityGame g = loop_game(prio, owner);
            for (const NamedSolver& s : kSolvers) {
                CAPTURE(s.name);
                CAPTURE(prio);
                SolveResult res = s.fn(g, {});
                if (prio % 2 == 0) {
                    CHECK(res.w0 == set_of(1, {0}));
                    CHECK(res.w1.empty());
                } else {
                    CHECK(res.w1 == set_of(1, {0}));
                    CHECK(res.w0.empty());
                }
            }
        }
}

TEST_CASE("work counters on the odd self-loop are stable") {
    ParityGame g = loop_game(1, 1);

    SolveResult hpp = solve_hpp(g, {});
    CHECK(hpp.stats.recursive_calls == 1);
    CHECK(hpp.stats.hsol_iterations == 2);
    CHECK(hpp.stats.promotions == 1);

    SolveResult rpp = solve_rpp(g, {});
    CHECK(rpp.stats.recursive_calls == 1);
    CHECK(rpp.stats.hsol_iterations == 1);
    CHECK(rpp.stats.promotions == 1);

    SolveResult parys = solve_parys(g, {});
    CHECK(parys.stats.recursive_calls == 1);
    CHECK(parys.stats.hsol_iterations == 1);
    CHECK(parys.stats.promotions == 0);
}

TEST_CASE("the four solvers compute identical partitions on random games") {
    for (uint64_t seed = 1; seed <= 60; ++seed) {
        int n = 2 + int(seed % 24);
        int max_prio = 1 + int(seed % 9);
        int min_deg = 1 + int(seed % 2);
        ParityGame g = random_game(n, max_prio, min_deg, 3, seed);
        CAPTURE(seed);

        SolveResult ref = solve_zielonka(g, {});
        CHECK((ref.w0 | ref.w1) == g.all_positions());
        CHECK(!ref.w0.intersects(ref.w1));
        for (const NamedSolver& s : kSolvers) {
            CAPTURE(s.name);
            SolveResult res = s.fn(g, {});
            CHECK(res.w0 == ref.w0);
            CHECK(res.w1 == ref.w1);
        }
    }
}

TEST_CASE("promotion solvers pass the strict state validator") {
    for (uint64_t seed = 1; seed <= 12; ++seed) {
        ParityGame g = random_game(4 + int(seed % 10), 1 + int(seed % 6), 1, 3, seed * 77);
        CAPTURE(seed);
        for (const NamedSolver& s : kSolvers) {
            if (std::string(s.name) == "zlk") continue;
            CAPTURE(s.name);
            StrictValidator validator;
            SolveOptions opt;
            opt.hooks = &validator;
            (void)s.fn(g, opt);
            CHECK(validator.report.ok());
            CHECK(validator.report.states_checked > 0);
            if (!validator.report.ok())
                for (const std::string& v : validator.report.violations) {
                    CAPTURE(v);
                    CHECK(false);
                }
        }
    }
}

TEST_CASE("returned witnesses certify both winning regions") {
    for (uint64_t seed = 100; seed < 130; ++seed) {
        ParityGame g = random_game(3 + int(seed % 12), 1 + int(seed % 5), 1, 3, seed);
        CAPTURE(seed);
        for (const NamedSolver& s : kSolvers) {
            CAPTURE(s.name);
            SolveResult res = s.fn(g, {});
            std::string why;
            if (!res.w0.empty()) {
                INFO("w0: " << why);
                CHECK(check_dominion(g, res.w0, 0, res.wit0, &why));
            }
            if (!res.w1.empty()) {
                INFO("w1: " << why);
                CHECK(check_dominion(g, res.w1, 1, res.wit1, &why));
            }
            for (int a : {0, 1}) {
                const PositionSet& w = a == 0 ? res.w0 : res.w1;
                const Strategy& wit = a == 0 ? res.wit0 : res.wit1;
                w.for_each([&](int v) {
                    if (g.owner(v) != a) return;
                    CHECK(wit.has(v));
                    if (wit.has(v)) CHECK(g.has_move(v, wit.get(v)));
                });
            }
        }
    }
}

TEST_CASE("solvers stop when the cancel flag is set") {
    ParityGame g = pair_game();
    std::atomic<bool> cancel{true};
    SolveOptions opt;
    opt.cancel = &cancel;
    for (const NamedSolver& s : kSolvers) {
        CAPTURE(s.name);
        CHECK_THROWS_AS((void)s.fn(g, opt), SolveCancelled);
    }
}

TEST_CASE("trace output is deterministic across runs") {
    ParityGame g = random_game(8, 3, 1, 3, 424242);
    for (const NamedSolver& s : kSolvers) {
        if (std::string(s.name) == "zlk") continue;
        CAPTURE(s.name);
        std::ostringstream first, second;
        SolveOptions opt;
        opt.trace = &first;
        (void)s.fn(g, opt);
        opt.trace = &second;
        (void)s.fn(g, opt);
        CHECK(!first.str().empty());
        CHECK(first.str() == second.str());
    }
}
