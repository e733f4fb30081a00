#include "doctest.h"

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pariton/bench.hpp"
#include "pariton/gen.hpp"
#include "pariton/oracle.hpp"
#include "pariton/qp_bound.hpp"
#include "pariton/solvers.hpp"
#include "support.hpp"

using namespace pariton;
using namespace testutil;

TEST_CASE("random games are reproducible from the seed") {
    ParityGame a = random_game(50, 12, 1, 4, 999);
    ParityGame b = random_game(50, 12, 1, 4, 999);
    CHECK(a.structurally_equal(b));
    CHECK(to_pg(a) == to_pg(b));
    ParityGame c = random_game(50, 12, 1, 4, 1000);
    CHECK(to_pg(a) != to_pg(c));
}

TEST_CASE("a one-position random game is a self-loop") {
    ParityGame g = random_game(1, 5, 1, 3, 42);
    REQUIRE(g.size() == 1);
    REQUIRE(g.successors(0).size() == 1);
    CHECK(g.successors(0)[0] == 0);
}

TEST_CASE("random games satisfy the advertised shape") {
    ParityGame g = random_game(200, 30, 2, 7, 31337);
    REQUIRE(g.size() == 200);
    CHECK(is_sink_free(g, g.all_positions()));
    for (Pos v = 0; v < g.size(); ++v) {
        CHECK(g.priority(v) >= 0);
        CHECK(g.priority(v) <= 30);
        CHECK((g.owner(v) == 0 || g.owner(v) == 1));
        size_t deg = g.successors(v).size();
        CHECK(deg >= 2);
        CHECK(deg <= 7);
        for (size_t i = 1; i < deg; ++i)
            CHECK(g.successors(v)[i - 1] < g.successors(v)[i]);  // distinct, sorted
    }
    CHECK(g.structurally_equal(from_pg(to_pg(g))));
}

TEST_CASE("random game degrees are capped at the position count") {
    ParityGame g = random_game(3, 2, 5, 9, 7);
    for (Pos v = 0; v < g.size(); ++v) CHECK(g.successors(v).size() == 3);
}

TEST_CASE("ladder games have the documented shape and winner") {
    for (int k = 1; k <= 4; ++k) {
        ParityGame g = ladder_game(k);
        REQUIRE(g.size() == 2 * k);
        for (Pos i = 0; i < g.size(); ++i) {
            CHECK(g.priority(i) == i);
            CHECK(g.owner(i) == i % 2);
            REQUIRE(g.successors(i).size() == 1);
            CHECK(g.successors(i)[0] == (i + 1) % (2 * k));
        }
        // The single cycle's maximum priority 2k-1 is odd: player 1 wins all.
        for (const char* algo : {"hpp", "rpp", "parys", "zlk"}) {
            CAPTURE(algo);
            SolveResult res = solve_with_algorithm(algo, g, {});
            CHECK(res.w0.empty());
            CHECK(res.w1 == g.all_positions());
        }
    }
}

TEST_CASE("clique games split between the owners of the self-loops") {
    for (int k = 1; k <= 6; ++k) {
        ParityGame g = clique_game(k);
        REQUIRE(g.size() == k);
        PositionSet evens(k), odds(k);
        for (Pos i = 0; i < k; ++i) {
            CHECK(g.priority(i) == i);
            CHECK(g.owner(i) == i % 2);
            CHECK(g.successors(i).size() == size_t(k));
            (i % 2 == 0 ? evens : odds).set(i);
        }
        // Position i is owned by the player matching its own parity, so each
        // owner can simply stay on the self-loop forever.
        auto [w0, w1] = zielonka_solve(g);
        CHECK(w0 == evens);
        CHECK(w1 == odds);
        SolveResult res = solve_hpp(g, {});
        CHECK(res.w0 == evens);
        CHECK(res.w1 == odds);
    }
}

TEST_CASE("recursion bounds match hand-computed values") {
    // n = 1, h = 1: l = 1, 1^1 * C(2,1) - 1 = 1.
    CHECK(qp_call_bound(1, 1).cmp_u64(1) == 0);
    // n = 2, h = 1: l = 3, 2^3 * C(4,3) - 1 = 31.
    CHECK(qp_call_bound(2, 1).cmp_u64(31) == 0);
    // n = 4, h = 2: l = 5, 4^5 * C(7,5) - 1 = 21503.
    CHECK(qp_call_bound(4, 2).cmp_u64(21503) == 0);
    CHECK(qp_call_bound(4, 2).to_string() == "21503");
    // h = 0 collapses to n^l - 1.
    CHECK(qp_call_bound(10, 0).cmp_u64(9999999) == 0);
}

TEST_CASE("big natural numbers support the bound arithmetic") {
    BigNat zero;
    CHECK(zero.cmp_u64(0) == 0);
    CHECK(zero.fits_u64());
    CHECK(zero.as_u64() == 0);
    CHECK(zero.to_string() == "0");

    BigNat b(uint64_t(1) << 63);
    b.mul_u32(2);  // 2^64: one bit past the u64 range
    CHECK(!b.fits_u64());
    CHECK(b.cmp_u64(UINT64_MAX) == 1);
    CHECK(b.to_string() == "18446744073709551616");
    b.div_u32_exact(2);
    CHECK(b.fits_u64());
    CHECK(b.as_u64() == uint64_t(1) << 63);
    b.dec();
    CHECK(b.cmp_u64((uint64_t(1) << 63) - 1) == 0);
    CHECK(b.cmp_u64(uint64_t(1) << 63) == -1);

    BigNat c(uint64_t(1) << 32);
    c.mul_u32(4294967295u);  // 2^32 * (2^32 - 1) = 2^64 - 2^32
    CHECK(c.fits_u64());
    CHECK(c.as_u64() == 18446744069414584320ull);
}

TEST_CASE("algorithm dispatch accepts exactly the documented names") {
    for (const char* algo : {"hpp", "rpp", "parys", "zlk"}) {
        CHECK(is_known_algorithm(algo));
        SolveResult res = solve_with_algorithm(algo, pair_game(), {});
        CHECK(res.w0 == set_of(2, {0, 1}));
    }
    CHECK(!is_known_algorithm(""));
    CHECK(!is_known_algorithm("HPP"));
    CHECK(!is_known_algorithm("strategy-improvement"));
    CHECK_THROWS_AS((void)solve_with_algorithm("foo", pair_game(), {}), std::invalid_argument);
}

TEST_CASE("a non-positive timeout disables the watchdog") {
    ParityGame g = random_game(40, 8, 1, 4, 5);
    TimedSolve t = solve_with_timeout(g, "hpp", 0.0);
    CHECK(!t.timed_out);
    auto [w0, w1] = zielonka_solve(g);
    CHECK(t.w0 == w0);
    CHECK(t.w1 == w1);
    CHECK(t.time_ms >= 0.0);
}

TEST_CASE("a tiny timeout cancels a large solve") {
    ParityGame g = random_game(3000, 750, 2, 10, 7);
    TimedSolve t = solve_with_timeout(g, "hpp", 1e-6);
    CHECK(t.timed_out);
}

TEST_CASE("benchmark runs produce one record per game and algorithm") {
    std::vector<NamedGame> games;
    games.push_back({"pair", pair_game()});
    games.push_back({"odd-loop", loop_game(1, 1)});
    std::vector<std::string> algos = {"hpp", "rpp", "zlk"};

    std::vector<BenchRecord> recs = run_bench(games, algos, 0.0, "zlk");
    REQUIRE(recs.size() == 6);
    for (size_t i = 0; i < recs.size(); ++i) {
        const BenchRecord& r = recs[i];
        CHECK(r.game == games[i / 3].name);
        CHECK(r.algo == algos[i % 3]);
        CHECK(r.n == games[i / 3].game.size());
        CHECK(r.timed_out == false);
        REQUIRE(r.agreed.has_value());
        CHECK(*r.agreed);
    }
    CHECK(recs[0].priorities == 2);
    CHECK(recs[3].priorities == 1);

    // Without a reference there is nothing to compare against.
    std::vector<BenchRecord> plain = run_bench(games, {"hpp"}, 0.0, "");
    REQUIRE(plain.size() == 2);
    CHECK(!plain[0].agreed.has_value());
}

TEST_CASE("timed-out benchmark rows leave the agreement flag empty") {
    std::vector<NamedGame> games;
    games.push_back({"big", random_game(3000, 750, 2, 10, 7)});
    std::vector<BenchRecord> recs = run_bench(games, {"hpp"}, 1e-6, "zlk");
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].timed_out);
    CHECK(!recs[0].agreed.has_value());
}

TEST_CASE("benchmark CSV output follows the documented format") {
    std::ostringstream out;
    write_csv_header(out);
    CHECK(out.str() == "game,algo,n,priorities,time_ms,timed_out,agreed\n");

    BenchRecord rec;
    rec.game = "g1";
    rec.algo = "hpp";
    rec.n = 5;
    rec.priorities = 3;
    rec.time_ms = 1.25;
    rec.timed_out = false;
    rec.agreed = true;
    std::ostringstream row;
    write_csv_row(row, rec);
    CHECK(row.str() == "g1,hpp,5,3,1.250,false,true\n");

    rec.agreed.reset();
    rec.timed_out = true;
    std::ostringstream row2;
    write_csv_row(row2, rec);
    CHECK(row2.str() == "g1,hpp,5,3,1.250,true,\n");

    rec.game = "he said \"hi\", twice";
    rec.agreed = false;
    std::ostringstream row3;
    write_csv_row(row3, rec);
    CHECK(row3.str() == "\"he said \"\"hi\"\", twice\",hpp,5,3,1.250,true,false\n");
}
