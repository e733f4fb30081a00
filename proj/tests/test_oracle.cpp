#include "doctest.h"

#include <atomic>
#include <stdexcept>
#include <string>

#include "pariton/gen.hpp"
#include "pariton/oracle.hpp"
#include "pariton/solvers.hpp"
#include "support.hpp"

using namespace pariton;
using namespace testutil;

TEST_CASE("zielonka and brute force agree on the pair fixture") {
    ParityGame g = pair_game();
    auto [z0, z1] = zielonka_solve(g);
    auto [b0, b1] = brute_force_solve(g);
    CHECK(z0 == set_of(2, {0, 1}));
    CHECK(z1 == set_of(2, {}));
    CHECK(b0 == z0);
    CHECK(b1 == z1);
}

TEST_CASE("self-loop games are won by the parity of the loop priority") {
    for (int prio = 0; prio < 4; ++prio)
        for (int owner = 0; owner < 2; ++owner) {
            ParityGame g = loop_game(prio, owner);
            auto [z0, z1] = zielonka_solve(g);
            auto [b0, b1] = brute_force_solve(g);
            if (prio % 2 == 0) {
                CHECK(z0 == set_of(1, {0}));
                CHECK(z1.empty());
            } else {
                CHECK(z0.empty());
                CHECK(z1 == set_of(1, {0}));
            }
            CHECK(b0 == z0);
            CHECK(b1 == z1);
        }
}

TEST_CASE("zielonka matches brute force on every game with at most two positions") {
    int visited = 0;
    enumerate_small_games(2, 2, 2, [&](const ParityGame& g) {
        ++visited;
        auto [z0, z1] = zielonka_solve(g);
        auto [b0, b1] = brute_force_solve(g);
        CHECK(z0 == b0);
        CHECK(z1 == b1);
        CHECK((z0 | z1) == g.all_positions());
        CHECK(!z0.intersects(z1));
    });
    // 1 position: 3 priorities x 2 owners x 1 successor set; 2 positions:
    // (3 x 2 x 3)^2.
    CHECK(visited == 330);
}

TEST_CASE("zielonka matches brute force on random six-position games") {
    for (uint64_t seed = 1; seed <= 40; ++seed) {
        ParityGame g = random_game(2 + int(seed % 5), 1 + int(seed % 6), 1, 3, seed);
        auto [z0, z1] = zielonka_solve(g);
        auto [b0, b1] = brute_force_solve(g);
        CHECK(z0 == b0);
        CHECK(z1 == b1);
    }
}

TEST_CASE("small-game enumeration is exhaustive and well formed") {
    int visited = 0;
    enumerate_small_games(2, 1, 2, [&](const ParityGame& g) {
        ++visited;
        CHECK(g.size() >= 1);
        CHECK(g.size() <= 2);
        CHECK(g.max_priority() <= 1);
        CHECK(is_sink_free(g, g.all_positions()));
        for (Pos v = 0; v < g.size(); ++v) CHECK(g.successors(v).size() <= 2);
    });
    // 1 position: 2 x 2 x 1; 2 positions: (2 x 2 x 3)^2.
    CHECK(visited == 148);
}

TEST_CASE("brute force refuses an oversized strategy space") {
    // 24 player-0 positions with two moves each: 2^24 > 10^7 combinations.
    std::vector<SpecRow> rows;
    for (int64_t i = 0; i < 24; ++i)
        rows.push_back({i, 0, 0, {i, (i + 1) % 24}, ""});
    ParityGame g = make_game(rows);
    CHECK_THROWS_AS((void)brute_force_solve(g), std::invalid_argument);
}

TEST_CASE("zielonka honors a pre-set cancellation flag") {
    ParityGame g = pair_game();
    std::atomic<bool> cancel{true};
    CHECK_THROWS_AS((void)zielonka_solve(g, &cancel), SolveCancelled);
}

TEST_CASE("dominion check accepts a closed even self-loop") {
    ParityGame g = loop_game(0, 0);
    Strategy wit(1);
    wit.set(0, 0);
    std::string why;
    CHECK(check_dominion(g, set_of(1, {0}), 0, wit, &why));
    CHECK(why.empty());
}

TEST_CASE("dominion check demands a witness move inside the set") {
    ParityGame g = pair_game();
    Strategy wit(2);  // v1 is owned by player 1 but has no witness
    std::string why;
    CHECK(!check_dominion(g, set_of(2, {1}), 1, wit, &why));
    CHECK(why.find("lacks a witness move inside the set") != std::string::npos);
}

TEST_CASE("dominion check rejects sets the opponent can leave") {
    ParityGame g = pair_game();
    Strategy wit(2);
    std::string why;
    // For player 0, position 1 belongs to the opponent and moves to 0.
    CHECK(!check_dominion(g, set_of(2, {1}), 0, wit, &why));
    CHECK(why.find("can leave the set") != std::string::npos);
}

TEST_CASE("dominion check verifies residual cycle parities") {
    ParityGame g = pair_game();
    Strategy wit(2);
    wit.set(0, 0);
    std::string why;
    CHECK(check_dominion(g, set_of(2, {0, 1}), 0, wit, &why));

    // Pointing v0 at v1 closes the 0 -> 1 -> 0 cycle with odd maximum 1.
    wit.set(0, 1);
    CHECK(!check_dominion(g, set_of(2, {0, 1}), 0, wit, &why));
    CHECK(!why.empty());
}

TEST_CASE("quasi-dominion check exempts escape positions") {
    ParityGame g = pair_game();
    Strategy wit(2);
    std::string why;
    // {v1} is not a dominion for player 1 (no witness inside), but it is a
    // quasi dominion: with no witness, v1 is an escape position and no play
    // stays inside forever.
    CHECK(!check_dominion(g, set_of(2, {1}), 1, wit, &why));
    CHECK(check_quasi_dominion(g, set_of(2, {1}), 1, wit, &why));

    // An opponent position with a move out is likewise exempt.
    CHECK(check_quasi_dominion(g, set_of(2, {1}), 0, wit, &why));

    // A closed odd self-loop stays a counterexample for player 0.
    ParityGame odd = loop_game(1, 1);
    Strategy none(1);
    CHECK(!check_quasi_dominion(odd, set_of(1, {0}), 0, none, &why));
    CHECK(check_quasi_dominion(odd, set_of(1, {0}), 1, none, &why));
}

namespace {

SolveSnapshot snapshot(SolverKind kind, const RegionContext& rc, const PromotionFunction* u,
                       ExtPriority p, ExtPriority c) {
    SolveSnapshot snap;
    snap.kind = kind;
    snap.point = HookPoint::solve_entry;
    snap.rc = &rc;
    snap.u = u;
    snap.p = p;
    snap.c = c;
    return snap;
}

bool any_violation_contains(const ValidationReport& rep, const std::string& needle) {
    for (const std::string& v : rep.violations)
        if (v.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("a repaired native state validates cleanly") {
    ParityGame g = pair_game();
    RegionContext rc(g);
    repair_witnesses(g, rc);
    ValidationReport rep;
    validate_state(g, snapshot(SolverKind::recursive_promotion, rc, nullptr,
                               ExtPriority::nat(1), ExtPriority::bot()),
                   rep);
    CHECK(rep.ok());
    CHECK(rep.states_checked == 1);
}

TEST_CASE("validation flags a partial map for the recursive-promotion solver") {
    ParityGame g = pair_game();
    RegionContext rc(g);
    repair_witnesses(g, rc);
    rc.erase(0);
    ValidationReport rep;
    validate_state(g, snapshot(SolverKind::recursive_promotion, rc, nullptr,
                               ExtPriority::nat(1), ExtPriority::bot()),
                   rep);
    CHECK(!rep.ok());
    CHECK(any_violation_contains(rep, "r is not total"));
}

TEST_CASE("validation flags a witness pointing out of its side set") {
    ParityGame g = pair_game();
    RegionContext rc(g);  // natives, witnesses never repaired
    ValidationReport rep;
    validate_state(g, snapshot(SolverKind::recursive_promotion, rc, nullptr,
                               ExtPriority::nat(1), ExtPriority::bot()),
                   rep);
    // v0 could stay inside its side set but has no witness at all.
    CHECK(rep.violations.size() == 1);
    CHECK(any_violation_contains(rep, "witness of 0 leaves side 0"));
}

TEST_CASE("validation rejects odd-top entries in the pending map") {
    ParityGame g = pair_game();
    RegionContext rc(g);
    rc.erase(1);
    PromotionFunction u(2, 1);
    u.assign(1, ExtPriority::top(1));
    repair_witnesses(g, rc, &u);
    ValidationReport rep;
    validate_state(g, snapshot(SolverKind::hybrid, rc, &u, ExtPriority::nat(0),
                               ExtPriority::top(0)),
                   rep);
    CHECK(rep.violations.size() == 1);
    CHECK(any_violation_contains(rep, "u maps into top1"));
}

TEST_CASE("validation rejects even-top pending entries under a numeric caller") {
    ParityGame g = pair_game();
    RegionContext rc(g);
    rc.erase(1);
    PromotionFunction u(2, 1);
    u.assign(1, ExtPriority::top(0));
    repair_witnesses(g, rc, &u);
    ValidationReport rep;
    validate_state(g, snapshot(SolverKind::hybrid, rc, &u, ExtPriority::nat(0),
                               ExtPriority::nat(2)),
                   rep);
    CHECK(any_violation_contains(rep, "u maps into top0 under a numeric caller priority"));
}

TEST_CASE("validation reports domain overlap and coverage gaps") {
    ParityGame g = pair_game();
    RegionContext rc(g);
    repair_witnesses(g, rc);
    PromotionFunction u(2, 1);
    u.assign(1, ExtPriority::nat(1));  // also held by r: overlap
    ValidationReport rep;
    validate_state(g, snapshot(SolverKind::hybrid, rc, &u, ExtPriority::nat(1),
                               ExtPriority::top(0)),
                   rep);
    CHECK(any_violation_contains(rep, "r and u domains overlap"));

    rc.erase(0);
    u.erase(1);
    ValidationReport rep2;
    validate_state(g, snapshot(SolverKind::hybrid, rc, &u, ExtPriority::nat(1),
                               ExtPriority::top(0)),
                   rep2);
    CHECK(any_violation_contains(rep2, "do not cover the game"));
}

TEST_CASE("validation enforces the precision gap between p and the caller") {
    ParityGame g = pair_game();
    RegionContext rc(g);
    repair_witnesses(g, rc);
    PromotionFunction u(2, 1);  // empty pending map
    ValidationReport rep;
    // r(v1) = 1 sits strictly between p = 0 and the top caller.
    validate_state(g, snapshot(SolverKind::hybrid, rc, &u, ExtPriority::nat(0),
                               ExtPriority::top(0)),
                   rep);
    CHECK(rep.violations.size() == 1);
    CHECK(any_violation_contains(rep, "value inside the precision gap at 1"));
}

TEST_CASE("validation rejects pending values below the current priority") {
    ParityGame g = pair_game();
    RegionContext rc(g);
    rc.erase(1);
    PromotionFunction u(2, 3);
    u.assign(1, ExtPriority::nat(1));
    repair_witnesses(g, rc, &u);
    ValidationReport rep;
    validate_state(g, snapshot(SolverKind::hybrid, rc, &u, ExtPriority::nat(2),
                               ExtPriority::top(0)),
                   rep);
    CHECK(rep.violations.size() == 1);
    CHECK(any_violation_contains(rep, "u-value below the current priority at 1"));
}

TEST_CASE("validation checks level-region escapes for the bounded-recursion solver") {
    // x (priority 0, player 0) must move to w; its region value 1 makes it a
    // subgame escape of the level-1 region with the wrong priority.  The
    // extra self-loop position keeps a genuine priority-1 member around.
    ParityGame g = make_game(
        {{0, 0, 0, {1}, ""}, {1, 0, 1, {0, 1}, ""}, {2, 1, 1, {2}, ""}});
    RegionContext rc(g);
    rc.assign(0, ExtPriority::nat(1));
    repair_witnesses(g, rc);
    ValidationReport rep;
    validate_state(g, snapshot(SolverKind::bounded_recursion, rc, nullptr,
                               ExtPriority::nat(1), ExtPriority::bot()),
                   rep);
    CHECK(rep.violations.size() == 1);
    CHECK(any_violation_contains(rep, "subgame escape 0 of the level-1 region has priority 0"));
}

TEST_CASE("validation flags pending positions that are side-set escapes") {
    // q (priority 1, player 1) can leave the side set {m, q}; parking it in
    // the pending map must be reported, on top of the escape-priority fault.
    ParityGame g = make_game(
        {{0, 1, 1, {1, 2}, ""}, {1, 2, 0, {1}, ""}, {2, 0, 0, {2}, ""}});
    RegionContext rc(g);
    rc.erase(0);
    PromotionFunction u(3, 3);
    u.assign(0, ExtPriority::nat(3));
    repair_witnesses(g, rc, &u);
    ValidationReport rep;
    validate_state(g, snapshot(SolverKind::hybrid, rc, &u, ExtPriority::nat(2),
                               ExtPriority::nat(3)),
                   rep);
    CHECK(any_violation_contains(rep, "u-position is an escape of side 0 threshold 2"));
    CHECK(any_violation_contains(rep, "escape 0 of side 0 threshold 2 has priority 1"));
}

TEST_CASE("strict validator checks promoted top buckets as dominions") {
    ParityGame even = loop_game(0, 0);
    RegionContext rc(even);
    rc.assign(0, ExtPriority::top(0));
    rc.wit[0].set(0, 0);
    SolveSnapshot snap = snapshot(SolverKind::recursive_promotion, rc, nullptr,
                                  ExtPriority::nat(0), ExtPriority::bot());
    StrictValidator v;
    v.on_top_growth(even, snap, 0);
    CHECK(v.report.dominion_checks == 1);
    CHECK(v.report.ok());

    ParityGame odd = loop_game(1, 1);
    RegionContext bad(odd);
    bad.assign(0, ExtPriority::top(0));
    SolveSnapshot bad_snap = snapshot(SolverKind::recursive_promotion, bad, nullptr,
                                      ExtPriority::nat(0), ExtPriority::bot());
    StrictValidator w;
    w.on_top_growth(odd, bad_snap, 0);
    CHECK(w.report.dominion_checks == 1);
    CHECK(!w.report.ok());
    CHECK(any_violation_contains(w.report, "top bucket of player 0 fails the dominion check"));
}

TEST_CASE("validation reports accumulate and reset independently") {
    ValidationReport rep;
    CHECK(rep.ok());
    rep.add("first");
    rep.add("second");
    CHECK(!rep.ok());
    CHECK(rep.violations.size() == 2);
    CHECK(rep.violations[0] == "first");
}
