#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>
#include <random>

#include "doctest.h"
#include "manip/core.hpp"
#include "test_util.hpp"

using namespace manip;
using testutil::five_teams;

TEST_CASE("manipulable edges of the five-team instance") {
    Tournament t = five_teams();
    Coalition co(5, {0, 3});
    ManipulableEdgeSet m = manipulable_edges(t, co);
    std::vector<std::pair<Team, Team>> expected = {
        {0, 1}, {0, 3}, {3, 1}, {3, 2}, {3, 4}};
    CHECK(m.entries == expected);
    CHECK(m.contains(3, 1));
    CHECK(!m.contains(1, 2));
}

TEST_CASE("manipulable edges, empty and full coalitions") {
    Tournament t = five_teams();
    CHECK(manipulable_edges(t, Coalition(5, {})).entries.empty());
    ManipulableEdgeSet all = manipulable_edges(t, Coalition(5, {0, 1, 2, 3, 4}));
    CHECK(all.size() == 10);  // every played game has a coalition winner
}

TEST_CASE("manipulable edges grow with the coalition") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Tournament t = testutil::random_win_loss(6, rng);
        Coalition small = testutil::random_coalition(6, 3, rng);
        std::vector<Team> grown = small.members();
        grown.push_back((Team)(rng() % 6));
        Coalition big(6, grown);
        ManipulableEdgeSet ms = manipulable_edges(t, small);
        ManipulableEdgeSet mb = manipulable_edges(t, big);
        for (auto e : ms.entries) CHECK(mb.contains(e.first, e.second));
    }
}

TEST_CASE("apply_plan flips a thrown game") {
    Tournament t = five_teams();
    Coalition co(5, {0, 3});
    ManipulationPlan plan{{make_flip(t, 3, 1)}};
    Tournament after = apply_plan(t, plan, co);
    CHECK(after.beats(1, 3));
    CHECK(after.beats(0, 1));  // everything else untouched
    CHECK(t.beats(3, 1));      // input is unchanged
}

TEST_CASE("apply_plan with an empty plan is the identity") {
    Tournament t = five_teams();
    CHECK(apply_plan(t, {}, Coalition(5, {})) == t);
}

TEST_CASE("apply_plan rejects illegal moves") {
    Tournament t = five_teams();
    Coalition co(5, {0, 3});
    // 1 beat 2 but is not a member
    CHECK_THROWS_AS(apply_plan(t, {{make_flip(t, 1, 2)}}, co), IllegalMove);
    // unknown pair
    CHECK_THROWS_AS(apply_plan(t, {{Move{0, 9, 0, 1}}}, co), IllegalMove);
    // no-op move
    CHECK_THROWS_AS(apply_plan(t, {{Move{0, 1, 1, 0}}}, co), IllegalMove);
    // duplicated pair
    ManipulationPlan twice{{make_flip(t, 3, 1), make_flip(t, 3, 1)}};
    CHECK_THROWS_AS(apply_plan(t, twice, co), IllegalMove);
    // total not preserved
    CHECK_THROWS_AS(apply_plan(t, {{Move{0, 1, 2, 0}}}, co), IllegalMove);
}

TEST_CASE("copeland scores") {
    std::vector<int> s = copeland_scores(five_teams());
    CHECK(s == std::vector<int>{2, 1, 2, 3, 2});

    Tournament two(2);
    two.set_result(0, 1, 1, 0);
    CHECK(copeland_scores(two) == std::vector<int>{1, 0});

    Tournament cyc(3);
    cyc.set_result(0, 1, 1, 0);
    cyc.set_result(1, 2, 1, 0);
    cyc.set_result(2, 0, 1, 0);
    CHECK(copeland_scores(cyc) == std::vector<int>{1, 1, 1});
}

TEST_CASE("points are conserved by any legal plan") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        Tournament t = testutil::random_win_loss(6, rng);
        Coalition co = testutil::random_coalition(6, 4, rng);
        ManipulableEdgeSet m = manipulable_edges(t, co);
        ManipulationPlan plan;
        for (auto [w, l] : m.entries)
            if (rng() % 2) plan.moves.push_back(make_flip(t, w, l));
        Tournament after = apply_plan(t, plan, co);
        auto total = [](const Tournament& x) {
            std::vector<int> s = copeland_scores(x);
            return std::accumulate(s.begin(), s.end(), 0);
        };
        CHECK(total(after) == total(t));
    }
}

TEST_CASE("reversing a plan restores the tournament") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        Tournament t = testutil::random_win_loss(6, rng);
        Coalition co = testutil::random_coalition(6, 4, rng);
        // flips whose reverse is legal too: both sides are members
        ManipulationPlan plan;
        for (auto [w, l] : manipulable_edges(t, co).entries)
            if (co.contains(l) && rng() % 2) plan.moves.push_back(make_flip(t, w, l));
        Tournament after = apply_plan(t, plan, co);
        ManipulationPlan reverse;
        for (const Move& mv : plan.moves) {
            Team winner = after.beats(mv.i, mv.j) ? mv.i : mv.j;
            reverse.moves.push_back(make_flip(after, winner, mv.i + mv.j - winner));
        }
        CHECK(apply_plan(after, reverse, co) == t);
    }
}

TEST_CASE("scoring model form check") {
    CHECK(validate_model_form(ScoringModel::win_loss()));
    ScoringModel chess{2, {{0, 2}, {1, 1}, {2, 0}}};
    CHECK(validate_model_form(chess));
    ScoringModel football{3, {{0, 3}, {1, 1}, {3, 0}}};
    CHECK(!validate_model_form(football));  // 1+1 != 3
    CHECK(!validate_model_form(ScoringModel{1, {}}));
}

TEST_CASE("normalize_scoring banks the non-member's points") {
    ScoringModel chess{2, {{0, 2}, {1, 1}, {2, 0}}};
    NormalizedGame g = normalize_scoring(chess, 1, 1);
    CHECK(g.nonmember_default == 1);
    CHECK(g.residual.total == 1);
    CHECK(g.residual.outcomes ==
          std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});
}

TEST_CASE("normalize_scoring fixes a game the member already lost fully") {
    // member at 0 points: nothing left to concede, the game is fixed
    NormalizedGame g = normalize_scoring(ScoringModel::win_loss(), 1, 0);
    CHECK(g.nonmember_default == 1);
    CHECK(g.residual.total == 0);
    CHECK(g.residual.outcomes == std::vector<std::pair<int, int>>{{0, 0}});
}

TEST_CASE("normalize_scoring leaves the full range when the member holds all points") {
    ScoringModel chess{2, {{0, 2}, {1, 1}, {2, 0}}};
    NormalizedGame g = normalize_scoring(chess, 0, 2);
    CHECK(g.nonmember_default == 0);
    CHECK(g.residual.total == 2);
    CHECK(g.residual.outcomes.size() == 3);
}

TEST_CASE("normalize_scoring rejects outcomes outside the model") {
    CHECK_THROWS_AS(normalize_scoring(ScoringModel::win_loss(), 2, -1),
                    InvalidOutcome);
    ScoringModel chess{2, {{0, 2}, {2, 0}}};  // no (1,1) in this one
    CHECK_THROWS_AS(normalize_scoring(chess, 1, 1), InvalidOutcome);
}
