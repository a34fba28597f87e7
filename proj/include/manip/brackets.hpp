#pragma once

#include <array>
#include <vector>

#include "manip/core.hpp"

namespace manip {

/// Unfixed cup with ranked reseeding: survivors are re-paired
/// best-against-worst by their original seed before every round.
struct SeededField {
    std::vector<Team> seeds;  // seeds[0] = rank 1 (best), last = worst

    int size() const { return (int)seeds.size(); }
};

void validate_field(const SeededField& field, int team_count);

/// Double-elimination bracket over a power-of-two field. Layout: winners
/// bracket round-1 losers meet in losers round 1; later winners-bracket
/// losers drop in against the losers-bracket survivors (reversed order to
/// delay rematches), with an internal losers round after each drop-in
/// while more than one team remains. Single grand final, no reset.
struct DoubleElimBracket {
    std::vector<Team> entrants;  // winners-bracket round-1 leaf order

    int size() const { return (int)entrants.size(); }
};

void validate_bracket(const DoubleElimBracket& bracket, int team_count);

/// One played game: the two sides and who advanced.
struct PlayedGame {
    Team a = -1;
    Team b = -1;
    Team winner = -1;
};

Team simulate_reseed(const SeededField& field, const Tournament& t);

struct DoubleElimReplay {
    Team champion = -1;
    std::vector<std::vector<PlayedGame>> wb_rounds;
    std::vector<std::vector<PlayedGame>> lb_rounds;
    PlayedGame grand_final;
    std::vector<int> losses;  // per team, capped at 2
};

DoubleElimReplay simulate_double_elim(const DoubleElimBracket& bracket,
                                      const Tournament& t);

/// Survivors of one reseeding round given per-game throw flags (games in
/// best-vs-worst pairing order). A flag on a game whose fair winner is not
/// a coalition member is an IllegalThrow.
std::vector<Team> simulate_round(const std::vector<Team>& survivors,
                                 const std::vector<bool>& throws,
                                 const SeededField& field, const Tournament& t,
                                 const Coalition& co);

struct BracketSearchResult {
    bool achievable = false;
    ManipulationPlan plan;
    long long scenarios = 0;  // complete bracket replays examined
};

/// Depth-first search over per-round throw choices; only games whose fair
/// winner is a coalition member branch, so at most (2^|co|)^log2(m)
/// scenarios are visited. Coalitions above `max_coalition` are refused.
BracketSearchResult ranked_reseed_constructive(Team target,
                                               const SeededField& field,
                                               const Tournament& t,
                                               const Coalition& co,
                                               int max_coalition = 4);

/// Same search over the double-elimination schedule. A throw decision is
/// made per pair at its first meeting and stands for any rematch, so a
/// witness plan replays deterministically on the flipped graph.
BracketSearchResult double_elim_constructive(Team target,
                                             const DoubleElimBracket& bracket,
                                             const Tournament& t,
                                             const Coalition& co,
                                             int max_coalition = 4);

}  // namespace manip
