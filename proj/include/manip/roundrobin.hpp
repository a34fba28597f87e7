#pragma once

#include <vector>

#include "manip/core.hpp"
#include "manip/flow.hpp"

namespace manip {

/// Outcome of the greedy stage: `points` is the target's final total after
/// flipping manipulable incoming games, highest-out-degree thrower first.
struct GreedyResult {
    int points = 0;
    ManipulationPlan moves;
    bool satisfied = false;  // target already scores >= every other team
};

/// Answer to a minimum-manipulation query.
struct RRAnswer {
    bool achievable = false;
    int min_count = 0;
    ManipulationPlan plan;
    int greedy_moves = 0;
    long long flow_cost = 0;
};

/// Repeatedly flips the manipulable incoming game whose current source has
/// the largest out-degree (ties to the lowest id), stopping as soon as the
/// target's out-degree is >= every other team's or no flip remains.
/// Win-loss scoring only.
GreedyResult greedy_out_degree(Team target, const Tournament& t,
                               const Coalition& co);

/// Winner-determination network for the games not involving the target,
/// with unit supplies per game, a priced arc to each potential taker of
/// the win, and per-team sink capacity `points` minus the points already
/// banked against the target. Kept alongside enough metadata to decode a
/// flow back into game flips.
struct RRNetwork {
    FlowNetwork net;
    std::vector<std::pair<Team, Team>> games;  // (fair winner, fair loser)
    struct TakerArc {
        int arc;       // index into net.arcs
        int game;      // index into games
        Team taker;
        bool is_flip;  // taking the win reverses the fair result
    };
    std::vector<TakerArc> takers;
};

RRNetwork build_flow_network(const Tournament& t, const Coalition& co,
                             Team target, int points);

/// Fewest thrown games after which the target's Copeland score is >= every
/// other team's: greedy stage plus one min-cost feasible flow.
RRAnswer rr_min_manipulations(Team target, const Tournament& t,
                              const Coalition& co);

struct RRDecision {
    bool verdict = false;
    ManipulationPlan plan;
    int target_score = 0;  // the decisive team's final points under the plan
    int best_candidate = -1;
    int best_candidate_score = 0;
};

/// Can the coalition make `target` finish with the (weakly) highest score?
/// Works for any fixed-sum scoring model; refuses other models.
RRDecision rr_constructive(Team target, const Tournament& t, const Coalition& co,
                           const ScoringModel& model);

/// Can the coalition make some team strictly out-score `loser`? Candidates
/// take every point coalition opponents can concede; when the loser is
/// itself a member it throws everything. O(m^2).
RRDecision rr_destructive(Team loser, const Tournament& t, const Coalition& co,
                          const ScoringModel& model);

}  // namespace manip
