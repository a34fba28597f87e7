#include "manip/roundrobin.hpp"

#include <algorithm>
#include <string>

namespace manip {

namespace {

void require_win_loss(const Tournament& t) {
    if (!t.is_win_loss())
        throw ModelNotSupported("operation requires win-loss scoring");
}

void require_form(const ScoringModel& model) {
    if (!validate_model_form(model))
        throw ModelNotSupported("scoring model not of form S={(i,n-i)}");
}

void require_totals(const Tournament& t, const ScoringModel& model) {
    for (Team i = 0; i < t.size(); ++i)
        for (Team j = i + 1; j < t.size(); ++j)
            if (t.points(i, j) + t.points(j, i) != model.total)
                throw InvalidOutcome("game " + std::to_string(i) + "," +
                                     std::to_string(j) +
                                     " does not sum to the model total");
}

}  // namespace

GreedyResult greedy_out_degree(Team target, const Tournament& t,
                               const Coalition& co) {
    require_win_loss(t);
    int m = t.size();
    std::vector<int> deg = copeland_scores(t);
    // coalition members that beat the target and can still throw to it
    std::vector<Team> sources;
    for (Team i = 0; i < m; ++i)
        if (i != target && co.contains(i) && t.beats(i, target))
            sources.push_back(i);

    GreedyResult out;
    Tournament cur = t;
    auto satisfied = [&] {
        for (Team k = 0; k < m; ++k)
            if (k != target && deg[k] > deg[target]) return false;
        return true;
    };
    while (!satisfied() && !sources.empty()) {
        auto best = std::max_element(
            sources.begin(), sources.end(), [&](Team a, Team b) {
                return deg[a] < deg[b] || (deg[a] == deg[b] && a > b);
            });
        Team thrower = *best;
        sources.erase(best);
        out.moves.moves.push_back(make_flip(cur, thrower, target));
        cur.set_result(target, thrower, 1, 0);
        ++deg[target];
        --deg[thrower];
    }
    out.points = deg[target];
    out.satisfied = satisfied();
    out.moves.sort_canonical();
    return out;
}

RRNetwork build_flow_network(const Tournament& t, const Coalition& co,
                             Team target, int points) {
    require_win_loss(t);
    int m = t.size();

    RRNetwork rr;
    for (Team i = 0; i < m; ++i)
        for (Team j = i + 1; j < m; ++j) {
            if (i == target || j == target) continue;
            rr.games.emplace_back(t.beats(i, j) ? std::make_pair(i, j)
                                                : std::make_pair(j, i));
        }

    int games = (int)rr.games.size();
    // node layout: 0 = source, 1..games = game nodes, then one node per
    // non-target team, sink last
    rr.net.node_count = 1 + games + (m - 1) + 1;
    rr.net.source = 0;
    rr.net.sink = rr.net.node_count - 1;
    std::vector<int> team_node(m, -1);
    int next = 1 + games;
    for (Team k = 0; k < m; ++k)
        if (k != target) team_node[k] = next++;

    for (int g = 0; g < games; ++g) {
        rr.net.add_arc(rr.net.source, 1 + g, 1, 1, 0);
        auto [winner, loser] = rr.games[g];
        int a = rr.net.add_arc(1 + g, team_node[winner], 0, 1, 0);
        rr.takers.push_back({a, g, winner, false});
        if (co.contains(winner)) {  // (winner, loser) is manipulable
            int b = rr.net.add_arc(1 + g, team_node[loser], 0, 1, 1);
            rr.takers.push_back({b, g, loser, true});
        }
    }
    for (Team k = 0; k < m; ++k) {
        if (k == target) continue;
        int banked = t.points(k, target);
        if (points - banked < 0)
            throw InvalidCapacity("team " + std::to_string(k) +
                                  " already banks more than " +
                                  std::to_string(points) + " points");
        rr.net.add_arc(team_node[k], rr.net.sink, 0, points - banked, 0);
    }
    return rr;
}

RRAnswer rr_min_manipulations(Team target, const Tournament& t,
                              const Coalition& co) {
    require_win_loss(t);
    GreedyResult greedy = greedy_out_degree(target, t, co);
    Tournament cur = apply_plan(t, greedy.moves, co);

    RRAnswer out;
    out.greedy_moves = greedy.moves.count();
    if (greedy.satisfied) {
        out.achievable = true;
        out.min_count = greedy.moves.count();
        out.plan = greedy.moves;
        return out;
    }
    for (Team k = 0; k < t.size(); ++k)
        if (k != target && cur.points(k, target) > greedy.points)
            return out;  // a fixed win against the target already exceeds c

    RRNetwork rr = build_flow_network(cur, co, target, greedy.points);
    FlowResult flow = min_cost_feasible_flow(rr.net);
    if (!flow.feasible) return out;

    out.achievable = true;
    out.flow_cost = flow.cost;
    out.min_count = greedy.moves.count() + (int)flow.cost;
    out.plan = greedy.moves;
    for (const auto& taker : rr.takers)
        if (taker.is_flip && flow.arc_flow[taker.arc] > 0) {
            auto [winner, loser] = rr.games[taker.game];
            out.plan.moves.push_back(make_flip(cur, winner, loser));
        }
    out.plan.sort_canonical();
    return out;
}

RRDecision rr_constructive(Team target, const Tournament& t, const Coalition& co,
                           const ScoringModel& model) {
    require_form(model);
    require_totals(t, model);
    int m = t.size();
    int n = model.total;

    RRDecision out;
    // the target takes every point a coalition opponent can concede
    int target_score = 0;
    ManipulationPlan plan;
    for (Team k = 0; k < m; ++k) {
        if (k == target) continue;
        int mine = t.points(target, k), theirs = t.points(k, target);
        if (co.contains(k) && theirs > 0) {
            plan.moves.push_back(Move{std::min(target, k), std::max(target, k),
                                      target < k ? n : 0, target < k ? 0 : n});
            target_score += n;
        } else {
            target_score += mine;
        }
    }
    out.target_score = target_score;

    std::vector<int> banked(m, 0);
    for (Team k = 0; k < m; ++k) {
        if (k == target) continue;
        banked[k] = co.contains(k) ? 0 : t.points(k, target);
        if (banked[k] > target_score) return out;  // verdict stays false
    }

    // one supply node per remaining game; arcs carry each side's earnable
    // range under the coalition restriction
    struct Side {
        int arc;
        Team team;
        int stored;
    };
    struct Game {
        Side a, b;
    };
    std::vector<Game> games;
    FlowNetwork net;
    int game_count = 0;
    for (Team i = 0; i < m; ++i)
        for (Team j = i + 1; j < m; ++j)
            if (i != target && j != target) ++game_count;
    net.node_count = 1 + game_count + (m - 1) + 1;
    net.source = 0;
    net.sink = net.node_count - 1;
    std::vector<int> team_node(m, -1);
    int next = 1 + game_count;
    for (Team k = 0; k < m; ++k)
        if (k != target) team_node[k] = next++;

    int g = 0;
    for (Team i = 0; i < m; ++i)
        for (Team j = i + 1; j < m; ++j) {
            if (i == target || j == target) continue;
            int ci = t.points(i, j), cj = t.points(j, i);
            int lo_i, hi_i;
            if (co.contains(i) && co.contains(j)) {
                lo_i = 0; hi_i = n;
            } else if (co.contains(i)) {
                lo_i = 0; hi_i = ci;
            } else if (co.contains(j)) {
                lo_i = ci; hi_i = n;
            } else {
                lo_i = ci; hi_i = ci;
            }
            net.add_arc(net.source, 1 + g, n, n, 0);
            Game game;
            game.a = {net.add_arc(1 + g, team_node[i], lo_i, hi_i, 0), i, ci};
            game.b = {net.add_arc(1 + g, team_node[j], n - hi_i, n - lo_i, 0), j,
                      cj};
            games.push_back(game);
            ++g;
        }
    for (Team k = 0; k < m; ++k)
        if (k != target)
            net.add_arc(team_node[k], net.sink, 0, target_score - banked[k], 0);

    FlowResult flow = feasible_flow(net);
    if (!flow.feasible) return out;

    out.verdict = true;
    for (const Game& game : games) {
        int pa = (int)flow.arc_flow[game.a.arc];
        int pb = (int)flow.arc_flow[game.b.arc];
        if (pa != game.a.stored || pb != game.b.stored) {
            Team i = game.a.team, j = game.b.team;
            plan.moves.push_back(Move{i, j, pa, pb});
        }
    }
    plan.sort_canonical();
    out.plan = std::move(plan);
    return out;
}

RRDecision rr_destructive(Team loser, const Tournament& t, const Coalition& co,
                          const ScoringModel& model) {
    require_form(model);
    require_totals(t, model);
    int m = t.size();
    int n = model.total;

    RRDecision out;
    int loser_score = 0;
    if (!co.contains(loser)) {
        for (Team k = 0; k < m; ++k)
            if (k != loser) loser_score += t.points(loser, k);
    }
    out.target_score = loser_score;

    for (Team i = 0; i < m; ++i) {
        if (i == loser) continue;
        int score = 0;
        for (Team k = 0; k < m; ++k) {
            if (k == i) continue;
            bool concedes = co.contains(k) && (k != loser || co.contains(loser));
            score += concedes ? n : t.points(i, k);
        }
        if (score > out.best_candidate_score || out.best_candidate < 0) {
            out.best_candidate = i;
            out.best_candidate_score = score;
        }
    }
    if (out.best_candidate < 0) return out;  // no other team exists
    if (out.best_candidate_score <= loser_score) return out;

    out.verdict = true;
    Team cand = out.best_candidate;
    for (Team k = 0; k < m; ++k) {
        if (k == cand) continue;
        // full concession to the candidate
        if (co.contains(k) && (k != loser || co.contains(loser)) &&
            t.points(k, cand) > 0)
            out.plan.moves.push_back(Move{std::min(cand, k), std::max(cand, k),
                                          cand < k ? n : 0, cand < k ? 0 : n});
    }
    if (co.contains(loser)) {
        // the loser also throws every other game it holds points in
        for (Team k = 0; k < m; ++k) {
            if (k == loser || k == cand) continue;
            if (t.points(loser, k) > 0)
                out.plan.moves.push_back(Move{std::min(loser, k),
                                              std::max(loser, k),
                                              loser < k ? 0 : n,
                                              loser < k ? n : 0});
        }
    }
    out.plan.sort_canonical();
    return out;
}

}  // namespace manip
