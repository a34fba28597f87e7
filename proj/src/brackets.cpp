#include "manip/brackets.hpp"

#include <algorithm>
#include <map>

namespace manip {

namespace {

bool is_power_of_two(int x) { return x > 0 && (x & (x - 1)) == 0; }

void check_permutation(const std::vector<Team>& order, int team_count,
                       const char* what) {
    std::vector<char> seen(team_count, 0);
    for (Team t : order) {
        if (t < 0 || t >= team_count || seen[t])
            throw Error(std::string(what) +
                        " is not a permutation of the teams");
        seen[t] = 1;
    }
}

// best remaining seed against worst remaining seed, and so on inward
std::vector<PlayedGame> pair_by_rank(std::vector<Team> survivors,
                                     const std::vector<int>& rank) {
    std::sort(survivors.begin(), survivors.end(),
              [&](Team a, Team b) { return rank[a] < rank[b]; });
    std::vector<PlayedGame> games;
    int n = (int)survivors.size();
    for (int k = 0; k < n / 2; ++k)
        games.push_back({survivors[k], survivors[n - 1 - k], -1});
    return games;
}

std::vector<int> rank_of(const SeededField& field) {
    std::vector<int> rank(field.size(), 0);
    for (int r = 0; r < field.size(); ++r) rank[field.seeds[r]] = r;
    return rank;
}

}  // namespace

void validate_field(const SeededField& field, int team_count) {
    if (field.size() != team_count)
        throw MalformedField("seed list covers " + std::to_string(field.size()) +
                             " teams, tournament has " +
                             std::to_string(team_count));
    if (!is_power_of_two(field.size()))
        throw MalformedField("field size must be a power of two");
    try {
        check_permutation(field.seeds, team_count, "seed list");
    } catch (const Error& e) {
        throw MalformedField(e.what());
    }
}

void validate_bracket(const DoubleElimBracket& bracket, int team_count) {
    if (bracket.size() != team_count)
        throw MalformedBracket("entrant list covers " +
                               std::to_string(bracket.size()) +
                               " teams, tournament has " +
                               std::to_string(team_count));
    if (!is_power_of_two(bracket.size()))
        throw MalformedBracket("bracket size must be a power of two");
    try {
        check_permutation(bracket.entrants, team_count, "entrant list");
    } catch (const Error& e) {
        throw MalformedBracket(e.what());
    }
}

Team simulate_reseed(const SeededField& field, const Tournament& t) {
    validate_field(field, t.size());
    std::vector<int> rank = rank_of(field);
    std::vector<Team> alive = field.seeds;
    while (alive.size() > 1) {
        std::vector<Team> next;
        for (PlayedGame g : pair_by_rank(alive, rank))
            next.push_back(t.beats(g.a, g.b) ? g.a : g.b);
        alive = std::move(next);
    }
    return alive[0];
}

std::vector<Team> simulate_round(const std::vector<Team>& survivors,
                                 const std::vector<bool>& throws,
                                 const SeededField& field, const Tournament& t,
                                 const Coalition& co) {
    if (survivors.size() % 2 != 0 || survivors.empty())
        throw MalformedField("round needs an even number of survivors");
    std::vector<int> rank = rank_of(field);
    std::vector<PlayedGame> games = pair_by_rank(survivors, rank);
    if (throws.size() != games.size())
        throw MalformedField("one throw flag per game required");
    std::vector<Team> next;
    for (size_t k = 0; k < games.size(); ++k) {
        Team fair = t.beats(games[k].a, games[k].b) ? games[k].a : games[k].b;
        if (throws[k]) {
            if (!co.contains(fair))
                throw IllegalThrow("team " + std::to_string(fair) +
                                   " cannot throw: not a coalition member");
            next.push_back(games[k].a == fair ? games[k].b : games[k].a);
        } else {
            next.push_back(fair);
        }
    }
    return next;
}

namespace {

struct ReseedSearch {
    const Tournament& t;
    const Coalition& co;
    std::vector<int> rank;
    Team target;
    long long scenarios = 0;
    ManipulationPlan witness;

    bool dfs(std::vector<Team> alive, ManipulationPlan& picked) {
        if (alive.size() == 1) {
            ++scenarios;
            if (alive[0] == target) {
                witness = picked;
                return true;
            }
            return false;
        }
        std::vector<PlayedGame> games = pair_by_rank(alive, rank);
        std::vector<int> branchable;
        for (int k = 0; k < (int)games.size(); ++k) {
            Team fair = t.beats(games[k].a, games[k].b) ? games[k].a : games[k].b;
            games[k].winner = fair;
            if (co.contains(fair)) branchable.push_back(k);
        }
        // all-fair mask first so the first witness throws as late as possible
        for (unsigned mask = 0; mask < (1u << branchable.size()); ++mask) {
            std::vector<Team> next;
            size_t before = picked.moves.size();
            for (int k = 0, b = 0; k < (int)games.size(); ++k) {
                bool thrown = b < (int)branchable.size() && branchable[b] == k &&
                              (mask >> b) & 1;
                if (b < (int)branchable.size() && branchable[b] == k) ++b;
                Team fair = games[k].winner;
                Team other = games[k].a == fair ? games[k].b : games[k].a;
                if (thrown) {
                    picked.moves.push_back(make_flip(t, fair, other));
                    next.push_back(other);
                } else {
                    next.push_back(fair);
                }
            }
            if (dfs(std::move(next), picked)) return true;
            picked.moves.resize(before);
        }
        return false;
    }
};

}  // namespace

BracketSearchResult ranked_reseed_constructive(Team target,
                                               const SeededField& field,
                                               const Tournament& t,
                                               const Coalition& co,
                                               int max_coalition) {
    validate_field(field, t.size());
    if (!t.has_strict_results())
        throw ModelNotSupported("bracket play needs a strict winner per game");
    if (target < 0 || target >= t.size()) throw Error("no such team");
    if (co.size() > max_coalition)
        throw CoalitionTooLarge("coalition of " + std::to_string(co.size()) +
                                " exceeds the configured bound of " +
                                std::to_string(max_coalition));

    ReseedSearch search{t, co, rank_of(field), target, 0, {}};
    ManipulationPlan picked;
    BracketSearchResult out;
    out.achievable = search.dfs(field.seeds, picked);
    out.scenarios = search.scenarios;
    if (out.achievable) {
        out.plan = std::move(search.witness);
        out.plan.sort_canonical();
    }
    return out;
}

namespace {

// Standing throw decisions: a pair's decision is made at its first meeting
// and reused for any rematch, so every explored scenario equals a replay
// of the bracket on a flipped tournament graph.
struct DoubleElimSearch {
    const Tournament& t;
    const Coalition& co;
    Team target;
    long long scenarios = 0;
    std::map<std::pair<Team, Team>, bool> decided;
    ManipulationPlan witness;

    Team fair_winner(Team a, Team b) const { return t.beats(a, b) ? a : b; }

    // enumerate outcomes of the games in `games`, then call next(survivors)
    template <typename Next>
    bool play_stage(const std::vector<PlayedGame>& games, int idx,
                    std::vector<Team>& survivors, const Next& next) {
        if (idx == (int)games.size()) return next();
        Team a = games[idx].a, b = games[idx].b;
        Team fair = fair_winner(a, b);
        Team other = a == fair ? b : a;
        auto key = std::minmax(a, b);
        auto found = decided.find(key);
        if (found != decided.end()) {
            survivors.push_back(found->second ? other : fair);
            bool hit = play_stage(games, idx + 1, survivors, next);
            survivors.pop_back();
            return hit;
        }
        if (!co.contains(fair)) {
            survivors.push_back(fair);
            bool hit = play_stage(games, idx + 1, survivors, next);
            survivors.pop_back();
            return hit;
        }
        for (bool thrown : {false, true}) {
            decided[key] = thrown;
            survivors.push_back(thrown ? other : fair);
            bool hit = play_stage(games, idx + 1, survivors, next);
            survivors.pop_back();
            decided.erase(key);
            if (hit) return true;
        }
        return false;
    }

    bool run(std::vector<Team> wb, std::vector<Team> lb, int stage_k) {
        if (wb.size() == 1 && lb.size() == 1) {  // grand final
            std::vector<PlayedGame> gf{{wb[0], lb[0], -1}};
            std::vector<Team> champ;
            return play_stage(gf, 0, champ, [&] {
                ++scenarios;
                if (champ[0] != target) return false;
                record_witness();
                return true;
            });
        }
        if (wb.size() == 1 && lb.empty()) {  // two-team bracket before LB forms
            ++scenarios;
            return false;  // unreachable for m >= 2: lb fills after stage 1
        }

        std::vector<PlayedGame> wb_games;
        for (size_t k = 0; k + 1 < wb.size(); k += 2)
            wb_games.push_back({wb[k], wb[k + 1], -1});
        std::vector<Team> wb_winners;
        return play_stage(wb_games, 0, wb_winners, [&] {
            std::vector<Team> droppers;
            for (size_t k = 0; k < wb_games.size(); ++k) {
                Team w = wb_winners[k];
                droppers.push_back(wb_games[k].a == w ? wb_games[k].b
                                                      : wb_games[k].a);
            }
            if (stage_k == 1) {
                if (droppers.size() == 1)
                    return run(wb_winners, droppers, stage_k + 1);
                return internal_round(wb_winners, droppers, stage_k);
            }
            // drop-in: reversed pairing against the losers-bracket survivors
            std::vector<PlayedGame> games;
            for (size_t k = 0; k < lb.size(); ++k)
                games.push_back({lb[k], droppers[droppers.size() - 1 - k], -1});
            std::vector<Team> merged;
            return play_stage(games, 0, merged, [&] {
                if (merged.size() >= 2) return internal_round(wb_winners, merged, stage_k);
                return run(wb_winners, merged, stage_k + 1);
            });
        });
    }

    bool internal_round(const std::vector<Team>& wb, const std::vector<Team>& lb,
                        int stage_k) {
        std::vector<PlayedGame> games;
        for (size_t k = 0; k + 1 < lb.size(); k += 2)
            games.push_back({lb[k], lb[k + 1], -1});
        std::vector<Team> lb_winners;
        return play_stage(games, 0, lb_winners,
                          [&] { return run(wb, lb_winners, stage_k + 1); });
    }

    void record_witness() {
        witness.moves.clear();
        for (const auto& [pair, thrown] : decided)
            if (thrown) {
                Team w = fair_winner(pair.first, pair.second);
                Team l = pair.first == w ? pair.second : pair.first;
                witness.moves.push_back(make_flip(t, w, l));
            }
        witness.sort_canonical();
    }
};

}  // namespace

DoubleElimReplay simulate_double_elim(const DoubleElimBracket& bracket,
                                      const Tournament& t) {
    validate_bracket(bracket, t.size());
    if (!t.has_strict_results())
        throw ModelNotSupported("bracket play needs a strict winner per game");

    DoubleElimReplay replay;
    replay.losses.assign(t.size(), 0);
    auto play = [&](std::vector<PlayedGame>& games) {
        std::vector<Team> winners;
        for (PlayedGame& g : games) {
            g.winner = t.beats(g.a, g.b) ? g.a : g.b;
            ++replay.losses[g.a == g.winner ? g.b : g.a];
            winners.push_back(g.winner);
        }
        return winners;
    };

    std::vector<Team> wb = bracket.entrants, lb;
    int stage_k = 1;
    while (wb.size() > 1) {
        std::vector<PlayedGame> games;
        for (size_t k = 0; k + 1 < wb.size(); k += 2)
            games.push_back({wb[k], wb[k + 1], -1});
        std::vector<Team> winners = play(games);
        std::vector<Team> droppers;
        for (size_t k = 0; k < games.size(); ++k)
            droppers.push_back(games[k].a == winners[k] ? games[k].b
                                                        : games[k].a);
        replay.wb_rounds.push_back(games);
        wb = std::move(winners);

        if (stage_k == 1) {
            lb = droppers;
        } else {
            std::vector<PlayedGame> drop_games;
            for (size_t k = 0; k < lb.size(); ++k)
                drop_games.push_back(
                    {lb[k], droppers[droppers.size() - 1 - k], -1});
            lb = play(drop_games);
            replay.lb_rounds.push_back(drop_games);
        }
        if (lb.size() >= 2) {
            std::vector<PlayedGame> internal;
            for (size_t k = 0; k + 1 < lb.size(); k += 2)
                internal.push_back({lb[k], lb[k + 1], -1});
            lb = play(internal);
            replay.lb_rounds.push_back(internal);
        }
        ++stage_k;
    }

    if (!lb.empty()) {
        std::vector<PlayedGame> gf{{wb[0], lb[0], -1}};
        play(gf);
        replay.grand_final = gf[0];
        replay.champion = gf[0].winner;
    } else {
        replay.champion = wb[0];  // single-team bracket
    }
    return replay;
}

BracketSearchResult double_elim_constructive(Team target,
                                             const DoubleElimBracket& bracket,
                                             const Tournament& t,
                                             const Coalition& co,
                                             int max_coalition) {
    validate_bracket(bracket, t.size());
    if (!t.has_strict_results())
        throw ModelNotSupported("bracket play needs a strict winner per game");
    if (target < 0 || target >= t.size()) throw Error("no such team");
    if (co.size() > max_coalition)
        throw CoalitionTooLarge("coalition of " + std::to_string(co.size()) +
                                " exceeds the configured bound of " +
                                std::to_string(max_coalition));

    BracketSearchResult out;
    if (bracket.size() == 1) {
        out.achievable = bracket.entrants[0] == target;
        out.scenarios = 1;
        return out;
    }
    DoubleElimSearch search{t, co, target, 0, {}, {}};
    out.achievable = search.run(bracket.entrants, {}, 1);
    out.scenarios = search.scenarios;
    if (out.achievable) out.plan = std::move(search.witness);
    return out;
}

}  // namespace manip
