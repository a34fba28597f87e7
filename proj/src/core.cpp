#include "manip/core.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace manip {

bool ScoringModel::contains(int a, int b) const {
    for (const auto& [x, y] : outcomes)
        if (x == a && y == b) return true;
    return false;
}

bool validate_model_form(const ScoringModel& model) {
    if (model.outcomes.empty()) return false;
    for (const auto& [a, b] : model.outcomes) {
        if (a < 0 || b < 0) return false;
        if (a + b != model.total) return false;
    }
    return true;
}

Tournament::Tournament(int teams) : m_(teams), pts_(teams * teams, 0) {
    if (teams < 1) throw Error("tournament needs at least one team");
}

void Tournament::set_result(Team i, Team j, int pi, int pj) {
    if (i == j || i < 0 || j < 0 || i >= m_ || j >= m_)
        throw Error("bad team pair in set_result");
    if (pi < 0 || pj < 0) throw Error("negative points");
    pts_[i * m_ + j] = pi;
    pts_[j * m_ + i] = pj;
}

bool Tournament::is_win_loss() const {
    for (Team i = 0; i < m_; ++i)
        for (Team j = i + 1; j < m_; ++j) {
            int a = points(i, j), b = points(j, i);
            if (!((a == 1 && b == 0) || (a == 0 && b == 1))) return false;
        }
    return true;
}

bool Tournament::has_strict_results() const {
    for (Team i = 0; i < m_; ++i)
        for (Team j = i + 1; j < m_; ++j)
            if (points(i, j) == points(j, i)) return false;
    return true;
}

Coalition::Coalition(int m, std::vector<Team> members) : mask_(m, 0) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (Team t : members) {
        if (t < 0 || t >= m)
            throw Error("coalition member " + std::to_string(t) + " out of range");
        mask_[t] = 1;
    }
    members_ = std::move(members);
}

bool ManipulableEdgeSet::contains(Team winner, Team loser) const {
    return std::binary_search(entries.begin(), entries.end(),
                              std::make_pair(winner, loser));
}

bool Move::operator<(const Move& o) const {
    return std::tie(i, j, pi, pj) < std::tie(o.i, o.j, o.pi, o.pj);
}

void ManipulationPlan::sort_canonical() {
    std::sort(moves.begin(), moves.end());
}

Move make_flip(const Tournament& t, Team winner, Team loser) {
    if (!t.beats(winner, loser)) throw IllegalMove("make_flip: not a won game");
    Team i = std::min(winner, loser), j = std::max(winner, loser);
    // swap the stored points so the old loser now out-scores the old winner
    return Move{i, j, t.points(j, i), t.points(i, j)};
}

ManipulableEdgeSet manipulable_edges(const Tournament& t, const Coalition& c) {
    ManipulableEdgeSet out;
    for (Team i = 0; i < t.size(); ++i) {
        if (!c.contains(i)) continue;
        for (Team j = 0; j < t.size(); ++j)
            if (i != j && t.beats(i, j)) out.entries.emplace_back(i, j);
    }
    std::sort(out.entries.begin(), out.entries.end());
    return out;
}

Tournament apply_plan(const Tournament& t, const ManipulationPlan& plan,
                      const Coalition& c) {
    Tournament out = t;
    std::set<std::pair<Team, Team>> seen;
    for (const Move& mv : plan.moves) {
        Team i = mv.i, j = mv.j;
        int pi = mv.pi, pj = mv.pj;
        if (i > j) { std::swap(i, j); std::swap(pi, pj); }
        if (i == j || i < 0 || j >= t.size())
            throw IllegalMove("move references unknown pair");
        if (!seen.insert({i, j}).second)
            throw IllegalMove("pair appears twice in plan");
        int ci = t.points(i, j), cj = t.points(j, i);
        if (pi == ci && pj == cj) throw IllegalMove("move changes nothing");
        if (pi + pj != ci + cj)
            throw IllegalMove("move does not preserve the game's point total");
        if (pi < 0 || pj < 0) throw IllegalMove("negative points in move");
        // the manipulator gives up points, its opponent gains
        if (pi < ci && !c.contains(i))
            throw IllegalMove("team " + std::to_string(i) + " not in coalition");
        if (pj < cj && !c.contains(j))
            throw IllegalMove("team " + std::to_string(j) + " not in coalition");
        out.set_result(i, j, pi, pj);
    }
    return out;
}

std::vector<int> copeland_scores(const Tournament& t) {
    std::vector<int> s(t.size(), 0);
    for (Team i = 0; i < t.size(); ++i)
        for (Team j = 0; j < t.size(); ++j)
            if (i != j) s[i] += t.points(i, j);
    return s;
}

NormalizedGame normalize_scoring(const ScoringModel& model, int nonmember_points,
                                 int member_points) {
    if (!validate_model_form(model))
        throw ModelNotSupported("scoring model not of form S={(i,n-i)}");
    if (!model.contains(nonmember_points, member_points))
        throw InvalidOutcome("outcome (" + std::to_string(nonmember_points) + "," +
                             std::to_string(member_points) + ") not in model");
    NormalizedGame out;
    out.nonmember_default = nonmember_points;
    out.residual.total = member_points;
    for (int x = 0; x <= member_points; ++x)
        out.residual.outcomes.emplace_back(x, member_points - x);
    return out;
}

}  // namespace manip
