#include "manip/cup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace manip {

namespace {

constexpr int kUnreachable = std::numeric_limits<int>::max() / 2;

bool is_power_of_two(int x) { return x > 0 && (x & (x - 1)) == 0; }

// heap node k spans leaf positions [begin, end)
struct Span {
    int begin;
    int end;
};

Span span_of(int node, int m, int height) {
    int depth = 0;
    for (int k = node; k > 1; k >>= 1) ++depth;
    int width = m >> depth;
    int first_at_depth = 1 << depth;
    int begin = (node - first_at_depth) * width;
    (void)height;
    return {begin, begin + width};
}

}  // namespace

CupTree CupTree::seeded(std::vector<Team> leaf_order) {
    CupTree tree;
    tree.m = (int)leaf_order.size();
    tree.leaves = std::move(leaf_order);
    return tree;
}

CupTree CupTree::balanced(int teams) {
    CupTree tree;
    tree.m = teams;
    tree.leaves.resize(teams);
    std::iota(tree.leaves.begin(), tree.leaves.end(), 0);
    return tree;
}

int CupTree::height() const {
    int h = 0;
    for (int w = m; w > 1; w >>= 1) ++h;
    return h;
}

void validate_tree(const CupTree& tree, int team_count) {
    if (tree.m != team_count)
        throw MalformedTree("cup tree covers " + std::to_string(tree.m) +
                            " leaves but the tournament has " +
                            std::to_string(team_count) + " teams");
    if (!is_power_of_two(tree.m))
        throw MalformedTree("cup tree must be a perfect binary tree "
                            "(team count is not a power of two)");
    if ((int)tree.leaves.size() != tree.m)
        throw MalformedTree("leaf list size mismatch");
    std::vector<char> seen(tree.m, 0);
    for (Team t : tree.leaves) {
        if (t < 0 || t >= tree.m || seen[t])
            throw MalformedTree("leaves are not a permutation of the teams");
        seen[t] = 1;
    }
}

Team simulate_cup(const CupTree& tree, const Tournament& t) {
    validate_tree(tree, t.size());
    std::vector<Team> alive = tree.leaves;
    while (alive.size() > 1) {
        std::vector<Team> next;
        next.reserve(alive.size() / 2);
        for (size_t k = 0; k + 1 < alive.size(); k += 2)
            next.push_back(t.beats(alive[k], alive[k + 1]) ? alive[k]
                                                           : alive[k + 1]);
        alive = std::move(next);
    }
    return alive[0];
}

WinnerTable analyze_cup(const CupTree& tree, const Tournament& t,
                        const Coalition& co) {
    validate_tree(tree, t.size());
    if (!t.has_strict_results())
        throw ModelNotSupported("cup manipulation needs a strict winner per game");

    WinnerTable w;
    w.m_ = tree.m;
    w.height_ = tree.height();
    w.leaves_ = tree.leaves;
    w.leaf_pos_.assign(tree.m, 0);
    for (int pos = 0; pos < tree.m; ++pos) w.leaf_pos_[tree.leaves[pos]] = pos;
    w.coalition_mask_.assign(tree.m, 0);
    for (Team c : co.members()) w.coalition_mask_[c] = 1;
    w.tournament_ = t;

    int total_nodes = 2 * tree.m;  // heap indices 1..2m-1
    w.cost_.assign(total_nodes, {});
    w.pick_.assign(total_nodes, {});
    for (int pos = 0; pos < tree.m; ++pos) {
        w.cost_[tree.m + pos] = {0};
        w.pick_[tree.m + pos] = {-1};
    }

    for (int node = tree.m - 1; node >= 1; --node) {
        int left = 2 * node, right = 2 * node + 1;
        Span ls = span_of(left, tree.m, w.height_);
        Span rs = span_of(right, tree.m, w.height_);
        int width = (rs.end - rs.begin) + (ls.end - ls.begin);
        w.cost_[node].assign(width, kUnreachable);
        w.pick_[node].assign(width, -1);

        // one pass over candidate pairs updates both sides of the draw
        for (int p = ls.begin; p < ls.end; ++p) {
            int cl = w.cost_[left][p - ls.begin];
            if (cl >= kUnreachable) continue;
            Team a = tree.leaves[p];
            for (int q = rs.begin; q < rs.end; ++q) {
                int cr = w.cost_[right][q - rs.begin];
                if (cr >= kUnreachable) continue;
                Team b = tree.leaves[q];
                ++w.comparisons_;
                if (w.can_defeat(a, b)) {
                    int cand = cl + cr + w.manip_cost(a, b);
                    int at = p - ls.begin;
                    if (cand < w.cost_[node][at]) {
                        w.cost_[node][at] = cand;
                        w.pick_[node][at] = q;
                    }
                }
                if (w.can_defeat(b, a)) {
                    int cand = cl + cr + w.manip_cost(b, a);
                    int at = q - ls.begin;  // spans are adjacent
                    if (cand < w.cost_[node][at]) {
                        w.cost_[node][at] = cand;
                        w.pick_[node][at] = p;
                    }
                }
            }
        }
    }
    return w;
}

int WinnerTable::node_of(int level, Team anchor) const {
    if (level < 0 || level > height_)
        throw MalformedTree("no such level: " + std::to_string(level));
    if (anchor < 0 || anchor >= m_)
        throw MalformedTree("no such team: " + std::to_string(anchor));
    return (m_ + leaf_pos_[anchor]) >> level;
}

std::vector<Team> WinnerTable::possible_winners(int level, Team anchor) const {
    int node = node_of(level, anchor);
    Span s = span_of(node, m_, height_);
    std::vector<Team> out;
    for (int pos = s.begin; pos < s.end; ++pos)
        if (cost_[node][pos - s.begin] < kUnreachable)
            out.push_back(leaves_[pos]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Team> WinnerTable::root_winners() const {
    return possible_winners(height_, leaves_[0]);
}

std::optional<int> WinnerTable::min_manipulations(int level, Team anchor,
                                                  Team winner) const {
    int node = node_of(level, anchor);
    Span s = span_of(node, m_, height_);
    int pos = leaf_pos_[winner];
    if (pos < s.begin || pos >= s.end) return std::nullopt;
    int c = cost_[node][pos - s.begin];
    if (c >= kUnreachable) return std::nullopt;
    return c;
}

bool WinnerTable::can_defeat(Team i, Team j) const {
    return tournament_.beats(i, j) || coalition_mask_[j];
}

int WinnerTable::manip_cost(Team i, Team j) const {
    return (tournament_.beats(j, i) && coalition_mask_[j]) ? 1 : 0;
}

void WinnerTable::collect_moves(int node, int pos, ManipulationPlan& plan) const {
    if (node >= m_) return;  // leaf
    Span s = span_of(node, m_, height_);
    int opp = pick_[node][pos - s.begin];
    Team winner = leaves_[pos], from = leaves_[opp];
    int child = (2 * node) + (pos >= span_of(2 * node, m_, height_).end ? 1 : 0);
    int other = (2 * node) + (child == 2 * node ? 1 : 0);
    collect_moves(child, pos, plan);
    collect_moves(other, opp, plan);
    if (manip_cost(winner, from) == 1)
        plan.moves.push_back(make_flip(tournament_, from, winner));
}

ManipulationPlan WinnerTable::plan_for(Team winner) const {
    ManipulationPlan plan;
    collect_moves(1, leaf_pos_[winner], plan);
    plan.sort_canonical();
    return plan;
}

std::vector<Team> possible_winners(const CupTree& tree, const Tournament& t,
                                   const Coalition& co) {
    return analyze_cup(tree, t, co).root_winners();
}

CupDecision cup_constructive(Team target, const CupTree& tree, const Tournament& t,
                             const Coalition& co) {
    WinnerTable table = analyze_cup(tree, t, co);
    CupDecision out;
    if (table.min_manipulations(table.height(), target, target)) {
        out.possible = true;
        out.plan = table.plan_for(target);
    }
    return out;
}

CupDecision cup_destructive(Team loser, const CupTree& tree, const Tournament& t,
                            const Coalition& co) {
    WinnerTable table = analyze_cup(tree, t, co);
    CupDecision out;
    for (Team u : table.root_winners()) {
        if (u == loser) continue;
        out.possible = true;
        out.plan = table.plan_for(u);
        break;
    }
    return out;
}

CupMinResult cup_min_manipulations(Team target, const CupTree& tree,
                                   const Tournament& t, const Coalition& co) {
    WinnerTable table = analyze_cup(tree, t, co);
    CupMinResult out;
    auto c = table.min_manipulations(table.height(), target, target);
    if (c) {
        out.achievable = true;
        out.count = *c;
        out.plan = table.plan_for(target);
    }
    return out;
}

CupMinResult cup_destructive_min(Team loser, const CupTree& tree,
                                 const Tournament& t, const Coalition& co) {
    WinnerTable table = analyze_cup(tree, t, co);
    CupMinResult out;
    Team best = -1;
    for (Team u : table.root_winners()) {
        if (u == loser) continue;
        int c = *table.min_manipulations(table.height(), u, u);
        if (!out.achievable || c < out.count) {
            out.achievable = true;
            out.count = c;
            best = u;
        }
    }
    if (out.achievable) out.plan = table.plan_for(best);
    return out;
}

}  // namespace manip
