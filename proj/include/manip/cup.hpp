#pragma once

#include <optional>
#include <vector>

#include "manip/core.hpp"

namespace manip {

/// Fixed single-elimination bracket: a perfect binary tree whose leaves
/// hold a seeding permutation. Leaf k plays leaf k^1 in the first round.
struct CupTree {
    int m = 0;
    std::vector<Team> leaves;  // leaves[pos] = team seeded at position pos

    static CupTree seeded(std::vector<Team> leaf_order);
    static CupTree balanced(int teams);  // identity seeding

    int height() const;  // rounds; log2(m)
};

/// Throws MalformedTree unless the tree is a perfect binary tree whose
/// leaves are a permutation of the tournament's teams.
void validate_tree(const CupTree& tree, int team_count);

/// Winner of the cup with every game played to the tournament graph.
Team simulate_cup(const CupTree& tree, const Tournament& t);

/// Bottom-up table of, per sub-election, which teams can win it under some
/// legal plan and at what minimal manipulation cost. Sub-elections are
/// addressed by (level, anchor team): level 0 is the anchor's leaf, the
/// tree height is the whole cup.
class WinnerTable {
public:
    int height() const { return height_; }

    /// Teams that can win the sub-election, sorted by id.
    std::vector<Team> possible_winners(int level, Team anchor) const;
    std::vector<Team> root_winners() const;

    /// Minimal manipulations for `winner` to take the sub-election;
    /// nullopt when it cannot.
    std::optional<int> min_manipulations(int level, Team anchor, Team winner) const;

    /// Witness plan realizing min_manipulations at the root.
    ManipulationPlan plan_for(Team winner) const;

    /// D_i membership: i wins against j as played or via a throw by j.
    bool can_defeat(Team i, Team j) const;
    /// c_ij: 1 exactly when beating j costs j a thrown game.
    int manip_cost(Team i, Team j) const;

    /// Pairwise checks performed while filling the table (at most m^2).
    long long comparisons() const { return comparisons_; }

private:
    friend WinnerTable analyze_cup(const CupTree&, const Tournament&,
                                   const Coalition&);

    int node_of(int level, Team anchor) const;
    void collect_moves(int node, int pos, ManipulationPlan& plan) const;

    int m_ = 0;
    int height_ = 0;
    std::vector<Team> leaves_;
    std::vector<int> leaf_pos_;           // team -> leaf position
    std::vector<std::vector<int>> cost_;  // per node, by pos - span_begin
    std::vector<std::vector<int>> pick_;  // chosen opponent leaf pos
    std::vector<char> coalition_mask_;
    Tournament tournament_;
    long long comparisons_ = 0;
};

WinnerTable analyze_cup(const CupTree& tree, const Tournament& t,
                        const Coalition& co);

/// Possible winners of the whole cup (root sub-election).
std::vector<Team> possible_winners(const CupTree& tree, const Tournament& t,
                                   const Coalition& co);

struct CupDecision {
    bool possible = false;
    ManipulationPlan plan;
};

struct CupMinResult {
    bool achievable = false;
    int count = 0;
    ManipulationPlan plan;
};

/// Can the coalition make `target` win the cup?
CupDecision cup_constructive(Team target, const CupTree& tree, const Tournament& t,
                             const Coalition& co);

/// Can the coalition make someone other than `loser` win?
CupDecision cup_destructive(Team loser, const CupTree& tree, const Tournament& t,
                            const Coalition& co);

/// Fewest thrown games that crown `target`.
CupMinResult cup_min_manipulations(Team target, const CupTree& tree,
                                   const Tournament& t, const Coalition& co);

/// Fewest thrown games that crown anyone other than `loser`.
CupMinResult cup_destructive_min(Team loser, const CupTree& tree,
                                 const Tournament& t, const Coalition& co);

}  // namespace manip
