#pragma once

#include <utility>
#include <vector>

#include "manip/errors.hpp"

namespace manip {

using Team = int;

/// The set of admissible per-game outcome point pairs. `total` is the
/// declared per-game point total n; the win-loss model is {(0,1),(1,0)}
/// with n = 1. Fractional models are expected to be pre-scaled to
/// integers by the caller (chess halves -> n = 2).
struct ScoringModel {
    int total = 1;
    std::vector<std::pair<int, int>> outcomes;

    static ScoringModel win_loss() { return {1, {{0, 1}, {1, 0}}}; }

    bool contains(int a, int b) const;
    bool operator==(const ScoringModel&) const = default;
};

/// True iff every outcome pair sums to the same declared total, i.e. the
/// model has the fixed-sum form that keeps winner determination tractable.
bool validate_model_form(const ScoringModel& model);

/// Complete result structure over m teams: every unordered pair has
/// exactly one outcome pair of nonnegative points. Win-loss games store
/// (1,0)/(0,1); generalized games store whatever the scoring model allows.
class Tournament {
public:
    Tournament() = default;
    explicit Tournament(int teams);

    int size() const { return m_; }
    int points(Team i, Team j) const { return pts_[i * m_ + j]; }
    void set_result(Team i, Team j, int pi, int pj);
    bool beats(Team i, Team j) const { return points(i, j) > points(j, i); }

    /// Every game scored (1,0) or (0,1).
    bool is_win_loss() const;
    /// Every game has a strict winner (no tied outcome pairs).
    bool has_strict_results() const;

    bool operator==(const Tournament&) const = default;

private:
    int m_ = 0;
    std::vector<int> pts_;  // row-major; pts_[i*m+j] = points i earned vs j
};

/// The set of teams willing to throw games. Membership is checked in O(1).
class Coalition {
public:
    Coalition() = default;
    Coalition(int m, std::vector<Team> members);

    bool contains(Team t) const { return t >= 0 && t < (int)mask_.size() && mask_[t]; }
    const std::vector<Team>& members() const { return members_; }
    int size() const { return (int)members_.size(); }
    int team_count() const { return (int)mask_.size(); }

    bool operator==(const Coalition&) const = default;

private:
    std::vector<char> mask_;
    std::vector<Team> members_;  // sorted, unique
};

/// Ordered winner->loser pairs the coalition can reverse: (i,j) is present
/// exactly when i beat j and i is a coalition member.
struct ManipulableEdgeSet {
    std::vector<std::pair<Team, Team>> entries;  // sorted

    bool contains(Team winner, Team loser) const;
    int size() const { return (int)entries.size(); }
};

/// One game-outcome reassignment: the game between `i` and `j` (i < j)
/// is rescored to (pi, pj).
struct Move {
    Team i = 0;
    Team j = 0;
    int pi = 0;
    int pj = 0;

    bool operator==(const Move&) const = default;
    bool operator<(const Move& o) const;
};

/// A set of legal game reassignments; the unit every decision procedure
/// returns as its witness.
struct ManipulationPlan {
    std::vector<Move> moves;

    int count() const { return (int)moves.size(); }
    bool empty() const { return moves.empty(); }
    void sort_canonical();
};

/// Win-loss flip of a game `winner` currently wins: rescores it so the
/// points swap sides.
Move make_flip(const Tournament& t, Team winner, Team loser);

ManipulableEdgeSet manipulable_edges(const Tournament& t, const Coalition& c);

/// Applies every move, validating legality against the coalition: the side
/// losing points must be a member, point totals per game are preserved,
/// no pair may appear twice and no move may be a no-op. Throws IllegalMove.
Tournament apply_plan(const Tournament& t, const ManipulationPlan& plan,
                      const Coalition& c);

/// Per-team point totals; out-degree for win-loss tournaments.
std::vector<int> copeland_scores(const Tournament& t);

/// Restricted residual model for a coalition-vs-noncoalition game, given
/// the fair points of each side. The non-member banks its fair points and
/// the open remainder (the member's fair points) is scored from a fresh
/// fixed-sum model whose first coordinate is the non-member's extra points.
struct NormalizedGame {
    int nonmember_default = 0;
    ScoringModel residual;
};

NormalizedGame normalize_scoring(const ScoringModel& model, int nonmember_points,
                                 int member_points);

}  // namespace manip
