#include "manip/oracle.hpp"

#include <functional>
#include <string>

namespace manip {

namespace {

// Enumerates flip subsets by size, then lexicographically by edge index,
// toggling flips in place. Stops at the first subset whose replay crowns
// the target, which makes the reported count exact.
OracleReport enumerate_flips(
    const Tournament& t, const Coalition& co, const OracleConfig& cfg,
    const std::function<bool(const Tournament&)>& target_wins) {
    ManipulableEdgeSet edges = manipulable_edges(t, co);
    int n = edges.size();
    if (n > cfg.max_manipulable_edges)
        throw TooLarge("instance has " + std::to_string(n) +
                       " manipulable edges; cap is " +
                       std::to_string(cfg.max_manipulable_edges));

    OracleReport report;
    Tournament work = t;
    std::vector<int> chosen;

    auto flip = [&](int e) {
        auto [w, l] = edges.entries[e];
        int pw = work.points(w, l), pl = work.points(l, w);
        work.set_result(w, l, pl, pw);
    };

    std::function<bool(int, int)> next = [&](int size, int first) {
        if ((int)chosen.size() == size) {
            ++report.subsets_examined;
            return target_wins(work);
        }
        for (int e = first; e < n; ++e) {
            chosen.push_back(e);
            flip(e);
            bool hit = next(size, e + 1);
            if (hit) return true;
            flip(e);
            chosen.pop_back();
        }
        return false;
    };

    for (int size = 0; size <= n; ++size) {
        if (next(size, 0)) {
            report.achievable = true;
            report.min_count = size;
            for (int e : chosen) {
                auto [w, l] = edges.entries[e];
                report.witness.moves.push_back(make_flip(t, w, l));
            }
            report.witness.sort_canonical();
            return report;
        }
    }
    return report;
}

}  // namespace

OracleReport oracle_cup(Team target, const CupTree& tree, const Tournament& t,
                        const Coalition& co, const OracleConfig& cfg) {
    validate_tree(tree, t.size());
    return enumerate_flips(t, co, cfg, [&](const Tournament& cur) {
        return simulate_cup(tree, cur) == target;
    });
}

OracleReport oracle_roundrobin(Team target, const Tournament& t,
                               const Coalition& co, const OracleConfig& cfg) {
    return enumerate_flips(t, co, cfg, [&](const Tournament& cur) {
        std::vector<int> score = copeland_scores(cur);
        for (Team k = 0; k < cur.size(); ++k)
            if (score[k] > score[target]) return false;
        return true;
    });
}

OracleReport oracle_bracket(Team target, const BracketSpec& spec,
                            const Tournament& t, const Coalition& co,
                            const OracleConfig& cfg) {
    if (spec.kind == BracketKind::RankedReseed) {
        SeededField field{spec.order};
        validate_field(field, t.size());
        return enumerate_flips(t, co, cfg, [&](const Tournament& cur) {
            return simulate_reseed(field, cur) == target;
        });
    }
    DoubleElimBracket bracket{spec.order};
    validate_bracket(bracket, t.size());
    return enumerate_flips(t, co, cfg, [&](const Tournament& cur) {
        return simulate_double_elim(bracket, cur).champion == target;
    });
}

}  // namespace manip
