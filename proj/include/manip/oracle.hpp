#pragma once

#include "manip/brackets.hpp"
#include "manip/core.hpp"
#include "manip/cup.hpp"

namespace manip {

/// Exhaustive verdict from enumerating every flip subset of the
/// manipulable edge set, smallest subsets first, replaying the competition
/// for each. Witnesses are therefore minimal and deterministic.
struct OracleReport {
    bool achievable = false;
    int min_count = 0;
    ManipulationPlan witness;
    long long subsets_examined = 0;
};

struct OracleConfig {
    int max_manipulable_edges = 20;  // refuse larger instances (TooLarge)
};

OracleReport oracle_cup(Team target, const CupTree& tree, const Tournament& t,
                        const Coalition& co, const OracleConfig& cfg = {});

OracleReport oracle_roundrobin(Team target, const Tournament& t,
                               const Coalition& co, const OracleConfig& cfg = {});

enum class BracketKind { RankedReseed, DoubleElim };

struct BracketSpec {
    BracketKind kind = BracketKind::RankedReseed;
    std::vector<Team> order;  // seed ranks or entrant order
};

OracleReport oracle_bracket(Team target, const BracketSpec& spec,
                            const Tournament& t, const Coalition& co,
                            const OracleConfig& cfg = {});

}  // namespace manip
