#pragma once

#include <string>
#include <vector>

#include "manip/errors.hpp"

namespace manip {

/// Directed network with per-arc [lower, upper] capacity bounds and
/// nonnegative integer costs. The source has no incoming arcs and the
/// sink no outgoing arcs; conservation is required everywhere else.
struct FlowNetwork {
    struct Arc {
        int from = 0;
        int to = 0;
        long long lower = 0;
        long long upper = 0;
        long long cost = 0;
    };

    int node_count = 0;
    int source = 0;
    int sink = 0;
    std::vector<Arc> arcs;

    int add_arc(int from, int to, long long lower, long long upper,
                long long cost = 0);
};

struct FlowResult {
    bool feasible = false;
    long long cost = 0;
    std::vector<long long> arc_flow;  // parallel to FlowNetwork::arcs
};

/// Throws MalformedNetwork unless bounds, node ids and the source/sink
/// arc restrictions all hold.
void validate_network(const FlowNetwork& net);

/// Any flow meeting every bound, found via the usual reduction of lower
/// bounds to a max-flow instance. Costs are ignored.
FlowResult feasible_flow(const FlowNetwork& net);

/// A feasible flow of exactly minimum total cost (integral; exact).
FlowResult min_cost_feasible_flow(const FlowNetwork& net);

/// Line-oriented dump used for test fixtures and debugging:
///   nodes <N> source <s> sink <t>
///   arc <from> <to> <lower> <upper> <cost>
std::string network_to_text(const FlowNetwork& net);

}  // namespace manip
