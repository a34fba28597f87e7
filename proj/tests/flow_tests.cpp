#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "manip/flow.hpp"

using namespace manip;

namespace {

// Exhaustive reference: enumerate every integral per-arc assignment within
// bounds, keep those conserving flow at internal nodes, track the cheapest.
struct Enumerated {
    bool feasible = false;
    long long best_cost = 0;
};

Enumerated enumerate_flows(const FlowNetwork& net) {
    Enumerated out;
    std::vector<long long> flow(net.arcs.size(), 0);
    std::vector<long long> balance(net.node_count, 0);

    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == net.arcs.size()) {
            for (int v = 0; v < net.node_count; ++v)
                if (v != net.source && v != net.sink && balance[v] != 0) return;
            long long cost = 0;
            for (size_t a = 0; a < net.arcs.size(); ++a)
                cost += flow[a] * net.arcs[a].cost;
            if (!out.feasible || cost < out.best_cost) {
                out.feasible = true;
                out.best_cost = cost;
            }
            return;
        }
        const auto& arc = net.arcs[k];
        for (long long f = arc.lower; f <= arc.upper; ++f) {
            flow[k] = f;
            balance[arc.from] -= f;
            balance[arc.to] += f;
            rec(k + 1);
            balance[arc.from] += f;
            balance[arc.to] -= f;
        }
        flow[k] = 0;
    };
    rec(0);
    return out;
}

void check_bounds_and_conservation(const FlowNetwork& net, const FlowResult& res) {
    REQUIRE(res.arc_flow.size() == net.arcs.size());
    std::vector<long long> balance(net.node_count, 0);
    for (size_t a = 0; a < net.arcs.size(); ++a) {
        CHECK(res.arc_flow[a] >= net.arcs[a].lower);
        CHECK(res.arc_flow[a] <= net.arcs[a].upper);
        balance[net.arcs[a].from] -= res.arc_flow[a];
        balance[net.arcs[a].to] += res.arc_flow[a];
    }
    for (int v = 0; v < net.node_count; ++v)
        if (v != net.source && v != net.sink) CHECK(balance[v] == 0);
}

FlowNetwork random_network(std::mt19937& rng) {
    std::uniform_int_distribution<int> node_dist(2, 6);
    FlowNetwork net;
    net.node_count = node_dist(rng);
    net.source = 0;
    net.sink = net.node_count - 1;
    std::uniform_int_distribution<int> arc_dist(1, 12);
    std::uniform_int_distribution<int> bound_dist(0, 3);
    std::uniform_int_distribution<int> cost_dist(0, 3);
    int arcs = arc_dist(rng);
    for (int a = 0; a < arcs; ++a) {
        int from = (int)(rng() % (net.node_count - 1));  // never the sink
        int to = 1 + (int)(rng() % (net.node_count - 1));
        if (from == net.sink || to == net.source || from == to) {
            --a;
            continue;
        }
        int x = bound_dist(rng), y = bound_dist(rng);
        net.add_arc(from, to, std::min(x, y), std::max(x, y), cost_dist(rng));
    }
    return net;
}

}  // namespace

TEST_CASE("zero network is feasible with the zero flow") {
    FlowNetwork net;
    net.node_count = 3;
    net.source = 0;
    net.sink = 2;
    net.add_arc(0, 1, 0, 5, 1);
    net.add_arc(1, 2, 0, 5, 1);
    FlowResult res = feasible_flow(net);
    CHECK(res.feasible);
    check_bounds_and_conservation(net, res);
    CHECK(min_cost_feasible_flow(net).cost == 0);
}

TEST_CASE("a forced unit of flow pays the arc cost") {
    // s -> g -> v -> t with the first arc pinned at one unit
    FlowNetwork net;
    net.node_count = 4;
    net.source = 0;
    net.sink = 3;
    net.add_arc(0, 1, 1, 1, 0);
    net.add_arc(1, 2, 0, 1, 1);
    net.add_arc(2, 3, 0, 1, 0);
    FlowResult res = min_cost_feasible_flow(net);
    CHECK(res.feasible);
    CHECK(res.cost == 1);
    check_bounds_and_conservation(net, res);
}

TEST_CASE("infeasible when lower bounds exceed downstream capacity") {
    FlowNetwork net;
    net.node_count = 3;
    net.source = 0;
    net.sink = 2;
    net.add_arc(0, 1, 2, 2, 0);
    net.add_arc(1, 2, 0, 1, 0);
    CHECK(!feasible_flow(net).feasible);
    CHECK(!min_cost_feasible_flow(net).feasible);
}

TEST_CASE("malformed networks are rejected") {
    FlowNetwork net;
    net.node_count = 3;
    net.source = 0;
    net.sink = 2;
    net.add_arc(0, 1, 2, 1, 0);  // lower > upper
    CHECK_THROWS_AS(feasible_flow(net), MalformedNetwork);

    FlowNetwork bad;
    bad.node_count = 3;
    bad.source = 0;
    bad.sink = 2;
    bad.add_arc(1, 0, 0, 1, 0);  // arc into the source
    CHECK_THROWS_AS(min_cost_feasible_flow(bad), MalformedNetwork);

    FlowNetwork dangling;
    dangling.node_count = 3;
    dangling.source = 0;
    dangling.sink = 2;
    dangling.add_arc(0, 7, 0, 1, 0);
    CHECK_THROWS_AS(feasible_flow(dangling), MalformedNetwork);

    FlowNetwork negative;
    negative.node_count = 3;
    negative.source = 0;
    negative.sink = 2;
    negative.add_arc(0, 1, 0, 1, -2);
    CHECK_THROWS_AS(min_cost_feasible_flow(negative), MalformedNetwork);
}

TEST_CASE("solver matches exhaustive enumeration on random networks") {
    std::mt19937 rng(2024);
    int feasible_seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
        FlowNetwork net = random_network(rng);
        Enumerated ref = enumerate_flows(net);
        FlowResult fast = min_cost_feasible_flow(net);
        FlowResult any = feasible_flow(net);
        CHECK(fast.feasible == ref.feasible);
        CHECK(any.feasible == ref.feasible);
        if (ref.feasible) {
            ++feasible_seen;
            CHECK(fast.cost == ref.best_cost);
            check_bounds_and_conservation(net, fast);
            check_bounds_and_conservation(net, any);
        }
    }
    CHECK(feasible_seen > 50);  // the generator must exercise both outcomes
}

TEST_CASE("network debug dump") {
    FlowNetwork net;
    net.node_count = 3;
    net.source = 0;
    net.sink = 2;
    net.add_arc(0, 1, 1, 2, 3);
    net.add_arc(1, 2, 0, 2, 0);
    CHECK(network_to_text(net) ==
          "nodes 3 source 0 sink 2\narc 0 1 1 2 3\narc 1 2 0 2 0\n");
}
