#include "manip/flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>
#include <sstream>

namespace manip {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

// Residual-graph solver shared by both entry points. The lower-bound
// reduction adds a circulation arc sink->source plus a super source/sink
// absorbing the per-node excesses induced by the lower bounds.
struct Residual {
    struct Edge {
        int to;
        long long cap;
        long long cost;
        int rev;  // index of the reverse edge in graph[to]
    };

    std::vector<std::vector<Edge>> graph;

    explicit Residual(int n) : graph(n) {}

    void add(int from, int to, long long cap, long long cost) {
        graph[from].push_back({to, cap, cost, (int)graph[to].size()});
        graph[to].push_back({from, 0, -cost, (int)graph[from].size() - 1});
    }

    // Edmonds-Karp: max flow, costs ignored.
    long long max_flow(int s, int t) {
        long long total = 0;
        int n = (int)graph.size();
        for (;;) {
            std::vector<int> pv(n, -1), pe(n, -1);
            std::queue<int> q;
            q.push(s);
            pv[s] = s;
            while (!q.empty() && pv[t] < 0) {
                int u = q.front();
                q.pop();
                for (int k = 0; k < (int)graph[u].size(); ++k) {
                    const Edge& e = graph[u][k];
                    if (e.cap > 0 && pv[e.to] < 0) {
                        pv[e.to] = u;
                        pe[e.to] = k;
                        q.push(e.to);
                    }
                }
            }
            if (pv[t] < 0) break;
            long long push = kInf;
            for (int v = t; v != s; v = pv[v])
                push = std::min(push, graph[pv[v]][pe[v]].cap);
            for (int v = t; v != s; v = pv[v]) {
                Edge& e = graph[pv[v]][pe[v]];
                e.cap -= push;
                graph[v][e.rev].cap += push;
            }
            total += push;
        }
        return total;
    }

    // Successive shortest augmenting paths (SPFA distances; residual costs
    // can be negative but no negative cycles arise from nonnegative input
    // costs). Returns the max flow value; cost accumulates in *cost_out.
    long long min_cost_max_flow(int s, int t, long long* cost_out) {
        long long total = 0, cost = 0;
        int n = (int)graph.size();
        for (;;) {
            std::vector<long long> dist(n, kInf);
            std::vector<int> pv(n, -1), pe(n, -1);
            std::vector<char> inq(n, 0);
            std::deque<int> q;
            dist[s] = 0;
            q.push_back(s);
            while (!q.empty()) {
                int u = q.front();
                q.pop_front();
                inq[u] = 0;
                for (int k = 0; k < (int)graph[u].size(); ++k) {
                    const Edge& e = graph[u][k];
                    if (e.cap > 0 && dist[u] + e.cost < dist[e.to]) {
                        dist[e.to] = dist[u] + e.cost;
                        pv[e.to] = u;
                        pe[e.to] = k;
                        if (!inq[e.to]) {
                            inq[e.to] = 1;
                            q.push_back(e.to);
                        }
                    }
                }
            }
            if (dist[t] >= kInf) break;
            long long push = kInf;
            for (int v = t; v != s; v = pv[v])
                push = std::min(push, graph[pv[v]][pe[v]].cap);
            for (int v = t; v != s; v = pv[v]) {
                Edge& e = graph[pv[v]][pe[v]];
                e.cap -= push;
                graph[v][e.rev].cap += push;
            }
            total += push;
            cost += push * dist[t];
        }
        *cost_out = cost;
        return total;
    }
};

struct Reduction {
    Residual res;
    long long required;             // total positive excess to saturate
    std::vector<std::pair<int, int>> arc_pos;  // residual (node, edge idx) per arc

    Reduction(const FlowNetwork& net)
        : res(net.node_count + 2), required(0) {
        int super_s = net.node_count, super_t = net.node_count + 1;
        std::vector<long long> excess(net.node_count, 0);
        for (const auto& a : net.arcs) {
            arc_pos.emplace_back(a.from, (int)res.graph[a.from].size());
            res.add(a.from, a.to, a.upper - a.lower, a.cost);
            excess[a.to] += a.lower;
            excess[a.from] -= a.lower;
        }
        // circulation arc so the source/sink pair carries whatever the
        // lower bounds demand
        res.add(net.sink, net.source, kInf, 0);
        for (int v = 0; v < net.node_count; ++v) {
            if (excess[v] > 0) {
                res.add(super_s, v, excess[v], 0);
                required += excess[v];
            } else if (excess[v] < 0) {
                res.add(v, super_t, -excess[v], 0);
            }
        }
    }

    FlowResult extract(const FlowNetwork& net, bool feasible) const {
        FlowResult out;
        out.feasible = feasible;
        if (!feasible) return out;
        out.arc_flow.resize(net.arcs.size());
        for (size_t k = 0; k < net.arcs.size(); ++k) {
            auto [node, idx] = arc_pos[k];
            long long sent =
                (net.arcs[k].upper - net.arcs[k].lower) - res.graph[node][idx].cap;
            out.arc_flow[k] = net.arcs[k].lower + sent;
            out.cost += out.arc_flow[k] * net.arcs[k].cost;
        }
        return out;
    }
};

}  // namespace

int FlowNetwork::add_arc(int from, int to, long long lower, long long upper,
                         long long cost) {
    arcs.push_back({from, to, lower, upper, cost});
    return (int)arcs.size() - 1;
}

void validate_network(const FlowNetwork& net) {
    if (net.node_count < 2) throw MalformedNetwork("need at least source and sink");
    auto in_range = [&](int v) { return v >= 0 && v < net.node_count; };
    if (!in_range(net.source) || !in_range(net.sink) || net.source == net.sink)
        throw MalformedNetwork("bad source/sink");
    for (const auto& a : net.arcs) {
        if (!in_range(a.from) || !in_range(a.to))
            throw MalformedNetwork("dangling arc");
        if (a.from == a.to) throw MalformedNetwork("self-loop arc");
        if (a.lower < 0 || a.lower > a.upper)
            throw MalformedNetwork("arc bounds violate 0 <= lower <= upper");
        if (a.cost < 0) throw MalformedNetwork("negative arc cost");
        if (a.to == net.source) throw MalformedNetwork("arc into the source");
        if (a.from == net.sink) throw MalformedNetwork("arc out of the sink");
    }
}

FlowResult feasible_flow(const FlowNetwork& net) {
    validate_network(net);
    Reduction red(net);
    long long sent = red.res.max_flow(net.node_count, net.node_count + 1);
    return red.extract(net, sent == red.required);
}

FlowResult min_cost_feasible_flow(const FlowNetwork& net) {
    validate_network(net);
    Reduction red(net);
    long long cost = 0;
    long long sent =
        red.res.min_cost_max_flow(net.node_count, net.node_count + 1, &cost);
    return red.extract(net, sent == red.required);
}

std::string network_to_text(const FlowNetwork& net) {
    std::ostringstream os;
    os << "nodes " << net.node_count << " source " << net.source << " sink "
       << net.sink << "\n";
    for (const auto& a : net.arcs)
        os << "arc " << a.from << " " << a.to << " " << a.lower << " " << a.upper
           << " " << a.cost << "\n";
    return os.str();
}

}  // namespace manip
