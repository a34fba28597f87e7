#pragma once

#include <random>
#include <vector>

#include "manip/brackets.hpp"
#include "manip/core.hpp"
#include "manip/cup.hpp"

namespace testutil {

using namespace manip;

// Fixed-result five-team tournament used across the suites: 0>1, 0>3,
// 1>2, 2>0, 2>4, 3>1, 3>2, 3>4, 4>0, 4>1.
inline Tournament five_teams() {
    Tournament t(5);
    auto win = [&](Team a, Team b) { t.set_result(a, b, 1, 0); };
    win(0, 1);
    win(0, 3);
    win(1, 2);
    win(2, 0);
    win(2, 4);
    win(3, 1);
    win(3, 2);
    win(3, 4);
    win(4, 0);
    win(4, 1);
    return t;
}

// Four teams in a strict strength order: 0 beats everyone, 3 loses to all.
inline Tournament linear4() {
    Tournament t(4);
    for (Team i = 0; i < 4; ++i)
        for (Team j = i + 1; j < 4; ++j) t.set_result(i, j, 1, 0);
    return t;
}

inline Tournament random_win_loss(int m, std::mt19937& rng) {
    Tournament t(m);
    std::bernoulli_distribution coin(0.5);
    for (Team i = 0; i < m; ++i)
        for (Team j = i + 1; j < m; ++j) {
            if (coin(rng))
                t.set_result(i, j, 1, 0);
            else
                t.set_result(i, j, 0, 1);
        }
    return t;
}

inline Coalition random_coalition(int m, int max_size, std::mt19937& rng) {
    std::uniform_int_distribution<int> size_dist(0, max_size);
    int size = size_dist(rng);
    std::vector<Team> all(m);
    for (Team t = 0; t < m; ++t) all[t] = t;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(size);
    return Coalition(m, all);
}

inline std::vector<Team> random_permutation(int m, std::mt19937& rng) {
    std::vector<Team> order(m);
    for (Team t = 0; t < m; ++t) order[t] = t;
    std::shuffle(order.begin(), order.end(), rng);
    return order;
}

// Claimed-plan soundness: the plan must be legal and, once applied, the
// given winner condition must hold.
template <typename Check>
inline bool plan_delivers(const Tournament& t, const Coalition& co,
                          const ManipulationPlan& plan, const Check& check) {
    Tournament manipulated = apply_plan(t, plan, co);
    return check(manipulated);
}

}  // namespace testutil
