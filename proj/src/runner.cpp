#include "manip/runner.hpp"

#include <sstream>

#include "json.hpp"
#include "manip/brackets.hpp"
#include "manip/cup.hpp"
#include "manip/oracle.hpp"
#include "manip/roundrobin.hpp"

namespace manip {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

json plan_json(const ManipulationPlan& plan) {
    json arr = json::array();
    for (const Move& mv : plan.moves)
        arr.push_back({{"i", mv.i}, {"j", mv.j}, {"pi", mv.pi}, {"pj", mv.pj}});
    return arr;
}

std::string plan_text(const ManipulationPlan& plan) {
    if (plan.empty()) return "  (no games changed)\n";
    std::ostringstream os;
    for (const Move& mv : plan.moves)
        os << "  game " << mv.i << " vs " << mv.j << " -> " << mv.pi << ":"
           << mv.pj << "\n";
    return os.str();
}

struct Outcome {
    bool verdict = false;
    std::optional<int> min_count;
    ManipulationPlan plan;
    json stats = json::object();
};

Team need_target(const RunRequest& req) {
    if (!req.target) throw Error("this command requires --target <id>");
    if (*req.target < 0 || *req.target >= req.instance.tournament.size())
        throw Error("--target id out of range");
    return *req.target;
}

Team need_lose(const RunRequest& req) {
    if (!req.lose) throw Error("this command requires --lose <id>");
    if (*req.lose < 0 || *req.lose >= req.instance.tournament.size())
        throw Error("--lose id out of range");
    return *req.lose;
}

CupTree tree_from(const InstanceFile& instance) {
    if (instance.seed) return CupTree::seeded(*instance.seed);
    return CupTree::balanced(instance.tournament.size());
}

std::vector<Team> order_from(const InstanceFile& instance) {
    if (instance.seed) return *instance.seed;
    std::vector<Team> order(instance.tournament.size());
    for (Team t = 0; t < (int)order.size(); ++t) order[t] = t;
    return order;
}

Outcome dispatch(const RunRequest& req) {
    const Tournament& t = req.instance.tournament;
    const Coalition& co = req.instance.coalition;
    Outcome out;

    if (req.command == "cup") {
        Team target = need_target(req);
        WinnerTable table = analyze_cup(tree_from(req.instance), t, co);
        auto count = table.min_manipulations(table.height(), target, target);
        out.verdict = count.has_value();
        if (count) {
            out.min_count = *count;
            out.plan = table.plan_for(target);
        }
        out.stats["comparisons"] = table.comparisons();
    } else if (req.command == "cup-min") {
        Team target = need_target(req);
        CupMinResult res = cup_min_manipulations(target, tree_from(req.instance), t, co);
        out.verdict = res.achievable;
        if (res.achievable) {
            out.min_count = res.count;
            out.plan = res.plan;
        }
    } else if (req.command == "cup-destructive") {
        Team lose = need_lose(req);
        CupMinResult res = cup_destructive_min(lose, tree_from(req.instance), t, co);
        out.verdict = res.achievable;
        if (res.achievable) {
            out.min_count = res.count;
            out.plan = res.plan;
        }
    } else if (req.command == "rr-constructive") {
        Team target = need_target(req);
        RRDecision res = rr_constructive(target, t, co, req.instance.model);
        out.verdict = res.verdict;
        out.plan = res.plan;
        out.stats["target_score"] = res.target_score;
    } else if (req.command == "rr-destructive") {
        Team lose = need_lose(req);
        RRDecision res = rr_destructive(lose, t, co, req.instance.model);
        out.verdict = res.verdict;
        out.plan = res.plan;
        out.stats["loser_score"] = res.target_score;
        out.stats["best_candidate"] = res.best_candidate;
        out.stats["best_candidate_score"] = res.best_candidate_score;
    } else if (req.command == "rr-min") {
        Team target = need_target(req);
        if (req.instance.model != ScoringModel::win_loss())
            throw ModelNotSupported("rr-min requires win-loss scoring");
        RRAnswer res = rr_min_manipulations(target, t, co);
        out.verdict = res.achievable;
        if (res.achievable) {
            out.min_count = res.min_count;
            out.plan = res.plan;
        }
        out.stats["greedy_moves"] = res.greedy_moves;
        out.stats["flow_cost"] = res.flow_cost;
    } else if (req.command == "reseed") {
        Team target = need_target(req);
        SeededField field{order_from(req.instance)};
        BracketSearchResult res =
            ranked_reseed_constructive(target, field, t, co, req.max_coalition);
        out.verdict = res.achievable;
        out.plan = res.plan;
        if (res.achievable) out.min_count = res.plan.count();
        out.stats["scenarios"] = res.scenarios;
    } else if (req.command == "delim") {
        Team target = need_target(req);
        DoubleElimBracket bracket{order_from(req.instance)};
        BracketSearchResult res =
            double_elim_constructive(target, bracket, t, co, req.max_coalition);
        out.verdict = res.achievable;
        out.plan = res.plan;
        if (res.achievable) out.min_count = res.plan.count();
        out.stats["scenarios"] = res.scenarios;
    } else if (req.command == "oracle") {
        Team target = need_target(req);
        OracleConfig cfg{req.oracle_cap};
        OracleReport rep;
        if (req.oracle_format == "cup")
            rep = oracle_cup(target, tree_from(req.instance), t, co, cfg);
        else if (req.oracle_format == "rr")
            rep = oracle_roundrobin(target, t, co, cfg);
        else if (req.oracle_format == "reseed")
            rep = oracle_bracket(target,
                                 {BracketKind::RankedReseed, order_from(req.instance)},
                                 t, co, cfg);
        else if (req.oracle_format == "delim")
            rep = oracle_bracket(target,
                                 {BracketKind::DoubleElim, order_from(req.instance)},
                                 t, co, cfg);
        else
            throw Error("unknown oracle format '" + req.oracle_format +
                        "' (expected cup, rr, reseed or delim)");
        out.verdict = rep.achievable;
        if (rep.achievable) {
            out.min_count = rep.min_count;
            out.plan = rep.witness;
        }
        out.stats["subsets_examined"] = rep.subsets_examined;
    } else {
        throw Error("unknown command '" + req.command + "'");
    }
    return out;
}

std::string render_json(const RunRequest& req, const Outcome& out) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = req.command;
    doc["verdict"] = out.verdict;
    doc["min_count"] = out.min_count ? json(*out.min_count) : json(nullptr);
    doc["plan"] = plan_json(out.plan);
    doc["stats"] = out.stats;
    return doc.dump(2) + "\n";
}

std::string render_text(const RunRequest& req, const Outcome& out) {
    std::ostringstream os;
    os << req.command << ": " << (out.verdict ? "yes" : "no") << "\n";
    if (out.min_count) os << "minimum manipulations: " << *out.min_count << "\n";
    if (out.verdict) {
        os << "plan:\n" << plan_text(out.plan);
    }
    for (const auto& [key, value] : out.stats.items())
        os << key << ": " << value.dump() << "\n";
    return os.str();
}

}  // namespace

RunReport run(const RunRequest& req) {
    RunReport report;
    try {
        Outcome out = dispatch(req);
        report.exit_code = out.verdict ? kExitTrue : kExitFalse;
        report.text = req.json ? render_json(req, out) : render_text(req, out);
    } catch (const Error& e) {
        report.exit_code = kExitError;
        report.text = std::string("error: ") + e.what() + "\n";
    }
    return report;
}

}  // namespace manip
