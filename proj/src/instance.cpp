#include "manip/instance.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace manip {

namespace {

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    for (size_t k = 0; k < line.size();) {
        if (std::isspace((unsigned char)line[k])) {
            ++k;
            continue;
        }
        if (line[k] == '#') break;
        size_t start = k;
        while (k < line.size() && !std::isspace((unsigned char)line[k]) &&
               line[k] != '#')
            ++k;
        out.push_back({line.substr(start, k - start), (int)start + 1});
    }
    return out;
}

int parse_int(const Token& tok, int line) {
    size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(tok.text, &used);
    } catch (const std::exception&) {
        throw ParseError(line, tok.column, "expected an integer, got '" + tok.text + "'");
    }
    if (used != tok.text.size())
        throw ParseError(line, tok.column, "expected an integer, got '" + tok.text + "'");
    return value;
}

std::pair<int, int> parse_outcome(const Token& tok, int line) {
    size_t colon = tok.text.find(':');
    if (colon == std::string::npos)
        throw ParseError(line, tok.column, "expected <a:b> outcome, got '" + tok.text + "'");
    Token a{tok.text.substr(0, colon), tok.column};
    Token b{tok.text.substr(colon + 1), tok.column + (int)colon + 1};
    return {parse_int(a, line), parse_int(b, line)};
}

}  // namespace

InstanceFile parse_instance(const std::string& text) {
    int m = -1;
    std::vector<Team> coalition_ids;
    bool coalition_seen = false;
    ScoringModel model = ScoringModel::win_loss();
    bool model_declared = false;
    std::optional<std::vector<Team>> seed;
    struct GameLine {
        Team i, j;
        int pi, pj;
        int line;
    };
    std::vector<GameLine> games;

    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::vector<Token> toks = tokenize(raw);
        if (toks.empty()) continue;
        const std::string& kw = toks[0].text;

        if (kw == "teams") {
            if (m >= 0) throw ValidationError("duplicate teams line", line);
            if (toks.size() != 2)
                throw ParseError(line, toks[0].column, "usage: teams <m>");
            m = parse_int(toks[1], line);
            if (m < 1) throw ValidationError("need at least one team", line);
            continue;
        }
        if (m < 0)
            throw ParseError(line, toks[0].column,
                             "teams <m> must come before '" + kw + "'");

        if (kw == "coalition") {
            if (coalition_seen) throw ValidationError("duplicate coalition line", line);
            coalition_seen = true;
            for (size_t k = 1; k < toks.size(); ++k) {
                int id = parse_int(toks[k], line);
                if (id < 0 || id >= m)
                    throw ValidationError("coalition id " + std::to_string(id) +
                                              " out of range",
                                          line);
                coalition_ids.push_back(id);
            }
        } else if (kw == "model") {
            if (model_declared) throw ValidationError("duplicate model line", line);
            if (toks.size() < 4)
                throw ParseError(line, toks[0].column,
                                 "usage: model <n> <a:b> <a:b> ...");
            model_declared = true;
            model.outcomes.clear();
            model.total = parse_int(toks[1], line);
            if (model.total < 1) throw ValidationError("model total must be positive", line);
            for (size_t k = 2; k < toks.size(); ++k) {
                auto [a, b] = parse_outcome(toks[k], line);
                if (a < 0 || b < 0)
                    throw ValidationError("negative points in model outcome", line);
                if (model.contains(a, b))
                    throw ValidationError("duplicate model outcome", line);
                model.outcomes.emplace_back(a, b);
            }
            if (model.outcomes.size() < 2)
                throw ValidationError("model needs at least two distinct outcomes",
                                      line);
        } else if (kw == "game") {
            if (toks.size() != 5)
                throw ParseError(line, toks[0].column,
                                 "usage: game <i> <j> <pi> <pj>");
            GameLine g{parse_int(toks[1], line), parse_int(toks[2], line),
                       parse_int(toks[3], line), parse_int(toks[4], line), line};
            if (g.i == g.j) throw ValidationError("self-game", line);
            if (g.i < 0 || g.i >= m || g.j < 0 || g.j >= m)
                throw ValidationError("team id out of range", line);
            if (g.pi < 0 || g.pj < 0)
                throw ValidationError("negative points", line);
            games.push_back(g);
        } else if (kw == "seed") {
            if (seed) throw ValidationError("duplicate seed line", line);
            std::vector<Team> order;
            for (size_t k = 1; k < toks.size(); ++k) {
                int id = parse_int(toks[k], line);
                if (id < 0 || id >= m)
                    throw ValidationError("seed id " + std::to_string(id) +
                                              " out of range",
                                          line);
                order.push_back(id);
            }
            if ((int)order.size() != m)
                throw ValidationError("seed must list every team once", line);
            std::vector<char> seen(m, 0);
            for (Team id : order) {
                if (seen[id])
                    throw ValidationError("seed repeats team " + std::to_string(id),
                                          line);
                seen[id] = 1;
            }
            seed = std::move(order);
        } else {
            throw ParseError(line, toks[0].column, "unknown keyword '" + kw + "'");
        }
    }
    if (m < 0) throw ValidationError("missing teams line");

    InstanceFile out;
    out.tournament = Tournament(m);
    out.coalition = Coalition(m, coalition_ids);
    out.model = model;
    out.model_declared = model_declared;
    out.seed = seed;

    std::vector<char> have(m * m, 0);
    for (const GameLine& g : games) {
        if (have[g.i * m + g.j])
            throw ValidationError("duplicate game for pair " + std::to_string(g.i) +
                                      "," + std::to_string(g.j),
                                  g.line);
        have[g.i * m + g.j] = have[g.j * m + g.i] = 1;
        if (!model.contains(g.pi, g.pj))
            throw ValidationError("outcome " + std::to_string(g.pi) + ":" +
                                      std::to_string(g.pj) + " not in the scoring model",
                                  g.line);
        out.tournament.set_result(g.i, g.j, g.pi, g.pj);
    }
    for (Team i = 0; i < m; ++i)
        for (Team j = i + 1; j < m; ++j)
            if (!have[i * m + j])
                throw ValidationError("missing game for pair " + std::to_string(i) +
                                      "," + std::to_string(j));
    return out;
}

std::string serialize_instance(const InstanceFile& instance) {
    std::ostringstream os;
    int m = instance.tournament.size();
    os << "teams " << m << "\n";
    if (instance.model_declared) {
        os << "model " << instance.model.total;
        for (const auto& [a, b] : instance.model.outcomes) os << " " << a << ":" << b;
        os << "\n";
    }
    if (!instance.coalition.members().empty()) {
        os << "coalition";
        for (Team t : instance.coalition.members()) os << " " << t;
        os << "\n";
    }
    if (instance.seed) {
        os << "seed";
        for (Team t : *instance.seed) os << " " << t;
        os << "\n";
    }
    for (Team i = 0; i < m; ++i)
        for (Team j = i + 1; j < m; ++j)
            os << "game " << i << " " << j << " " << instance.tournament.points(i, j)
               << " " << instance.tournament.points(j, i) << "\n";
    return os.str();
}

}  // namespace manip
