#pragma once

#include <optional>
#include <string>
#include <vector>

#include "manip/core.hpp"

namespace manip {

/// A parsed instance file: tournament plus coalition and, optionally, a
/// declared scoring model and a seeding / bracket leaf order.
///
/// Format (line oriented, '#' starts a comment):
///   teams <m>
///   coalition <id ...>            (optional, default empty)
///   model <n> <a:b> <a:b> ...     (optional, default win-loss)
///   game <i> <j> <pi> <pj>        (exactly one line per unordered pair)
///   seed <id ...>                 (optional)
struct InstanceFile {
    Tournament tournament;
    Coalition coalition;
    ScoringModel model = ScoringModel::win_loss();
    bool model_declared = false;
    std::optional<std::vector<Team>> seed;

    bool operator==(const InstanceFile&) const = default;
};

/// Parses and validates; throws ParseError (with line:column) for syntax
/// problems and ValidationError for semantic ones (self-games, duplicate
/// pairs, out-of-range ids, outcomes outside the model, missing games).
InstanceFile parse_instance(const std::string& text);

/// Canonical text form; parse(serialize(x)) == x.
std::string serialize_instance(const InstanceFile& instance);

}  // namespace manip
