// Command-line front end: parse an instance file, run one query, print the
// verdict (exit 0), its absence (exit 1), or a diagnostic (exit 2).

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "manip/runner.hpp"

namespace {

const char* kInstanceHelp =
    "Instance file (line oriented, '#' comments):\n"
    "  teams <m>\n"
    "  coalition <id ...>         teams willing to throw games\n"
    "  model <n> <a:b> <a:b> ...  scoring model (default win-loss 0:1 1:0)\n"
    "  game <i> <j> <pi> <pj>     one line per unordered pair\n"
    "  seed <id ...>              cup leaf order / seed ranks (default 0..m-1)\n";

int run_command(const std::string& command, const std::string& file,
                manip::RunRequest req) {
    std::ifstream in(file);
    if (!in) {
        std::cerr << "error: cannot open '" << file << "'\n";
        return manip::kExitError;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    req.command = command;
    try {
        req.instance = manip::parse_instance(buffer.str());
    } catch (const manip::Error& e) {
        std::cerr << "error: " << file << ": " << e.what() << "\n";
        return manip::kExitError;
    }
    manip::RunReport report = manip::run(req);
    if (report.exit_code == manip::kExitError)
        std::cerr << report.text;
    else
        std::cout << report.text;
    return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coalition manipulation planner for cup, round-robin,\n"
                 "ranked-reseeding and double-elimination competitions."};
    app.footer(kInstanceHelp);
    app.require_subcommand(1);

    manip::RunRequest req;
    std::string file;
    int target = -1, lose = -1;

    struct Sub {
        const char* name;
        const char* help;
        bool uses_target;
    };
    const Sub subs[] = {
        {"cup", "can the coalition make --target win the fixed cup", true},
        {"cup-min", "fewest throws that crown --target in the fixed cup", true},
        {"cup-destructive", "fewest throws that dethrone --lose in the cup", false},
        {"rr-constructive", "can --target top the round robin", true},
        {"rr-destructive", "can some team out-score --lose in the round robin", false},
        {"rr-min", "fewest throws that let --target top the round robin", true},
        {"reseed", "can --target win the ranked-reseeding cup", true},
        {"delim", "can --target win the double-elimination bracket", true},
        {"oracle", "exhaustive check (--format cup|rr|reseed|delim)", true},
    };

    for (const Sub& sub : subs) {
        CLI::App* cmd = app.add_subcommand(sub.name, sub.help);
        cmd->add_option("instance", file, "instance file")->required();
        if (sub.uses_target)
            cmd->add_option("--target", target, "team that should win");
        if (!sub.uses_target || std::string(sub.name) == "oracle")
            cmd->add_option("--lose", lose, "team that should not win");
        cmd->add_flag("--json", req.json, "machine-readable output");
        cmd->add_option("--max-coalition", req.max_coalition,
                        "search bound for reseed/delim (default 4)");
        if (std::string(sub.name) == "oracle") {
            cmd->add_option("--format", req.oracle_format,
                            "competition format (default rr)");
            cmd->add_option("--cap", req.oracle_cap,
                            "manipulable-edge cap (default 20)");
        }
    }

    CLI11_PARSE(app, argc, argv);

    if (target >= 0) req.target = target;
    if (lose >= 0) req.lose = lose;
    return run_command(app.get_subcommands()[0]->get_name(), file, req);
}
