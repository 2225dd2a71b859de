#include "turanlab/cli.hpp"

#include "turanlab/graph6.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>

namespace turanlab::cli {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

[[noreturn]] void bad_pattern(const std::string& text, const std::string& why = "") {
    throw UsageError("unparseable pattern '" + text + "'" + (why.empty() ? "" : ": " + why) +
                     " (expected Ck, Pk, Kr, Ka,b, Ek, Petersen or @file.g6)");
}

// Verb option names and whether each takes a value.
struct VerbSpec {
    const char* name;
    const char* description;
    std::vector<std::string> valued;
    std::vector<std::string> boolean;
    std::vector<std::string> required;
    const char* positional = nullptr;  // name of the required positional, if any
    bool constraints = false;
};

const std::vector<VerbSpec>& verbs() {
    static const std::vector<VerbSpec> table = {
        {"construct", "build an algebraic or named graph and certify it",
         {"q", "t", "n", "r", "a", "b", "name", "out", "manifest"}, {"max-cut"}, {}, "family", false},
        {"check", "test graphs against forbidden patterns", {"graph"}, {}, {"graph"}, nullptr, true},
        {"cliques", "count m-cliques", {"graph", "m"}, {"profile"}, {"graph"}, nullptr, false},
        {"bound", "evaluate a named bound",
         {"n", "r", "s", "t", "m", "d", "k", "beta", "vh"}, {}, {}, "id", false},
        {"exact", "exact extremal number by exhaustive search",
         {"n", "n-max", "method", "witnesses"}, {}, {"n"}, nullptr, true},
        {"drc", "dependent random choice extraction",
         {"graph", "s", "r", "samples", "t"}, {}, {"graph", "s", "r"}, nullptr, false},
        {"verify", "run a verification suite", {"suite", "max-n"}, {}, {"suite"}, nullptr, false},
    };
    return table;
}

}  // namespace

bool Command::flag(const std::string& name) const {
    return std::find(flags.begin(), flags.end(), name) != flags.end();
}

PatternSpec parse_pattern(const std::string& text, Mode mode) {
    if (text.empty()) bad_pattern(text, "empty");
    if (text[0] == '@') {
        const std::string path = text.substr(1);
        std::ifstream in(path);
        if (!in) bad_pattern(text, "cannot open " + path);
        std::vector<Graph> graphs;
        try {
            graphs = read_graph6_stream(in);
        } catch (const Graph6Error& e) {
            bad_pattern(text, e.what());
        }
        if (graphs.empty()) bad_pattern(text, path + " holds no graph");
        if (graphs.front().order() < 2) bad_pattern(text, "patterns need at least 2 vertices");
        return {graphs.front(), mode, text};
    }

    const std::string t = lower(text);
    if (t == "petersen") return {named_graph("Petersen", {}), mode, "Petersen"};

    static const std::regex form(R"(([cpke])(\d+(?:,\d+)*))");
    std::smatch m;
    if (!std::regex_match(t, m, form)) bad_pattern(text);
    const char family = m[1].str()[0];
    std::vector<int> params;
    std::string digits = m[2].str();
    for (std::size_t pos = 0; pos <= digits.size();) {
        const std::size_t comma = std::min(digits.find(',', pos), digits.size());
        const std::string piece = digits.substr(pos, comma - pos);
        if (piece.size() > 2) bad_pattern(text, "part too large");
        params.push_back(std::stoi(piece));
        pos = comma + 1;
    }
    if (family != 'k' && params.size() != 1) bad_pattern(text, "only K takes several parts");

    std::string label(1, static_cast<char>(std::toupper(family)));
    for (std::size_t i = 0; i < params.size(); ++i) label += (i ? "," : "") + std::to_string(params[i]);
    Graph g;
    try {
        g = named_graph(std::string(1, static_cast<char>(std::toupper(family))), params);
    } catch (const std::invalid_argument& e) {
        bad_pattern(text, e.what());
    }
    if (g.order() < 2) bad_pattern(text, "patterns need at least 2 vertices");
    return {g, mode, label};
}

Command parse_args(const std::vector<std::string>& args) {
    Command cmd;
    CLI::App app{"turanlab: induced Turan numbers workbench", "turanlab"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", cmd.seed, "random seed for randomized operations")->capture_default_str();
    app.add_option("--threads", cmd.threads, "search worker threads")->check(CLI::Range(1, 256))->capture_default_str();
    app.add_option("--budget", cmd.budget, "search node budget (0: default or TURANLAB_BUDGET_NODES)");
    app.add_option("--time-limit", cmd.time_limit, "search wall-clock limit in seconds (0: none)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--format", cmd.format, "report format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--output,-o", cmd.output, "write the report to this path instead of stdout");

    std::map<std::string, std::map<std::string, std::string>> values;
    std::map<std::string, std::map<std::string, bool>> booleans;
    std::map<std::string, std::string> positionals;
    std::vector<std::string> forbid_sub, forbid_ind;
    std::map<std::string, CLI::App*> subs;

    for (const auto& verb : verbs()) {
        CLI::App* sub = app.add_subcommand(verb.name, verb.description);
        subs[verb.name] = sub;
        if (verb.positional) sub->add_option(verb.positional, positionals[verb.name], verb.positional)->required();
        for (const auto& name : verb.valued) {
            auto* opt = sub->add_option("--" + name, values[verb.name][name]);
            if (std::find(verb.required.begin(), verb.required.end(), name) != verb.required.end()) opt->required();
        }
        for (const auto& name : verb.boolean) sub->add_flag("--" + name, booleans[verb.name][name]);
        if (verb.constraints) {
            sub->add_option("--forbid-sub", forbid_sub, "pattern forbidden as a subgraph (repeatable)")
                ->expected(1)
                ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
            sub->add_option("--forbid-ind", forbid_ind, "pattern forbidden as an induced subgraph (repeatable)")
                ->expected(1)
                ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
        }
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        CLI::App* target = &app;
        for (auto* sub : app.get_subcommands()) target = sub;
        cmd.help = target->help();
        return cmd;
    } catch (const CLI::CallForAllHelp&) {
        cmd.help = app.help("", CLI::AppFormatMode::All);
        return cmd;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what() + std::string(" (run with --help for usage)"));
    }

    CLI::App* chosen = app.get_subcommands().front();
    cmd.verb = chosen->get_name();
    if (positionals.count(cmd.verb)) cmd.target = positionals[cmd.verb];
    for (const auto& [name, value] : values[cmd.verb])
        if (chosen->count("--" + name)) cmd.options[name] = value;
    for (const auto& [name, on] : booleans[cmd.verb])
        if (on) cmd.flags.push_back(name);
    for (const auto& p : forbid_sub) cmd.constraints.push_back(parse_pattern(p, Mode::subgraph));
    for (const auto& p : forbid_ind) cmd.constraints.push_back(parse_pattern(p, Mode::induced));
    if ((cmd.verb == "check" || cmd.verb == "exact") && cmd.constraints.empty())
        throw UsageError(cmd.verb + " needs at least one --forbid-sub or --forbid-ind pattern");
    return cmd;
}

}  // namespace turanlab::cli
