#include "turanlab/bounds.hpp"
#include "turanlab/cli.hpp"
#include "turanlab/constructions.hpp"
#include "turanlab/graph6.hpp"
#include "turanlab/io.hpp"
#include "turanlab/search.hpp"
#include "turanlab/suites.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace turanlab::cli {

namespace {

long long integer_option(const Command& cmd, const std::string& name) {
    const auto it = cmd.options.find(name);
    if (it == cmd.options.end()) throw UsageError(cmd.verb + " " + cmd.target + " needs --" + name);
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(it->second, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != it->second.size())
        throw UsageError("--" + name + " expects an integer, got '" + it->second + "'");
    return v;
}

int int_option(const Command& cmd, const std::string& name) {
    const long long v = integer_option(cmd, name);
    if (v < -1'000'000'000LL || v > 1'000'000'000LL) throw UsageError("--" + name + " is out of range");
    return static_cast<int>(v);
}

int int_option_or(const Command& cmd, const std::string& name, int fallback) {
    return cmd.has(name) ? int_option(cmd, name) : fallback;
}

double real_option(const Command& cmd, const std::string& name) {
    const std::string& text = cmd.options.at(name);
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) throw UsageError("--" + name + " expects a number, got '" + text + "'");
    return v;
}

std::vector<Graph> read_graphs(const std::string& path) {
    if (path == "-") return read_graph6_stream(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
    return read_graph6_stream(in);
}

SearchOptions search_options(const Command& cmd) {
    SearchOptions o;
    o.node_budget = cmd.budget;
    o.time_budget_seconds = cmd.time_limit;
    o.threads = cmd.threads;
    return o;
}

Json run_info(const Command& cmd) {
    return Json{{"verb", cmd.verb}, {"seed", cmd.seed}, {"threads", cmd.threads}, {"budget", cmd.budget}};
}

// One stderr line with everything needed to replay the run.
void log_run(const Command& cmd, std::ostream& err) {
    err << "turanlab: " << cmd.verb;
    if (!cmd.target.empty()) err << " " << cmd.target;
    for (const auto& [name, value] : cmd.options) err << " --" << name << " " << value;
    for (const auto& name : cmd.flags) err << " --" << name;
    if (!cmd.constraints.empty()) err << " constraints=" << describe(cmd.constraints);
    err << " seed=" << cmd.seed << " threads=" << cmd.threads << "\n";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

// ---- construct -------------------------------------------------------------

int do_construct(const Command& cmd, std::ostream& out, std::ostream& err) {
    const std::string& family = cmd.target;
    Graph g;
    std::vector<int> params;
    Json param_json = Json::object();
    auto take = [&](const std::string& name) {
        const int v = int_option(cmd, name);
        params.push_back(v);
        param_json[name] = v;
        return v;
    };
    if (family == "turan") {
        const int n = take("n"), r = take("r");
        g = turan_graph(n, r);
    } else if (family == "kab") {
        const int a = take("a"), b = take("b");
        g = complete_bipartite(a, b);
    } else if (family == "incidence") {
        g = projective_plane_incidence(PrimePowerField(take("q")));
    } else if (family == "polarity") {
        g = polarity_graph(PrimePowerField(take("q")));
    } else if (family == "bg") {
        g = bollobas_gyori(PrimePowerField(take("q")));
    } else if (family == "furedi") {
        const int q = take("q"), t = take("t");
        g = furedi_k2t(PrimePowerField(q), t);
    } else if (family == "named") {
        if (!cmd.has("name")) throw UsageError("construct named needs --name (e.g. C5, K2,3, Petersen)");
        const PatternSpec spec = parse_pattern(cmd.options.at("name"), Mode::subgraph);
        g = spec.pattern;
        param_json["name"] = spec.label;
    } else {
        throw UsageError("unknown construction family '" + family +
                         "' (expected turan, kab, incidence, polarity, bg, furedi, named)");
    }

    Json manifest{{"family", family}, {"params", param_json}, {"n", g.order()}, {"edges", g.edge_count()},
                  {"graph6", write_graph6(g)}};
    if (family != "named") {
        const ConstraintReport report = check_constraints(g, certification_constraints(family, params));
        manifest["certification"] = to_json(report);
    }
    if (family == "bg") {
        const int q = params[0];
        const long long points = static_cast<long long>(q) * q + q + 1;
        manifest["edge_formula"] = Json{{"construction", (2LL * q + 3) * points}, {"claimed", 2LL * (q + 2) * points}};
    }
    if (cmd.flag("max-cut")) {
        const CutResult cut = local_max_cut(g);
        const Graph sub = cut.cut_subgraph();
        Json cut_json{{"side_a", cut.side_a.to_vector()},
                      {"cut_edges", cut.cut_edges},
                      {"half_edges", static_cast<double>(g.edge_count()) / 2},
                      {"locally_maximal", is_locally_maximal(g, cut.side_a)},
                      {"graph6", write_graph6(sub)}};
        if (family == "furedi") {
            const int t = params[1];
            const Graph k2t1 = named_graph("K", {2, t + 1});
            cut_json["k2t1_sub_free"] = !contains_subgraph(sub, k2t1);
            cut_json["k2t1_ind_free"] = !contains_induced(sub, k2t1);
        }
        manifest["max_cut"] = cut_json;
    }
    manifest["run"] = run_info(cmd);

    if (cmd.has("manifest")) {
        std::ofstream m(cmd.options.at("manifest"));
        if (!m) throw std::runtime_error("cannot write manifest '" + cmd.options.at("manifest") + "'");
        m << manifest.dump(2) << "\n";
    }
    const std::string mode = cmd.has("out") ? cmd.options.at("out") : (cmd.format == "json" ? "json" : "g6");
    if (mode == "g6") {
        out << write_graph6(g) << "\n";
        if (!cmd.has("manifest")) err << manifest.dump(2) << "\n";
    } else if (mode == "json") {
        out << manifest.dump(2) << "\n";
    } else {
        throw UsageError("--out must be g6 or json");
    }
    return kExitOk;
}

// ---- check -----------------------------------------------------------------

int do_check(const Command& cmd, std::ostream& out) {
    const std::vector<Graph> graphs = read_graphs(cmd.options.at("graph"));
    std::vector<ConstraintReport> reports;
    for (const auto& g : graphs) reports.push_back(check_constraints(g, cmd.constraints));

    if (cmd.format == "json") {
        Json arr = Json::array();
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            Json entry{{"index", i}, {"graph6", write_graph6(graphs[i])}, {"n", graphs[i].order()},
                       {"edges", graphs[i].edge_count()}};
            entry["report"] = to_json(reports[i]);
            arr.push_back(entry);
        }
        out << Json{{"run", run_info(cmd)}, {"graphs", arr}}.dump(2) << "\n";
    } else if (cmd.format == "csv") {
        out << "index,graph6,n,edges";
        for (const auto& spec : cmd.constraints) out << "," << csv_field(spec.describe());
        out << ",pass\n";
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            out << i << "," << csv_field(write_graph6(graphs[i])) << "," << graphs[i].order() << ","
                << graphs[i].edge_count();
            for (const auto& o : reports[i].outcomes) out << "," << (o.satisfied ? "pass" : "fail");
            out << "," << (reports[i].all_satisfied() ? "pass" : "fail") << "\n";
        }
    } else {
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            out << "graph " << i << " (n=" << graphs[i].order() << ", e=" << graphs[i].edge_count()
                << "): " << (reports[i].all_satisfied() ? "PASS" : "FAIL") << "\n";
            for (const auto& o : reports[i].outcomes) {
                out << "  " << o.spec.describe() << ": " << (o.satisfied ? "absent" : "present");
                if (o.witness) {
                    std::vector<std::string> parts;
                    for (int v : *o.witness) parts.push_back(std::to_string(v));
                    out << " at [" << join(parts, ",") << "]";
                }
                out << "\n";
            }
        }
    }
    return kExitOk;
}

// ---- cliques ---------------------------------------------------------------

int do_cliques(const Command& cmd, std::ostream& out) {
    const std::vector<Graph> graphs = read_graphs(cmd.options.at("graph"));
    const bool profile = cmd.flag("profile");
    const int m = int_option_or(cmd, "m", 3);
    if (!profile && m < 1) throw std::invalid_argument("--m must be >= 1");

    if (cmd.format == "json") {
        Json arr = Json::array();
        for (const auto& g : graphs) {
            Json entry{{"graph6", write_graph6(g)}};
            if (profile) {
                entry["profile"] = clique_profile(g);
            } else {
                entry["m"] = m;
                entry["count"] = count_cliques(g, m);
            }
            arr.push_back(entry);
        }
        out << arr.dump(2) << "\n";
    } else if (cmd.format == "csv") {
        out << "graph6,m,count\n";
        for (const auto& g : graphs) {
            if (profile) {
                const auto p = clique_profile(g);
                for (std::size_t k = 1; k < p.size(); ++k)
                    out << csv_field(write_graph6(g)) << "," << k << "," << p[k] << "\n";
            } else {
                out << csv_field(write_graph6(g)) << "," << m << "," << count_cliques(g, m) << "\n";
            }
        }
    } else {
        for (const auto& g : graphs) {
            if (profile) {
                const auto p = clique_profile(g);
                std::vector<std::string> parts;
                for (std::size_t k = 1; k < p.size(); ++k) parts.push_back(std::to_string(p[k]));
                out << join(parts, " ") << "\n";
            } else {
                out << count_cliques(g, m) << "\n";
            }
        }
    }
    return kExitOk;
}

// ---- bound -----------------------------------------------------------------

int do_bound(const Command& cmd, std::ostream& out) {
    std::map<std::string, double> params;
    for (const auto& [name, text] : cmd.options) params[name] = real_option(cmd, name);
    const BoundReport r = evaluate_bound(cmd.target, params);
    if (cmd.format == "json") {
        Json j = to_json(r);
        j["run"] = run_info(cmd);
        out << j.dump(2) << "\n";
    } else if (cmd.format == "csv") {
        out << "name,value,certified,notes\n"
            << csv_field(r.name) << "," << format_number(r.value) << "," << (r.certified ? "true" : "false") << ","
            << csv_field(r.notes) << "\n";
    } else {
        std::vector<std::string> parts;
        for (const auto& [name, value] : r.params) parts.push_back(name + "=" + format_number(value));
        out << r.name << "(" << join(parts, ", ") << ") = " << format_number(r.value)
            << (r.certified ? "" : "  [not certified]") << "\n";
        if (!r.notes.empty()) out << "  " << r.notes << "\n";
    }
    return kExitOk;
}

// ---- exact -----------------------------------------------------------------

int do_exact(const Command& cmd, std::ostream& out, std::ostream& err) {
    const int lo = int_option(cmd, "n");
    const int hi = int_option_or(cmd, "n-max", lo);
    const std::string method = cmd.has("method") ? cmd.options.at("method") : "augment";
    if (method != "augment" && method != "bnb" && method != "oracle")
        throw UsageError("--method must be augment, bnb or oracle");
    const SearchOptions options = search_options(cmd);

    std::vector<SearchResult> results;
    for (int n = lo; n <= hi; ++n) {
        err << "turanlab: exact n=" << n << " constraints=" << describe(cmd.constraints) << " method=" << method
            << " threads=" << cmd.threads << " seed=" << cmd.seed << "\n";
        SearchResult r;
        if (method == "augment") {
            r = extremal_number(n, cmd.constraints, options);
        } else {
            r.n = n;
            r.constraints = cmd.constraints;
            r.max_edges = method == "bnb" ? branch_and_bound_extremal(n, cmd.constraints, options)
                                          : exhaustive_oracle(n, cmd.constraints);
        }
        results.push_back(std::move(r));
    }

    if (cmd.has("witnesses")) {
        std::ofstream w(cmd.options.at("witnesses"));
        if (!w) throw std::runtime_error("cannot write witnesses to '" + cmd.options.at("witnesses") + "'");
        for (const auto& r : results)
            for (const auto& c : r.certificates) w << c << "\n";
    }

    if (cmd.format == "json") {
        Json arr = Json::array();
        for (const auto& r : results) arr.push_back(to_json(r, true));
        out << Json{{"run", run_info(cmd)}, {"method", method}, {"results", arr}}.dump(2) << "\n";
    } else if (cmd.format == "csv") {
        out << "n,constraints,max_edges,witnesses,witness_overflow,nodes,pruned\n";
        for (const auto& r : results)
            out << r.n << "," << csv_field(describe(r.constraints)) << "," << r.max_edges << ","
                << r.certificates.size() << "," << r.stats.witness_overflow << "," << r.stats.nodes << ","
                << r.stats.pruned << "\n";
    } else {
        for (const auto& r : results) {
            out << "ex(" << r.n << "; " << describe(r.constraints) << ") = " << r.max_edges << "\n";
            if (method == "augment") {
                out << "  witnesses: " << r.certificates.size();
                if (r.stats.witness_overflow) out << " (+" << r.stats.witness_overflow << " not stored)";
                out << "\n";
                for (const auto& c : r.certificates) out << "  " << c << "\n";
            }
        }
    }
    return kExitOk;
}

// ---- drc -------------------------------------------------------------------

int do_drc(const Command& cmd, std::ostream& out) {
    const std::vector<Graph> graphs = read_graphs(cmd.options.at("graph"));
    const int s = int_option(cmd, "s");
    const int r = int_option(cmd, "r");
    const int samples = int_option_or(cmd, "samples", 200);
    std::optional<int> t;
    if (cmd.has("t")) t = int_option(cmd, "t");

    Json arr = Json::array();
    std::ostringstream text, csv;
    csv << "index,size,set\n";
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto a = drc_find_set(graphs[i], s, r, samples, cmd.seed, t);
        Json entry{{"index", i}, {"graph6", write_graph6(graphs[i])}};
        if (a) {
            entry["set"] = a->to_vector();
            entry["size"] = a->size();
            text << "A = " << a->to_string() << " (size " << a->size() << ")\n";
            csv << i << "," << a->size() << "," << csv_field(a->to_string()) << "\n";
        } else {
            entry["set"] = nullptr;
            entry["size"] = 0;
            text << "none\n";
            csv << i << ",0,\n";
        }
        arr.push_back(entry);
    }
    if (cmd.format == "json")
        out << Json{{"run", run_info(cmd)}, {"s", s}, {"r", r}, {"samples", samples}, {"results", arr}}.dump(2)
            << "\n";
    else if (cmd.format == "csv")
        out << csv.str();
    else
        out << text.str();
    return kExitOk;
}

// ---- verify ----------------------------------------------------------------

int do_verify(const Command& cmd, std::ostream& out, std::ostream& err) {
    SuiteOptions options;
    options.max_n = int_option_or(cmd, "max-n", 0);
    options.search = search_options(cmd);
    const std::string& suite = cmd.options.at("suite");
    err << "turanlab: verify suite=" << suite << " max-n=" << options.max_n << " threads=" << cmd.threads
        << " seed=" << cmd.seed << "\n";
    const std::vector<VerificationRow> rows = run_suite(suite, options);

    if (cmd.format == "csv") {
        out << emit_csv(rows);
    } else if (cmd.format == "json") {
        Json arr = Json::array();
        for (const auto& row : rows) arr.push_back(to_json(row));
        out << Json{{"run", run_info(cmd)}, {"suite", suite}, {"rows", arr}}.dump(2) << "\n";
    } else {
        for (const auto& row : rows) {
            out << "n=" << row.n << "  " << row.constraints << "  exact=" << format_number(row.exact);
            for (const auto& b : row.bounds) {
                out << "  " << b.id << "=" << format_number(b.value);
                if (b.measured) out << " (measured " << format_number(*b.measured) << ")";
            }
            out << "  " << (row.pass() ? "PASS" : "FAIL") << "\n";
        }
    }
    for (const auto& row : rows)
        if (!row.pass()) return kExitError;
    return kExitOk;
}

}  // namespace

int execute(const Command& cmd, std::ostream& out, std::ostream& err) {
    if (!cmd.help.empty()) {
        out << cmd.help;
        return kExitOk;
    }
    std::ofstream file;
    std::ostream* sink = &out;
    if (!cmd.output.empty()) {
        file.open(cmd.output);
        if (!file) throw std::runtime_error("cannot write output file '" + cmd.output + "'");
        sink = &file;
    }
    if (cmd.verb != "exact" && cmd.verb != "verify") log_run(cmd, err);
    if (cmd.verb == "construct") return do_construct(cmd, *sink, err);
    if (cmd.verb == "check") return do_check(cmd, *sink);
    if (cmd.verb == "cliques") return do_cliques(cmd, *sink);
    if (cmd.verb == "bound") return do_bound(cmd, *sink);
    if (cmd.verb == "exact") return do_exact(cmd, *sink, err);
    if (cmd.verb == "drc") return do_drc(cmd, *sink);
    if (cmd.verb == "verify") return do_verify(cmd, *sink, err);
    throw UsageError("unknown verb '" + cmd.verb + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return execute(parse_args(args), out, err);
    } catch (const UsageError& e) {
        err << "turanlab: usage error: " << e.what() << "\n";
        return kExitError;
    } catch (const BudgetExceeded& e) {
        err << "turanlab: " << e.what() << "; raise --budget / --time-limit or TURANLAB_BUDGET_NODES\n";
        return kExitBudget;
    } catch (const Graph6Error& e) {
        err << "turanlab: malformed graph6 input: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        err << "turanlab: error: " << e.what() << "\n";
        return kExitError;
    }
}

}  // namespace turanlab::cli
