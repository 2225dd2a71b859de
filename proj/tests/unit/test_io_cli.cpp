#include "support.hpp"

#include "turanlab/cli.hpp"
#include "turanlab/graph6.hpp"
#include "turanlab/io.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace turanlab;
using testing_support::ind;
using testing_support::sub;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "turanlab_cli_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
    const auto path = scratch_dir() / name;
    std::ofstream(path) << content;
    return path.string();
}

int process_exit_code(const std::string& args) {
    const std::string command = std::string(TURANLAB_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

VerificationRow row(int n, const std::string& constraints, double exact, double bound) {
    return {n, constraints, exact, {BoundColumn{"b", bound, Comparison::upper, true, std::nullopt}}};
}

}  // namespace

TEST_CASE("number formatting") {
    CHECK(format_number(5) == "5");
    CHECK(format_number(-3) == "-3");
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(61948.1867511932) == "61948.1867512");
    CHECK(format_number(1.0 / 3) == "0.333333333333");
}

TEST_CASE("CSV emission") {
    CHECK(emit_csv({}) == "n,constraints,exact,pass\n");
    const std::string one = emit_csv({row(5, "C3-sub C4-ind", 5, 10)});
    CHECK(std::count(one.begin(), one.end(), '\n') == 2);
    CHECK(one == "n,constraints,exact,b,ratio_b,pass\n5,C3-sub C4-ind,5,10,0.5,pass\n");
    const std::string quoted = emit_csv({row(4, "K2,2-ind", 6, 5)});
    CHECK(quoted == "n,constraints,exact,b,ratio_b,pass\n4,\"K2,2-ind\",6,5,1.2,fail\n");
    CHECK(csv_field("a\"b") == "\"a\"\"b\"");
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("line\nbreak") == "\"line\nbreak\"");

    VerificationRow other = row(6, "x", 1, 2);
    other.bounds[0].id = "c";
    CHECK_THROWS_AS(emit_csv({row(5, "x", 1, 2), other}), std::invalid_argument);

    // Columns are alphabetical whatever order the row lists them in.
    VerificationRow two{3, "x", 2, {BoundColumn{"zeta", 4, Comparison::upper, true, std::nullopt},
                                    BoundColumn{"alpha", 0, Comparison::info, false, std::nullopt}}};
    CHECK(emit_csv({two}) == "n,constraints,exact,alpha,zeta,ratio_alpha,ratio_zeta,pass\n3,x,2,0,4,,0.5,pass\n");
}

TEST_CASE("JSON rendering") {
    const Json b = to_json(es_c4c5_bound(8));
    CHECK(b["name"] == "es-c4c5");
    CHECK(b["value"] == 16);
    CHECK(b["params"]["n"].is_number_integer());

    const Json r = to_json(row(5, "C3-sub", 5, 10));
    CHECK(r["pass"] == true);
    CHECK(r["bounds"][0]["kind"] == "upper");

    SearchResult s;
    s.n = 5;
    s.max_edges = 5;
    s.stats.seconds = 0.25;
    CHECK_FALSE(to_json(s, false)["stats"].contains("seconds"));
    CHECK(to_json(s, true)["stats"]["seconds"] == 0.25);

    const Json c = to_json(check_constraints(named_graph("K", {3}), {sub("C", {3})}));
    CHECK(c["all_satisfied"] == false);
    CHECK(c["outcomes"][0]["witness"].size() == 3);
}

TEST_CASE("pattern mini-language") {
    CHECK(cli::parse_pattern("C5", Mode::subgraph).pattern == named_graph("C", {5}));
    CHECK(cli::parse_pattern("k2,3", Mode::induced).label == "K2,3");
    CHECK(cli::parse_pattern("k2,3", Mode::induced).mode == Mode::induced);
    CHECK(cli::parse_pattern("PETERSEN", Mode::subgraph).pattern.order() == 10);
    CHECK(cli::parse_pattern("E3", Mode::induced).pattern.edge_count() == 0);
    const std::string g6 = write_file("p.g6", "Dhc\n");
    CHECK(cli::parse_pattern("@" + g6, Mode::subgraph).pattern.edge_count() == 5);
    for (const char* bad : {"", "C", "X5", "C2", "K1", "P1", "C5,5", "K999", "@/nonexistent.g6", "C 5"})
        CHECK_THROWS_AS(cli::parse_pattern(bad, Mode::subgraph), cli::UsageError);
}

TEST_CASE("argument parsing") {
    const cli::Command exact = cli::parse_args({"exact", "--n", "7", "--forbid-sub", "C3", "--forbid-ind", "C4"});
    CHECK(exact.verb == "exact");
    CHECK(exact.options.at("n") == "7");
    REQUIRE(exact.constraints.size() == 2);
    CHECK(exact.constraints[0].mode == Mode::subgraph);
    CHECK(exact.constraints[1].describe() == "C4-ind");

    const cli::Command bound = cli::parse_args({"bound", "thm1", "--n", "10", "--r", "3", "--s", "2", "--t", "2"});
    CHECK(bound.verb == "bound");
    CHECK(bound.target == "thm1");
    CHECK(bound.options.size() == 4);

    const cli::Command globals =
        cli::parse_args({"--seed", "9", "--threads", "3", "--format", "csv", "verify", "--suite", "thm1"});
    CHECK(globals.seed == 9);
    CHECK(globals.threads == 3);
    CHECK(globals.format == "csv");
    // Global options are also accepted after the verb.
    CHECK(cli::parse_args({"verify", "--suite", "thm1", "--seed", "4"}).seed == 4);

    const cli::Command repeated =
        cli::parse_args({"check", "--graph", "x", "--forbid-sub", "C3", "--forbid-sub", "C5", "--forbid-ind", "P4"});
    CHECK(repeated.constraints.size() == 3);

    CHECK_FALSE(cli::parse_args({"--help"}).help.empty());
    CHECK_FALSE(cli::parse_args({"exact", "--help"}).help.empty());

    for (const std::vector<std::string>& bad : std::vector<std::vector<std::string>>{
             {},
             {"exact", "--n"},
             {"exact", "--n", "5"},
             {"frobnicate"},
             {"exact", "--n", "5", "--forbid-sub", "Q9"},
             {"exact", "--n", "5", "--forbid-sub", "C3", "--bogus"},
             {"check", "--forbid-sub", "C3"},
             {"drc", "--graph", "g", "--s", "2"},
             {"bound"},
             {"--threads", "0", "verify", "--suite", "thm1"},
             {"--format", "xml", "verify", "--suite", "thm1"},
             {"exact", "--n", "5", "extra", "--forbid-sub", "C3"}})
        CHECK_THROWS_AS(cli::parse_args(bad), cli::UsageError);
}

TEST_CASE("exit codes across error paths") {
    const std::string k4 = write_file("k4.g6", "C~\n");
    const std::string garbage = write_file("bad.g6", "C~~~~~\n");
    CHECK(invoke({"cliques", "--graph", k4, "--m", "3"}).code == cli::kExitOk);
    CHECK(invoke({"exact", "--n"}).code == cli::kExitError);
    CHECK(invoke({"exact", "--n", "0", "--forbid-sub", "C3"}).code == cli::kExitError);
    CHECK(invoke({"exact", "--n", "65", "--forbid-sub", "C3"}).code == cli::kExitError);
    CHECK(invoke({"exact", "--n", "7", "--method", "oracle", "--forbid-sub", "C3"}).code == cli::kExitError);
    CHECK(invoke({"exact", "--n", "5", "--method", "magic", "--forbid-sub", "C3"}).code == cli::kExitError);
    CHECK(invoke({"--budget", "10", "exact", "--n", "9", "--forbid-sub", "C3"}).code == cli::kExitBudget);
    CHECK(invoke({"check", "--graph", garbage, "--forbid-sub", "C3"}).code == cli::kExitError);
    CHECK(invoke({"check", "--graph", "/nonexistent.g6", "--forbid-sub", "C3"}).code == cli::kExitError);
    CHECK(invoke({"construct", "polarity", "--q", "6"}).code == cli::kExitError);
    CHECK(invoke({"construct", "furedi", "--q", "5", "--t", "3"}).code == cli::kExitError);
    CHECK(invoke({"construct", "dodecahedron"}).code == cli::kExitError);
    CHECK(invoke({"bound", "thm3", "--n", "4", "--d", "2", "--t", "2"}).code == cli::kExitError);
    CHECK(invoke({"bound", "nope", "--n", "4"}).code == cli::kExitError);
    CHECK(invoke({"verify", "--suite", "nope"}).code == cli::kExitError);
    CHECK(invoke({"drc", "--graph", k4, "--s", "0", "--r", "1"}).code == cli::kExitError);
    CHECK(invoke({"cliques", "--graph", k4, "--m", "x"}).code == cli::kExitError);

    const Outcome usage = invoke({"exact", "--n", "5", "--forbid-sub", "Q9"});
    CHECK(usage.err.find("Q9") != std::string::npos);
    CHECK(usage.out.empty());

    // The shipped binary maps the same paths to the same process exit codes.
    CHECK(process_exit_code("cliques --graph " + k4) == 0);
    CHECK(process_exit_code("exact --n") == 1);
    CHECK(process_exit_code("--budget 10 exact --n 9 --forbid-sub C3") == 2);
    CHECK(process_exit_code("check --graph " + garbage + " --forbid-sub C3") == 1);
}

TEST_CASE("construct output round-trips through check") {
    for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
             {"construct", "turan", "--n", "9", "--r", "3"},
             {"construct", "kab", "--a", "3", "--b", "4"},
             {"construct", "incidence", "--q", "3"},
             {"construct", "polarity", "--q", "5"},
             {"construct", "bg", "--q", "2"},
             {"construct", "furedi", "--q", "7", "--t", "3"},
             {"construct", "named", "--name", "Petersen"}}) {
        const Outcome built = invoke(args);
        REQUIRE(built.code == 0);
        const std::string path = write_file("built.g6", built.out);
        const Outcome checked = invoke({"--format", "json", "check", "--graph", path, "--forbid-sub", "K9"});
        CHECK(checked.code == 0);
        const Json j = Json::parse(checked.out);
        CHECK(j["graphs"].size() == 1);
        CHECK(j["graphs"][0]["graph6"] == built.out.substr(0, built.out.size() - 1));
    }
}

TEST_CASE("construct manifests") {
    const std::string manifest = (scratch_dir() / "bg.json").string();
    const Outcome bg = invoke({"construct", "bg", "--q", "2", "--out", "g6", "--manifest", manifest});
    REQUIRE(bg.code == 0);
    CHECK(parse_graph6(bg.out.substr(0, bg.out.size() - 1)).order() == 21);
    std::ifstream in(manifest);
    const Json m = Json::parse(in);
    CHECK(m["n"] == 21);
    CHECK(m["edges"] == 49);
    CHECK(m["certification"]["all_satisfied"] == true);
    CHECK(m["edge_formula"]["construction"] == 49);
    CHECK(m["edge_formula"]["claimed"] == 56);

    const Json cut = Json::parse(invoke({"construct", "furedi", "--q", "9", "--t", "2", "--max-cut", "--out", "json"}).out);
    CHECK(cut["max_cut"]["locally_maximal"] == true);
    CHECK(cut["max_cut"]["k2t1_sub_free"] == true);
    CHECK(cut["max_cut"]["cut_edges"].get<double>() >= cut["max_cut"]["half_edges"].get<double>());
}

TEST_CASE("cliques, bound and drc verbs") {
    const std::string k4 = write_file("k4.g6", "C~\n");
    CHECK(invoke({"cliques", "--graph", k4, "--m", "3"}).out == "4\n");
    CHECK(invoke({"cliques", "--graph", k4}).out == "4\n");
    const Outcome profile = invoke({"--format", "json", "cliques", "--graph", k4, "--profile"});
    CHECK(profile.code == 0);

    const Outcome thm1 = invoke({"bound", "thm1", "--n", "10", "--r", "3", "--s", "2", "--t", "2"});
    CHECK(thm1.code == 0);
    CHECK(thm1.out.find("61948.1867512") != std::string::npos);

    const std::string k23 = write_file("k23.g6", write_graph6(named_graph("K", {2, 3})) + "\n");
    const Outcome drc = invoke({"--format", "json", "drc", "--graph", k23, "--s", "2", "--r", "2"});
    REQUIRE(drc.code == 0);
    CHECK(Json::parse(drc.out)["results"][0]["set"] == Json::array({2, 3, 4}));
}

TEST_CASE("exact verb output") {
    const Outcome text = invoke({"exact", "--n", "5", "--forbid-sub", "C3", "--forbid-ind", "C4"});
    CHECK(text.code == 0);
    CHECK(text.out.find("= 5") != std::string::npos);
    CHECK(text.err.find("seed=1") != std::string::npos);

    const Outcome csv = invoke({"--format", "csv", "exact", "--n", "4", "--n-max", "6", "--forbid-sub", "C3",
                                "--forbid-ind", "C4"});
    CHECK(csv.out.rfind("n,constraints,max_edges", 0) == 0);
    CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 4);

    for (const char* method : {"augment", "bnb", "oracle"}) {
        const Outcome j = invoke({"--format", "json", "exact", "--n", "6", "--method", method, "--forbid-sub", "K3"});
        REQUIRE(j.code == 0);
        CHECK(Json::parse(j.out)["results"][0]["max_edges"] == 9);
    }

    const std::string witnesses = (scratch_dir() / "w.g6").string();
    CHECK(invoke({"exact", "--n", "6", "--forbid-sub", "K3", "--witnesses", witnesses}).code == 0);
    std::ifstream in(witnesses);
    const auto graphs = read_graph6_stream(in);
    REQUIRE(graphs.size() == 1);
    CHECK(graphs[0].edge_count() == 9);
}

TEST_CASE("replay gives byte-identical reports") {
    const std::vector<std::vector<std::string>> runs{
        {"--format", "csv", "--threads", "3", "exact", "--n", "8", "--forbid-sub", "C3", "--forbid-ind", "C4"},
        {"--format", "json", "--seed", "17", "drc", "--graph", write_file("pet.g6", "IheA@GUAo\n"), "--s", "2",
         "--r", "1"},
        {"--format", "csv", "verify", "--suite", "es-c4c5", "--max-n", "6"}};
    for (const auto& args : runs) {
        const Outcome a = invoke(args);
        const Outcome b = invoke(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("verify thm1 to n = 7 as CSV") {
    const Outcome v = invoke({"--format", "csv", "verify", "--suite", "thm1", "--max-n", "7"});
    CHECK(v.code == 0);
    std::istringstream lines(v.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line.rfind("n,constraints,exact,", 0) == 0);
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        CHECK(line.substr(line.rfind(',') + 1) == "pass");
    }
    CHECK(rows == 4);  // n = 4..7
}

TEST_CASE("output file option") {
    const std::string path = (scratch_dir() / "report.csv").string();
    const Outcome v = invoke({"--format", "csv", "-o", path, "verify", "--suite", "es-c4c5", "--max-n", "5"});
    CHECK(v.code == 0);
    CHECK(v.out.empty());
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header.rfind("n,constraints,exact", 0) == 0);
}
