#include "turanlab/suites.hpp"

#include "turanlab/bounds.hpp"
#include "turanlab/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace turanlab {

namespace {

PatternSpec pattern(const std::string& family, std::initializer_list<int> params, Mode mode) {
    std::string label = family;
    bool first = true;
    for (int p : params) {
        label += (first ? "" : ",") + std::to_string(p);
        first = false;
    }
    return {named_graph(family, params), mode, label};
}

int upper_end(const SuiteOptions& options, int first, int fallback) {
    const int hi = options.max_n ? options.max_n : fallback;
    if (hi < first)
        throw std::invalid_argument("--max-n must be at least " + std::to_string(first) + " for this suite");
    return hi;
}

BoundColumn make_column(std::string id, double value, Comparison kind, bool certified = true,
                        std::optional<double> measured = std::nullopt) {
    return BoundColumn{std::move(id), value, kind, certified, measured};
}

std::vector<VerificationRow> suite_thm1(const SuiteOptions& options) {
    const ConstraintSet c{pattern("K", {3}, Mode::subgraph), pattern("K", {2, 2}, Mode::induced)};
    const double cap = static_cast<double>(*ramsey_exact(3, 2));
    SearchOptions search = options.search;
    search.witness_cap = 1'000'000;
    std::vector<VerificationRow> rows;
    for (int n = 4; n <= upper_end(options, 4, 9); ++n) {
        const SearchResult r = extremal_number(n, c, search);
        int worst = 0;
        for (const auto& w : r.witnesses) worst = std::max(worst, max_nonadjacent_codegree(w));
        VerificationRow row{n, describe(c), static_cast<double>(r.max_edges), {}};
        row.bounds.push_back(applicable_bound("thm1", n, c));
        row.bounds.push_back(make_column("codegree-cap", cap, Comparison::upper, true, worst));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<VerificationRow> suite_thm2(const SuiteOptions& options) {
    const ConstraintSet c{pattern("K", {4}, Mode::subgraph), pattern("K", {2, 2}, Mode::induced)};
    std::vector<VerificationRow> rows;
    for (int n = 4; n <= upper_end(options, 4, 9); ++n) {
        std::uint64_t worst = 0;
        enumerate_graphs(
            n, c,
            [&](const Graph& g) {
                worst = std::max(worst, 3 * count_cliques(g, 3));
                return true;
            },
            options.search);
        const BoundReport b = thm2_clique_bound(n, 4, 2, 2, 3);
        rows.push_back({n, describe(c), static_cast<double>(worst),
                        {make_column("thm2", b.value, Comparison::upper, b.certified)}});
    }
    return rows;
}

std::vector<VerificationRow> suite_thm3(const SuiteOptions& options) {
    const ConstraintSet c{pattern("K", {2, 3}, Mode::induced)};
    const int lo = 5, hi = upper_end(options, 5, 10);
    int remaining = options.thm3_samples;
    std::vector<VerificationRow> rows;
    for (int n = lo; n <= hi; ++n) {
        // Split what is left of the sample budget over the remaining orders;
        // small orders with fewer graphs hand their surplus on.
        const int orders_left = hi - n + 1;
        const int quota = (remaining + orders_left - 1) / orders_left;
        double slack = std::numeric_limits<double>::infinity();
        int seen = 0;
        if (quota > 0)
            enumerate_graphs(
                n, c,
                [&](const Graph& g) {
                    const double lb = thm3_clique_lb(n, g.min_degree(), 2).value;
                    slack = std::min(slack, clique_number(g) - lb);
                    return ++seen < quota;
                },
                options.search);
        remaining -= seen;
        VerificationRow row{n, describe(c), seen ? slack : 0.0, {}};
        row.bounds.push_back(make_column("graphs", seen, Comparison::info));
        row.bounds.push_back(make_column("thm3-slack", 0.0, Comparison::lower));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<VerificationRow> suite_thm4_eg(const SuiteOptions& options) {
    const ConstraintSet c{pattern("C", {5}, Mode::subgraph), pattern("K", {2, 2}, Mode::induced)};
    const double cap = static_cast<double>(erdos_gallai_cap(2, 2));
    std::vector<VerificationRow> rows;
    for (int n = 4; n <= upper_end(options, 4, 9); ++n) {
        int worst = 0;
        long long most_edges = -1;
        enumerate_graphs(
            n, c,
            [&](const Graph& g) {
                worst = std::max(worst, max_nonadjacent_codegree(g));
                most_edges = std::max(most_edges, static_cast<long long>(g.edge_count()));
                return true;
            },
            options.search);
        VerificationRow row{n, describe(c), static_cast<double>(most_edges), {}};
        row.bounds.push_back(make_column("eg-cap", cap, Comparison::upper, true, worst));
        row.bounds.push_back(applicable_bound("thm4", n, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<VerificationRow> suite_c3c4(const SuiteOptions& options) {
    const ConstraintSet induced{pattern("C", {3}, Mode::subgraph), pattern("C", {4}, Mode::induced)};
    const ConstraintSet plain{pattern("C", {3}, Mode::subgraph), pattern("C", {4}, Mode::subgraph)};
    std::vector<VerificationRow> rows;
    for (int n = 4; n <= upper_end(options, 4, 8); ++n) {
        const double exact = static_cast<double>(extremal_number(n, induced, options.search).max_edges);
        const double sub = static_cast<double>(branch_and_bound_extremal(n, plain, options.search));
        const double cross = static_cast<double>(n <= 6 ? exhaustive_oracle(n, induced)
                                                        : branch_and_bound_extremal(n, induced, options.search));
        VerificationRow row{n, describe(induced), exact, {}};
        row.bounds.push_back(make_column("c3c4-sub", sub, Comparison::equal));
        row.bounds.push_back(make_column("cross-check", cross, Comparison::equal));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<VerificationRow> suite_es(const SuiteOptions& options) {
    const ConstraintSet c{pattern("C", {4}, Mode::subgraph), pattern("C", {5}, Mode::subgraph)};
    return verify_bounds(4, upper_end(options, 4, 8), c, {"es-c4c5"}, options.search);
}

std::vector<VerificationRow> suite_constructions(const SuiteOptions&) {
    std::vector<VerificationRow> rows;
    auto add = [&](const std::string& name, const std::string& family, const std::vector<int>& params,
                   const Graph& g, double formula, double claimed) {
        const ConstraintSet c = certification_constraints(family, params);
        const bool ok = check_constraints(g, c).all_satisfied();
        VerificationRow row{g.order(), name + ": " + describe(c), static_cast<double>(g.edge_count()), {}};
        row.bounds.push_back(make_column("certified", 1, Comparison::equal, true, ok ? 1.0 : 0.0));
        row.bounds.push_back(make_column("claimed", claimed, Comparison::info));
        row.bounds.push_back(make_column("formula", formula, Comparison::equal));
        rows.push_back(std::move(row));
    };
    for (int q : {2, 3, 4, 5}) {
        const double f = 0.5 * q * (q + 1) * (q + 1);
        add("polarity q=" + std::to_string(q), "polarity", {q}, polarity_graph(PrimePowerField(q)), f, f);
    }
    {
        // Each orbit meets q others through ax+by in H; orbits with
        // a^2+b^2 in H lose their loop.
        const PrimePowerField f(5);
        const int t = 2;
        const std::vector<int> h = f.multiplicative_subgroup(t);
        int absolute = 0;
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b)
                if ((a || b) && std::count(h.begin(), h.end(), f.add(f.mul(a, a), f.mul(b, b))))
                    ++absolute;
        const double n = (5.0 * 5 - 1) / t;
        const double formula = (n * 5 - absolute / t) / 2;
        add("furedi q=5 t=2", "furedi", {5, t}, furedi_k2t(f, t), formula, formula);
    }
    for (int q : {2, 3}) {
        const double points = q * q + q + 1;
        add("bg q=" + std::to_string(q), "bg", {q}, bollobas_gyori(PrimePowerField(q)), (2 * q + 3) * points,
            2 * (q + 2) * points);
    }
    {
        const double points = 7;
        add("incidence q=2", "incidence", {2}, projective_plane_incidence(PrimePowerField(2)), 3 * points,
            3 * points);
    }
    return rows;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"thm1", "thm2", "thm3", "thm4-eg", "c3c4-identity", "es-c4c5", "constructions"};
}

std::vector<VerificationRow> run_suite(const std::string& name, const SuiteOptions& options) {
    if (name == "thm1") return suite_thm1(options);
    if (name == "thm2") return suite_thm2(options);
    if (name == "thm3") return suite_thm3(options);
    if (name == "thm4-eg") return suite_thm4_eg(options);
    if (name == "c3c4-identity") return suite_c3c4(options);
    if (name == "es-c4c5") return suite_es(options);
    if (name == "constructions") return suite_constructions(options);
    std::string known;
    for (const auto& s : suite_names()) known += (known.empty() ? "" : ", ") + s;
    throw std::invalid_argument("unknown suite '" + name + "' (known: " + known + ")");
}

int max_nonadjacent_codegree(const Graph& g) {
    int worst = 0;
    for (int x = 0; x < g.order(); ++x)
        for (int y = x + 1; y < g.order(); ++y)
            if (!g.adjacent(x, y)) worst = std::max(worst, std::popcount(g.row(x) & g.row(y)));
    return worst;
}

}  // namespace turanlab
