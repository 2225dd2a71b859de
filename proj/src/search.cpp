#include "turanlab/search.hpp"

#include "turanlab/canonical.hpp"
#include "turanlab/graph6.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <random>
#include <set>
#include <thread>
#include <unordered_set>

namespace turanlab {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kFallbackNodeBudget = 50'000'000;

// Shared node and wall-clock accounting. Once exhausted every caller of
// charge() throws, so all workers stop promptly.
class Budget {
public:
    explicit Budget(const SearchOptions& options)
        : limit_(options.node_budget ? options.node_budget : default_node_budget()),
          seconds_(options.time_budget_seconds), start_(Clock::now()) {}

    void charge() {
        const std::uint64_t used = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
        if (used > limit_) exhausted_.store(true, std::memory_order_relaxed);
        if (seconds_ > 0 && (used & 255u) == 0 && elapsed() > seconds_)
            exhausted_.store(true, std::memory_order_relaxed);
        if (exhausted_.load(std::memory_order_relaxed)) throw BudgetExceeded(message());
    }

    std::uint64_t nodes() const { return nodes_.load(); }
    double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

    std::string message() const {
        std::string m = "search budget exhausted after " + std::to_string(nodes_.load()) + " nodes";
        if (seconds_ > 0) m += " (limits: " + std::to_string(limit_) + " nodes, " + std::to_string(seconds_) + " s)";
        else m += " (limit: " + std::to_string(limit_) + " nodes)";
        return m;
    }

private:
    std::uint64_t limit_;
    double seconds_;
    Clock::time_point start_;
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> exhausted_{false};
};

// Calls f(mask) for every subset of {0..k-1}, larger subsets first and
// ascending numeric order within a size; k < 64. f returns false to stop.
template <class F>
void for_each_mask_descending(int k, F&& f) {
    const Row limit = bit(k);
    for (int d = k; d >= 0; --d) {
        if (d == 0) {
            if (!f(Row{0}, 0)) return;
            continue;
        }
        Row x = low_bits(d);
        while (x < limit) {
            if (!f(x, d)) return;
            const Row c = x & (~x + 1);
            const Row r = x + c;
            x = (((r ^ x) >> 2) / c) | r;
        }
    }
}

// Canonical augmentation step. Children of `parent` are parent plus vertex k
// joined to a mask; a child is accepted when the new vertex lies in the
// automorphism orbit of the canonical deletion vertex (the minimum-degree
// vertex at the highest canonical position). Accepted children of one parent
// are deduplicated by certificate.
class Augmenter {
public:
    explicit Augmenter(const ConstraintSet& c) : checker_(c) {}

    const ConstraintChecker& checker() const { return checker_; }

    // keep(child_edges) decides whether a child with that many edges is
    // worth generating; false stops the scan, since masks come in
    // non-increasing size. visit(child, form) returns false to stop.
    template <class Keep, class Visit>
    bool for_each_child(const Graph& parent, Budget& budget, Keep&& keep, Visit&& visit,
                        std::uint64_t* pruned = nullptr) const {
        const int k = parent.order();
        const long long parent_edges = static_cast<long long>(parent.edge_count());
        std::array<int, kMaxVertices> degree{};
        for (int v = 0; v < k; ++v) degree[v] = parent.degree(v);
        std::unordered_set<std::string> seen;
        bool stopped = false;

        int cached_d = -1;
        Row low = 0;
        bool low_ok = true;
        for_each_mask_descending(k, [&](Row mask, int d) {
            if (d != cached_d) {
                cached_d = d;
                if (!keep(parent_edges + d)) {
                    if (pruned) ++*pruned;
                    return false;
                }
                // The new vertex must have minimum degree in the child:
                // every vertex of degree < d must reach exactly d through it.
                low = 0;
                low_ok = true;
                for (int v = 0; v < k; ++v)
                    if (degree[v] < d) {
                        low |= bit(v);
                        if (degree[v] != d - 1) low_ok = false;
                    }
            }
            if (!low_ok || (low & ~mask)) return true;
            Graph child = parent.extended(VertexSet(mask));
            if (!checker_.satisfied_through(child, k)) return true;
            CanonicalForm form = canonical_form(child);
            if (!is_canonical_extension(child, form, k)) return true;
            if (!seen.insert(form.certificate).second) return true;
            budget.charge();
            if (!visit(child, form)) {
                stopped = true;
                return false;
            }
            return true;
        });
        return !stopped;
    }

private:
    static bool is_canonical_extension(const Graph& child, const CanonicalForm& form, int added) {
        const int delta = child.min_degree();
        for (int i = child.order() - 1; i >= 0; --i) {
            const int v = form.relabeling[i];
            if (child.degree(v) == delta) return form.orbit[v] == form.orbit[added];
        }
        return false;
    }

    ConstraintChecker checker_;
};

long long max_cross_edges(int n, int k) {
    const long long rest = n - k;
    return rest * (rest - 1) / 2 + rest * k;
}

// Leaves found by one worker at its own best edge count.
struct LocalBest {
    long long edges = -1;
    std::set<std::string> certificates;  // the smallest `cap` ones
    std::uint64_t count = 0;
    std::uint64_t pruned = 0;

    void offer(long long e, const std::string& certificate, std::size_t cap) {
        if (e < edges) return;
        if (e > edges) {
            edges = e;
            certificates.clear();
            count = 0;
        }
        ++count;
        certificates.insert(certificate);
        if (certificates.size() > cap) certificates.erase(std::prev(certificates.end()));
    }
};

class ExtremalEngine {
public:
    ExtremalEngine(int n, const ConstraintSet& c, const SearchOptions& options, Budget& budget)
        : n_(n), options_(options), augmenter_(c), budget_(budget) {}

    void dfs(const Graph& g, const std::string& certificate, LocalBest& local) {
        if (g.order() == n_) {
            const long long e = static_cast<long long>(g.edge_count());
            local.offer(e, certificate, options_.witness_cap);
            raise_best(e);
            return;
        }
        const int child_order = g.order() + 1;
        augmenter_.for_each_child(
            g, budget_,
            [&](long long child_edges) {
                return child_edges + max_cross_edges(n_, child_order) >= best_.load(std::memory_order_relaxed);
            },
            [&](const Graph& child, const CanonicalForm& form) {
                dfs(child, form.certificate, local);
                return true;
            },
            &local.pruned);
    }

    // Breadth-first expansion to the first order with enough subtrees.
    std::vector<std::pair<Graph, std::string>> frontier(const Graph& root, std::size_t want) {
        std::vector<std::pair<Graph, std::string>> level{{root, certificate(root)}};
        while (!level.empty() && level.front().first.order() < n_ - 1 && level.size() < want) {
            std::vector<std::pair<Graph, std::string>> next;
            for (const auto& [g, cert] : level)
                augmenter_.for_each_child(
                    g, budget_, [](long long) { return true; },
                    [&](const Graph& child, const CanonicalForm& form) {
                        next.emplace_back(child, form.certificate);
                        return true;
                    });
            level = std::move(next);
        }
        return level;
    }

private:
    void raise_best(long long e) {
        long long cur = best_.load(std::memory_order_relaxed);
        while (e > cur && !best_.compare_exchange_weak(cur, e, std::memory_order_relaxed)) {
        }
    }

    int n_;
    const SearchOptions& options_;
    Augmenter augmenter_;
    Budget& budget_;
    std::atomic<long long> best_{-1};
};

}  // namespace

std::uint64_t default_node_budget() {
    if (const char* env = std::getenv("TURANLAB_BUDGET_NODES")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return kFallbackNodeBudget;
}

void validate_search_input(int n, const ConstraintSet& c) {
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("n must lie in 1..64");
    for (const auto& spec : c)
        if (spec.pattern.order() < 2)
            throw std::invalid_argument("pattern " + spec.describe() + " has fewer than 2 vertices");
}

SearchResult extremal_number(int n, const ConstraintSet& c, const SearchOptions& options) {
    validate_search_input(n, c);
    Budget budget(options);
    ExtremalEngine engine(n, c, options, budget);
    const Graph root(1);
    const int threads = std::max(1, options.threads);

    std::vector<LocalBest> locals;
    if (threads == 1 || n <= 2) {
        locals.resize(1);
        engine.dfs(root, certificate(root), locals[0]);
    } else {
        const auto tasks = engine.frontier(root, static_cast<std::size_t>(threads) * 8);
        locals.resize(static_cast<std::size_t>(threads));
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();)
                        engine.dfs(tasks[i].first, tasks[i].second, locals[w]);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next.store(tasks.size());
                }
            });
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    SearchResult result;
    result.n = n;
    result.constraints = c;
    for (const auto& local : locals) result.max_edges = std::max(result.max_edges, local.edges);
    std::set<std::string> merged;
    std::uint64_t total = 0;
    for (const auto& local : locals) {
        result.stats.pruned += local.pruned;
        if (local.edges != result.max_edges || result.max_edges < 0) continue;
        total += local.count;
        merged.insert(local.certificates.begin(), local.certificates.end());
    }
    for (const auto& cert : merged) {
        if (result.certificates.size() == options.witness_cap) break;
        result.certificates.push_back(cert);
        result.witnesses.push_back(parse_graph6(cert));
    }
    result.stats.witness_overflow = total - result.certificates.size();
    result.stats.nodes = budget.nodes();
    result.stats.seconds = budget.elapsed();
    return result;
}

std::uint64_t enumerate_graphs(int n, const ConstraintSet& c, const std::function<bool(const Graph&)>& visit,
                               const SearchOptions& options, bool all_orders) {
    validate_search_input(n, c);
    Budget budget(options);
    Augmenter augmenter(c);
    std::uint64_t visited = 0;
    bool stop = false;

    std::function<void(const Graph&)> dfs = [&](const Graph& g) {
        if (all_orders || g.order() == n) {
            ++visited;
            if (!visit(g)) {
                stop = true;
                return;
            }
        }
        if (g.order() == n) return;
        augmenter.for_each_child(
            g, budget, [](long long) { return true; },
            [&](const Graph& child, const CanonicalForm&) {
                dfs(child);
                return !stop;
            });
    };
    dfs(Graph(1));
    return visited;
}

long long exhaustive_oracle(int n, const ConstraintSet& c) {
    if (n > 6) throw std::invalid_argument("exhaustive oracle is limited to n <= 6");
    validate_search_input(n, c);
    std::vector<std::pair<int, int>> pairs;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
    const ConstraintChecker checker(c);
    long long best = -1;
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t code = 0; code < total; ++code) {
        std::array<Row, kMaxVertices> rows{};
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((code >> i) & 1u) {
                rows[pairs[i].first] |= bit(pairs[i].second);
                rows[pairs[i].second] |= bit(pairs[i].first);
            }
        const long long e = std::popcount(code);
        if (e <= best) continue;
        if (checker.satisfied(Graph::from_rows(n, std::span<const Row>(rows.data(), n)))) best = e;
    }
    return best;
}

long long branch_and_bound_extremal(int n, const ConstraintSet& c, const SearchOptions& options) {
    validate_search_input(n, c);
    Budget budget(options);
    const ConstraintChecker checker(c);

    // exact[m] for m < n, computed bottom-up with the same procedure.
    std::vector<long long> exact(static_cast<std::size_t>(n) + 1, 0);
    for (int order = 1; order <= n; ++order) {
        long long best = -1;
        std::function<void(const Graph&, long long)> dfs = [&](const Graph& g, long long e) {
            budget.charge();
            const int k = g.order();
            if (k == order) {
                best = std::max(best, e);
                return;
            }
            const int rest = order - k;
            for_each_mask_descending(k, [&](Row mask, int d) {
                const long long potential = e + d + exact[rest - 1] + static_cast<long long>(rest - 1) * (k + 1);
                if (potential <= best) return false;
                Graph child = g.extended(VertexSet(mask));
                if (checker.satisfied_through(child, k)) dfs(child, e + d);
                return true;
            });
        };
        dfs(Graph(1), 0);
        if (best < 0) return -1;
        exact[order] = best;
    }
    return exact[n];
}

RamseySearchResult ramsey_number_search(int a, int b, int max_n, const SearchOptions& options) {
    if (a < 2 || b < 2) throw std::invalid_argument("ramsey search needs a, b >= 2");
    const ConstraintSet c{{named_graph("K", {a}), Mode::subgraph, "K" + std::to_string(a)},
                          {named_graph("E", {b}), Mode::induced, "E" + std::to_string(b)}};
    RamseySearchResult result;
    result.a = a;
    result.b = b;
    Graph last_found(1);
    for (int n = 1; n <= max_n; ++n) {
        std::optional<Graph> found;
        SearchOptions per_order = options;
        result.nodes += enumerate_graphs(
            n, c,
            [&](const Graph& g) {
                if (!found) found = g;
                return true;
            },
            per_order);
        if (!found) {
            result.value = n;
            result.critical = last_found;
            return result;
        }
        last_found = *found;
    }
    throw std::invalid_argument("no Ramsey value found up to n = " + std::to_string(max_n));
}

bool ramsey_colouring_exists(int a, int b, int n) {
    if (a < 1 || b < 1 || n < 1 || n > kMaxVertices) throw std::invalid_argument("invalid Ramsey colouring query");
    const ConstraintChecker checker(ConstraintSet{{named_graph("K", {a}), Mode::subgraph, ""},
                                                  {named_graph("E", {b}), Mode::induced, ""}});
    if (!checker.satisfied(Graph(1))) return false;
    std::function<bool(const Graph&)> extend = [&](const Graph& g) {
        if (g.order() == n) return true;
        const int k = g.order();
        const Row total = bit(k);
        for (Row mask = 0; mask < total; ++mask) {
            Graph child = g.extended(VertexSet(mask));
            if (checker.satisfied_through(child, k) && extend(child)) return true;
        }
        return false;
    };
    return extend(Graph(1));
}

bool drc_property_holds(const Graph& g, VertexSet a, int s, int r) {
    if (s < 1) throw std::invalid_argument("s must be >= 1");
    const std::vector<int> members = a.to_vector();
    const int m = static_cast<int>(members.size());
    if (m < s) return true;
    std::vector<int> idx(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) idx[i] = i;
    while (true) {
        Row subset = 0;
        for (int i : idx) subset |= bit(members[i]);
        if (common_degree(g, VertexSet(subset)) < r) return false;
        int i = s - 1;
        while (i >= 0 && idx[i] == m - s + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::optional<VertexSet> drc_find_set(const Graph& g, int s, int r, int samples, std::uint64_t seed,
                                      std::optional<int> t_exp) {
    if (s < 1) throw std::invalid_argument("s must be >= 1");
    if (r < 0) throw std::invalid_argument("r must be >= 0");
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    if (t_exp && *t_exp < 0) throw std::invalid_argument("t_exp must be >= 0");
    const int n = g.order();
    if (n == 0) return std::nullopt;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    VertexSet best;
    for (int sample = 0; sample < samples; ++sample) {
        const int t = t_exp ? *t_exp : sample % (n + 1);
        Row drawn = 0;
        for (int i = 0; i < t; ++i) drawn |= bit(pick(rng));
        const VertexSet a0 = t == 0 ? g.vertices() : common_neighborhood(g, VertexSet(drawn));

        const std::vector<int> members = a0.to_vector();
        const int m = static_cast<int>(members.size());
        Row alive = a0.bits();
        if (m >= s) {
            std::vector<int> idx(static_cast<std::size_t>(s));
            for (int i = 0; i < s; ++i) idx[i] = i;
            while (true) {
                Row subset = 0;
                for (int i : idx) subset |= bit(members[i]);
                if ((subset & alive) == subset && common_degree(g, VertexSet(subset)) < r)
                    alive &= ~bit(members[idx[s - 1]]);
                int i = s - 1;
                while (i >= 0 && idx[i] == m - s + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
        if (std::popcount(alive) > best.size()) best = VertexSet(alive);
    }
    if (best.empty()) return std::nullopt;
    if (!drc_property_holds(g, best, s, r))
        throw std::logic_error("dependent random choice produced a set violating its property");
    return best;
}

PatternShape identify_shape(const Graph& p) {
    PatternShape shape;
    const int n = p.order();
    shape.order = n;
    const long long e = static_cast<long long>(p.edge_count());
    shape.complete = e == static_cast<long long>(n) * (n - 1) / 2;

    if (n >= 3 && e == n && p.min_degree() == 2 && p.max_degree() == 2) {
        Row seen = bit(0), frontier = bit(0);
        while (frontier) {
            Row next = 0;
            for (int v : VertexSet(frontier)) next |= p.row(v);
            frontier = next & ~seen;
            seen |= next;
        }
        if (seen == low_bits(n)) shape.cycle_length = n;
    }

    if (n >= 2) {
        // Two-colour each component; complete bipartite iff connected,
        // bipartite and every cross pair present.
        std::array<int, kMaxVertices> colour{};
        colour.fill(-1);
        bool bipartite = true;
        int components = 0;
        for (int s = 0; s < n && bipartite; ++s) {
            if (colour[s] >= 0) continue;
            ++components;
            colour[s] = 0;
            std::vector<int> stack{s};
            while (!stack.empty() && bipartite) {
                const int v = stack.back();
                stack.pop_back();
                for (int w : p.neighbors(v)) {
                    if (colour[w] < 0) {
                        colour[w] = 1 - colour[v];
                        stack.push_back(w);
                    } else if (colour[w] == colour[v]) {
                        bipartite = false;
                    }
                }
            }
        }
        if (bipartite && components == 1) {
            long long side = 0;
            for (int v = 0; v < n; ++v) side += colour[v];
            const long long other = n - side;
            if (side * other == e)
                shape.complete_bipartite = std::pair<int, int>(static_cast<int>(std::min(side, other)),
                                                               static_cast<int>(std::max(side, other)));
        }
    }
    return shape;
}

std::string to_string(Comparison kind) {
    switch (kind) {
    case Comparison::upper: return "upper";
    case Comparison::lower: return "lower";
    case Comparison::equal: return "equal";
    case Comparison::info: return "info";
    }
    return "info";
}

bool BoundColumn::passes(double row_exact) const {
    const double x = measured.value_or(row_exact);
    switch (kind) {
    case Comparison::upper: return x <= value;
    case Comparison::lower: return x >= value;
    case Comparison::equal: return x == value;
    case Comparison::info: return true;
    }
    return true;
}

bool VerificationRow::pass() const {
    return std::all_of(bounds.begin(), bounds.end(), [&](const BoundColumn& b) { return b.passes(exact); });
}

namespace {

// A subgraph constraint on a complete pattern is the same as an induced one.
bool acts_as_subgraph(const PatternSpec& spec, const PatternShape& shape) {
    return spec.mode == Mode::subgraph || shape.complete;
}

BoundColumn column(const std::string& id, const BoundReport& report) {
    return BoundColumn{id, report.value, Comparison::upper, report.certified, std::nullopt};
}

}  // namespace

BoundColumn applicable_bound(const std::string& id, int n, const ConstraintSet& c) {
    std::vector<PatternShape> shapes;
    for (const auto& spec : c) shapes.push_back(identify_shape(spec.pattern));
    std::optional<BoundColumn> best;
    auto consider = [&](const BoundReport& report) {
        if (!best || report.value < best->value) best = column(id, report);
    };

    // Extra constraints only lower the extremal number, so a bound applies
    // whenever the set contains the constraints it is stated for. An induced
    // requirement is met by the stronger subgraph constraint as well.
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (i == j) continue;
            const PatternShape& h = shapes[i];
            const PatternShape& f = shapes[j];
            if (id == "thm1") {
                if (!h.complete || !f.complete_bipartite) continue;
                const auto [s, t] = *f.complete_bipartite;
                const BoundReport a = thm1_bound(n, h.order, s, t);
                const BoundReport b = thm1_bound(n, h.order, t, s);
                consider(a.value <= b.value ? a : b);
            } else if (id == "es-c4c5") {
                if (h.cycle_length == 4 && f.cycle_length == 5 && acts_as_subgraph(c[i], h) &&
                    acts_as_subgraph(c[j], f))
                    consider(es_c4c5_bound(n));
            } else if (id == "thm4") {
                if (!h.cycle_length || *h.cycle_length % 2 == 0 || !acts_as_subgraph(c[i], h)) continue;
                if (!f.complete_bipartite || f.complete_bipartite->first != 2) continue;
                const int k = (*h.cycle_length - 1) / 2;
                consider(thm4_odd_cycle_bound(n, k, f.complete_bipartite->second, 0.0));
            } else if (id == "cor5") {
                if (!acts_as_subgraph(c[i], h) || !f.complete_bipartite || f.complete_bipartite->first != 2)
                    continue;
                consider(cor5_leading(n, h.order, f.complete_bipartite->second - 1));
            } else {
                throw std::invalid_argument("unknown bound id for verification: " + id +
                                            " (expected thm1, es-c4c5, thm4, cor5)");
            }
        }
    if (!best) {
        static const std::map<std::string, std::string> needs = {
            {"thm1", "{K_r-sub, K_{s,t}-ind}"},
            {"es-c4c5", "{C4-sub, C5-sub}"},
            {"thm4", "{C_{2k+1}-sub, K_{2,t}-ind}"},
            {"cor5", "{H-sub, K_{2,t+1}-ind}"},
        };
        const auto it = needs.find(id);
        if (it == needs.end())
            throw std::invalid_argument("unknown bound id for verification: " + id +
                                        " (expected thm1, es-c4c5, thm4, cor5)");
        throw std::invalid_argument("bound " + id + " needs constraints containing " + it->second + ", got " +
                                    describe(c));
    }
    return *best;
}

std::vector<VerificationRow> verify_bounds(int n_lo, int n_hi, const ConstraintSet& c,
                                           const std::vector<std::string>& bound_ids, const SearchOptions& options) {
    std::vector<VerificationRow> rows;
    if (n_lo > n_hi) return rows;
    for (const auto& id : bound_ids) applicable_bound(id, std::max(n_lo, 1), c);
    for (int n = n_lo; n <= n_hi; ++n) {
        VerificationRow row;
        row.n = n;
        row.constraints = describe(c);
        row.exact = static_cast<double>(extremal_number(n, c, options).max_edges);
        for (const auto& id : bound_ids) row.bounds.push_back(applicable_bound(id, n, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace turanlab
