#include "wlkit/coherent.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "wlkit/parallel.hpp"

namespace wlkit {

namespace {

// Fills the derived tables from a relation matrix with dense ids,
// renumbering so reflexive relations come first (order kept within each
// group). Tables are best-effort: for partitions that are not actually
// coherent (hand-built inputs to verify_coherence) the valency and
// transpose entries describe the first pair of each relation.
CoherentConfiguration tabulate(int n, std::vector<int> matrix) {
    if (static_cast<std::size_t>(n) * n != matrix.size())
        throw std::invalid_argument("relation matrix has wrong size");
    CoherentConfiguration x;
    x.n = n;
    int m = 0;
    for (int r : matrix) {
        if (r < 0) throw std::invalid_argument("relation ids must be non-negative");
        m = std::max(m, r + 1);
    }

    std::vector<char> on_diagonal(m, 0), off_diagonal(m, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            int r = matrix[static_cast<std::size_t>(u) * n + v];
            (u == v ? on_diagonal : off_diagonal)[r] = 1;
        }
    for (int r = 0; r < m; ++r)
        if (!on_diagonal[r] && !off_diagonal[r])
            throw std::invalid_argument("relation ids not contiguous");

    std::vector<int> rename(m, -1);
    int next = 0;
    for (int r = 0; r < m; ++r)
        if (on_diagonal[r] && !off_diagonal[r]) rename[r] = next++;
    for (int r = 0; r < m; ++r)
        if (rename[r] < 0) rename[r] = next++;
    for (auto& r : matrix) r = rename[r];

    x.num_relations = m;
    x.relation = std::move(matrix);
    x.reflexive.assign(m, false);
    std::vector<char> pure_reflexive(m, 1);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) pure_reflexive[x.at(u, v)] = 0;
    for (int r = 0; r < m; ++r) x.reflexive[r] = pure_reflexive[r];

    // Fibers are the diagonal classes even when the partition is not
    // coherent; fiber ids then may exceed the reflexive relation count.
    std::vector<int> loop_class_of_relation(m, -1);
    x.fiber_of.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        int r = x.at(v, v);
        if (loop_class_of_relation[r] < 0) {
            loop_class_of_relation[r] = static_cast<int>(x.fibers.size());
            x.fibers.push_back({});
        }
        int f = loop_class_of_relation[r];
        x.fibers[f].push_back(v);
        x.fiber_of[v] = f;
    }

    x.valency.assign(m, 0);
    x.transpose.assign(m, -1);
    x.source_fiber.assign(m, -1);
    x.target_fiber.assign(m, -1);
    int remaining = m;
    for (int u = 0; u < n && remaining > 0; ++u)
        for (int v = 0; v < n; ++v) {
            int r = x.at(u, v);
            if (x.transpose[r] >= 0) continue;
            --remaining;
            x.transpose[r] = x.at(v, u);
            x.source_fiber[r] = x.fiber_of[u];
            x.target_fiber[r] = x.fiber_of[v];
            long long out = 0;
            for (int w = 0; w < n; ++w)
                if (x.at(u, w) == r) ++out;
            x.valency[r] = out;
        }
    return x;
}

}  // namespace

CoherentConfiguration wrap_partition(int n, std::vector<int> relation_matrix) {
    return tabulate(n, std::move(relation_matrix));
}

CoherentConfiguration closure(const Graph& g) {
    PairColoring coloring = wl2(g);
    CoherentConfiguration x = tabulate(g.vertex_count(), coloring.color);
    CoherenceReport report = verify_coherence(x);
    if (!report.ok())
        throw std::logic_error("stable 2-WL partition failed the coherence axioms "
                               "(refinement bug): " + report.violations.front().detail);
    return x;
}

CoherenceReport verify_coherence(const CoherentConfiguration& x, bool full, int samples,
                                 unsigned long long seed) {
    CoherenceReport report;
    const int n = x.n;
    const int m = x.num_relations;

    // Axiom A: no relation mixes loops and non-loops.
    {
        std::vector<char> has_loop(m, 0), has_nonloop(m, 0);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                (u == v ? has_loop : has_nonloop)[x.at(u, v)] = 1;
        for (int r = 0; r < m; ++r)
            if (has_loop[r] && has_nonloop[r])
                report.violations.push_back(
                    {'A', "relation " + std::to_string(r) + " contains loops and non-loops"});
    }

    // Axiom B: the transpose of a relation is a relation, i.e. the map
    // (u,v) -> relation(v,u) is constant on every relation.
    {
        std::vector<int> t(m, -1);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                int r = x.at(u, v);
                int rt = x.at(v, u);
                if (t[r] < 0) {
                    t[r] = rt;
                } else if (t[r] != rt) {
                    report.violations.push_back(
                        {'B', "relation " + std::to_string(r) + " has a split transpose at (" +
                                  std::to_string(u) + "," + std::to_string(v) + ")"});
                    return report;  // everything below would drown in noise
                }
            }
    }

    // Axiom C: for fixed relations R,S the count of w with (u,w) in R,
    // (w,v) in S must agree for all (u,v) of one relation. The full
    // count vector of a pair is its intersection-number signature.
    auto signature = [&x, n](int u, int v) {
        std::vector<std::pair<int, int>> sig(n);
        for (int w = 0; w < n; ++w) sig[w] = {x.at(u, w), x.at(w, v)};
        std::sort(sig.begin(), sig.end());
        return sig;
    };

    std::vector<std::vector<std::pair<int, int>>> reference(m);
    std::vector<std::pair<int, int>> witness(m, {-1, -1});
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            int r = x.at(u, v);
            if (witness[r].first < 0) {
                witness[r] = {u, v};
                reference[r] = signature(u, v);
            }
        }

    std::atomic<bool> failed{false};
    if (full) {
        const std::size_t pairs = static_cast<std::size_t>(n) * n;
        std::vector<std::pair<int, int>> bad_pair(thread_count(), {-1, -1});
        std::atomic<std::size_t> bad_found{0};
        parallel_for(pairs, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t p = lo; p < hi; ++p) {
                if (failed.load(std::memory_order_relaxed)) return;
                int u = static_cast<int>(p / n), v = static_cast<int>(p % n);
                int r = x.at(u, v);
                if (signature(u, v) != reference[r]) {
                    std::size_t slot = bad_found.fetch_add(1);
                    if (slot < bad_pair.size()) bad_pair[slot] = {u, v};
                    failed.store(true, std::memory_order_relaxed);
                    return;
                }
            }
        });
        if (failed.load()) {
            auto [u, v] = bad_pair[0];
            report.violations.push_back(
                {'C', "intersection numbers differ inside relation " +
                          std::to_string(x.at(u, v)) + ": pair (" + std::to_string(u) + "," +
                          std::to_string(v) + ") vs (" + std::to_string(witness[x.at(u, v)].first) +
                          "," + std::to_string(witness[x.at(u, v)].second) + ")"});
        }
    } else {
        std::mt19937_64 rng(seed);
        for (int i = 0; i < samples && n > 0; ++i) {
            int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
            int r = x.at(u, v);
            if (signature(u, v) != reference[r]) {
                report.violations.push_back(
                    {'C', "intersection numbers differ inside relation " + std::to_string(r) +
                              " (sampled pair " + std::to_string(u) + "," + std::to_string(v) + ")"});
                break;
            }
        }
    }
    return report;
}

std::vector<ConstituentInfo> constituents(const CoherentConfiguration& x) {
    std::vector<ConstituentInfo> out;
    out.reserve(x.num_relations);
    for (int r = 0; r < x.num_relations; ++r)
        out.push_back({r, x.valency[r], static_cast<bool>(x.reflexive[r])});
    return out;
}

bool diagonal_is_split(const CoherentConfiguration& x) {
    return x.fibers.size() > 1;
}

bool adjacency_is_split(const CoherentConfiguration& x, const Graph& g) {
    if (x.n != g.vertex_count())
        throw std::invalid_argument("configuration and graph differ in size");
    std::vector<char> edge_relation(x.num_relations, 0);
    for (auto [u, v] : g.edges()) {
        edge_relation[x.at(u, v)] = 1;
        edge_relation[x.at(v, u)] = 1;
    }
    // Consistency: relations met by edges must consist of edges only.
    for (int u = 0; u < x.n; ++u)
        for (int v = 0; v < x.n; ++v)
            if (edge_relation[x.at(u, v)] && !g.adjacent(u, v))
                throw std::invalid_argument("configuration is not the closure of this graph");
    return std::count(edge_relation.begin(), edge_relation.end(), 1) > 1;
}

CoherentConfiguration restrict_to(const CoherentConfiguration& x, const std::vector<int>& points) {
    std::vector<char> keep(x.n, 0);
    for (int p : points) {
        if (p < 0 || p >= x.n) throw std::invalid_argument("point out of range");
        keep[p] = 1;
    }
    for (const auto& fiber : x.fibers) {
        int kept = 0;
        for (int p : fiber) kept += keep[p];
        if (kept != 0 && kept != static_cast<int>(fiber.size()))
            throw std::invalid_argument("restriction set is not a union of fibers");
    }
    std::vector<int> sorted_points;
    for (int p = 0; p < x.n; ++p)
        if (keep[p]) sorted_points.push_back(p);

    const int k = static_cast<int>(sorted_points.size());
    std::vector<char> used(x.num_relations, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) used[x.at(sorted_points[i], sorted_points[j])] = 1;
    // dense ids in the original order, so restricting to everything is a no-op
    std::vector<int> rename(x.num_relations, -1);
    int next = 0;
    for (int r = 0; r < x.num_relations; ++r)
        if (used[r]) rename[r] = next++;
    std::vector<int> sub(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            sub[static_cast<std::size_t>(i) * k + j] = rename[x.at(sorted_points[i], sorted_points[j])];
    return tabulate(k, std::move(sub));
}

CoherentConfiguration one_point_extension(const Graph& g, int u) {
    return closure(individualize(g, u));
}

bool is_semiregular(const CoherentConfiguration& x) {
    for (int r = 0; r < x.num_relations; ++r)
        if (!x.reflexive[r] && x.valency[r] != 1) return false;
    return true;
}

std::string coherent_to_json(const CoherentConfiguration& x) {
    nlohmann::json j;
    j["n"] = x.n;
    j["num_relations"] = x.num_relations;
    j["fibers"] = x.fibers;
    j["valency"] = x.valency;
    j["transpose"] = x.transpose;
    j["reflexive"] = std::vector<int>(x.reflexive.begin(), x.reflexive.end());
    j["relation"] = x.relation;
    return j.dump();
}

}  // namespace wlkit
