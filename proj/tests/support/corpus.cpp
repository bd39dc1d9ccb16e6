#include "corpus.hpp"

#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "wlkit/generators.hpp"
#include "wlkit/transitivity.hpp"
#include "wlkit/wl.hpp"

namespace wlkit::corpus {

namespace {

// Isomorphism-invariant bucket key: degree multiset plus the stable
// pair-coloring palette. Buckets only speed up dedup; equality is
// always confirmed by the oracle.
std::string fingerprint(const Graph& g) {
    std::vector<int> degrees;
    for (int v = 0; v < g.vertex_count(); ++v) degrees.push_back(g.degree(v));
    std::sort(degrees.begin(), degrees.end());

    PairColoring coloring = wl2(g);
    std::map<int, int> palette;
    for (int c : coloring.color) ++palette[c];

    std::ostringstream out;
    out << g.vertex_count() << ':';
    for (int d : degrees) out << d << ',';
    out << '|' << coloring.num_colors << '|';
    for (auto [c, count] : palette) out << c << ':' << count << ',';
    return out.str();
}

std::vector<Graph> augment_all(const std::vector<Graph>& smaller) {
    std::vector<Graph> reps;
    std::map<std::string, std::vector<std::size_t>> buckets;
    OracleOptions opts;
    for (const Graph& g : smaller) {
        const int n = g.vertex_count();
        for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
            std::vector<Graph::Edge> edges = g.edges();
            for (int v = 0; v < n; ++v)
                if (mask & (1ULL << v)) edges.emplace_back(v, n);
            Graph candidate = Graph::build(n + 1, std::move(edges));
            std::string key = fingerprint(candidate);
            auto& bucket = buckets[key];
            bool duplicate = false;
            for (std::size_t idx : bucket)
                if (is_isomorphic(candidate, reps[idx], opts)) {
                    duplicate = true;
                    break;
                }
            if (!duplicate) {
                bucket.push_back(reps.size());
                reps.push_back(std::move(candidate));
            }
        }
    }
    return reps;
}

}  // namespace

std::vector<Graph> labeled_graphs(int n) {
    if (n < 0 || n > 6) throw std::invalid_argument("labeled enumeration kept to n <= 6");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<Graph> out;
    out.reserve(1ULL << pairs.size());
    for (unsigned long long mask = 0; mask < (1ULL << pairs.size()); ++mask) {
        std::vector<Graph::Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask & (1ULL << i)) edges.push_back(pairs[i]);
        out.push_back(Graph::build(n, std::move(edges)));
    }
    return out;
}

const std::vector<Graph>& graphs_up_to_iso(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("iso-class enumeration kept to 1 <= n <= 8");
    static std::vector<std::vector<Graph>> cache(9);
    static std::mutex guard;
    std::lock_guard<std::mutex> lock(guard);
    if (cache[1].empty()) cache[1].push_back(empty_graph(1));
    for (int k = 2; k <= n; ++k)
        if (cache[k].empty()) cache[k] = augment_all(cache[k - 1]);
    return cache[n];
}

std::vector<Graph> all_circulants(int p) {
    // symmetric connection sets = unions of pairs {z, p-z}
    std::vector<std::pair<int, int>> pairs;
    for (int z = 1; z <= p / 2; ++z) pairs.emplace_back(z, (p - z) % p);
    std::vector<Graph> out;
    for (unsigned long long mask = 1; mask < (1ULL << pairs.size()); ++mask) {
        std::set<int> connection;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask & (1ULL << i)) {
                connection.insert(pairs[i].first);
                connection.insert(pairs[i].second);
            }
        out.push_back(circulant(p, connection));
    }
    return out;
}

}  // namespace wlkit::corpus
