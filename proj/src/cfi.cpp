#include "wlkit/cfi.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace wlkit {

namespace {

// Even-weight bit vectors of length k, in increasing order of the bit
// string read with coordinate 0 (the smallest neighbor) most
// significant. Position j of cell Q(v) is the j-th vector in this
// order.
std::vector<unsigned> even_weight_vectors(int k) {
    std::vector<unsigned> out;
    out.reserve(std::size_t{1} << (k - 1));
    for (unsigned m = 0; m < (1u << k); ++m)
        if (__builtin_parity(m) == 0) out.push_back(m);
    return out;
}

int bit_of(unsigned vec, int pos, int k) { return (vec >> (k - 1 - pos)) & 1; }

}  // namespace

std::vector<int> CfiGraph::slice(int v, int u, int bit) const {
    const auto& nbrs = template_graph.neighbors(v);
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), u);
    if (it == nbrs.end() || *it != u) throw std::invalid_argument("u is not a template neighbor of v");
    const int pos = static_cast<int>(it - nbrs.begin());
    auto vectors = even_weight_vectors(k);
    std::vector<int> out;
    for (std::size_t j = 0; j < vectors.size(); ++j)
        if (bit_of(vectors[j], pos, k) == bit) out.push_back(cells[v][j]);
    return out;
}

std::vector<int> edge_indices(const Graph& f, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> out;
    for (auto [u, v] : edges) {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(f.edges().begin(), f.edges().end(), std::pair{u, v});
        if (it == f.edges().end() || *it != std::pair{u, v})
            throw std::invalid_argument("not a template edge: (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        out.push_back(static_cast<int>(it - f.edges().begin()));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CfiGraph cfi(const Graph& f, const std::vector<int>& twist_edges) {
    BasicStats stats = basic_stats(f);
    if (!stats.regular_degree || *stats.regular_degree < 2)
        throw std::invalid_argument("template must be k-regular with k >= 2");
    if (!stats.connected) throw std::invalid_argument("template must be connected");
    const int k = *stats.regular_degree;
    const int m = f.vertex_count();
    const int cell_size = 1 << (k - 1);

    for (int e : twist_edges)
        if (e < 0 || e >= f.edge_count()) throw std::invalid_argument("twist edge index out of range");
    std::vector<char> twisted(f.edge_count(), 0);
    for (int e : twist_edges) twisted[e] = 1;

    CfiGraph out;
    out.template_graph = f;
    out.k = k;
    out.twists = twist_edges;
    std::sort(out.twists.begin(), out.twists.end());
    out.twists.erase(std::unique(out.twists.begin(), out.twists.end()), out.twists.end());

    out.cells.assign(m, {});
    out.cell_of.assign(static_cast<std::size_t>(m) * cell_size, 0);
    for (int v = 0; v < m; ++v) {
        for (int j = 0; j < cell_size; ++j) {
            int vertex = v * cell_size + j;
            out.cells[v].push_back(vertex);
            out.cell_of[vertex] = v;
        }
    }

    auto vectors = even_weight_vectors(k);
    // coordinate position of u within N(v), by ascending vertex id
    auto coord = [&f](int v, int u) {
        const auto& nbrs = f.neighbors(v);
        return static_cast<int>(std::lower_bound(nbrs.begin(), nbrs.end(), u) - nbrs.begin());
    };

    std::vector<Graph::Edge> edges;
    for (int e = 0; e < f.edge_count(); ++e) {
        auto [v, u] = f.edges()[e];
        const int pv = coord(v, u);  // coordinate of u in Q(v)
        const int pu = coord(u, v);  // coordinate of v in Q(u)
        for (int a = 0; a < cell_size; ++a)
            for (int b = 0; b < cell_size; ++b) {
                int xa = bit_of(vectors[a], pv, k);
                int yb = bit_of(vectors[b], pu, k);
                if ((xa ^ yb) == (twisted[e] ? 1 : 0))
                    edges.emplace_back(v * cell_size + a, u * cell_size + b);
            }
    }
    out.base = Graph::build(m * cell_size, std::move(edges));
    return out;
}

namespace {

std::string assumption_failure(const Graph& f) {
    BasicStats stats = basic_stats(f);
    if (!stats.regular_degree) return "template is not regular";
    if (*stats.regular_degree < 3) return "template degree is below 3";
    if (!stats.connected) return "template is not connected";
    int nu = max_common_neighbors(f);
    if (nu >= 2 * *stats.regular_degree - 4)
        return "max common neighbors " + std::to_string(nu) + " is not below 2k-4 = " +
               std::to_string(2 * *stats.regular_degree - 4);
    return {};
}

}  // namespace

std::pair<CfiGraph, CfiGraph> cfi_pair(const Graph& f) {
    std::string failure = assumption_failure(f);
    if (!failure.empty()) throw std::invalid_argument("template assumption violated: " + failure);
    CfiGraph a = cfi(f, {});
    CfiGraph b = cfi(f, {0});  // edges are sorted, so edge 0 is lexicographically smallest
    return {std::move(a), std::move(b)};
}

bool twist_parity_check(const Graph& f, const std::vector<int>& twists_r,
                        const std::vector<int>& twists_s, const OracleOptions& opts) {
    std::string failure = assumption_failure(f);
    if (!failure.empty()) throw std::invalid_argument("template assumption violated: " + failure);
    CfiGraph ar = cfi(f, twists_r);
    CfiGraph as = cfi(f, twists_s);
    return is_isomorphic(ar.base, as.base, opts);
}

int min_separator_size(const Graph& f) {
    const int n = f.vertex_count();
    if (n <= 1) return 0;
    const int limit = n / 2;

    std::vector<int> chosen;
    std::vector<char> removed(n, 0);
    auto components_small = [&]() {
        std::vector<char> seen(n, 0);
        for (int s = 0; s < n; ++s) {
            if (removed[s] || seen[s]) continue;
            int size = 0;
            std::vector<int> stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                ++size;
                if (size > limit) return false;
                for (int w : f.neighbors(u))
                    if (!removed[w] && !seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
        }
        return true;
    };

    // subsets in increasing size; the first hit is the minimum
    for (int size = 0; size <= n; ++size) {
        std::vector<int> subset(size);
        auto search = [&](auto&& self, int pos, int start) -> bool {
            if (pos == size) {
                return components_small();
            }
            for (int v = start; v < n; ++v) {
                subset[pos] = v;
                removed[v] = 1;
                if (self(self, pos + 1, v + 1)) return true;
                removed[v] = 0;
            }
            return false;
        };
        if (search(search, 0, 0)) return size;
        std::fill(removed.begin(), removed.end(), 0);
    }
    return n;
}

ExpansionResult vertex_expansion(const Graph& f) {
    const int n = f.vertex_count();
    ExpansionResult best;
    best.boundary = n;  // ratio upper bound to start: n/1 beats any real set
    best.size = 1;
    if (n == 0) return best;
    if (n > 30) throw std::invalid_argument("vertex expansion search needs v(F) <= 30");

    AdjacencyBits bits(f);
    const int words = (n + 63) / 64;
    for (unsigned long long mask = 1; mask < (1ULL << n); ++mask) {
        int size = __builtin_popcountll(mask);
        if (size > n / 2) continue;
        std::uint64_t closed = 0;
        for (int v = 0; v < n; ++v)
            if (mask & (1ULL << v)) closed |= bits.row(v)[0];  // n <= 30, one word
        (void)words;
        std::uint64_t outside = closed & ~mask & ((n == 64 ? ~0ULL : (1ULL << n) - 1));
        long long boundary = __builtin_popcountll(outside);
        if (boundary * best.size < best.boundary * size) {
            best.boundary = boundary;
            best.size = size;
        }
    }
    best.value = static_cast<double>(best.boundary) / static_cast<double>(best.size);
    return best;
}

TemplateReport analyze_template(const Graph& f, int exact_budget) {
    TemplateReport report;
    BasicStats stats = basic_stats(f);
    report.regular = stats.regular_degree.has_value();
    report.k = stats.regular_degree.value_or(0);
    report.connected = stats.connected;
    report.max_common_neighbors = max_common_neighbors(f);
    report.assumption_ok = report.regular && report.k >= 3 && report.connected &&
                           report.max_common_neighbors < 2 * report.k - 4;
    report.diameter = stats.diameter;

    const int v = f.vertex_count();
    if (v <= exact_budget && v >= 1) {
        report.separator_exact = min_separator_size(f);
        ExpansionResult h = vertex_expansion(f);
        report.expansion_exact = h.value;
        // s(F) >= h/(3+h) * v = boundary*v / (3*size + boundary), exactly
        long long num = h.boundary * v;
        long long den = 3 * h.size + h.boundary;
        report.separator_bound_expansion = static_cast<int>((num + den - 1) / den);
    }
    if (stats.diameter && v >= 1) {
        long long den = 6LL * *stats.diameter + 1;
        report.separator_bound_diameter = static_cast<int>((v + den - 1) / den);
    }
    report.separator_best_bound =
        std::max({report.separator_bound_expansion, report.separator_bound_diameter, 1});
    return report;
}

HardPair hard_pair(const Graph& f, int copies, int exact_budget) {
    if (copies < 2) throw std::invalid_argument("hard pair needs at least 2 copies");
    auto [a, b] = cfi_pair(f);
    HardPair out;
    out.g = a.base;
    out.h = a.base;
    for (int c = 1; c < copies; ++c) {
        out.g = disjoint_union(out.g, a.base);
        out.h = disjoint_union(out.h, c + 1 == copies ? b.base : a.base);
    }
    out.template_report = analyze_template(f, exact_budget);
    if (out.template_report.separator_exact) {
        out.k_bound = std::max(1, *out.template_report.separator_exact);
        out.k_bound_exact = true;
    } else {
        out.k_bound = out.template_report.separator_best_bound;
        out.k_bound_exact = false;
    }
    return out;
}

bool is_cell_partition_detected(const CfiGraph& a) {
    const Graph& base = a.base;
    const int n = base.vertex_count();
    const int nu = max_common_neighbors(base);
    AdjacencyBits bits(base);

    // components of the "maximally many common neighbors" relation
    std::vector<int> comp(n, -1);
    int comp_count = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = comp_count;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v)
                if (v != u && comp[v] < 0 && bits.common_neighbors(u, v) == nu) {
                    comp[v] = comp_count;
                    stack.push_back(v);
                }
        }
        ++comp_count;
    }
    if (comp_count != static_cast<int>(a.cells.size())) return false;
    for (int v = 0; v < n; ++v)
        for (int u = v + 1; u < n; ++u) {
            bool same_cell = a.cell_of[u] == a.cell_of[v];
            if (same_cell != (comp[u] == comp[v])) return false;
        }
    return true;
}

std::string cfi_manifest_json(const CfiGraph& a, const std::optional<int>& k_bound) {
    nlohmann::json j;
    j["template"] = {{"n", a.template_graph.vertex_count()},
                     {"m", a.template_graph.edge_count()},
                     {"k", a.k}};
    nlohmann::json twist_pairs = nlohmann::json::array();
    for (int e : a.twists) {
        auto [u, v] = a.template_graph.edges()[e];
        twist_pairs.push_back({u, v});
    }
    j["twists"] = twist_pairs;
    j["cells"] = a.cells;
    if (k_bound)
        j["k_bound"] = *k_bound;
    else
        j["k_bound"] = nullptr;
    return j.dump();
}

}  // namespace wlkit
