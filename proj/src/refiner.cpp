#include "refiner.hpp"

#include <cassert>
#include <map>

#include "wlkit/parallel.hpp"

namespace wlkit::detail {

std::vector<std::vector<int>> joint_color_ranks(const std::vector<const Graph*>& graphs) {
    std::vector<int> values;
    for (const Graph* g : graphs)
        values.insert(values.end(), g->vertex_colors().begin(), g->vertex_colors().end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<std::vector<int>> ranks;
    for (const Graph* g : graphs) {
        std::vector<int> r(g->vertex_count());
        for (int v = 0; v < g->vertex_count(); ++v)
            r[v] = static_cast<int>(std::lower_bound(values.begin(), values.end(),
                                                     g->vertex_color(v)) -
                                    values.begin());
        ranks.push_back(std::move(r));
    }
    return ranks;
}

PairRefiner::PairRefiner(const Graph& a) { init({&a}); }
PairRefiner::PairRefiner(const Graph& a, const Graph& b) { init({&a, &b}); }

void PairRefiner::init(const std::vector<const Graph*>& graphs) {
    std::size_t base = 0;
    for (const Graph* g : graphs) {
        Slot s;
        s.g = g;
        s.n = g->vertex_count();
        s.base = base;
        s.pairs = static_cast<std::size_t>(s.n) * s.n;
        base += s.pairs;
        slots_.push_back(s);
    }
    colors_.assign(base, 0);

    // Initial color = rank of (type, c(u), c(v)) with loop < edge < nonedge,
    // so reflexive classes take the smallest ids.
    auto ranks = joint_color_ranks(graphs);
    std::vector<std::uint64_t> triples(base);
    for (std::size_t si = 0; si < slots_.size(); ++si) {
        const Slot& s = slots_[si];
        AdjacencyBits bits(*s.g);
        for (int u = 0; u < s.n; ++u)
            for (int v = 0; v < s.n; ++v) {
                std::uint64_t type = u == v ? 0 : bits.adjacent(u, v) ? 1 : 2;
                std::uint64_t cu = static_cast<std::uint64_t>(ranks[si][u]);
                std::uint64_t cv = static_cast<std::uint64_t>(ranks[si][v]);
                triples[s.base + static_cast<std::size_t>(u) * s.n + v] =
                    (type << 48) | (cu << 24) | cv;
            }
    }
    std::vector<std::uint64_t> sorted = triples;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t i = 0; i < base; ++i)
        colors_[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), triples[i]) -
                                      sorted.begin());
    num_colors_ = static_cast<int>(sorted.size());
}

void PairRefiner::individualize(int slot, int vertex) {
    const Slot& s = slots_[slot];
    colors_[s.base + static_cast<std::size_t>(vertex) * s.n + vertex] = num_colors_++;
}

void PairRefiner::individualize_both(int u, int v) {
    assert(slots_.size() == 2);
    int fresh = num_colors_++;
    colors_[slots_[0].base + static_cast<std::size_t>(u) * slots_[0].n + u] = fresh;
    colors_[slots_[1].base + static_cast<std::size_t>(v) * slots_[1].n + v] = fresh;
}

bool PairRefiner::palettes_equal() const {
    if (slots_.size() < 2) return true;
    std::vector<long long> h0(num_colors_, 0), h1(num_colors_, 0);
    for (std::size_t i = 0; i < slots_[0].pairs; ++i) ++h0[colors_[slots_[0].base + i]];
    for (std::size_t i = 0; i < slots_[1].pairs; ++i) ++h1[colors_[slots_[1].base + i]];
    return h0 == h1;
}

int PairRefiner::refine(bool stop_on_palette_diff) {
    int changed_rounds = 0;
    if (stop_on_palette_diff && !palettes_equal()) {
        palette_diff_round_ = rounds_total_;
        return changed_rounds;
    }
    while (refine_round()) {
        ++changed_rounds;
        ++rounds_total_;
        if (stop_on_palette_diff && !palettes_equal()) {
            palette_diff_round_ = rounds_total_;
            break;
        }
    }
    return changed_rounds;
}

bool PairRefiner::refine_round() {
    const std::size_t total = colors_.size();
    if (total == 0) return false;

    // Pairs bucketed by current color; singleton classes can never
    // split and skip the signature work entirely, which is where nearly
    // all the time goes once a search node is close to discrete.
    std::vector<std::size_t> bucket_off(num_colors_ + 1, 0);
    for (int c : colors_) ++bucket_off[c + 1];
    for (int c = 0; c < num_colors_; ++c) bucket_off[c + 1] += bucket_off[c];
    std::vector<std::uint32_t> members(total);
    {
        std::vector<std::size_t> cursor(bucket_off.begin(), bucket_off.end() - 1);
        for (std::size_t p = 0; p < total; ++p) members[cursor[colors_[p]]++] = static_cast<std::uint32_t>(p);
    }

    std::vector<int> next(total);
    bool empty_bucket = false, split = false;
    int id = 0;

    std::vector<std::uint64_t> rows;
    std::vector<std::size_t> offs;
    std::vector<std::uint32_t> order;

    for (int c = 0; c < num_colors_; ++c) {
        const std::size_t begin = bucket_off[c], end = bucket_off[c + 1];
        const std::size_t size = end - begin;
        if (size == 0) {
            empty_bucket = true;  // stale id after individualization
            continue;
        }
        if (size == 1) {
            next[members[begin]] = id++;
            continue;
        }

        // Signature per member: the sorted multiset of
        // (c(u,w) << 32 | c(w,v)) over w; the shared old color is implied.
        offs.assign(size + 1, 0);
        std::size_t want = 0;
        for (std::size_t i = 0; i < size; ++i) {
            offs[i] = want;
            const std::uint32_t p = members[begin + i];
            const Slot& s = slots_[p < slots_[0].pairs ? 0 : 1];
            want += s.n;
        }
        offs[size] = want;
        rows.resize(want);
        std::uint64_t* const rows_data = rows.data();
        const std::size_t* const offs_data = offs.data();
        const std::uint32_t* const members_data = members.data() + begin;
        parallel_for(size, [this, rows_data, offs_data, members_data](std::size_t lo, std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i) {
                const std::uint32_t p = members_data[i];
                const Slot& s = slots_[p < slots_[0].pairs ? 0 : 1];
                const int n = s.n;
                const std::size_t local = p - s.base;
                const int u = static_cast<int>(local / n);
                const int v = static_cast<int>(local % n);
                const int* col = colors_.data() + s.base;
                std::uint64_t* row = rows_data + offs_data[i];
                for (int w = 0; w < n; ++w)
                    row[w] =
                        (static_cast<std::uint64_t>(col[static_cast<std::size_t>(u) * n + w]) << 32) |
                        static_cast<std::uint64_t>(col[static_cast<std::size_t>(w) * n + v]);
                std::sort(row, row + n);
            }
        }, 512);

        order.resize(size);
        for (std::size_t i = 0; i < size; ++i) order[i] = static_cast<std::uint32_t>(i);
        auto cmp = [&](std::uint32_t a, std::uint32_t b) {
            const std::uint64_t* base = rows.data();
            return std::lexicographical_compare(base + offs[a], base + offs[a + 1],
                                                base + offs[b], base + offs[b + 1]);
        };
        std::sort(order.begin(), order.end(), cmp);

        next[members[begin + order[0]]] = id;
        for (std::size_t i = 1; i < size; ++i) {
            if (cmp(order[i - 1], order[i])) {
                ++id;
                split = true;
            }
            next[members[begin + order[i]]] = id;
        }
        ++id;
    }

    if (!split && !empty_bucket) return false;  // identity renaming, stable
    colors_ = std::move(next);
    num_colors_ = id;
    return true;
}

std::vector<int> PairRefiner::diagonal_colors(int slot) const {
    const Slot& s = slots_[slot];
    std::vector<int> d(s.n);
    for (int v = 0; v < s.n; ++v) d[v] = colors_[s.base + static_cast<std::size_t>(v) * s.n + v];
    return d;
}

VertexRefiner::VertexRefiner(const Graph& a) { init({&a}); }
VertexRefiner::VertexRefiner(const Graph& a, const Graph& b) { init({&a, &b}); }

void VertexRefiner::init(const std::vector<const Graph*>& graphs) {
    std::size_t base = 0;
    for (const Graph* g : graphs) {
        slots_.push_back({g, g->vertex_count(), base});
        base += g->vertex_count();
    }
    colors_.assign(base, 0);
    auto ranks = joint_color_ranks(graphs);
    num_colors_ = 0;
    for (std::size_t si = 0; si < slots_.size(); ++si)
        for (int v = 0; v < slots_[si].n; ++v) {
            colors_[slots_[si].base + v] = ranks[si][v];
            num_colors_ = std::max(num_colors_, ranks[si][v] + 1);
        }
}

void VertexRefiner::individualize(int slot, int vertex) {
    colors_[slots_[slot].base + vertex] = num_colors_++;
}

void VertexRefiner::individualize_both(int u, int v) {
    assert(slots_.size() == 2);
    int fresh = num_colors_++;
    colors_[slots_[0].base + u] = fresh;
    colors_[slots_[1].base + v] = fresh;
}

bool VertexRefiner::palettes_equal() const {
    if (slots_.size() < 2) return true;
    std::vector<long long> h0(num_colors_, 0), h1(num_colors_, 0);
    for (int v = 0; v < slots_[0].n; ++v) ++h0[colors_[slots_[0].base + v]];
    for (int v = 0; v < slots_[1].n; ++v) ++h1[colors_[slots_[1].base + v]];
    return h0 == h1;
}

int VertexRefiner::refine(bool stop_on_palette_diff) {
    int changed = 0;
    if (stop_on_palette_diff && !palettes_equal()) return changed;
    while (refine_round()) {
        ++changed;
        ++rounds_total_;
        if (stop_on_palette_diff && !palettes_equal()) break;
    }
    return changed;
}

bool VertexRefiner::refine_round() {
    const std::size_t total = colors_.size();
    if (total == 0) return false;
    std::vector<std::vector<int>> sig(total);
    for (std::size_t si = 0; si < slots_.size(); ++si) {
        const Slot& s = slots_[si];
        for (int v = 0; v < s.n; ++v) {
            auto& row = sig[s.base + v];
            row.push_back(colors_[s.base + v]);
            for (int w : s.g->neighbors(v)) row.push_back(colors_[s.base + w]);
            std::sort(row.begin() + 1, row.end());
        }
    }
    std::vector<std::uint32_t> order(total);
    for (std::size_t i = 0; i < total; ++i) order[i] = static_cast<std::uint32_t>(i);
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return sig[a] < sig[b]; });
    std::vector<int> next(total);
    int id = 0;
    next[order[0]] = 0;
    for (std::size_t i = 1; i < total; ++i) {
        if (sig[order[i - 1]] < sig[order[i]]) ++id;
        next[order[i]] = id;
    }
    if (next == colors_) return false;
    colors_ = std::move(next);
    num_colors_ = id + 1;
    return true;
}

std::vector<int> VertexRefiner::diagonal_colors(int slot) const {
    const Slot& s = slots_[slot];
    return {colors_.begin() + s.base, colors_.begin() + s.base + s.n};
}

}  // namespace wlkit::detail
