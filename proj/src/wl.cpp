#include "wlkit/wl.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>

#include "refiner.hpp"
#include "wlkit/parallel.hpp"

namespace wlkit {

BudgetError::BudgetError(std::size_t required, std::size_t available)
    : std::runtime_error("memory budget exceeded: required " + std::to_string(required) +
                         " bytes, available " + std::to_string(available)),
      required_bytes(required),
      available_bytes(available) {}

namespace {
std::atomic<std::size_t> g_budget{std::size_t{2} << 30};  // 2 GiB
}

void set_memory_budget(std::size_t bytes) { g_budget.store(bytes); }
std::size_t memory_budget() { return g_budget.load(); }

std::size_t TupleColoring::index(const std::vector<int>& tuple) const {
    std::size_t idx = 0;
    for (int v : tuple) idx = idx * n + v;
    return idx;
}

VertexColoring wl1(const Graph& g) {
    detail::VertexRefiner refiner(g);
    int rounds = refiner.refine();
    VertexColoring out;
    out.n = g.vertex_count();
    out.color = refiner.diagonal_colors(0);
    out.num_colors = refiner.num_colors();
    out.rounds = rounds;
    return out;
}

PairColoring wl2(const Graph& g) {
    detail::PairRefiner refiner(g);
    int rounds = refiner.refine();
    PairColoring out;
    out.n = g.vertex_count();
    out.color.resize(static_cast<std::size_t>(out.n) * out.n);
    for (int u = 0; u < out.n; ++u)
        for (int v = 0; v < out.n; ++v)
            out.color[static_cast<std::size_t>(u) * out.n + v] = refiner.color(0, u, v);
    out.num_colors = refiner.num_colors();
    out.rounds = rounds;
    return out;
}

Graph individualize(const Graph& g, int u) {
    if (u < 0 || u >= g.vertex_count()) throw std::out_of_range("vertex out of range");
    int fresh = 0;
    for (int c : g.vertex_colors()) fresh = std::max(fresh, c + 1);
    return g.with_vertex_color(u, fresh);
}

namespace {

// k-WL kernel over the tuple spaces of one or two graphs, refined in
// lockstep with one dictionary. Signature rows are fixed width, so
// canonical renaming is a plain index sort.
class TupleKernel {
public:
    TupleKernel(std::vector<const Graph*> graphs, int k) : graphs_(std::move(graphs)), k_(k) {
        if (k_ < 2) throw std::invalid_argument("k-WL needs k >= 2");
        check_budget();
        std::size_t base = 0;
        for (const Graph* g : graphs_) {
            Slot s;
            s.g = g;
            s.n = g->vertex_count();
            s.tuples = 1;
            for (int i = 0; i < k_; ++i) s.tuples *= static_cast<std::size_t>(s.n);
            s.base = base;
            base += s.tuples;
            slots_.push_back(s);
        }
        total_ = base;
        colors_.assign(total_, 0);
        assign_initial_colors();
    }

    // Refines to the stable coloring; with early_palette_check, stops as
    // soon as the palettes differ and records the round.
    void run(bool early_palette_check) {
        if (early_palette_check && !palettes_equal()) {
            palette_diff_round_ = 0;
            return;
        }
        while (refine_round()) {
            ++rounds_;
            if (early_palette_check && !palettes_equal()) {
                palette_diff_round_ = rounds_;
                return;
            }
        }
        stable_ = true;
    }

    bool palettes_equal() const {
        if (slots_.size() < 2) return true;
        std::vector<long long> h0(num_colors_, 0), h1(num_colors_, 0);
        for (std::size_t i = 0; i < slots_[0].tuples; ++i) ++h0[colors_[i]];
        for (std::size_t i = 0; i < slots_[1].tuples; ++i) ++h1[colors_[slots_[1].base + i]];
        return h0 == h1;
    }

    int rounds() const { return rounds_; }
    bool stable() const { return stable_; }
    int palette_diff_round() const { return palette_diff_round_; }
    int num_colors() const { return num_colors_; }
    std::vector<int> take_colors(int slot) {
        auto begin = colors_.begin() + slots_[slot].base;
        return {begin, begin + static_cast<std::ptrdiff_t>(slots_[slot].tuples)};
    }

private:
    struct Slot {
        const Graph* g;
        int n;
        std::size_t tuples;
        std::size_t base;
    };

    void check_budget() {
        long double tuples = 0;
        int n_max = 0;
        for (const Graph* g : graphs_) {
            long double t = 1;
            for (int i = 0; i < k_; ++i) t *= g->vertex_count();
            tuples += t;
            n_max = std::max(n_max, g->vertex_count());
        }
        // colors + next + order + signature rows
        long double row_bytes = 4.0L * (1 + static_cast<long double>(n_max) * k_);
        long double required = tuples * (4 + 4 + 8 + row_bytes);
        std::size_t available = memory_budget();
        if (required > static_cast<long double>(available))
            throw BudgetError(static_cast<std::size_t>(std::min<long double>(
                                  required, static_cast<long double>(SIZE_MAX))),
                              available);
    }

    void decode(const Slot& s, std::size_t idx, int* digits) const {
        for (int i = k_ - 1; i >= 0; --i) {
            digits[i] = static_cast<int>(idx % s.n);
            idx /= s.n;
        }
    }

    // Initial color: equality pattern (first occurrence per position),
    // ordered adjacency pattern, vertex colors.
    void assign_initial_colors() {
        auto ranks = detail::joint_color_ranks(graphs_);
        const int width = k_ + k_ * (k_ - 1) / 2 + k_;
        std::vector<int> rows(total_ * width);
        for (std::size_t si = 0; si < slots_.size(); ++si) {
            const Slot& s = slots_[si];
            AdjacencyBits bits(*s.g);
            const std::vector<int>& rank = ranks[si];
            parallel_for(s.tuples, [&, width](std::size_t lo, std::size_t hi) {
                std::vector<int> digits(k_);
                for (std::size_t t = lo; t < hi; ++t) {
                    decode(s, t, digits.data());
                    int* row = rows.data() + (s.base + t) * width;
                    int pos = 0;
                    for (int i = 0; i < k_; ++i) {
                        int first = i;
                        for (int j = 0; j < i; ++j)
                            if (digits[j] == digits[i]) {
                                first = j;
                                break;
                            }
                        row[pos++] = first;
                    }
                    for (int i = 0; i < k_; ++i)
                        for (int j = i + 1; j < k_; ++j)
                            row[pos++] = bits.adjacent(digits[i], digits[j]) ? 1 : 0;
                    for (int i = 0; i < k_; ++i) row[pos++] = rank[digits[i]];
                }
            });
        }
        rename(rows, width);
    }

    bool refine_round() {
        const int width = 1 + n_max() * k_;
        std::vector<int> rows(total_ * width);
        for (std::size_t si = 0; si < slots_.size(); ++si) {
            const Slot& s = slots_[si];
            // strides[i]: index delta when position i changes by one
            std::vector<std::size_t> strides(k_, 1);
            for (int i = k_ - 2; i >= 0; --i) strides[i] = strides[i + 1] * s.n;
            parallel_for(s.tuples, [&, width](std::size_t lo, std::size_t hi) {
                std::vector<int> digits(k_);
                std::vector<int> entries(static_cast<std::size_t>(s.n) * k_);
                std::vector<int> order(s.n);
                for (std::size_t t = lo; t < hi; ++t) {
                    decode(s, t, digits.data());
                    for (int w = 0; w < s.n; ++w) {
                        int* e = entries.data() + static_cast<std::size_t>(w) * k_;
                        for (int i = 0; i < k_; ++i) {
                            std::size_t sub = s.base + t +
                                              (static_cast<std::size_t>(w) - digits[i]) * strides[i];
                            e[i] = colors_[sub];
                        }
                    }
                    std::iota(order.begin(), order.end(), 0);
                    std::sort(order.begin(), order.end(), [&](int a, int b) {
                        const int* ea = entries.data() + static_cast<std::size_t>(a) * k_;
                        const int* eb = entries.data() + static_cast<std::size_t>(b) * k_;
                        return std::lexicographical_compare(ea, ea + k_, eb, eb + k_);
                    });
                    int* row = rows.data() + (s.base + t) * width;
                    row[0] = colors_[s.base + t];
                    int pos = 1;
                    for (int w : order) {
                        const int* e = entries.data() + static_cast<std::size_t>(w) * k_;
                        for (int i = 0; i < k_; ++i) row[pos++] = e[i];
                    }
                    // Smaller graph in joint mode: pad to shared width.
                    for (; pos < width; ++pos) row[pos] = -1;
                }
            });
        }
        std::vector<int> previous = colors_;
        rename(rows, width);
        return colors_ != previous;
    }

    void rename(const std::vector<int>& rows, int width) {
        std::vector<std::uint32_t> order(total_);
        std::iota(order.begin(), order.end(), 0);
        auto cmp = [&](std::uint32_t a, std::uint32_t b) {
            const int* ra = rows.data() + static_cast<std::size_t>(a) * width;
            const int* rb = rows.data() + static_cast<std::size_t>(b) * width;
            return std::lexicographical_compare(ra, ra + width, rb, rb + width);
        };
        std::sort(order.begin(), order.end(), cmp);
        int id = 0;
        if (total_ > 0) colors_[order[0]] = 0;
        for (std::size_t i = 1; i < total_; ++i) {
            if (cmp(order[i - 1], order[i])) ++id;
            colors_[order[i]] = id;
        }
        num_colors_ = total_ > 0 ? id + 1 : 0;
    }

    int n_max() const {
        int m = 0;
        for (const Slot& s : slots_) m = std::max(m, s.n);
        return m;
    }

    std::vector<const Graph*> graphs_;
    int k_;
    std::vector<Slot> slots_;
    std::size_t total_ = 0;
    std::vector<int> colors_;
    int num_colors_ = 0;
    int rounds_ = 0;
    bool stable_ = false;
    int palette_diff_round_ = -1;
};

}  // namespace

TupleColoring wlk(const Graph& g, int k) {
    TupleKernel kernel({&g}, k);
    kernel.run(false);
    TupleColoring out;
    out.n = g.vertex_count();
    out.k = k;
    out.num_colors = kernel.num_colors();
    out.rounds = kernel.rounds();
    out.color = kernel.take_colors(0);
    return out;
}

DistinguishReport distinguish_report(const Graph& g, const Graph& h, int k) {
    if (k < 2) throw std::invalid_argument("distinguish needs k >= 2");
    DistinguishReport report;
    if (k == 2) {
        detail::PairRefiner refiner(g, h);
        refiner.refine(/*stop_on_palette_diff=*/true);
        report.distinguished = !refiner.palettes_equal();
        report.round = refiner.palette_diff_round();
        report.rounds_to_stable = refiner.rounds_total();
        return report;
    }
    TupleKernel kernel({&g, &h}, k);
    kernel.run(/*early_palette_check=*/true);
    report.distinguished = !kernel.palettes_equal();
    report.round = kernel.palette_diff_round();
    report.rounds_to_stable = kernel.rounds();
    return report;
}

bool distinguish(const Graph& g, const Graph& h, int k) {
    return distinguish_report(g, h, k).distinguished;
}

namespace {

// Initial color of a padded s-tuple, as a comparable row.
std::vector<int> atomic_row(const Graph& g, const AdjacencyBits& bits,
                            const std::vector<int>& tuple) {
    const int k = static_cast<int>(tuple.size());
    std::vector<int> row;
    row.reserve(k + k * (k - 1) / 2 + k);
    for (int i = 0; i < k; ++i) {
        int first = i;
        for (int j = 0; j < i; ++j)
            if (tuple[j] == tuple[i]) {
                first = j;
                break;
            }
        row.push_back(first);
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) row.push_back(bits.adjacent(tuple[i], tuple[j]) ? 1 : 0);
    for (int i = 0; i < k; ++i) row.push_back(g.vertex_color(tuple[i]));
    return row;
}

}  // namespace

bool is_wl_sk_regular(const Graph& g, int s, int k) {
    if (s < 1 || s > k) throw std::invalid_argument("need 1 <= s <= k");
    const int n = g.vertex_count();
    if (n == 0) return true;

    if (k == 1) {
        // Stable degree refinement must not split beyond the initial colors.
        VertexColoring stable = wl1(g);
        std::map<int, int> initial_to_final;
        for (int v = 0; v < n; ++v) {
            auto [it, inserted] = initial_to_final.emplace(g.vertex_color(v), stable.color[v]);
            if (!inserted && it->second != stable.color[v]) return false;
        }
        return true;
    }

    TupleColoring stable = wlk(g, k);
    AdjacencyBits bits(g);
    std::vector<int> tuple(k);
    std::map<std::vector<int>, int> initial_to_final;
    std::vector<int> stuple(s, 0);
    while (true) {
        for (int i = 0; i < s; ++i) tuple[i] = stuple[i];
        for (int i = s; i < k; ++i) tuple[i] = stuple[s - 1];
        int final_color = stable.at(tuple);
        auto row = atomic_row(g, bits, tuple);
        auto [it, inserted] = initial_to_final.emplace(std::move(row), final_color);
        if (!inserted && it->second != final_color) return false;
        int pos = s - 1;
        while (pos >= 0 && stuple[pos] == n - 1) stuple[pos--] = 0;
        if (pos < 0) break;
        ++stuple[pos];
    }
    return true;
}

}  // namespace wlkit
