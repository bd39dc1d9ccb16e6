#pragma once

// Joint color refinement over one or two graphs with a shared signature
// dictionary. The pair (2-WL) variant is the workhorse: it backs the
// public wl2/distinguish operations, the coherent closure, and the
// pruning refiner of the automorphism/isomorphism search (which needs
// copyable state, incremental individualization and warm restarts).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <vector>

#include "wlkit/graph.hpp"

namespace wlkit::detail {

// Dense ranks of the vertex colors over all slots together.
std::vector<std::vector<int>> joint_color_ranks(const std::vector<const Graph*>& graphs);

class PairRefiner {
public:
    explicit PairRefiner(const Graph& a);
    PairRefiner(const Graph& a, const Graph& b);

    int slots() const { return static_cast<int>(slots_.size()); }
    int slot_size(int s) const { return slots_[s].n; }

    // Gives the loops (u,u) and (v,v) one shared fresh color; the next
    // refine() re-canonicalizes ids. Both calls below leave the
    // coloring dense.
    void individualize_both(int u, int v);
    void individualize(int slot, int vertex);

    // Refines until stable; returns the number of rounds that changed
    // the partition. When stop_on_palette_diff, returns early once the
    // per-slot palettes differ.
    int refine(bool stop_on_palette_diff = false);

    bool palettes_equal() const;
    int palette_diff_round() const { return palette_diff_round_; }

    int num_colors() const { return num_colors_; }
    int color(int slot, int u, int v) const {
        return colors_[slots_[slot].base + static_cast<std::size_t>(u) * slots_[slot].n + v];
    }
    std::vector<int> diagonal_colors(int slot) const;

private:
    struct Slot {
        const Graph* g;
        int n;
        std::size_t base;   // offset into colors_
        std::size_t pairs;  // n*n
    };

    void init(const std::vector<const Graph*>& graphs);
    bool refine_round();

    std::vector<Slot> slots_;
    std::vector<int> colors_;
    int num_colors_ = 0;
    int palette_diff_round_ = -1;
    int rounds_total_ = 0;

public:
    int rounds_total() const { return rounds_total_; }
};

// 1-WL analogue with the same interface subset; fallback refiner for
// graphs too large for quadratic state.
class VertexRefiner {
public:
    explicit VertexRefiner(const Graph& a);
    VertexRefiner(const Graph& a, const Graph& b);

    void individualize_both(int u, int v);
    void individualize(int slot, int vertex);
    int refine(bool stop_on_palette_diff = false);
    bool palettes_equal() const;
    int num_colors() const { return num_colors_; }
    std::vector<int> diagonal_colors(int slot) const;  // the vertex colors
    int rounds_total() const { return rounds_total_; }

private:
    struct Slot {
        const Graph* g;
        int n;
        std::size_t base;
    };
    void init(const std::vector<const Graph*>& graphs);
    bool refine_round();

    std::vector<Slot> slots_;
    std::vector<int> colors_;
    int num_colors_ = 0;
    int rounds_total_ = 0;
};

}  // namespace wlkit::detail
