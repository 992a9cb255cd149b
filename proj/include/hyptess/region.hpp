#pragma once

// Finite, materialized regions of the heptagrid. A region is a stack of
// per-level lateral runs (each run contiguous on its level ring, listed
// left to right), which keeps every region isocline-convex by construction.
//
// Two builders:
//   subtree(root, depth)        - all descendants of root down to depth
//   column(root, depth, width)  - a lateral window of +-width tiles around
//                                 the son-0 chain of root, per level
// Subtree slices grow like 2.6^depth, so deep regions are only feasible as
// columns.

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "hyptess/grid.hpp"

namespace hyptess {

class Region {
public:
    static Region subtree(const grid::CellAddr& root, int depth, int64_t budget = 4'000'000) {
        int64_t total = 0;
        for (int d = 0; d <= depth; ++d) {
            total += grid::subtree_slice_size(grid::status(root), d);
            if (total > budget) throw std::runtime_error("Region::subtree exceeds budget");
        }
        Region r;
        r.root_ = root;
        for (int d = 0; d <= depth; ++d) r.push_level(grid::subtree_slice(root, d, budget));
        return r;
    }

    static Region column(const grid::CellAddr& root, int depth, int halfwidth,
                         int64_t budget = 4'000'000) {
        if (int64_t(depth + 1) * (2 * halfwidth + 1) > budget)
            throw std::runtime_error("Region::column exceeds budget");
        Region r;
        r.root_ = root;
        grid::CellAddr center = root;
        for (int d = 0; d <= depth; ++d) {
            std::vector<grid::CellAddr> run;
            grid::CellAddr t = center;
            for (int i = 0; i < halfwidth; ++i) t = grid::left_of(t);
            for (int i = 0; i < 2 * halfwidth + 1; ++i) {
                run.push_back(t);
                t = grid::right_of(t);
            }
            r.push_level(std::move(run));
            if (d < depth) center = grid::son(center, 0);
        }
        return r;
    }

    const grid::CellAddr& root() const { return root_; }
    int depth() const { return static_cast<int>(levels_.size()) - 1; }
    int64_t size() const { return count_; }
    const std::vector<std::vector<grid::CellAddr>>& levels() const { return levels_; }
    const std::vector<grid::CellAddr>& level(int rel) const { return levels_.at(rel); }

    bool contains(const grid::CellAddr& a) const { return index_.count(a) > 0; }

    // (relative level, position in the run)
    std::pair<int, int> locate(const grid::CellAddr& a) const {
        auto it = index_.find(a);
        if (it == index_.end()) throw std::out_of_range("Region::locate: tile not in region");
        return it->second;
    }

    int rel_level(const grid::CellAddr& a) const { return locate(a).first; }
    int abs_level(int rel) const { return root_.depth() + rel; }
    int abs_level_of(const grid::CellAddr& a) const { return a.depth(); }

    // distance to the run ends on the tile's own level
    int lateral_margin(const grid::CellAddr& a) const {
        auto [lvl, pos] = locate(a);
        return std::min<int>(pos, static_cast<int>(levels_[lvl].size()) - 1 - pos);
    }

    template <typename F>
    void for_each(F&& f) const {
        for (const auto& run : levels_)
            for (const auto& t : run) f(t);
    }

private:
    void push_level(std::vector<grid::CellAddr> run) {
        int lvl = static_cast<int>(levels_.size());
        for (int i = 0; i < static_cast<int>(run.size()); ++i) index_[run[i]] = {lvl, i};
        count_ += static_cast<int64_t>(run.size());
        levels_.push_back(std::move(run));
    }

    grid::CellAddr root_;
    std::vector<std::vector<grid::CellAddr>> levels_;
    std::unordered_map<grid::CellAddr, std::pair<int, int>, grid::AddrHash> index_;
    int64_t count_ = 0;
};

}  // namespace hyptess
