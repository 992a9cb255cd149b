#pragma once

// Seed field and activation cascade. A seed may root trilaterals; by
// default the seeds are the black tiles on isoclines divisible by 5.
// Every seed on an isocline 0 (absolute level divisible by 20) is active;
// an active seed spreads a scent through its subtree down five levels, and
// a seed met exactly five levels below becomes active in turn. On any
// other tile the scent dies.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyptess/grid.hpp"
#include "hyptess/region.hpp"

namespace hyptess::seeds {

inline constexpr int kScentDepth = 5;

struct SeedField {
    std::string name;
    std::function<bool(const grid::CellAddr&)> pred;

    bool operator()(const grid::CellAddr& a) const { return pred(a); }

    // black tiles on isoclines 0, 5, 10 and 15
    static SeedField default_field() {
        return {"default", [](const grid::CellAddr& a) {
                    return !a.is_central() && a.depth() % 5 == 0 &&
                           grid::status(a) == grid::Status::black;
                }};
    }

    // black tiles on one isocline only (adversarial: the cascade cannot
    // start unless iso == 0, and cannot continue unless iso recurs mod 5)
    static SeedField isocline_only(int iso) {
        return {"iso" + std::to_string(iso), [iso](const grid::CellAddr& a) {
                    return !a.is_central() && a.depth() % 20 == iso &&
                           grid::status(a) == grid::Status::black;
                }};
    }

    static SeedField from_list(std::set<grid::CellAddr> list) {
        auto shared = std::make_shared<std::set<grid::CellAddr>>(std::move(list));
        return {"file", [shared](const grid::CellAddr& a) { return shared->count(a) > 0; }};
    }
};

inline bool is_seed(const SeedField& field, const grid::CellAddr& a) {
    if (!grid::valid(a)) throw std::invalid_argument("is_seed: invalid address");
    return field(a);
}

struct ActivationState {
    std::set<grid::CellAddr> active;
    // scent-covered cell -> the active seed whose scent reached it
    std::map<grid::CellAddr, grid::CellAddr> scent;
};

// Deterministic fixpoint of the activation cascade inside the region.
inline ActivationState activate(const Region& region, const SeedField& field) {
    ActivationState st;
    std::queue<grid::CellAddr> work;
    region.for_each([&](const grid::CellAddr& t) {
        if (t.is_central()) throw std::invalid_argument("activate: central cell in region");
        if (t.depth() % 20 == 0 && field(t) && st.active.insert(t).second) work.push(t);
    });
    while (!work.empty()) {
        grid::CellAddr s = work.front();
        work.pop();
        // walk the subtree of s inside the region, five levels deep
        std::vector<grid::CellAddr> frontier{s};
        for (int d = 1; d <= kScentDepth && !frontier.empty(); ++d) {
            std::vector<grid::CellAddr> next;
            for (const auto& t : frontier) {
                int sc = grid::son_count(grid::status(t));
                for (int i = 0; i < sc; ++i) {
                    grid::CellAddr u = grid::son(t, i);
                    if (!region.contains(u)) continue;
                    st.scent.emplace(u, s);
                    next.push_back(u);
                    if (d == kScentDepth && field(u) && st.active.insert(u).second) work.push(u);
                }
            }
            frontier = std::move(next);
        }
    }
    return st;
}

struct DensityReport {
    std::vector<grid::CellAddr> violations;  // interior tiles with no active seed within 20
    int64_t interior_count = 0;
};

// Multi-source BFS from the active seeds, restricted to the region. The
// interior margins bound which tiles can claim a full radius-20 ball: the
// reported distances are region-restricted upper bounds, so a pass is
// sound for the true (whole-plane) distance.
inline DensityReport density_check(const Region& region, const ActivationState& act,
                                   int radius = 20, int top_margin = 1, int bottom_margin = 1,
                                   int lateral_margin = 12) {
    // dense ids
    std::vector<grid::CellAddr> tiles;
    tiles.reserve(static_cast<size_t>(region.size()));
    region.for_each([&](const grid::CellAddr& t) { tiles.push_back(t); });
    std::unordered_map<grid::CellAddr, int, grid::AddrHash> id;
    for (int i = 0; i < static_cast<int>(tiles.size()); ++i) id[tiles[i]] = i;

    std::vector<int> dist(tiles.size(), -1);
    std::queue<int> q;
    for (const auto& s : act.active) {
        auto it = id.find(s);
        if (it == id.end()) continue;
        dist[it->second] = 0;
        q.push(it->second);
    }
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (dist[u] >= radius) continue;
        for (const auto& n : grid::neighbors(tiles[u])) {
            auto it = id.find(n);
            if (it != id.end() && dist[it->second] < 0) {
                dist[it->second] = dist[u] + 1;
                q.push(it->second);
            }
        }
    }

    DensityReport rep;
    int depth = region.depth();
    for (int i = 0; i < static_cast<int>(tiles.size()); ++i) {
        auto [lvl, pos] = region.locate(tiles[i]);
        (void)pos;
        if (lvl < top_margin || lvl > depth - bottom_margin) continue;
        if (region.lateral_margin(tiles[i]) < lateral_margin) continue;
        ++rep.interior_count;
        if (dist[i] < 0 || dist[i] > radius) rep.violations.push_back(tiles[i]);
    }
    return rep;
}

}  // namespace hyptess::seeds
