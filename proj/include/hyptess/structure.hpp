#pragma once

// Interwoven triangles instantiated on the heptagrid. An active seed whose
// level is 5*r roots the unique trilateral the row schedule places at row r,
// provided the full row span fits the region. Legs run on the leftmost and
// rightmost branches of the vertex's subtree, bases and green lines on
// subtree slices (one row = five levels).

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "hyptess/euclid.hpp"
#include "hyptess/grid.hpp"
#include "hyptess/region.hpp"
#include "hyptess/seeds.hpp"

namespace hyptess::hyp {

struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HypTrilateral {
    int generation = 0;
    euclid::Kind kind = euclid::Kind::triangle;
    grid::CellAddr vertex;
    std::vector<grid::CellAddr> left_leg, right_leg;  // vertex level .. basis level

    euclid::Color color() const { return euclid::color_of_generation(generation); }
    int64_t vertex_row() const { return vertex.depth() / 5; }
    int height_levels() const { return 10 << generation; }
    int vertex_level() const { return vertex.depth(); }
    int basis_level() const { return vertex_level() + height_levels(); }
    int green_level() const { return vertex_level() + height_levels() / 2; }
    int basis_isocline() const { return basis_level() % grid::kIsoclines; }
    bool has_green() const { return kind == euclid::Kind::phantom || generation >= 1; }

    euclid::Trilateral projected() const { return euclid::trilateral_at_row(vertex_row()); }

    std::vector<grid::CellAddr> basis_tiles(int64_t budget = 4'000'000) const {
        return grid::subtree_slice(vertex, height_levels(), budget);
    }
    std::vector<grid::CellAddr> green_tiles(int64_t budget = 4'000'000) const {
        if (!has_green()) throw std::logic_error("generation-0 triangles carry no green line");
        return grid::subtree_slice(vertex, height_levels() / 2, budget);
    }
};

struct HypStructure {
    std::vector<HypTrilateral> trilaterals;  // sorted by (generation, vertex)

    const HypTrilateral* at_vertex(const grid::CellAddr& v, int generation) const {
        for (const auto& t : trilaterals)
            if (t.generation == generation && t.vertex == v) return &t;
        return nullptr;
    }
};

inline HypStructure build(const Region& region, const seeds::ActivationState& act, int max_gen) {
    if (max_gen < 0) throw std::invalid_argument("build: max_gen must be non-negative");
    HypStructure s;
    int top = region.root().depth();
    int bottom = top + region.depth();
    bool max_gen_built = false;
    for (const auto& seed : act.active) {
        int level = seed.depth();
        if (level % 5 != 0) continue;
        auto sched = euclid::schedule_at_row(level / 5);
        if (!sched) continue;
        auto [gen, kind] = *sched;
        if (gen > max_gen) continue;
        HypTrilateral t;
        t.generation = gen;
        t.kind = kind;
        t.vertex = seed;
        if (level + t.height_levels() > bottom) continue;
        t.left_leg.reserve(t.height_levels() + 1);
        t.right_leg.reserve(t.height_levels() + 1);
        grid::CellAddr l = seed, r = seed;
        t.left_leg.push_back(l);
        t.right_leg.push_back(r);
        for (int i = 0; i < t.height_levels(); ++i) {
            l = grid::son(l, 0);
            r = grid::last_son(r);
            t.left_leg.push_back(l);
            t.right_leg.push_back(r);
        }
        if (gen == max_gen) max_gen_built = true;
        s.trilaterals.push_back(std::move(t));
    }
    if (!max_gen_built)
        throw CapacityError("region too shallow: no generation-" + std::to_string(max_gen) +
                            " trilateral fits");
    std::sort(s.trilaterals.begin(), s.trilaterals.end(),
              [](const HypTrilateral& a, const HypTrilateral& b) {
                  if (a.generation != b.generation) return a.generation < b.generation;
                  return a.vertex < b.vertex;
              });
    return s;
}

inline std::vector<euclid::Trilateral> project_rows(const HypStructure& s) {
    std::vector<euclid::Trilateral> out;
    out.reserve(s.trilaterals.size());
    for (const auto& t : s.trilaterals) {
        auto e = t.projected();
        if (e.generation != t.generation || e.kind != t.kind)
            throw std::logic_error("projection disagrees with the row schedule");
        out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Maximal laterally-contiguous runs of green-carrying tiles on one absolute
// level. Tower phantoms pass the green through (their slices merge into the
// enclosing triangle's slice); a triangle's slice ends at its leg tiles.
inline std::vector<std::vector<grid::CellAddr>> green_signal(const HypStructure& s, int abs_level,
                                                             int64_t budget = 4'000'000) {
    std::set<grid::CellAddr> covered;
    for (const auto& t : s.trilaterals) {
        if (!t.has_green() || t.green_level() != abs_level) continue;
        for (auto& tile : t.green_tiles(budget)) covered.insert(std::move(tile));
    }
    std::vector<std::vector<grid::CellAddr>> segments;
    for (const auto& tile : covered) {
        if (!segments.empty() && grid::right_of(segments.back().back()) == tile)
            segments.back().push_back(tile);
        else
            segments.push_back({tile});
    }
    return segments;
}

}  // namespace hyptess::hyp
