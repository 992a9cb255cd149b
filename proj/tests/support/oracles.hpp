#pragma once

// Test-only oracles, kept independent of the library's closed forms.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "hyptess/euclid.hpp"

namespace oracles {

using hyptess::euclid::Kind;

// Literal shift-and-copy construction: generation 0 is the alternating
// chain of height-2 trilaterals; generation n+1 places a triangle S on the
// green mid-point of the generation-n triangle with vertex 2^n - 1, copies
// it to a phantom Q shifted down by S's own height, and replicates the
// S-Q pattern with period twice S's height.
struct GenSet {
    std::set<int64_t> triangle_rows;
    std::set<int64_t> phantom_rows;
};

inline std::vector<GenSet> recursive_schedule(int max_gen, int64_t row_lo, int64_t row_hi) {
    std::vector<GenSet> gens(max_gen + 1);
    auto fill = [&](std::set<int64_t>& rows, int64_t base, int64_t period) {
        int64_t k = (row_lo - base) / period - 2;
        for (int64_t v = base + k * period; v <= row_hi; v += period)
            if (v >= row_lo) rows.insert(v);
    };
    fill(gens[0].triangle_rows, 0, 4);
    fill(gens[0].phantom_rows, 2, 4);
    for (int n = 0; n < max_gen; ++n) {
        int64_t h_n = int64_t{1} << (n + 1);
        int64_t seed_triangle = (int64_t{1} << n) - 1;       // generation-n triangle, k = 0
        int64_t s_vertex = seed_triangle + h_n / 2;          // vertex on its green mid-point
        int64_t h_s = 2 * h_n;                               // legs parallel, doubled height
        int64_t q_vertex = s_vertex + h_s;                   // phantom copy of S
        int64_t period = (q_vertex + h_s) - s_vertex;        // vertex of S to mid-basis of Q
        fill(gens[n + 1].triangle_rows, s_vertex, period);
        fill(gens[n + 1].phantom_rows, q_vertex, period);
    }
    return gens;
}

// Exact 2-d segment intersection on integer coordinates.
struct P {
    int64_t x, y;
};

inline int64_t cross(P o, P a, P b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline bool on_segment(P p, P a, P b) {
    if (cross(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// True if the open interiors of the two segments share a point.
inline bool interiors_cross(P a, P b, P c, P d) {
    int64_t d1 = cross(c, d, a), d2 = cross(c, d, b);
    int64_t d3 = cross(a, b, c), d4 = cross(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    // collinear overlap longer than a point also counts
    if (d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0) {
        bool by_x = std::abs(b.x - a.x) >= std::abs(b.y - a.y);
        auto par = [&](P p) { return by_x ? p.x : p.y; };
        auto lo1 = std::min(par(a), par(b)), hi1 = std::max(par(a), par(b));
        auto lo2 = std::min(par(c), par(d)), hi2 = std::max(par(c), par(d));
        return std::max(lo1, lo2) < std::min(hi1, hi2);
    }
    return false;
}

struct Segments {
    P left_a, left_b;    // left leg, vertex to basis corner
    P right_a, right_b;  // right leg
    P basis_a, basis_b;  // basis corners
};

inline Segments segments_of(const hyptess::euclid::Trilateral& t) {
    int64_t v = t.vertex_row, h = t.height_rows;
    Segments s;
    s.left_a = {0, v};
    s.left_b = {-h, v + h};
    s.right_a = {0, v};
    s.right_b = {h, v + h};
    s.basis_a = {-h, v + h};
    s.basis_b = {h, v + h};
    return s;
}

// Rows where a leg of `a` passes through the open basis segment of `b`,
// by explicit geometry: intersect both legs with the basis interior.
inline std::set<int64_t> leg_basis_crossing_rows(const hyptess::euclid::Trilateral& a,
                                                 const hyptess::euclid::Trilateral& b) {
    std::set<int64_t> rows;
    auto sa = segments_of(a), sb = segments_of(b);
    for (auto [la, lb] : {std::pair{sa.left_a, sa.left_b}, std::pair{sa.right_a, sa.right_b}})
        if (interiors_cross(la, lb, sb.basis_a, sb.basis_b)) rows.insert(b.basis_row());
    return rows;
}

}  // namespace oracles
