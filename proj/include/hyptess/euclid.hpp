#pragma once

// Exact integer model of the interwoven triangles on a single axis.
//
// All trilaterals are coaxial isosceles triangles with unit-slope legs.
// Rows are the discrete vertical unit (one row = 5 isoclines in the
// hyperbolic instantiation); a trilateral of generation n is 2^(n+1) rows
// tall. Writing v+1 = 2^n * m with m odd, the trilateral whose vertex sits
// on row v has generation n, and is a triangle when m = 1 (mod 4), a
// phantom when m = 3 (mod 4). Closed form per generation:
//   triangle vertex rows:  (2^n - 1) + k * 2^(n+2)
//   phantom vertex rows:   triangle row + 2^(n+1)

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hyptess::euclid {

enum class Kind : uint8_t { triangle, phantom };
enum class Color : uint8_t { blue0, blue, red };

inline Color color_of_generation(int generation) {
    if (generation == 0) return Color::blue0;
    return (generation % 2 == 1) ? Color::red : Color::blue;
}

// Red is opposite to both blues: blue0 and blue form one blocking family.
inline bool same_family(Color a, Color b) {
    bool ra = a == Color::red, rb = b == Color::red;
    return ra == rb;
}

struct Trilateral {
    int generation = 0;
    Kind kind = Kind::triangle;
    int64_t index = 0;
    int64_t vertex_row = 0;
    int64_t height_rows = 2;

    Color color() const { return color_of_generation(generation); }
    int64_t basis_row() const { return vertex_row + height_rows; }
    int64_t green_row() const { return vertex_row + height_rows / 2; }
    // legs have unit slope, so the half-width at row r is r - vertex_row
    int64_t half_width_at(int64_t row) const { return row - vertex_row; }

    friend bool operator==(const Trilateral&, const Trilateral&) = default;
    friend auto operator<=>(const Trilateral& a, const Trilateral& b) {
        if (auto c = a.generation <=> b.generation; c != 0) return c;
        if (auto c = a.vertex_row <=> b.vertex_row; c != 0) return c;
        return a.kind <=> b.kind;
    }
};

struct RowWindow {
    int64_t start_row = 0;
    int64_t end_row = 0;  // half-open as a row set
    int max_generation = 0;
};

inline int64_t pow2(int e) { return int64_t{1} << e; }

inline Trilateral trilateral(int generation, Kind kind, int64_t index) {
    if (generation < 0) throw std::invalid_argument("generation must be non-negative");
    Trilateral t;
    t.generation = generation;
    t.kind = kind;
    t.index = index;
    t.height_rows = pow2(generation + 1);
    t.vertex_row = (pow2(generation) - 1) + index * pow2(generation + 2);
    if (kind == Kind::phantom) t.vertex_row += pow2(generation + 1);
    return t;
}

// The unique (generation, kind) the schedule places at a vertex row, from
// the 2-adic valuation of row+1. Row -1 is the only row hosting nothing.
inline std::optional<std::pair<int, Kind>> schedule_at_row(int64_t row) {
    int64_t m = row + 1;
    if (m == 0) return std::nullopt;
    int n = 0;
    while (m % 2 == 0) {
        m /= 2;
        ++n;
    }
    int64_t r4 = ((m % 4) + 4) % 4;
    return std::make_pair(n, r4 == 1 ? Kind::triangle : Kind::phantom);
}

inline Trilateral trilateral_at_row(int64_t vertex_row) {
    auto sk = schedule_at_row(vertex_row);
    if (!sk) throw std::invalid_argument("no trilateral has vertex row -1");
    auto [gen, kind] = *sk;
    int64_t base = (pow2(gen) - 1) + (kind == Kind::phantom ? pow2(gen + 1) : 0);
    int64_t k = (vertex_row - base) / pow2(gen + 2);
    return trilateral(gen, kind, k);
}

// Trilaterals of generation <= max_generation whose closed row span
// [vertex_row, basis_row] intersects the closed window [start_row, end_row];
// sorted by (generation, vertex_row).
inline int64_t floor_div(int64_t a, int64_t b) {
    int64_t q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline std::vector<Trilateral> enumerate(const RowWindow& w) {
    if (w.start_row >= w.end_row) return {};
    std::vector<Trilateral> out;
    for (int g = 0; g <= w.max_generation; ++g) {
        int64_t period = pow2(g + 2), h = pow2(g + 1);
        for (Kind kind : {Kind::triangle, Kind::phantom}) {
            int64_t base = (pow2(g) - 1) + (kind == Kind::phantom ? h : 0);
            // v <= end && v + h >= start
            int64_t klo = floor_div(w.start_row - h - base, period) - 1;
            int64_t khi = floor_div(w.end_row - base, period) + 1;
            for (int64_t k = klo; k <= khi; ++k) {
                int64_t v = base + k * period;
                if (v <= w.end_row && v + h >= w.start_row) out.push_back(trilateral(g, kind, k));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Row where a leg of `a` crosses the open basis segment of `b`, if any.
// This happens exactly when b.vertex < a.vertex and
// a.vertex < b.basis < a.basis.
inline std::optional<int64_t> leg_crosses_basis(const Trilateral& a, const Trilateral& b) {
    if (a == b) throw std::invalid_argument("leg_crosses_basis: identical trilaterals");
    if (b.vertex_row < a.vertex_row && a.vertex_row < b.basis_row() &&
        b.basis_row() < a.basis_row())
        return b.basis_row();
    return std::nullopt;
}

inline bool strictly_inside(const Trilateral& inner, const Trilateral& outer) {
    return inner.vertex_row > outer.vertex_row && inner.basis_row() < outer.basis_row();
}

// Rows strictly between vertex and basis of a triangle that meet no
// same-family triangle strictly inside it (meeting a vertex or basis row
// also blocks). Phantoms never block.
inline std::vector<int64_t> free_rows(const Trilateral& t) {
    if (t.kind != Kind::triangle) throw std::invalid_argument("free rows are defined for triangles");
    std::vector<bool> blocked(static_cast<size_t>(t.height_rows + 1), false);
    for (int g = t.generation - 2; g >= 0; g -= 2) {
        int64_t period = pow2(g + 2);
        int64_t base = pow2(g) - 1;
        for (int64_t v = base + (floor_div(t.vertex_row - base, period) - 1) * period;
             v <= t.basis_row(); v += period) {
            Trilateral u = trilateral_at_row(v);
            if (u.kind != Kind::triangle) continue;
            if (!strictly_inside(u, t)) continue;
            for (int64_t r = u.vertex_row; r <= u.basis_row(); ++r)
                blocked[static_cast<size_t>(r - t.vertex_row)] = true;
        }
    }
    std::vector<int64_t> rows;
    for (int64_t r = t.vertex_row + 1; r < t.basis_row(); ++r)
        if (!blocked[static_cast<size_t>(r - t.vertex_row)]) rows.push_back(r);
    return rows;
}

struct Tower {
    int64_t green_row = 0;
    std::vector<int> generations;  // ascending
};

// Phantoms grouped by green row. The tower on green row g contains the
// phantom generations {0, ..., val2(g+1) - 2}.
inline std::vector<Tower> towers(const RowWindow& w) {
    std::map<int64_t, Tower> by_row;
    for (const auto& t : enumerate(w)) {
        if (t.kind != Kind::phantom) continue;
        auto& tw = by_row[t.green_row()];
        tw.green_row = t.green_row();
        tw.generations.push_back(t.generation);
    }
    std::vector<Tower> out;
    for (auto& [row, tw] : by_row) {
        std::sort(tw.generations.begin(), tw.generations.end());
        out.push_back(std::move(tw));
    }
    return out;
}

}  // namespace hyptess::euclid
