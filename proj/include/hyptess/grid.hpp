#pragma once

// Fibonacci-tree coordinates for the ternary heptagrid {7,3}.
//
// The plane is covered by a central cell and 7 sectors, each spanned by a
// Fibonacci tree: black nodes have sons (black, white), white nodes have
// sons (black, white, white). Son 0 is always black, so black tiles are
// exactly the son-0 tiles; sector roots are white.
//
// Adjacency of a tile (7 edges):
//   white non-root: father, left, son0..son2, nephew, right
//   black:          father, uncle, left, son0, son1, nephew, right
//   root of sector k: central, root k-1, son0..son2, nephew, root k+1
// where nephew(t) = son0(right_of(t)) and uncle(t) = left_of(father(t)).
// The uncle/nephew edges are the two directions of the same edge family,
// which makes the graph 7-regular and symmetric. Edge index 0 is the
// father edge (sector-0 edge for the central cell); indices then proceed
// cyclically as listed above.

#include <algorithm>
#include <array>
#include <cstdint>
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyptess::grid {

inline constexpr int kSectors = 7;
inline constexpr int kIsoclines = 20;

enum class Status : uint8_t { black, white };

struct CellAddr {
    // sector == -1 encodes the central cell (empty path required).
    int8_t sector = -1;
    std::vector<uint8_t> path;

    bool is_central() const { return sector < 0; }
    bool is_root() const { return sector >= 0 && path.empty(); }
    int depth() const { return static_cast<int>(path.size()); }

    friend bool operator==(const CellAddr&, const CellAddr&) = default;
    friend auto operator<=>(const CellAddr& a, const CellAddr& b) {
        if (auto c = a.sector <=> b.sector; c != 0) return c;
        return a.path <=> b.path;
    }
};

struct AddrHash {
    size_t operator()(const CellAddr& a) const {
        uint64_t h = 1469598103934665603ull;
        auto mix = [&h](uint8_t b) {
            h ^= b;
            h *= 1099511628211ull;
        };
        mix(static_cast<uint8_t>(a.sector + 1));
        for (uint8_t b : a.path) mix(b + 1);
        return static_cast<size_t>(h);
    }
};

inline CellAddr central() { return CellAddr{}; }

inline CellAddr sector_root(int k) {
    if (k < 0 || k >= kSectors) throw std::invalid_argument("sector out of range");
    CellAddr a;
    a.sector = static_cast<int8_t>(k);
    return a;
}

inline Status status(const CellAddr& a) {
    if (a.is_central()) throw std::invalid_argument("central cell has no tree status");
    Status st = Status::white;  // roots are white
    for (uint8_t i : a.path) st = (i == 0) ? Status::black : Status::white;
    return st;
}

inline int son_count(Status st) { return st == Status::black ? 2 : 3; }

inline bool valid(const CellAddr& a) {
    if (a.is_central()) return a.path.empty();
    if (a.sector >= kSectors) return false;
    Status st = Status::white;
    for (uint8_t i : a.path) {
        if (i >= son_count(st)) return false;
        st = (i == 0) ? Status::black : Status::white;
    }
    return true;
}

inline CellAddr father(const CellAddr& a) {
    if (a.is_central()) throw std::invalid_argument("central cell has no father");
    if (a.is_root()) return central();
    CellAddr f = a;
    f.path.pop_back();
    return f;
}

inline CellAddr son(const CellAddr& a, int i) {
    if (a.is_central()) throw std::invalid_argument("use sector_root for sons of the central cell");
    if (i < 0 || i >= son_count(status(a))) throw std::invalid_argument("son index out of range");
    CellAddr s = a;
    s.path.push_back(static_cast<uint8_t>(i));
    return s;
}

inline CellAddr last_son(const CellAddr& a) { return son(a, son_count(status(a)) - 1); }

// Lateral neighbours on the level ring. Levels are cyclic across the seven
// sectors: sector k's rightmost branch abuts sector k+1's leftmost branch.
inline CellAddr left_of(const CellAddr& a) {
    if (a.is_central()) throw std::invalid_argument("central cell has no lateral neighbours");
    if (a.is_root()) return sector_root((a.sector + kSectors - 1) % kSectors);
    uint8_t i = a.path.back();
    if (i > 0) {
        CellAddr s = father(a);
        return son(s, i - 1);
    }
    return last_son(left_of(father(a)));
}

inline CellAddr right_of(const CellAddr& a) {
    if (a.is_central()) throw std::invalid_argument("central cell has no lateral neighbours");
    if (a.is_root()) return sector_root((a.sector + 1) % kSectors);
    uint8_t i = a.path.back();
    if (i + 1 < son_count(status(father(a)))) {
        CellAddr s = father(a);
        return son(s, i + 1);
    }
    return son(right_of(father(a)), 0);
}

inline CellAddr nephew(const CellAddr& a) { return son(right_of(a), 0); }

inline std::array<CellAddr, 7> neighbors(const CellAddr& a) {
    std::array<CellAddr, 7> n;
    if (a.is_central()) {
        for (int k = 0; k < kSectors; ++k) n[k] = sector_root(k);
        return n;
    }
    if (a.is_root()) {
        n[0] = central();
        n[1] = left_of(a);
        n[2] = son(a, 0);
        n[3] = son(a, 1);
        n[4] = son(a, 2);
        n[5] = nephew(a);
        n[6] = right_of(a);
        return n;
    }
    if (status(a) == Status::black) {
        n[0] = father(a);
        n[1] = left_of(father(a));  // uncle
        n[2] = left_of(a);
        n[3] = son(a, 0);
        n[4] = son(a, 1);
        n[5] = nephew(a);
        n[6] = right_of(a);
        return n;
    }
    n[0] = father(a);
    n[1] = left_of(a);
    n[2] = son(a, 0);
    n[3] = son(a, 1);
    n[4] = son(a, 2);
    n[5] = nephew(a);
    n[6] = right_of(a);
    return n;
}

// Index of the edge of `a` facing `b`, if they share an edge.
inline std::optional<int> edge_towards(const CellAddr& a, const CellAddr& b) {
    auto n = neighbors(a);
    for (int i = 0; i < 7; ++i)
        if (n[i] == b) return i;
    return std::nullopt;
}

inline bool adjacent(const CellAddr& a, const CellAddr& b) { return edge_towards(a, b).has_value(); }

// Isoclines are tree levels numbered cyclically; sector roots sit on
// isocline 0 and the central cell on isocline 19, so that moving to the
// father always decreases the isocline by one (mod 20).
inline int isocline(const CellAddr& a) {
    if (a.is_central()) return kIsoclines - 1;
    return a.depth() % kIsoclines;
}

inline CellAddr leftmost_descendant(const CellAddr& a, int rel_depth) {
    CellAddr t = a;
    for (int i = 0; i < rel_depth; ++i) t = son(t, 0);
    return t;
}

inline CellAddr rightmost_descendant(const CellAddr& a, int rel_depth) {
    CellAddr t = a;
    for (int i = 0; i < rel_depth; ++i) t = last_son(t);
    return t;
}

inline std::pair<CellAddr, CellAddr> subtree_borders(const CellAddr& a, int rel_depth) {
    return {leftmost_descendant(a, rel_depth), rightmost_descendant(a, rel_depth)};
}

// Number of descendants of a node of status st at the given relative depth.
inline int64_t subtree_slice_size(Status st, int rel_depth) {
    // black: (b,w); white: (b,w,w)
    int64_t blacks = st == Status::black ? 1 : 0;
    int64_t whites = st == Status::white ? 1 : 0;
    for (int i = 0; i < rel_depth; ++i) {
        int64_t nb = blacks + whites;           // one black son each
        int64_t nw = blacks + 2 * whites;       // 1 resp. 2 white sons
        blacks = nb;
        whites = nw;
    }
    return blacks + whites;
}

// All descendants at the given relative depth, left to right.
inline std::vector<CellAddr> subtree_slice(const CellAddr& a, int rel_depth,
                                           int64_t budget = 4'000'000) {
    if (subtree_slice_size(status(a), rel_depth) > budget)
        throw std::runtime_error("subtree_slice: slice exceeds budget");
    std::vector<CellAddr> out;
    std::vector<std::pair<CellAddr, int>> stack{{a, rel_depth}};
    while (!stack.empty()) {
        auto [t, d] = stack.back();
        stack.pop_back();
        if (d == 0) {
            out.push_back(std::move(t));
            continue;
        }
        int sc = son_count(status(t));
        for (int i = sc - 1; i >= 0; --i) stack.emplace_back(son(t, i), d - 1);
    }
    return out;
}

inline bool is_ancestor(const CellAddr& anc, const CellAddr& a) {
    if (anc.is_central()) return !a.is_central();
    if (a.is_central()) return false;
    if (anc.sector != a.sector) return false;
    if (anc.path.size() > a.path.size()) return false;
    return std::equal(anc.path.begin(), anc.path.end(), a.path.begin());
}

// Ancestor of `a` at the given absolute depth.
inline CellAddr ancestor_at_depth(const CellAddr& a, int depth) {
    if (a.is_central() || depth > a.depth() || depth < 0)
        throw std::invalid_argument("ancestor_at_depth: bad depth");
    CellAddr t = a;
    t.path.resize(depth);
    return t;
}

// Breadth-first ball around a tile; sizes[r] = |ball(center, r)|.
inline std::vector<int64_t> ball_sizes(const CellAddr& center, int max_radius,
                                       int64_t budget = 4'000'000) {
    std::set<CellAddr> seen{center};
    std::vector<CellAddr> frontier{center};
    std::vector<int64_t> sizes{1};
    for (int r = 1; r <= max_radius; ++r) {
        std::vector<CellAddr> next;
        for (const auto& t : frontier)
            for (const auto& n : neighbors(t))
                if (seen.insert(n).second) next.push_back(n);
        sizes.push_back(static_cast<int64_t>(seen.size()));
        if (static_cast<int64_t>(seen.size()) > budget)
            throw std::runtime_error("ball_sizes: ball exceeds budget");
        frontier = std::move(next);
    }
    return sizes;
}

inline std::set<CellAddr> ball_tiles(const CellAddr& center, int radius,
                                     int64_t budget = 4'000'000) {
    std::set<CellAddr> seen{center};
    std::vector<CellAddr> frontier{center};
    for (int r = 1; r <= radius; ++r) {
        std::vector<CellAddr> next;
        for (const auto& t : frontier)
            for (const auto& n : neighbors(t))
                if (seen.insert(n).second) next.push_back(n);
        if (static_cast<int64_t>(seen.size()) > budget)
            throw std::runtime_error("ball_tiles: ball exceeds budget");
        frontier = std::move(next);
    }
    return seen;
}

// Text form: `c` for the central cell, `s<k>` for a sector root,
// `s<k>:<i1>.<i2>...` otherwise.
inline std::string format_addr(const CellAddr& a) {
    if (a.is_central()) return "c";
    std::string s = "s" + std::to_string(int(a.sector));
    if (a.path.empty()) return s;
    s += ':';
    for (size_t i = 0; i < a.path.size(); ++i) {
        if (i) s += '.';
        s += char('0' + a.path[i]);
    }
    return s;
}

inline CellAddr parse_addr(const std::string& s) {
    if (s == "c") return central();
    if (s.size() < 2 || s[0] != 's') throw std::invalid_argument("bad address: " + s);
    size_t colon = s.find(':');
    std::string sec = s.substr(1, colon == std::string::npos ? std::string::npos : colon - 1);
    CellAddr a = sector_root(std::stoi(sec));
    if (colon == std::string::npos) return a;
    size_t i = colon + 1;
    while (i < s.size()) {
        size_t j = s.find('.', i);
        if (j == std::string::npos) j = s.size();
        if (j == i) throw std::invalid_argument("bad address: " + s);
        a.path.push_back(static_cast<uint8_t>(std::stoi(s.substr(i, j - i))));
        i = j + 1;
    }
    if (!valid(a)) throw std::invalid_argument("invalid address: " + s);
    return a;
}

}  // namespace hyptess::grid
