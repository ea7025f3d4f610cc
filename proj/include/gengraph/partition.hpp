#pragma once

// Vertex partitions: the central pairing Theta on V(Q_n), the neighborhood
// equivalence classes on Omega, equitability checks with witnesses, quotient
// matrices and graphs, the quotient isomorphism onto the dihedral generating
// graph, and a small-graph isomorphism test (degree refinement plus
// backtracking).

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gengraph/errors.hpp"
#include "gengraph/graph.hpp"
#include "gengraph/group.hpp"
#include "gengraph/linalg.hpp"

namespace gengraph {

struct Partition {
    std::vector<std::vector<int>> cells;

    int cell_count() const { return static_cast<int>(cells.size()); }

    int ground_size() const {
        int total = 0;
        for (const auto& c : cells) total += static_cast<int>(c.size());
        return total;
    }

    static Partition singletons(int n) {
        Partition p;
        for (int i = 0; i < n; ++i) p.cells.push_back({i});
        return p;
    }

    // Disjoint, covering [0, n), no empty cell.
    void validate(int n) const {
        std::vector<char> seen(n, 0);
        for (const auto& c : cells) {
            if (c.empty()) throw invalid_input("Partition: empty cell");
            for (int v : c) {
                if (v < 0 || v >= n) throw invalid_input("Partition: index out of range");
                if (seen[v]) throw invalid_input("Partition: cells not disjoint");
                seen[v] = 1;
            }
        }
        for (int v = 0; v < n; ++v)
            if (!seen[v]) throw invalid_input("Partition: cells do not cover the index range");
    }

    // Restriction to a prefix [0, k) of the index range; cells must not
    // straddle the boundary.
    Partition restrict_to_prefix(int k) const {
        Partition p;
        for (const auto& c : cells) {
            bool in = c.front() < k;
            for (int v : c)
                if ((v < k) != in) throw invalid_input("Partition: cell straddles restriction boundary");
            if (in) p.cells.push_back(c);
        }
        return p;
    }
};

// Theta pairs x^a with x^{a+n} and x^b y with x^{b+n} y; cells are listed
// power-first, exponent-minor, as vertex indices of the generating graph.
inline Partition theta_partition(long long n) {
    GroupId id = dicyclic(n);
    std::map<GroupElement, int> pos;
    auto order = vertex_elements(id);
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    Partition p;
    for (long long a = 0; a < n; ++a)
        p.cells.push_back({pos.at(power(id, a)), pos.at(power(id, a + n))});
    for (long long b = 0; b < n; ++b)
        p.cells.push_back({pos.at(mixed(id, b)), pos.at(mixed(id, b + n))});
    p.validate(static_cast<int>(id.order()));
    return p;
}

// Neighborhood classes on Omega: [x^i y] = {x^{i+t n0} y, x^{i+t n0+n} y},
// n0 cells of size 2n/n0, indexed by the Omega-local vertex order.
inline Partition sim_classes(long long n) {
    if (n < 2) throw invalid_input("sim_classes: n must be >= 2");
    long long n0 = radical(n);
    Partition p;
    for (long long i = 0; i < n0; ++i) {
        std::vector<int> cell;
        for (long long t = 0; t < n / n0; ++t) {
            cell.push_back(static_cast<int>(i + t * n0));
            cell.push_back(static_cast<int>(i + t * n0 + n));
        }
        std::sort(cell.begin(), cell.end());
        p.cells.push_back(std::move(cell));
    }
    p.validate(static_cast<int>(2 * n));
    return p;
}

// Dihedral counterpart on Omega2: [s r^i] = {s r^{i + t n0}}, n0 cells of
// size n/n0.
inline Partition sim_classes_dihedral(long long n) {
    if (n < 2) throw invalid_input("sim_classes_dihedral: n must be >= 2");
    long long n0 = radical(n);
    Partition p;
    for (long long i = 0; i < n0; ++i) {
        std::vector<int> cell;
        for (long long t = 0; t < n / n0; ++t) cell.push_back(static_cast<int>(i + t * n0));
        p.cells.push_back(std::move(cell));
    }
    p.validate(static_cast<int>(n));
    return p;
}

// ---------------------------------------------------------------------------
// Equitability of a partition for an arbitrary square integer matrix: every
// block must have constant row sums.
// ---------------------------------------------------------------------------

struct EquitableWitness {
    int cell_a = -1, cell_b = -1;
    int row_u = -1, row_v = -1;
    long long sum_u = 0, sum_v = 0;

    std::string to_string() const {
        return "rows " + std::to_string(row_u) + " and " + std::to_string(row_v) + " of cell " +
               std::to_string(cell_a) + " have block sums " + std::to_string(sum_u) + " vs " +
               std::to_string(sum_v) + " toward cell " + std::to_string(cell_b);
    }
};

struct EquitableResult {
    bool equitable = false;
    std::optional<EquitableWitness> witness;

    explicit operator bool() const { return equitable; }
};

inline EquitableResult is_equitable(const IntMatrix& m, const Partition& p) {
    p.validate(m.n);
    for (int a = 0; a < p.cell_count(); ++a)
        for (int b = 0; b < p.cell_count(); ++b) {
            long long first = 0;
            for (std::size_t r = 0; r < p.cells[a].size(); ++r) {
                long long sum = 0;
                for (int col : p.cells[b]) sum += m.at(p.cells[a][r], col);
                if (r == 0) {
                    first = sum;
                } else if (sum != first) {
                    return {false, EquitableWitness{a, b, p.cells[a][0], p.cells[a][r], first, sum}};
                }
            }
        }
    return {true, std::nullopt};
}

inline IntMatrix quotient_matrix(const IntMatrix& m, const Partition& p) {
    auto eq = is_equitable(m, p);
    if (!eq)
        throw invalid_input("quotient_matrix: partition not equitable (" + eq.witness->to_string() + ")");
    IntMatrix q(p.cell_count());
    for (int a = 0; a < p.cell_count(); ++a)
        for (int b = 0; b < p.cell_count(); ++b) {
            long long sum = 0;
            for (int col : p.cells[b]) sum += m.at(p.cells[a][0], col);
            q.at(a, b) = sum;
        }
    return q;
}

// Quotient graph: one vertex per cell, cells adjacent when any cross pair is.
// Cells must be internally independent for the quotient to stay simple; this
// is asserted, not assumed.
inline Graph quotient_graph(const Graph& g, const Partition& p) {
    p.validate(g.nv);
    Graph q(p.cell_count());
    q.group = std::nullopt;
    for (int a = 0; a < p.cell_count(); ++a) {
        const auto& cell = p.cells[a];
        for (std::size_t i = 0; i < cell.size(); ++i)
            for (std::size_t j = i + 1; j < cell.size(); ++j)
                if (g.adjacent(cell[i], cell[j]))
                    throw internal_error("quotient_graph: cell contains adjacent vertices");
        q.labels[a] = g.labels[cell.front()];
    }
    for (int a = 0; a < p.cell_count(); ++a)
        for (int b = a + 1; b < p.cell_count(); ++b) {
            bool any = false;
            for (int u : p.cells[a]) {
                for (int v : p.cells[b])
                    if (g.adjacent(u, v)) {
                        any = true;
                        break;
                    }
                if (any) break;
            }
            if (any) q.add_edge(a, b);
        }
    return q;
}

// Gamma(Q_n)/Theta compared against Gamma(D_n) under the explicit map sending
// the class of x^i y to s r^i and the class of x^a to r^a.
inline bool quotient_iso_to_dihedral(long long n) {
    GroupId qid = dicyclic(n), did = dihedral(n);
    Graph gq = build_generating_graph(qid);
    Graph gd = build_generating_graph(did);
    Partition theta = theta_partition(n);
    Graph quot = quotient_graph(gq, theta);

    auto qelems = vertex_elements(qid);
    std::map<GroupElement, int> dpos;
    auto delems = vertex_elements(did);
    for (std::size_t i = 0; i < delems.size(); ++i) dpos[delems[i]] = static_cast<int>(i);

    // image of each cell under f
    std::vector<int> image(theta.cell_count());
    for (int c = 0; c < theta.cell_count(); ++c) {
        GroupElement rep = qelems[theta.cells[c].front()];
        long long e = rep.exp % n;
        image[c] = dpos.at(rep.kind == Kind::Mixed ? mixed(did, e) : power(did, e));
    }
    for (int a = 0; a < theta.cell_count(); ++a)
        for (int b = a + 1; b < theta.cell_count(); ++b)
            if (quot.adjacent(a, b) != gd.adjacent(image[a], image[b])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Graph isomorphism for small graphs: iterated degree refinement, then
// backtracking over color-consistent candidates.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<int> refine_colors(const Graph& g) {
    std::vector<int> color(g.nv, 0);
    for (int round = 0; round < g.nv; ++round) {
        std::vector<std::pair<int, std::vector<int>>> sig(g.nv);
        for (int v = 0; v < g.nv; ++v) {
            std::vector<int> nb;
            for (int u : g.neighbors(v)) nb.push_back(color[u]);
            std::sort(nb.begin(), nb.end());
            sig[v] = {color[v], std::move(nb)};
        }
        std::vector<std::pair<int, std::vector<int>>> keys(sig);
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        std::vector<int> next(g.nv);
        for (int v = 0; v < g.nv; ++v)
            next[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v]) - keys.begin());
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

inline bool extend_isomorphism(const Graph& g1, const Graph& g2, const std::vector<int>& c1,
                               const std::vector<int>& c2, std::vector<int>& map,
                               std::vector<char>& used, const std::vector<int>& order, std::size_t pos) {
    if (pos == order.size()) return true;
    int u = order[pos];
    for (int v = 0; v < g2.nv; ++v) {
        if (used[v] || c2[v] != c1[u]) continue;
        bool ok = true;
        for (std::size_t k = 0; k < pos && ok; ++k)
            if (g1.adjacent(u, order[k]) != g2.adjacent(v, map[order[k]])) ok = false;
        if (!ok) continue;
        map[u] = v;
        used[v] = 1;
        if (extend_isomorphism(g1, g2, c1, c2, map, used, order, pos + 1)) return true;
        used[v] = 0;
        map[u] = -1;
    }
    return false;
}

} // namespace detail

inline bool is_isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.nv != g2.nv) return false;
    if (g1.edge_count() != g2.edge_count()) return false;
    if (g1.nv > 64) throw capacity_error("is_isomorphic: supported up to 64 vertices");
    auto c1 = detail::refine_colors(g1), c2 = detail::refine_colors(g2);
    auto hist = [](const std::vector<int>& c) {
        std::map<int, int> h;
        for (int x : c) ++h[x];
        return h;
    };
    if (hist(c1) != hist(c2)) return false;

    // Most-constrained first: vertices in small color classes come early.
    std::map<int, int> class_size;
    for (int x : c1) ++class_size[x];
    std::vector<int> order(g1.nv);
    for (int i = 0; i < g1.nv; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (class_size[c1[a]] != class_size[c1[b]]) return class_size[c1[a]] < class_size[c1[b]];
        return a < b;
    });

    std::vector<int> map(g1.nv, -1);
    std::vector<char> used(g2.nv, 0);
    return detail::extend_isomorphism(g1, g2, c1, c2, map, used, order, 0);
}

// Godsil-Royle divisibility: the characteristic polynomial of an equitable
// quotient divides that of the full matrix, checked with exact integers.
inline bool charpoly_divides_check(const IntMatrix& m, const Partition& p) {
    BigPoly full = charpoly_exact(m);
    BigPoly quot = charpoly_exact(quotient_matrix(m, p));
    if (!poly_divides(quot, full))
        throw internal_error("charpoly_divides_check: quotient polynomial does not divide");
    return true;
}

} // namespace gengraph
