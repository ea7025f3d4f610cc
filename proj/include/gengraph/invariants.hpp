#pragma once

// Exact combinatorial invariants of small graphs: clique number
// (branch-and-bound with greedy coloring bounds), chromatic number
// (backtracking seeded with a maximum clique), independence, domination
// and total domination, girth, Eulerian/Hamiltonian checks, pancyclicity,
// and a planarity verdict for the dicyclic Delta graphs by certificate
// (an explicit embedding for n = 2, a K_{3,3} subgraph otherwise).

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gengraph/errors.hpp"
#include "gengraph/graph.hpp"

namespace gengraph {

namespace detail {

constexpr int invariant_vertex_cap = 100;

inline void check_cap(const Graph& g, int cap, const char* who) {
    if (g.nv > cap)
        throw capacity_error(std::string(who) + ": graph exceeds " + std::to_string(cap) + " vertices");
}

// Tomita-style expansion: greedy-color the candidate set, explore from the
// highest color downward, prune when |R| + color bound cannot beat best.
inline void max_clique_expand(const Graph& g, std::vector<int>& cand, std::vector<int>& current,
                              std::vector<int>& best) {
    if (cand.empty()) {
        if (current.size() > best.size()) best = current;
        return;
    }
    std::vector<int> color(cand.size());
    std::vector<std::vector<int>> classes;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        int v = cand[i];
        std::size_t k = 0;
        for (; k < classes.size(); ++k) {
            bool clash = false;
            for (int u : classes[k])
                if (g.adjacent(u, v)) {
                    clash = true;
                    break;
                }
            if (!clash) break;
        }
        if (k == classes.size()) classes.emplace_back();
        classes[k].push_back(v);
        color[i] = static_cast<int>(k) + 1;
    }
    std::vector<std::pair<int, int>> ordered; // (color, vertex)
    for (std::size_t i = 0; i < cand.size(); ++i) ordered.emplace_back(color[i], cand[i]);
    std::sort(ordered.begin(), ordered.end());
    for (std::size_t i = ordered.size(); i-- > 0;) {
        auto [col, v] = ordered[i];
        if (current.size() + col <= best.size()) return;
        std::vector<int> next;
        for (std::size_t j = 0; j < i; ++j)
            if (g.adjacent(ordered[j].second, v)) next.push_back(ordered[j].second);
        current.push_back(v);
        max_clique_expand(g, next, current, best);
        current.pop_back();
    }
}

} // namespace detail

inline std::vector<int> max_clique(const Graph& g) {
    detail::check_cap(g, detail::invariant_vertex_cap, "max_clique");
    std::vector<int> cand(g.nv), current, best;
    for (int i = 0; i < g.nv; ++i) cand[i] = i;
    detail::max_clique_expand(g, cand, current, best);
    std::sort(best.begin(), best.end());
    return best;
}

inline long long clique_number(const Graph& g) {
    return g.nv == 0 ? 0 : static_cast<long long>(max_clique(g).size());
}

inline long long independence_number(const Graph& g) {
    detail::check_cap(g, detail::invariant_vertex_cap, "independence_number");
    return clique_number(g.complement());
}

namespace detail {

inline bool k_colorable(const Graph& g, int k, const std::vector<int>& seed_clique) {
    std::vector<int> color(g.nv, 0); // 0 = uncolored, else 1..k
    // symmetry breaking: a maximum clique takes distinct colors up front
    for (std::size_t i = 0; i < seed_clique.size(); ++i) {
        if (static_cast<int>(i) >= k) return false;
        color[seed_clique[i]] = static_cast<int>(i) + 1;
    }
    // DSATUR branching
    std::function<bool()> rec = [&]() -> bool {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < g.nv; ++v) {
            if (color[v]) continue;
            std::vector<char> seen(k + 1, 0);
            int sat = 0;
            for (int u : g.neighbors(v))
                if (color[u] && !seen[color[u]]) {
                    seen[color[u]] = 1;
                    ++sat;
                }
            int deg = g.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        if (pick < 0) return true;
        std::vector<char> used(k + 1, 0);
        for (int u : g.neighbors(pick))
            if (color[u]) used[color[u]] = 1;
        for (int c = 1; c <= k; ++c) {
            if (used[c]) continue;
            color[pick] = c;
            if (rec()) return true;
            color[pick] = 0;
        }
        return false;
    };
    return rec();
}

} // namespace detail

inline long long chromatic_number(const Graph& g) {
    detail::check_cap(g, detail::invariant_vertex_cap, "chromatic_number");
    if (g.nv == 0) return 0;
    if (g.edge_count() == 0) return 1;
    std::vector<int> clique = max_clique(g);
    for (int k = static_cast<int>(clique.size()); k <= g.nv; ++k)
        if (detail::k_colorable(g, k, clique)) return k;
    throw internal_error("chromatic_number: no coloring found up to |V| colors");
}

struct DominationResult {
    long long gamma = 0;
    long long gamma_total = 0;
    std::vector<int> witness;
    std::vector<int> witness_total;
};

namespace detail {

// Smallest subset of the given size class dominating the graph; total = true
// requires every vertex (members included) to have a neighbor in the set.
inline std::optional<std::vector<int>> find_dominating(const Graph& g, int size, bool total) {
    std::vector<int> pick;
    std::function<bool(int)> rec = [&](int start) -> bool {
        if (static_cast<int>(pick.size()) == size) {
            for (int v = 0; v < g.nv; ++v) {
                bool covered = false;
                for (int u : pick)
                    if ((!total && u == v) || g.adjacent(u, v)) {
                        covered = true;
                        break;
                    }
                if (!covered) return false;
            }
            return true;
        }
        for (int v = start; v < g.nv; ++v) {
            pick.push_back(v);
            if (rec(v + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    if (rec(0)) return pick;
    return std::nullopt;
}

} // namespace detail

inline DominationResult domination_numbers(const Graph& g) {
    detail::check_cap(g, detail::invariant_vertex_cap, "domination_numbers");
    if (g.nv == 0) throw invalid_input("domination_numbers: empty graph");
    for (int v = 0; v < g.nv; ++v)
        if (g.degree(v) == 0)
            throw invalid_input("domination_numbers: total domination undefined with isolated vertex '" +
                                g.labels[v] + "'");
    constexpr int size_cap = 6;
    DominationResult r;
    for (int k = 1; k <= size_cap && r.gamma == 0; ++k)
        if (auto w = detail::find_dominating(g, k, false)) {
            r.gamma = k;
            r.witness = *w;
        }
    for (int k = 1; k <= size_cap && r.gamma_total == 0; ++k)
        if (auto w = detail::find_dominating(g, k, true)) {
            r.gamma_total = k;
            r.witness_total = *w;
        }
    if (r.gamma == 0 || r.gamma_total == 0)
        throw capacity_error("domination_numbers: no dominating set within size " +
                             std::to_string(size_cap));
    return r;
}

// Shortest cycle length via BFS from every vertex; empty for forests.
inline std::optional<long long> girth(const Graph& g) {
    long long best = -1;
    std::vector<int> dist(g.nv), parent(g.nv);
    for (int s = 0; s < g.nv; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::vector<int> queue{s};
        dist[s] = 0;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            int u = queue[h];
            for (int v = 0; v < g.nv; ++v) {
                if (!g.adjacent(u, v)) continue;
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (v != parent[u]) {
                    long long len = dist[u] + dist[v] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

struct CycleSearchResult {
    bool eulerian = false;
    bool hamiltonian_cycle = false;
    bool hamiltonian_path = false;
};

namespace detail {

inline bool ham_extend(const Graph& g, std::vector<int>& path, std::vector<char>& used, bool cycle,
                       long long& budget) {
    if (--budget <= 0) throw capacity_error("hamiltonian search budget exhausted");
    if (static_cast<int>(path.size()) == g.nv)
        return !cycle || g.adjacent(path.back(), path.front());
    int u = path.back();
    // fewest-onward-moves first
    std::vector<std::pair<int, int>> cand;
    for (int v : g.neighbors(u)) {
        if (used[v]) continue;
        int onward = 0;
        for (int w : g.neighbors(v))
            if (!used[w]) ++onward;
        cand.emplace_back(onward, v);
    }
    std::sort(cand.begin(), cand.end());
    for (auto [deg, v] : cand) {
        used[v] = 1;
        path.push_back(v);
        if (ham_extend(g, path, used, cycle, budget)) return true;
        path.pop_back();
        used[v] = 0;
    }
    return false;
}

inline bool hamiltonian(const Graph& g, bool cycle) {
    if (g.nv == 0) return false;
    if (g.nv == 1) return !cycle;
    if (cycle && g.nv < 3) return false;
    for (int v = 0; v < g.nv; ++v)
        if (g.degree(v) < (cycle ? 2 : 1)) return false;
    if (!g.is_connected()) return false;
    long long budget = 200'000'000;
    int starts = cycle ? 1 : g.nv; // a cycle can start anywhere
    for (int s = 0; s < starts; ++s) {
        std::vector<int> path{s};
        std::vector<char> used(g.nv, 0);
        used[s] = 1;
        if (ham_extend(g, path, used, cycle, budget)) return true;
    }
    return false;
}

} // namespace detail

inline bool is_eulerian(const Graph& g) {
    if (g.nv == 0 || g.edge_count() == 0) return false;
    for (int v = 0; v < g.nv; ++v)
        if (g.degree(v) % 2) return false;
    return g.is_connected();
}

inline CycleSearchResult eulerian_hamiltonian(const Graph& g) {
    CycleSearchResult r;
    r.eulerian = is_eulerian(g);
    if (g.nv > 30) throw capacity_error("eulerian_hamiltonian: hamiltonian search limited to 30 vertices");
    r.hamiltonian_cycle = detail::hamiltonian(g, true);
    r.hamiltonian_path = r.hamiltonian_cycle || detail::hamiltonian(g, false);
    return r;
}

namespace detail {

inline bool cycle_of_length(const Graph& g, int target, int start, std::vector<int>& path,
                            std::vector<char>& used) {
    if (static_cast<int>(path.size()) == target) return g.adjacent(path.back(), start);
    int u = path.back();
    for (int v = 0; v < g.nv; ++v) {
        if (!g.adjacent(u, v) || used[v] || v < start) continue; // start = smallest on cycle
        used[v] = 1;
        path.push_back(v);
        if (cycle_of_length(g, target, start, path, used)) return true;
        path.pop_back();
        used[v] = 0;
    }
    return false;
}

} // namespace detail

// Cycles of every length from 3 to |V|.
inline bool pancyclic_check(const Graph& g) {
    if (g.nv > 16) throw capacity_error("pancyclic_check: supported up to 16 vertices");
    if (g.nv < 3) return false;
    for (int len = 3; len <= g.nv; ++len) {
        bool found = false;
        for (int s = 0; s < g.nv && !found; ++s) {
            std::vector<int> path{s};
            std::vector<char> used(g.nv, 0);
            used[s] = 1;
            found = detail::cycle_of_length(g, len, s, path, used);
        }
        if (!found) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Planarity verdict for Delta(Q_n).
// ---------------------------------------------------------------------------

struct PlanarityResult {
    bool planar = false;
    // n = 2: triangular faces of a verified embedding
    std::vector<std::vector<int>> faces;
    // n > 2: the two sides of a K_{3,3} subgraph
    std::array<std::vector<int>, 2> k33;
};

namespace detail {

// Every face boundary must be a closed walk of edges, every edge must lie on
// exactly two faces, and v - e + f must equal 2.
inline void verify_embedding(const Graph& g, const std::vector<std::vector<int>>& faces) {
    std::map<std::pair<int, int>, int> edge_use;
    for (const auto& face : faces) {
        if (face.size() < 3) throw internal_error("embedding: degenerate face");
        for (std::size_t i = 0; i < face.size(); ++i) {
            int u = face[i], v = face[(i + 1) % face.size()];
            if (!g.adjacent(u, v)) throw internal_error("embedding: face side is not an edge");
            ++edge_use[{std::min(u, v), std::max(u, v)}];
        }
    }
    if (static_cast<long long>(edge_use.size()) != g.edge_count())
        throw internal_error("embedding: edge set not covered");
    for (const auto& [e, uses] : edge_use)
        if (uses != 2) throw internal_error("embedding: edge not on exactly two faces");
    if (g.nv - g.edge_count() + static_cast<long long>(faces.size()) != 2)
        throw internal_error("embedding: Euler formula violated");
}

} // namespace detail

inline PlanarityResult planarity_verdict(const Graph& g, const GroupId& id) {
    if (id.family != Family::Dicyclic)
        throw invalid_input("planarity_verdict: implemented for dicyclic Delta graphs");
    PlanarityResult r;
    if (id.n == 2) {
        // Delta(Q_2) is the octahedron: Omega 4-cycle as equator, the two
        // generators as poles. Faces listed against the contract vertex
        // order (y, x*y, x^2*y, x^3*y, x, x^3).
        if (g.nv != 6) throw invalid_input("planarity_verdict: expected the 6-vertex Delta graph");
        r.planar = true;
        for (int pole : {4, 5})
            for (int i = 0; i < 4; ++i) r.faces.push_back({pole, i, (i + 1) % 4});
        detail::verify_embedding(g, r.faces);
        return r;
    }
    // K_{3,3} subgraph: three vertices with three common neighbors.
    for (int a = 0; a < g.nv; ++a)
        for (int b = a + 1; b < g.nv; ++b)
            for (int c = b + 1; c < g.nv; ++c) {
                std::vector<int> common;
                for (int v = 0; v < g.nv && common.size() < 3; ++v)
                    if (v != a && v != b && v != c && g.adjacent(a, v) && g.adjacent(b, v) &&
                        g.adjacent(c, v))
                        common.push_back(v);
                if (common.size() == 3) {
                    r.planar = false;
                    r.k33 = {std::vector<int>{a, b, c}, common};
                    return r;
                }
            }
    throw internal_error("planarity_verdict: no certificate found");
}

} // namespace gengraph
