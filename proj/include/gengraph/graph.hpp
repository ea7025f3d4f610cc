#pragma once

// Generating graphs of D_n and Q_n, induced subgraphs, degree profiles,
// BFS distances, eccentricity matrices and DOT/JSON/CSV exports.
//
// Vertex order is part of the contract (stratum-major, exponent-minor):
// Omega, R1, R2 for Q_n and Omega2, Omega1, Omega3 for D_n, so matrix
// fixtures are byte-stable across runs. Adjacency is stored as packed bit
// rows; matrices are materialized on demand.

#include <map>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include <json.hpp>

#include "gengraph/errors.hpp"
#include "gengraph/group.hpp"
#include "gengraph/linalg.hpp"

namespace gengraph {

struct Graph {
    int nv = 0;
    int words = 0;
    std::vector<uint64_t> bits; // row-major packed adjacency
    std::vector<std::string> labels;
    std::optional<GroupId> group;

    Graph() = default;
    explicit Graph(int n) : nv(n), words((n + 63) / 64), bits(static_cast<std::size_t>(n) * words, 0) {
        if (n < 0) throw invalid_input("Graph: negative vertex count");
        labels.reserve(n);
        for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    }

    void add_edge(int i, int j) {
        if (i < 0 || j < 0 || i >= nv || j >= nv) throw invalid_input("add_edge: vertex out of range");
        if (i == j) throw invalid_input("add_edge: self-loops not allowed");
        bits[static_cast<std::size_t>(i) * words + j / 64] |= uint64_t(1) << (j % 64);
        bits[static_cast<std::size_t>(j) * words + i / 64] |= uint64_t(1) << (i % 64);
    }

    bool adjacent(int i, int j) const {
        return (bits[static_cast<std::size_t>(i) * words + j / 64] >> (j % 64)) & 1;
    }

    int degree(int i) const {
        int d = 0;
        for (int w = 0; w < words; ++w)
            d += __builtin_popcountll(bits[static_cast<std::size_t>(i) * words + w]);
        return d;
    }

    long long edge_count() const {
        long long total = 0;
        for (int i = 0; i < nv; ++i) total += degree(i);
        return total / 2;
    }

    std::vector<int> neighbors(int i) const {
        std::vector<int> out;
        for (int j = 0; j < nv; ++j)
            if (adjacent(i, j)) out.push_back(j);
        return out;
    }

    IntMatrix adjacency_matrix() const {
        IntMatrix m(nv);
        for (int i = 0; i < nv; ++i)
            for (int j = 0; j < nv; ++j)
                if (adjacent(i, j)) m.at(i, j) = 1;
        return m;
    }

    IntMatrix laplacian_matrix() const {
        IntMatrix m(nv);
        for (int i = 0; i < nv; ++i) {
            m.at(i, i) = degree(i);
            for (int j = 0; j < nv; ++j)
                if (adjacent(i, j)) m.at(i, j) = -1;
        }
        return m;
    }

    Graph induced(const std::vector<int>& verts) const {
        Graph g(static_cast<int>(verts.size()));
        g.group = group;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (verts[i] < 0 || verts[i] >= nv) throw invalid_input("induced: vertex out of range");
            g.labels[i] = labels[verts[i]];
        }
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                if (adjacent(verts[i], verts[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
        return g;
    }

    Graph complement() const {
        Graph g(nv);
        g.labels = labels;
        g.group = group;
        for (int i = 0; i < nv; ++i)
            for (int j = i + 1; j < nv; ++j)
                if (!adjacent(i, j)) g.add_edge(i, j);
        return g;
    }

    // Component id per vertex, ids assigned in vertex order.
    std::vector<int> components() const {
        std::vector<int> comp(nv, -1);
        int next = 0;
        for (int s = 0; s < nv; ++s) {
            if (comp[s] >= 0) continue;
            comp[s] = next;
            std::vector<int> stack{s};
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int v = 0; v < nv; ++v)
                    if (adjacent(u, v) && comp[v] < 0) {
                        comp[v] = next;
                        stack.push_back(v);
                    }
            }
            ++next;
        }
        return comp;
    }

    int component_count() const {
        auto c = components();
        return c.empty() ? 0 : 1 + *std::max_element(c.begin(), c.end());
    }

    bool is_connected() const { return nv <= 1 || component_count() == 1; }

    bool operator==(const Graph& o) const {
        return nv == o.nv && bits == o.bits && labels == o.labels && group == o.group;
    }
};

// ---------------------------------------------------------------------------
// Construction.
// ---------------------------------------------------------------------------

inline Graph build_generating_graph(const GroupId& id) {
    std::vector<GroupElement> order;
    for (const auto& s : strata(id))
        order.insert(order.end(), s.members.begin(), s.members.end());
    Graph g(static_cast<int>(order.size()));
    g.group = id;
    for (std::size_t i = 0; i < order.size(); ++i) g.labels[i] = format_element(order[i], id);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (generates_pair(order[i], order[j], id)) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

// Elements in graph vertex order (same traversal as build_generating_graph).
inline std::vector<GroupElement> vertex_elements(const GroupId& id) {
    std::vector<GroupElement> order;
    for (const auto& s : strata(id))
        order.insert(order.end(), s.members.begin(), s.members.end());
    return order;
}

inline int vertex_index_of(const GroupElement& g, const GroupId& id) {
    auto order = vertex_elements(id);
    for (std::size_t i = 0; i < order.size(); ++i)
        if (order[i] == g) return static_cast<int>(i);
    throw invalid_input("vertex_index_of: element not found");
}

// Subgraph induced by the non-isolated vertices, order preserved.
inline Graph delta(const Graph& g) {
    std::vector<int> keep;
    for (int i = 0; i < g.nv; ++i)
        if (g.degree(i) > 0) keep.push_back(i);
    return g.induced(keep);
}

// Per-stratum vertex degree of a full generating graph; uniformity within
// each stratum and membership in the theorem's degree set are enforced.
inline std::map<StratumName, long long> degree_profile(const Graph& g, const GroupId& id) {
    if (g.nv != id.order()) throw invalid_input("degree_profile: graph is not the full generating graph");
    long long n = id.n, phi = euler_phi(n);
    std::map<StratumName, long long> expected;
    if (id.family == Family::Dicyclic)
        expected = {{StratumName::R1, 2 * n}, {StratumName::Omega, 4 * phi}, {StratumName::R2, 0}};
    else
        expected = {{StratumName::Omega1, n}, {StratumName::Omega2, 2 * phi}, {StratumName::Omega3, 0}};
    std::map<StratumName, long long> profile;
    int v = 0;
    for (const auto& s : strata(id))
        for (std::size_t k = 0; k < s.members.size(); ++k, ++v) {
            long long d = g.degree(v);
            if (d != expected.at(s.name))
                throw internal_error("degree_profile: vertex " + g.labels[v] + " has degree " +
                                     std::to_string(d) + ", outside the allowed set");
            profile[s.name] = d;
        }
    return profile;
}

// ---------------------------------------------------------------------------
// Distance and eccentricity matrices (connected graphs only).
// ---------------------------------------------------------------------------

inline IntMatrix distance_matrix(const Graph& g) {
    IntMatrix d(g.nv, -1);
    for (int s = 0; s < g.nv; ++s) {
        d.at(s, s) = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < g.nv; ++v)
                if (g.adjacent(u, v) && d.at(s, v) < 0) {
                    d.at(s, v) = d.at(s, u) + 1;
                    q.push(v);
                }
        }
        for (int v = 0; v < g.nv; ++v)
            if (d.at(s, v) < 0)
                throw invalid_input("distance_matrix: no path between '" + g.labels[s] + "' and '" +
                                    g.labels[v] + "'");
    }
    return d;
}

// Entry d(u,v) where d(u,v) = min(e(u), e(v)), else 0.
inline IntMatrix eccentricity_matrix(const Graph& g) {
    IntMatrix d = distance_matrix(g);
    std::vector<long long> ecc(g.nv, 0);
    for (int u = 0; u < g.nv; ++u)
        for (int v = 0; v < g.nv; ++v) ecc[u] = std::max(ecc[u], d.at(u, v));
    IntMatrix e(g.nv);
    for (int u = 0; u < g.nv; ++u)
        for (int v = 0; v < g.nv; ++v)
            if (u != v && d.at(u, v) == std::min(ecc[u], ecc[v])) e.at(u, v) = d.at(u, v);
    return e;
}

inline std::vector<long long> eccentricities(const Graph& g) {
    IntMatrix d = distance_matrix(g);
    std::vector<long long> ecc(g.nv, 0);
    for (int u = 0; u < g.nv; ++u)
        for (int v = 0; v < g.nv; ++v) ecc[u] = std::max(ecc[u], d.at(u, v));
    return ecc;
}

inline long long diameter(const Graph& g) {
    auto ecc = eccentricities(g);
    return ecc.empty() ? 0 : *std::max_element(ecc.begin(), ecc.end());
}

// ---------------------------------------------------------------------------
// Export formats.
// ---------------------------------------------------------------------------

enum class GraphFormat { DOT, JSON, CSVEdges };

inline std::vector<std::pair<int, int>> sorted_edges(const Graph& g) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < g.nv; ++i)
        for (int j = i + 1; j < g.nv; ++j)
            if (g.adjacent(i, j)) es.emplace_back(i, j);
    return es;
}

inline std::string graph_to_dot(const Graph& g) {
    std::string name = g.group ? g.group->label() : std::string("g");
    std::string s = "graph " + name + " {\n";
    for (int i = 0; i < g.nv; ++i) s += "  \"" + g.labels[i] + "\";\n";
    for (auto [i, j] : sorted_edges(g))
        s += "  \"" + g.labels[i] + "\" -- \"" + g.labels[j] + "\";\n";
    s += "}\n";
    return s;
}

inline nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j;
    if (g.group) {
        j["family"] = g.group->family == Family::Dicyclic ? "Q" : "D";
        j["n"] = g.group->n;
    } else {
        j["family"] = nullptr;
        j["n"] = nullptr;
    }
    j["vertices"] = g.labels;
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : sorted_edges(g)) edges.push_back({a, b});
    j["edges"] = edges;
    return j;
}

inline Graph graph_from_json(const nlohmann::json& j) {
    std::vector<std::string> labels = j.at("vertices").get<std::vector<std::string>>();
    Graph g(static_cast<int>(labels.size()));
    g.labels = std::move(labels);
    if (!j.at("family").is_null()) {
        Family f = j.at("family").get<std::string>() == "Q" ? Family::Dicyclic : Family::Dihedral;
        g.group = GroupId(f, j.at("n").get<long long>());
    }
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
}

inline std::string graph_to_csv_edges(const Graph& g) {
    std::string s;
    for (auto [i, j] : sorted_edges(g)) s += std::to_string(i) + "," + std::to_string(j) + "\n";
    return s;
}

inline std::string export_graph(const Graph& g, GraphFormat f) {
    switch (f) {
        case GraphFormat::DOT: return graph_to_dot(g);
        case GraphFormat::JSON: return graph_to_json(g).dump(2) + "\n";
        case GraphFormat::CSVEdges: return graph_to_csv_edges(g);
    }
    throw invalid_input("export_graph: unknown format");
}

} // namespace gengraph
