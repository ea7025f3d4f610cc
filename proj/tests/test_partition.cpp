#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "gengraph/partition.hpp"

using namespace gengraph;

namespace {

std::set<std::set<std::string>> label_cells(const Partition& p, const Graph& g) {
    std::set<std::set<std::string>> out;
    for (const auto& cell : p.cells) {
        std::set<std::string> c;
        for (int v : cell) c.insert(g.labels[v]);
        out.insert(c);
    }
    return out;
}

Graph cycle_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

} // namespace

TEST_CASE("theta partition cells") {
    Graph q2 = build_generating_graph(dicyclic(2));
    auto cells = label_cells(theta_partition(2), q2);
    std::set<std::set<std::string>> expect{
        {"1", "x^2"}, {"x", "x^3"}, {"y", "x^2*y"}, {"x*y", "x^3*y"}};
    CHECK(cells == expect);

    Partition t3 = theta_partition(3);
    CHECK(t3.cell_count() == 6);
    for (const auto& c : t3.cells) CHECK(c.size() == 2);
}

TEST_CASE("theta cells are internally non-adjacent") {
    for (long long n = 2; n <= 20; ++n) {
        Graph g = build_generating_graph(dicyclic(n));
        for (const auto& cell : theta_partition(n).cells)
            CHECK_FALSE(g.adjacent(cell[0], cell[1]));
    }
}

TEST_CASE("sim classes on Omega") {
    Graph q4 = build_generating_graph(dicyclic(4));
    auto cells = label_cells(sim_classes(4), q4);
    std::set<std::set<std::string>> expect{{"y", "x^2*y", "x^4*y", "x^6*y"},
                                           {"x*y", "x^3*y", "x^5*y", "x^7*y"}};
    CHECK(cells == expect);

    CHECK(sim_classes(6).cell_count() == 6);
    for (const auto& c : sim_classes(6).cells) CHECK(c.size() == 2);
    CHECK(sim_classes(2).cell_count() == 2);

    for (long long n = 2; n <= 40; ++n) {
        long long n0 = radical(n);
        Partition p = sim_classes(n);
        CHECK(p.cell_count() == n0);
        for (const auto& c : p.cells) CHECK(static_cast<long long>(c.size()) == 2 * n / n0);
    }
}

TEST_CASE("sim classes induce complete or empty bipartite pairs") {
    for (long long n = 2; n <= 40; ++n) {
        Graph g = build_generating_graph(dicyclic(n));
        Partition p = sim_classes(n); // Omega indices coincide with graph prefix
        for (const auto& cell : p.cells)
            for (std::size_t i = 0; i < cell.size(); ++i)
                for (std::size_t j = i + 1; j < cell.size(); ++j)
                    CHECK_FALSE(g.adjacent(cell[i], cell[j]));
        for (int a = 0; a < p.cell_count(); ++a)
            for (int b = a + 1; b < p.cell_count(); ++b) {
                int edges = 0;
                for (int u : p.cells[a])
                    for (int v : p.cells[b]) edges += g.adjacent(u, v) ? 1 : 0;
                bool empty = edges == 0;
                bool complete = edges == static_cast<int>(p.cells[a].size() * p.cells[b].size());
                CHECK((empty || complete));
            }
    }
}

TEST_CASE("equitability of theta and sim") {
    for (long long n = 2; n <= 40; ++n) {
        Graph g = build_generating_graph(dicyclic(n));
        Partition theta = theta_partition(n);
        CHECK(is_equitable(g.adjacency_matrix(), theta).equitable);
        CHECK(is_equitable(g.laplacian_matrix(), theta).equitable);
        Graph dg = delta(g);
        CHECK(is_equitable(distance_matrix(dg), theta.restrict_to_prefix(dg.nv)).equitable);

        std::vector<int> omega(2 * n);
        for (int i = 0; i < 2 * n; ++i) omega[i] = i;
        CHECK(is_equitable(g.induced(omega).adjacency_matrix(), sim_classes(n)).equitable);
    }
}

TEST_CASE("partition validation") {
    Partition overlap;
    overlap.cells = {{0, 1}, {1, 2}};
    CHECK_THROWS_AS(overlap.validate(3), invalid_input);
    Partition gap;
    gap.cells = {{0}, {2}};
    CHECK_THROWS_AS(gap.validate(3), invalid_input);
    Partition empty_cell;
    empty_cell.cells = {{0, 1, 2}, {}};
    CHECK_THROWS_AS(empty_cell.validate(3), invalid_input);
    Partition straddle;
    straddle.cells = {{0, 2}, {1}};
    CHECK_THROWS_AS(straddle.restrict_to_prefix(2), invalid_input);
}

TEST_CASE("equitability failure carries a witness") {
    IntMatrix path(3);
    path.at(0, 1) = path.at(1, 0) = 1;
    path.at(1, 2) = path.at(2, 1) = 1;
    Partition p;
    p.cells = {{0, 1}, {2}};
    auto r = is_equitable(path, p);
    CHECK_FALSE(r.equitable);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->cell_a == 0);
    CHECK(r.witness->sum_u != r.witness->sum_v);
    CHECK_THROWS_AS(quotient_matrix(path, p), invalid_input);
}

TEST_CASE("quotient matrices") {
    // all-singleton partition reproduces the matrix
    IntMatrix m(3);
    m.at(0, 1) = m.at(1, 0) = 1;
    m.at(1, 2) = m.at(2, 1) = 1;
    CHECK(quotient_matrix(m, Partition::singletons(3)) == m);

    // eccentricity quotient of Delta(D_p) under {Omega_1, Omega_2}
    for (long long p : {3, 5, 7}) {
        Graph g = delta(build_generating_graph(dihedral(p)));
        IntMatrix e = eccentricity_matrix(g);
        Partition parts;
        std::vector<int> om2, om1;
        for (int i = 0; i < p; ++i) om2.push_back(i);
        for (int i = static_cast<int>(p); i < g.nv; ++i) om1.push_back(i);
        parts.cells = {om1, om2};
        IntMatrix q = quotient_matrix(e, parts);
        CHECK(q.at(0, 0) == 2 * (p - 2));
        CHECK(q.at(0, 1) == p);
        CHECK(q.at(1, 0) == p - 1);
        CHECK(q.at(1, 1) == p - 1);
    }
}

TEST_CASE("Omega quotient doubles the dihedral Omega_2 quotient") {
    for (long long n = 2; n <= 60; ++n) {
        Graph gq = build_generating_graph(dicyclic(n));
        std::vector<int> omega(2 * n);
        for (int i = 0; i < 2 * n; ++i) omega[i] = i;
        IntMatrix q1 = quotient_matrix(gq.induced(omega).adjacency_matrix(), sim_classes(n));

        Graph gd = build_generating_graph(dihedral(n));
        std::vector<int> omega2(n);
        for (int i = 0; i < n; ++i) omega2[i] = i;
        IntMatrix q2 = quotient_matrix(gd.induced(omega2).adjacency_matrix(), sim_classes_dihedral(n));

        REQUIRE(q1.n == q2.n);
        for (int i = 0; i < q1.n; ++i)
            for (int j = 0; j < q1.n; ++j) CHECK(q1.at(i, j) == 2 * q2.at(i, j));
    }
}

TEST_CASE("quotient charpoly divides the full charpoly") {
    CHECK(charpoly_divides_check(build_generating_graph(dicyclic(6)).adjacency_matrix(),
                                 theta_partition(6)));
    Graph q4 = build_generating_graph(dicyclic(4));
    std::vector<int> omega{0, 1, 2, 3, 4, 5, 6, 7};
    CHECK(charpoly_divides_check(q4.induced(omega).adjacency_matrix(), sim_classes(4)));
    IntMatrix m(3);
    m.at(0, 1) = m.at(1, 0) = 1;
    CHECK(charpoly_divides_check(m, Partition::singletons(3)));
}

TEST_CASE("quotient graph requires independent cells") {
    Graph tri(3);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(0, 2);
    Partition p;
    p.cells = {{0, 1}, {2}};
    CHECK_THROWS_AS(quotient_graph(tri, p), internal_error);
}

TEST_CASE("quotient of Gamma(Q_n) under theta is the dihedral generating graph") {
    for (long long n = 2; n <= 24; ++n) CHECK(quotient_iso_to_dihedral(n));
}

TEST_CASE("isomorphism between Q_n and D_2n generating graphs") {
    CHECK(is_isomorphic(build_generating_graph(dicyclic(2)), build_generating_graph(dihedral(4))));
    CHECK_FALSE(
        is_isomorphic(build_generating_graph(dicyclic(3)), build_generating_graph(dihedral(6))));
    Graph q3 = build_generating_graph(dicyclic(3));
    CHECK(is_isomorphic(q3, q3));
}

TEST_CASE("isomorphism distinguishes same-degree non-isomorphic graphs") {
    Graph c6 = cycle_graph(6);
    Graph two_triangles(6);
    for (int base : {0, 3}) {
        two_triangles.add_edge(base, base + 1);
        two_triangles.add_edge(base + 1, base + 2);
        two_triangles.add_edge(base, base + 2);
    }
    CHECK_FALSE(is_isomorphic(c6, two_triangles));
    CHECK(is_isomorphic(c6, cycle_graph(6)));
    CHECK_THROWS_AS(is_isomorphic(Graph(65), Graph(65)), capacity_error);
}
