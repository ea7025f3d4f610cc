#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "gengraph/graph.hpp"

using namespace gengraph;

namespace {

int vtx(const Graph& g, const std::string& label) {
    for (int i = 0; i < g.nv; ++i)
        if (g.labels[i] == label) return i;
    REQUIRE(false);
    return -1;
}

} // namespace

TEST_CASE("generating graph sizes") {
    Graph q2 = build_generating_graph(dicyclic(2));
    CHECK(q2.nv == 8);
    CHECK(q2.edge_count() == 12);

    Graph q3 = build_generating_graph(dicyclic(3));
    CHECK(q3.nv == 12);
    CHECK(q3.edge_count() == 36);

    Graph d6 = build_generating_graph(dihedral(6));
    CHECK(d6.nv == 12);
    CHECK(d6.edge_count() == 18);

    for (long long n = 2; n <= 40; ++n)
        CHECK(build_generating_graph(dicyclic(n)).edge_count() == 6 * n * euler_phi(n));
}

TEST_CASE("vertex order is stratum-major") {
    Graph q2 = build_generating_graph(dicyclic(2));
    CHECK(q2.labels == std::vector<std::string>{"y", "x*y", "x^2*y", "x^3*y", "x", "x^3", "1", "x^2"});
    Graph d4 = build_generating_graph(dihedral(4));
    CHECK(d4.labels == std::vector<std::string>{"s", "s*r", "s*r^2", "s*r^3", "r", "r^3", "1", "r^2"});
}

TEST_CASE("degree profile per stratum") {
    GroupId q3 = dicyclic(3);
    auto p3 = degree_profile(build_generating_graph(q3), q3);
    CHECK(p3.at(StratumName::R1) == 6);
    CHECK(p3.at(StratumName::Omega) == 8);
    CHECK(p3.at(StratumName::R2) == 0);

    GroupId q4 = dicyclic(4);
    auto p4 = degree_profile(build_generating_graph(q4), q4);
    CHECK(p4.at(StratumName::R1) == 8);
    CHECK(p4.at(StratumName::Omega) == 8); // regular outside the isolated stratum

    GroupId d6 = dihedral(6);
    auto pd = degree_profile(build_generating_graph(d6), d6);
    CHECK(pd.at(StratumName::Omega1) == 6);
    CHECK(pd.at(StratumName::Omega2) == 4);
    CHECK(pd.at(StratumName::Omega3) == 0);
}

TEST_CASE("delta removes exactly the isolated vertices") {
    CHECK(delta(build_generating_graph(dicyclic(6))).nv == 16);
    CHECK(delta(build_generating_graph(dihedral(6))).nv == 8);
    Graph dq2 = delta(build_generating_graph(dicyclic(2)));
    CHECK(dq2.nv == 6);
    CHECK(delta(dq2) == dq2); // no isolated vertices left
}

TEST_CASE("component count of Gamma(Q_n)") {
    for (long long n = 2; n <= 100; ++n)
        CHECK(build_generating_graph(dicyclic(n)).component_count() == 2 * (n - euler_phi(n)) + 1);
}

TEST_CASE("distance matrix by BFS") {
    Graph dq2 = delta(build_generating_graph(dicyclic(2)));
    IntMatrix d = distance_matrix(dq2);
    CHECK(d.at(vtx(dq2, "y"), vtx(dq2, "x^2*y")) == 2);
    CHECK(d.at(vtx(dq2, "y"), vtx(dq2, "x*y")) == 1);
    for (int i = 0; i < d.n; ++i) CHECK(d.at(i, i) == 0);

    Graph dd5 = delta(build_generating_graph(dihedral(5)));
    CHECK(distance_matrix(dd5).at(vtx(dd5, "r"), vtx(dd5, "r^2")) == 2);

    Graph disconnected = build_generating_graph(dicyclic(4));
    CHECK_THROWS_WITH_AS(distance_matrix(disconnected),
                         doctest::Contains("no path"), invalid_input);
}

TEST_CASE("distance matrix block structure of Delta(D_n)") {
    // Omega_2 block 2(J - I) - A(Omega_2), off-diagonal J, Omega_1 block 2(J - I)
    for (long long n : {5, 6, 9}) {
        Graph g = delta(build_generating_graph(dihedral(n)));
        IntMatrix d = distance_matrix(g);
        long long phi = euler_phi(n);
        REQUIRE(g.nv == n + phi);
        for (int i = 0; i < g.nv; ++i)
            for (int j = 0; j < g.nv; ++j) {
                long long expect;
                if (i == j) expect = 0;
                else if (i < n && j < n) expect = g.adjacent(i, j) ? 1 : 2;
                else if (i >= n && j >= n) expect = 2;
                else expect = 1;
                CHECK(d.at(i, j) == expect);
                CHECK(d.at(i, j) == d.at(j, i));
            }
    }
}

TEST_CASE("eccentricities") {
    for (long long n = 2; n <= 10; ++n)
        for (long long e : eccentricities(delta(build_generating_graph(dicyclic(n))))) CHECK(e == 2);
    for (long long p : {3, 5, 7}) {
        Graph g = delta(build_generating_graph(dihedral(p)));
        auto ecc = eccentricities(g);
        for (int v = 0; v < g.nv; ++v) CHECK(ecc[v] == (v < p ? 1 : 2)); // reflections first
    }
    CHECK(diameter(delta(build_generating_graph(dihedral(2)))) == 1);
    for (long long n = 3; n <= 10; ++n) {
        CHECK(diameter(delta(build_generating_graph(dihedral(n)))) == 2);
        CHECK(diameter(delta(build_generating_graph(dicyclic(n)))) == 2);
    }
}

TEST_CASE("eccentricity matrix entries") {
    Graph dd5 = delta(build_generating_graph(dihedral(5)));
    IntMatrix e5 = eccentricity_matrix(dd5);
    CHECK(e5.at(vtx(dd5, "r"), vtx(dd5, "r^2")) == 2);
    CHECK(e5.at(vtx(dd5, "r"), vtx(dd5, "s")) == 1);

    Graph dd6 = delta(build_generating_graph(dihedral(6)));
    CHECK(eccentricity_matrix(dd6).at(vtx(dd6, "r"), vtx(dd6, "s")) == 0);

    Graph dq2 = delta(build_generating_graph(dicyclic(2)));
    CHECK(eccentricity_matrix(dq2).at(vtx(dq2, "y"), vtx(dq2, "x^2*y")) == 2);
}

TEST_CASE("diameter-2 graphs have distance matrix 2(J - I) - A") {
    for (long long n = 3; n <= 14; ++n)
        for (Family fam : {Family::Dicyclic, Family::Dihedral}) {
            Graph g = delta(build_generating_graph(GroupId(fam, n)));
            IntMatrix d = distance_matrix(g);
            for (int i = 0; i < g.nv; ++i)
                for (int j = 0; j < g.nv; ++j) {
                    long long expect = i == j ? 0 : (g.adjacent(i, j) ? 1 : 2);
                    CHECK(d.at(i, j) == expect);
                }
        }
}

TEST_CASE("eccentricity matrix of Delta(Q_n) is block diagonal") {
    // Omega block 2(J - I - A_11), coprime-power block 2(J - I), zero cross
    for (long long n = 2; n <= 12; ++n) {
        Graph g = delta(build_generating_graph(dicyclic(n)));
        IntMatrix e = eccentricity_matrix(g);
        int omega = static_cast<int>(2 * n);
        for (int i = 0; i < g.nv; ++i)
            for (int j = 0; j < g.nv; ++j) {
                long long expect;
                if (i == j) expect = 0;
                else if (i < omega && j < omega) expect = g.adjacent(i, j) ? 0 : 2;
                else if (i >= omega && j >= omega) expect = 2;
                else expect = 0;
                CHECK(e.at(i, j) == expect);
            }
    }
}

TEST_CASE("distance and eccentricity matrix invariants") {
    for (long long n = 3; n <= 12; ++n)
        for (Family fam : {Family::Dicyclic, Family::Dihedral}) {
            Graph g = delta(build_generating_graph(GroupId(fam, n)));
            IntMatrix d = distance_matrix(g), e = eccentricity_matrix(g);
            CHECK(d.is_symmetric());
            CHECK(e.is_symmetric());
            for (int i = 0; i < g.nv; ++i) {
                CHECK(d.at(i, i) == 0);
                CHECK(e.at(i, i) == 0);
                for (int j = 0; j < g.nv; ++j) {
                    CHECK(0 <= d.at(i, j));
                    CHECK(d.at(i, j) <= 2);
                    CHECK((e.at(i, j) == 0 || e.at(i, j) == d.at(i, j)));
                }
            }
        }
}

TEST_CASE("construction and profile error paths") {
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 0), invalid_input);
    CHECK_THROWS_AS(g.add_edge(0, 5), invalid_input);

    // wrong order for the family
    CHECK_THROWS_AS(degree_profile(Graph(7), dihedral(4)), invalid_input);
    // right order, wrong edges: internal consistency failure
    CHECK_THROWS_AS(degree_profile(Graph(8), dihedral(4)), internal_error);

    CHECK_THROWS_AS(element_from_index(99, dicyclic(2)), invalid_input);
    GroupId q4 = dicyclic(4);
    CHECK_THROWS_AS(multiply(GroupElement{Kind::Power, 12}, power(q4, 1), q4), invalid_input);
}

TEST_CASE("graph export JSON round-trips") {
    Graph q2 = build_generating_graph(dicyclic(2));
    auto j = graph_to_json(q2);
    CHECK(j["vertices"].size() == 8);
    CHECK(j["edges"].size() == 12);
    CHECK(j["family"] == "Q");
    CHECK(graph_from_json(j) == q2);

    Graph dq6 = delta(build_generating_graph(dicyclic(6)));
    CHECK(graph_from_json(graph_to_json(dq6)) == dq6);

    Graph plain(3);
    plain.add_edge(0, 1);
    CHECK(graph_from_json(graph_to_json(plain)) == plain);
}

TEST_CASE("graph export DOT and CSV") {
    Graph q2 = build_generating_graph(dicyclic(2));
    std::string dot = graph_to_dot(q2);
    CHECK(std::count(dot.begin(), dot.end(), '-') == 2 * 12); // each edge prints one "--"
    CHECK(dot.find("\"x*y\"") != std::string::npos);

    Graph edgeless(3);
    std::string dot2 = graph_to_dot(edgeless);
    CHECK(dot2.find("--") == std::string::npos);

    std::string csv = graph_to_csv_edges(q2);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 12);
    CHECK(csv.rfind("0,1\n", 0) == 0);
}
