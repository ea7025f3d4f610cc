// Command-line surface: spectrum queries (closed forms, numeric oracles, or
// both), graph exports, invariant reports, generation probability and the
// verification sweep with errata detection.
//
// Exit codes: 0 success, 1 verification failure or closed-vs-numeric
// mismatch, 2 usage or domain error.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gengraph/graph.hpp"
#include "gengraph/group.hpp"
#include "gengraph/invariants.hpp"
#include "gengraph/linalg.hpp"
#include "gengraph/partition.hpp"
#include "gengraph/spectra.hpp"
#include "gengraph/verify.hpp"

namespace {

using namespace gengraph;
using nlohmann::json;

Family parse_family(const std::string& f) {
    if (f == "Q" || f == "q") return Family::Dicyclic;
    if (f == "D" || f == "d") return Family::Dihedral;
    throw invalid_input("family must be Q or D, got '" + f + "'");
}

std::string fam_str(Family f) { return f == Family::Dicyclic ? "Q" : "D"; }

std::string approx_str(double v) {
    std::ostringstream os;
    os << std::setprecision(9) << v;
    return os.str();
}

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

Spectrum closed_spectrum(Family fam, long long n, const std::string& matrix) {
    bool q = fam == Family::Dicyclic;
    if (matrix == "adj") return q ? adjacency_spectrum_Q(n) : adjacency_spectrum_D(n);
    if (matrix == "lap") return q ? laplacian_spectrum_Q(n) : laplacian_spectrum_D(n);
    if (matrix == "dist") return q ? distance_spectrum_Q(n) : distance_spectrum_D(n);
    throw invalid_input("matrix must be adj, lap, dist or ecc");
}

IntMatrix numeric_matrix(Family fam, long long n, const std::string& matrix) {
    Graph g = build_generating_graph(GroupId(fam, n));
    if (matrix == "adj") return g.adjacency_matrix();
    if (matrix == "lap") return g.laplacian_matrix();
    if (matrix == "dist") return distance_matrix(delta(g));
    if (matrix == "ecc") return eccentricity_matrix(delta(g));
    throw invalid_input("matrix must be adj, lap, dist or ecc");
}

json spectrum_json(Family fam, long long n, const std::string& matrix, const Spectrum& s) {
    json entries = json::array();
    for (const auto& [v, m] : s.entries)
        entries.push_back({{"a", rat_str(v.a)},
                           {"b", rat_str(v.b)},
                           {"disc", v.disc},
                           {"approx", v.to_double()},
                           {"mult", m}});
    return json{{"family", fam_str(fam)}, {"n", n}, {"matrix", matrix}, {"entries", entries}};
}

json factored_json(const FactoredPoly& f) {
    json factors = json::array();
    for (const auto& [g, e] : f.factors) {
        json coeffs = json::array();
        for (const auto& c : g.c) {
            if (!c.fits_slong_p()) throw internal_error("factor coefficient exceeds JSON range");
            coeffs.push_back(c.get_si());
        }
        factors.push_back({{"coeffs", coeffs}, {"exp", e}});
    }
    return json{{"factors", factors}};
}

std::string spectrum_text(const Spectrum& s) {
    std::ostringstream os;
    for (const auto& [v, m] : s.entries)
        os << "  " << v.to_string() << "  (approx " << approx_str(v.to_double()) << ")  mult " << m
           << "\n";
    return os.str();
}

std::string spectrum_csv(const Spectrum& s) {
    std::ostringstream os;
    os << "a,b,disc,approx,mult\n";
    for (const auto& [v, m] : s.entries)
        os << rat_str(v.a) << "," << rat_str(v.b) << "," << v.disc << "," << approx_str(v.to_double())
           << "," << m << "\n";
    return os.str();
}

int cmd_spectrum(Family fam, long long n, const std::string& matrix, const std::string& mode,
                 const std::string& format) {
    bool is_ecc = matrix == "ecc";
    std::optional<EccCharpoly> ecc;
    std::optional<Spectrum> closed;
    if (mode == "closed" || mode == "both") {
        if (is_ecc) {
            ecc = fam == Family::Dicyclic ? eccentricity_charpoly_Q(n) : eccentricity_charpoly_D(n);
            closed = factored_roots_spectrum(ecc->verified);
        } else {
            closed = closed_spectrum(fam, n, matrix);
        }
    }

    std::optional<std::vector<double>> numeric;
    std::optional<IntMatrix> m;
    if (mode == "numeric" || mode == "both") {
        m = numeric_matrix(fam, n, matrix);
        numeric = symmetric_eigenvalues(*m);
    }

    std::string head = fam_str(fam) + "_" + std::to_string(n) + " " + matrix;
    if (format == "json") {
        json j = closed ? spectrum_json(fam, n, matrix, *closed)
                        : json{{"family", fam_str(fam)}, {"n", n}, {"matrix", matrix}};
        if (ecc) {
            j["charpoly"] = factored_json(ecc->verified);
            j["published"] = factored_json(ecc->published);
            j["published_matches"] = expand(ecc->published) == expand(ecc->verified);
        }
        if (numeric) j["numeric"] = *numeric;
        if (closed && numeric) {
            auto match = spectra_match(*closed, *numeric);
            j["match"] = match.ok;
            j["worst_deviation"] = match.worst_deviation;
        }
        std::cout << j.dump(2) << "\n";
        if (closed && numeric && !spectra_match(*closed, *numeric).ok) return 1;
        return 0;
    }
    if (format == "csv") {
        if (!closed) throw invalid_input("csv output needs a closed-form spectrum");
        std::cout << spectrum_csv(*closed);
        return 0;
    }

    int rc = 0;
    if (closed) {
        std::cout << head << " (closed form)\n";
        if (ecc) {
            std::cout << "  charpoly " << ecc->verified.to_string() << "\n";
            bool agrees = expand(ecc->published) == expand(ecc->verified);
            if (agrees)
                std::cout << "  published form matches: " << ecc->published.to_string() << "\n";
            else
                std::cout << "  published form DIFFERS (errata): " << ecc->published.to_string()
                          << "\n";
        }
        std::cout << spectrum_text(*closed);
    }
    if (numeric && mode == "numeric") {
        std::cout << head << " (numeric oracle)\n";
        for (double v : *numeric) std::cout << "  " << approx_str(v) << "\n";
    }
    if (closed && numeric) {
        auto match = spectra_match(*closed, *numeric);
        std::cout << "numeric match: " << (match.ok ? "yes" : "NO") << ", worst deviation "
                  << detail::deviation_str(match.worst_deviation) << "\n";
        if (is_ecc) {
            bool exact = expand(ecc->verified) == charpoly_exact(*m);
            std::cout << "exact charpoly match: " << (exact ? "yes" : "NO") << "\n";
            if (!exact) rc = 1;
        }
        if (!match.ok) rc = 1;
    }
    return rc;
}

// ---------------------------------------------------------------------------
// graph / props / prob
// ---------------------------------------------------------------------------

int cmd_graph(Family fam, long long n, const std::string& format) {
    Graph g = build_generating_graph(GroupId(fam, n));
    GraphFormat f;
    if (format == "dot") f = GraphFormat::DOT;
    else if (format == "json") f = GraphFormat::JSON;
    else if (format == "csv") f = GraphFormat::CSVEdges;
    else throw invalid_input("graph format must be dot, json or csv");
    std::cout << export_graph(g, f);
    return 0;
}

int cmd_props(Family fam, long long n) {
    GroupId id(fam, n);
    Graph dg = delta(build_generating_graph(id));
    json j;
    j["n"] = n;
    auto null_json = json(nullptr);
    bool small = dg.nv <= 100;
    j["omega"] = small ? json(clique_number(dg)) : null_json;
    j["chi"] = small ? json(chromatic_number(dg)) : null_json;
    j["alpha"] = small ? json(independence_number(dg)) : null_json;
    if (small) {
        auto dom = domination_numbers(dg);
        j["gamma"] = dom.gamma;
        j["gamma_t"] = dom.gamma_total;
    } else {
        j["gamma"] = null_json;
        j["gamma_t"] = null_json;
    }
    auto gr = girth(dg);
    j["girth"] = gr ? json(*gr) : null_json;
    j["eulerian"] = is_eulerian(dg);
    if (dg.nv <= 30) {
        auto ch = eulerian_hamiltonian(dg);
        j["hamiltonian_cycle"] = ch.hamiltonian_cycle;
        j["hamiltonian_path"] = ch.hamiltonian_path;
    } else {
        j["hamiltonian_cycle"] = null_json;
        j["hamiltonian_path"] = null_json;
    }
    j["pancyclic"] = dg.nv <= 16 ? json(pancyclic_check(dg)) : null_json;
    j["planar"] = fam == Family::Dicyclic ? json(planarity_verdict(dg, id).planar) : null_json;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_prob(Family fam, long long n) {
    std::cout << rat_str(generating_probability(GroupId(fam, n))) << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

std::pair<long long, long long> parse_range(const std::string& text) {
    auto pos = text.find("..");
    if (pos == std::string::npos) throw invalid_input("range must look like A..B");
    try {
        long long a = std::stoll(text.substr(0, pos));
        long long b = std::stoll(text.substr(pos + 2));
        return {a, b};
    } catch (const std::exception&) {
        throw invalid_input("range must look like A..B with integers");
    }
}

int cmd_verify(const std::string& range, const std::string& checks_arg, bool as_json,
               unsigned threads) {
    auto [from, to] = parse_range(range);
    std::set<std::string> checks;
    if (checks_arg.empty() || checks_arg == "all") {
        checks = all_check_names();
    } else {
        std::stringstream ss(checks_arg);
        std::string item;
        while (std::getline(ss, item, ',')) checks.insert(item);
    }
    VerifyReport report = run_verify(from, to, checks, threads);
    if (as_json)
        std::cout << report_to_json(report).dump(2) << "\n";
    else
        std::cout << report_to_text(report);
    return report.has_fail() ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generating-graph spectra of dihedral and dicyclic groups"};
    app.require_subcommand(1);

    std::string family = "Q", matrix = "adj", mode = "both", format = "text";
    long long n = 2;
    bool as_json = false;

    auto* sp = app.add_subcommand("spectrum", "closed-form and numeric spectra");
    sp->add_option("family,--family", family, "Q or D");
    sp->add_option("n,--n", n, "group parameter n >= 2");
    sp->add_option("matrix,--matrix", matrix, "adj|lap|dist|ecc");
    sp->add_option("mode,--mode", mode, "closed|numeric|both")
        ->check(CLI::IsMember({"closed", "numeric", "both"}));
    sp->add_option("--format", format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sp->add_flag("--json", as_json, "shorthand for --format json");

    std::string gformat = "dot";
    auto* gr = app.add_subcommand("graph", "export the generating graph");
    gr->add_option("family,--family", family, "Q or D");
    gr->add_option("n,--n", n, "group parameter");
    gr->add_option("format,--format", gformat, "dot|json|csv");

    auto* pr = app.add_subcommand("props", "invariants of the Delta graph as JSON");
    pr->add_option("family,--family", family, "Q or D");
    pr->add_option("n,--n", n, "group parameter");

    auto* pb = app.add_subcommand("prob", "exact generation probability");
    std::string prob_family = "Q";
    pb->add_option("n,--n", n, "group parameter");
    pb->add_option("--family", prob_family, "Q or D");

    std::string range = "2..12", checks = "all";
    unsigned threads = std::thread::hardware_concurrency();
    auto* vf = app.add_subcommand("verify", "closed forms vs oracles over a range of n");
    vf->add_option("range,--range", range, "A..B");
    vf->add_option("--checks", checks, "comma-separated subset of checks, or 'all'");
    vf->add_flag("--json", as_json, "emit the report as JSON");
    vf->add_option("--threads", threads, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (as_json && format == "text") format = "json";
        if (sp->parsed()) return cmd_spectrum(parse_family(family), n, matrix, mode, format);
        if (gr->parsed()) return cmd_graph(parse_family(family), n, gformat);
        if (pr->parsed()) return cmd_props(parse_family(family), n);
        if (pb->parsed()) return cmd_prob(parse_family(prob_family), n);
        if (vf->parsed()) return cmd_verify(range, checks, as_json, threads);
    } catch (const invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const out_of_domain& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const capacity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
