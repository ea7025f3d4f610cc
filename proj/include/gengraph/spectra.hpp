#pragma once

// Exact closed-form spectra and characteristic polynomials for the
// generating graphs of D_n and Q_n: adjacency, Laplacian, distance and
// eccentricity, plus the three join-spectrum combinators they rest on.
//
// Eigenvalues are quadratic values a + b*sqrt(disc) with exact rational a, b
// and squarefree disc; perfect-square discriminants collapse into the
// rational part so multiset comparison is canonical.
//
// The eccentricity characteristic polynomials come in two versions: the
// verified one (validated against the exact charpoly oracle) and the
// published one, kept so discrepancies can be reported side by side.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gengraph/errors.hpp"
#include "gengraph/linalg.hpp"
#include "gengraph/numtheory.hpp"

namespace gengraph {

// ---------------------------------------------------------------------------
// QuadraticValue: a + b*sqrt(disc), disc squarefree, disc = 0 forces b = 0.
// ---------------------------------------------------------------------------

struct QuadraticValue {
    BigRat a = 0;
    BigRat b = 0;
    long long disc = 0;

    QuadraticValue() = default;
    QuadraticValue(BigRat a_, BigRat b_, long long disc_) : a(std::move(a_)), b(std::move(b_)), disc(disc_) {
        normalize();
    }
    QuadraticValue(long long v) : a(static_cast<long>(v)) {}
    QuadraticValue(BigRat v) : a(std::move(v)) { a.canonicalize(); }

    void normalize() {
        a.canonicalize();
        b.canonicalize();
        if (disc < 0) throw invalid_input("QuadraticValue: negative discriminant");
        if (b == 0 || disc == 0) {
            b = 0;
            disc = 0;
            return;
        }
        // pull square factors out of disc
        for (long long s = 2; s * s <= disc; ++s)
            while (disc % (s * s) == 0) {
                disc /= s * s;
                b *= static_cast<long>(s);
            }
        if (disc == 1) {
            a += b;
            b = 0;
            disc = 0;
        }
    }

    bool is_rational() const { return disc == 0; }

    double to_double() const { return a.get_d() + b.get_d() * std::sqrt(static_cast<double>(disc)); }

    bool operator==(const QuadraticValue& o) const {
        return a == o.a && b == o.b && disc == o.disc;
    }

    QuadraticValue operator-() const { return {-a, -b, disc}; }
    QuadraticValue operator+(const BigRat& r) const { return {a + r, b, disc}; }
    QuadraticValue operator*(const BigRat& r) const { return {a * r, b * r, disc}; }

    std::string to_string() const {
        if (is_rational()) return rat_str_compact(a);
        std::string s = a == 0 ? "" : rat_str_compact(a);
        BigRat babs(b < 0 ? BigRat(-b) : b);
        std::string bs = rat_str_compact(babs);
        std::string root = "sqrt(" + std::to_string(disc) + ")";
        std::string term = (babs == 1 ? root : bs + "*" + root);
        if (s.empty()) return (b < 0 ? "-" : "") + term;
        return s + (b < 0 ? " - " : " + ") + term;
    }
};

// ---------------------------------------------------------------------------
// Spectrum: multiset of exact eigenvalues with multiplicities, kept sorted by
// numeric value descending (ties broken by the exact fields).
// ---------------------------------------------------------------------------

struct Spectrum {
    std::vector<std::pair<QuadraticValue, long long>> entries;

    void add(QuadraticValue v, long long mult) {
        if (mult < 0) throw invalid_input("Spectrum: negative multiplicity");
        if (mult == 0) return;
        for (auto& [w, m] : entries)
            if (w == v) {
                m += mult;
                return;
            }
        entries.emplace_back(std::move(v), mult);
        canonicalize();
    }

    void canonicalize() {
        std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) {
            double dx = x.first.to_double(), dy = y.first.to_double();
            if (dx != dy) return dx > dy;
            if (x.first.disc != y.first.disc) return x.first.disc < y.first.disc;
            if (x.first.a != y.first.a) return x.first.a > y.first.a;
            return x.first.b > y.first.b;
        });
    }

    long long total_multiplicity() const {
        long long t = 0;
        for (const auto& [v, m] : entries) t += m;
        return t;
    }

    bool contains(const QuadraticValue& v) const {
        for (const auto& [w, m] : entries)
            if (w == v) return true;
        return false;
    }

    // Removes one copy of v; false when absent.
    bool remove_one(const QuadraticValue& v) {
        for (std::size_t i = 0; i < entries.size(); ++i)
            if (entries[i].first == v) {
                if (--entries[i].second == 0) entries.erase(entries.begin() + i);
                return true;
            }
        return false;
    }

    // Exact eigenvalue sum; empty when the irrational parts fail to cancel.
    std::optional<BigRat> trace_exact() const {
        BigRat rat = 0;
        std::vector<std::pair<long long, BigRat>> irr;
        for (const auto& [v, m] : entries) {
            rat += v.a * to_rat(m);
            if (v.disc != 0) {
                bool found = false;
                for (auto& [d, coeff] : irr)
                    if (d == v.disc) {
                        coeff += v.b * to_rat(m);
                        found = true;
                    }
                if (!found) irr.emplace_back(v.disc, v.b * to_rat(m));
            }
        }
        for (const auto& [d, coeff] : irr)
            if (coeff != 0) return std::nullopt;
        rat.canonicalize();
        return rat;
    }

    std::vector<double> to_doubles() const {
        std::vector<double> out;
        for (const auto& [v, m] : entries)
            for (long long k = 0; k < m; ++k) out.push_back(v.to_double());
        std::sort(out.begin(), out.end(), std::greater<double>());
        return out;
    }

    bool operator==(const Spectrum& o) const { return entries == o.entries; }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (i) s += ", ";
            s += entries[i].first.to_string();
            if (entries[i].second > 1) s += "^" + std::to_string(entries[i].second);
        }
        return s + "}";
    }
};

// ---------------------------------------------------------------------------
// Join combinators for regular parts.
// ---------------------------------------------------------------------------

// Adjacency spectrum of X1 v X2 for k_i-regular X_i on n_i vertices: both
// Perron values are replaced by ((k1+k2) +- sqrt((k1-k2)^2 + 4 n1 n2)) / 2.
inline Spectrum join_adjacency(Spectrum s1, long long n1, long long k1, Spectrum s2, long long n2,
                               long long k2) {
    if (s1.total_multiplicity() != n1 || s2.total_multiplicity() != n2)
        throw invalid_input("join_adjacency: spectrum size differs from part order");
    if (!s1.remove_one(QuadraticValue(k1)) || !s2.remove_one(QuadraticValue(k2)))
        throw invalid_input("join_adjacency: regularity degree missing from part spectrum");
    Spectrum out;
    for (const auto& [v, m] : s1.entries) out.add(v, m);
    for (const auto& [v, m] : s2.entries) out.add(v, m);
    long long disc = (k1 - k2) * (k1 - k2) + 4 * n1 * n2;
    out.add({to_rat(k1 + k2, 2), to_rat(1, 2), disc}, 1);
    out.add({to_rat(k1 + k2, 2), to_rat(-1, 2), disc}, 1);
    return out;
}

// Laplacian spectrum of X1 v X2: drop one zero from each part, shift the
// rest by the opposite order, append 0 and n1 + n2.
inline Spectrum join_laplacian(Spectrum s1, long long n1, Spectrum s2, long long n2) {
    if (s1.total_multiplicity() != n1 || s2.total_multiplicity() != n2)
        throw invalid_input("join_laplacian: spectrum size differs from part order");
    if (!s1.remove_one(QuadraticValue(0)) || !s2.remove_one(QuadraticValue(0)))
        throw invalid_input("join_laplacian: part spectrum lacks a zero eigenvalue");
    Spectrum out;
    for (const auto& [v, m] : s1.entries) out.add(v + to_rat(n2), m);
    for (const auto& [v, m] : s2.entries) out.add(v + to_rat(n1), m);
    out.add(QuadraticValue(0), 1);
    out.add(QuadraticValue(n1 + n2), 1);
    return out;
}

// Distance spectrum of X1 v X2 (adjacency inputs): non-Perron eigenvalues
// map to -lambda - 2; the Perron pair becomes
// n1+n2-2-(k1+k2)/2 +- sqrt((n1-n2-(k1-k2)/2)^2 + n1 n2).
inline Spectrum join_distance(Spectrum s1, long long n1, long long k1, Spectrum s2, long long n2,
                              long long k2) {
    if (s1.total_multiplicity() != n1 || s2.total_multiplicity() != n2)
        throw invalid_input("join_distance: spectrum size differs from part order");
    if (!s1.remove_one(QuadraticValue(k1)) || !s2.remove_one(QuadraticValue(k2)))
        throw invalid_input("join_distance: regularity degree missing from part spectrum");
    Spectrum out;
    for (const auto& [v, m] : s1.entries) out.add(-v + to_rat(-2), m);
    for (const auto& [v, m] : s2.entries) out.add(-v + to_rat(-2), m);
    long long t = 2 * (n1 - n2) - (k1 - k2);
    long long disc = t * t + 4 * n1 * n2;
    BigRat mid = to_rat(2 * (n1 + n2 - 2) - (k1 + k2), 2);
    out.add({mid, to_rat(1, 2), disc}, 1);
    out.add({mid, to_rat(-1, 2), disc}, 1);
    return out;
}

// ---------------------------------------------------------------------------
// Closed-form spectra. Throughout, n0 = radical(n), phi = euler_phi(n) and
// d runs over the divisors of n0 greater than 1, contributing the eigenvalue
// mu(d) phi(n) / phi(d) with multiplicity phi(d) (possibly scaled).
// ---------------------------------------------------------------------------

namespace detail {

inline void require_n(long long n, long long least, const char* who) {
    if (n < 2) throw invalid_input(std::string(who) + ": n must be >= 2");
    if (n < least)
        throw out_of_domain(std::string(who) + ": defined for n >= " + std::to_string(least));
}

} // namespace detail

// Spectrum of A(Omega_2), the reflection-induced subgraph of Gamma(D_n):
// 0 with multiplicity n - n0, phi(n) once, mu(d) phi(n)/phi(d) with
// multiplicity phi(d) for each divisor d > 1 of n0.
inline Spectrum adjacency_spectrum_omega2_D(long long n) {
    if (n < 2) throw invalid_input("adjacency_spectrum_omega2_D: n must be >= 2");
    long long n0 = radical(n), phi = euler_phi(n);
    Spectrum s;
    s.add(QuadraticValue(0), n - n0);
    s.add(QuadraticValue(phi), 1);
    for (long long d : divisors(n0))
        if (d > 1) s.add(QuadraticValue(mobius(d) * (phi / euler_phi(d))), euler_phi(d));
    return s;
}

// Spectrum of A(D_n): 0 with multiplicity 2n - (n0+1), the mu(d) phi/phi(d)
// family, and the join pair (phi +- sqrt(phi^2 + 4 n phi)) / 2.
inline Spectrum adjacency_spectrum_D(long long n) {
    if (n < 2) throw invalid_input("adjacency_spectrum_D: n must be >= 2");
    long long n0 = radical(n), phi = euler_phi(n);
    Spectrum s;
    s.add(QuadraticValue(0), 2 * n - (n0 + 1));
    for (long long d : divisors(n0))
        if (d > 1) s.add(QuadraticValue(mobius(d) * (phi / euler_phi(d))), euler_phi(d));
    long long disc = phi * phi + 4 * n * phi;
    s.add({to_rat(phi, 2), to_rat(1, 2), disc}, 1);
    s.add({to_rat(phi, 2), to_rat(-1, 2), disc}, 1);
    return s;
}

// Spectrum of A_11 = A(Gamma_Omega) inside Gamma(Q_n): exactly twice the
// A(Omega_2) values, zero multiplicity adjusted to 2n - n0.
inline Spectrum adjacency_spectrum_omega_Q(long long n) {
    if (n < 2) throw invalid_input("adjacency_spectrum_omega_Q: n must be >= 2");
    long long n0 = radical(n), phi = euler_phi(n);
    Spectrum s;
    s.add(QuadraticValue(0), 2 * n - n0);
    s.add(QuadraticValue(2 * phi), 1);
    for (long long d : divisors(n0))
        if (d > 1) s.add(QuadraticValue(2 * mobius(d) * (phi / euler_phi(d))), euler_phi(d));
    return s;
}

// Spectrum of A(Q_n): 0 with multiplicity 4n - (n0+1), doubled divisor
// family, join pair phi +- sqrt(phi^2 + 4 n phi).
inline Spectrum adjacency_spectrum_Q(long long n) {
    if (n < 2) throw invalid_input("adjacency_spectrum_Q: n must be >= 2");
    long long n0 = radical(n), phi = euler_phi(n);
    Spectrum s;
    s.add(QuadraticValue(0), 4 * n - (n0 + 1));
    for (long long d : divisors(n0))
        if (d > 1) s.add(QuadraticValue(2 * mobius(d) * (phi / euler_phi(d))), euler_phi(d));
    long long disc = phi * phi + 4 * n * phi;
    s.add({to_rat(phi), to_rat(1), disc}, 1);
    s.add({to_rat(phi), to_rat(-1), disc}, 1);
    return s;
}

// Laplacian spectrum of Gamma(D_n).
inline Spectrum laplacian_spectrum_D(long long n) {
    if (n < 2) throw invalid_input("laplacian_spectrum_D: n must be >= 2");
    long long n0 = radical(n), phi = euler_phi(n);
    Spectrum s;
    s.add(QuadraticValue(0), n - phi + 1);
    for (long long d : divisors(n0))
        if (d > 1) s.add(QuadraticValue(2 * phi - mobius(d) * (phi / euler_phi(d))), euler_phi(d));
    s.add(QuadraticValue(2 * phi), n - n0);
    s.add(QuadraticValue(n), phi - 1);
    s.add(QuadraticValue(n + phi), 1);
    return s;
}

// Laplacian spectrum of Gamma(Q_n): twice the dihedral values, multiplicities
// adjusted for the doubled strata.
inline Spectrum laplacian_spectrum_Q(long long n) {
    if (n < 2) throw invalid_input("laplacian_spectrum_Q: n must be >= 2");
    long long n0 = radical(n), phi = euler_phi(n);
    Spectrum s;
    s.add(QuadraticValue(0), 2 * (n - phi) + 1);
    for (long long d : divisors(n0))
        if (d > 1) s.add(QuadraticValue(4 * phi - 2 * mobius(d) * (phi / euler_phi(d))), euler_phi(d));
    s.add(QuadraticValue(4 * phi), 2 * n - n0);
    s.add(QuadraticValue(2 * n), 2 * phi - 1);
    s.add(QuadraticValue(2 * (n + phi)), 1);
    return s;
}

// Distance spectrum of Delta(D_n), n >= 3 (Delta(D_2) has diameter 1).
inline Spectrum distance_spectrum_D(long long n) {
    detail::require_n(n, 3, "distance_spectrum_D");
    long long n0 = radical(n), phi = euler_phi(n);
    Spectrum s;
    s.add(QuadraticValue(-2), phi + n - n0 - 1);
    for (long long d : divisors(n0))
        if (d > 1) s.add(QuadraticValue(-2 - mobius(d) * (phi / euler_phi(d))), euler_phi(d));
    long long t = 2 * n - 3 * phi;
    long long disc = t * t + 4 * n * phi;
    BigRat mid = to_rat(2 * (n - 2) + phi, 2);
    s.add({mid, to_rat(1, 2), disc}, 1);
    s.add({mid, to_rat(-1, 2), disc}, 1);
    return s;
}

// Distance spectrum of Delta(Q_n), n >= 2.
inline Spectrum distance_spectrum_Q(long long n) {
    if (n < 2) throw invalid_input("distance_spectrum_Q: n must be >= 2");
    long long n0 = radical(n), phi = euler_phi(n);
    Spectrum s;
    s.add(QuadraticValue(-2), 2 * (phi + n) - n0 - 1);
    for (long long d : divisors(n0))
        if (d > 1) s.add(QuadraticValue(-2 - 2 * mobius(d) * (phi / euler_phi(d))), euler_phi(d));
    long long t = 3 * phi - 2 * n;
    long long disc = t * t + 4 * n * phi;
    s.add({to_rat(phi + 2 * (n - 1)), to_rat(1), disc}, 1);
    s.add({to_rat(phi + 2 * (n - 1)), to_rat(-1), disc}, 1);
    return s;
}

// ---------------------------------------------------------------------------
// Eccentricity characteristic polynomials.
//
// The eccentricity matrix of Delta(D_n) for composite n (and of Delta(Q_n)
// for every n) is block diagonal: a 2(J-I) block on the independent stratum
// and 2(J - I - A) on the reflection stratum. The second block reduces to a
// circulant quotient whose eigenvalues are Ramanujan-sum evaluations; the
// l = 0 eigenvalue is n - phi(n) (the block row sum), not a Ramanujan value,
// which is where the published closed form goes wrong. The published factors
// are kept alongside for comparison.
// ---------------------------------------------------------------------------

struct EccCharpoly {
    FactoredPoly verified;
    FactoredPoly published;
};

namespace detail {

// x-roots of the 2(J - I - A) block: the quotient under the neighborhood
// classes is circulant; eigenvalue at class-shift l is scale*(n0*[l=0] -
// c_{n0}(l)) per class size, mapped through x = 2q - 2. Grouping l by
// d = n0 / gcd(n0, l) gives multiplicity phi(d).
inline void push_reflection_block(FactoredPoly& f, long long n, long long scale_per_class) {
    long long n0 = radical(n);
    // l = 0: row sum of the block quotient
    long long q0 = scale_per_class * (n0 - euler_phi(n0));
    f.push(BigPoly::linear_root(2 * q0 - 2), 1);
    for (long long d : divisors(n0)) {
        if (d == 1) continue;
        long long l = n0 / d; // representative with n0/gcd(n0, l) = d
        long long q = -scale_per_class * ramanujan_sum(n0, l);
        f.push(BigPoly::linear_root(2 * q - 2), euler_phi(d));
    }
}

} // namespace detail

inline EccCharpoly eccentricity_charpoly_D(long long n) {
    detail::require_n(n, 3, "eccentricity_charpoly_D");
    long long n0 = radical(n), phi = euler_phi(n);
    EccCharpoly r;
    if (is_prime(n)) {
        long long p = n;
        BigPoly quad = BigPoly::from_coeffs({(p - 1) * (p - 4), -(3 * p - 5), 1});
        r.verified.push(quad, 1);
        r.verified.push(BigPoly::from_coeffs({2, 1}), p - 2);
        r.verified.push(BigPoly::from_coeffs({1, 1}), p - 1);
        r.published = r.verified;
        return r;
    }
    // verified composite branch
    r.verified.push(BigPoly::linear_root(2 * phi - 2), 1);
    r.verified.push(BigPoly::from_coeffs({2, 1}), phi - 1);
    detail::push_reflection_block(r.verified, n, n / n0);
    r.verified.push(BigPoly::from_coeffs({2, 1}), n - n0);
    // published composite branch: (x+2)^{phi+n-n0-1} (x - phi)
    //   prod_{d|n0} (x - ((-1)^{k_d+1} 2 phi / phi(d) - 2))^{phi(d)}
    r.published.push(BigPoly::from_coeffs({2, 1}), phi + n - n0 - 1);
    r.published.push(BigPoly::linear_root(phi), 1);
    for (long long d : divisors(n0)) {
        int kd = Factorization::of(d).distinct_prime_count();
        long long sign = kd % 2 == 0 ? -1 : 1; // (-1)^{k_d + 1}
        r.published.push(BigPoly::linear_root(sign * (2 * phi / euler_phi(d)) - 2), euler_phi(d));
    }
    return r;
}

inline EccCharpoly eccentricity_charpoly_Q(long long n) {
    if (n < 2) throw invalid_input("eccentricity_charpoly_Q: n must be >= 2");
    long long n0 = radical(n), phi = euler_phi(n);
    EccCharpoly r;
    // verified: (x - (4phi-2)) (x+2)^{2phi-1} on R1, circulant block on Omega
    r.verified.push(BigPoly::linear_root(4 * phi - 2), 1);
    r.verified.push(BigPoly::from_coeffs({2, 1}), 2 * phi - 1);
    detail::push_reflection_block(r.verified, n, 2 * n / n0);
    r.verified.push(BigPoly::from_coeffs({2, 1}), 2 * n - n0);
    // published: (x - (4phi+2)) (x+2)^{2(phi+n)-(n0+1)}
    //   prod_{d|n0} (x - ((-1)^{k_d+1} 4 phi / phi(d) - 2))^{phi(d)}
    r.published.push(BigPoly::linear_root(4 * phi + 2), 1);
    r.published.push(BigPoly::from_coeffs({2, 1}), 2 * (phi + n) - (n0 + 1));
    for (long long d : divisors(n0)) {
        int kd = Factorization::of(d).distinct_prime_count();
        long long sign = kd % 2 == 0 ? -1 : 1;
        r.published.push(BigPoly::linear_root(sign * (4 * phi / euler_phi(d)) - 2), euler_phi(d));
    }
    return r;
}

// Root multiset of a factored polynomial whose factors are linear or
// quadratic; used to compare eccentricity closed forms numerically.
inline Spectrum factored_roots_spectrum(const FactoredPoly& f) {
    Spectrum s;
    for (const auto& [g, e] : f.factors) {
        if (g.degree() == 1) {
            if (!g.c[0].fits_slong_p()) throw capacity_error("factored_roots_spectrum: root too large");
            s.add(QuadraticValue(-g.c[0].get_si()), e);
        } else if (g.degree() == 2) {
            // x^2 + px + q -> (-p +- sqrt(p^2 - 4q)) / 2
            BigInt p = g.c[1], q = g.c[0];
            BigInt disc = p * p - 4 * q;
            if (disc < 0 || !disc.fits_slong_p())
                throw invalid_input("factored_roots_spectrum: non-real or oversized quadratic factor");
            BigRat mid = BigRat(-p) / 2;
            s.add({mid, to_rat(1, 2), disc.get_si()}, e);
            s.add({mid, to_rat(-1, 2), disc.get_si()}, e);
        } else {
            throw invalid_input("factored_roots_spectrum: factor degree beyond 2");
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// spectra_match: greedy pairing of the closed-form values (as floats) against
// a numeric eigenvalue list, both sorted descending.
// ---------------------------------------------------------------------------

struct MatchReport {
    bool ok = false;
    double worst_deviation = 0.0;
    std::size_t worst_index = 0;
};

inline MatchReport spectra_match(const Spectrum& closed, const std::vector<double>& numeric,
                                 double tol = 1e-7) {
    if (closed.total_multiplicity() != static_cast<long long>(numeric.size()))
        throw invalid_input("spectra_match: multiplicity total differs from eigenvalue count");
    std::vector<double> c = closed.to_doubles();
    std::vector<double> m(numeric);
    std::sort(m.begin(), m.end(), std::greater<double>());
    MatchReport r;
    r.ok = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        double dev = std::fabs(c[i] - m[i]);
        if (dev > r.worst_deviation) {
            r.worst_deviation = dev;
            r.worst_index = i;
        }
    }
    r.ok = r.worst_deviation < tol;
    return r;
}

} // namespace gengraph
