#pragma once

// Oracle-side linear algebra: dense integer matrices, exact characteristic
// polynomials (Faddeev-LeVerrier over arbitrary-precision integers), exact
// polynomial division over the rationals, factored-polynomial expansion and
// a cyclic Jacobi eigensolver for symmetric integer matrices.
//
// Arbitrary precision is GMP (mpz_class / mpq_class); every division the
// recurrences rely on being exact is checked, not assumed.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "gengraph/errors.hpp"

namespace gengraph {

using BigInt = mpz_class;
using BigRat = mpq_class;

// gmpxx predates long long constructors; long is 64-bit on every platform
// this library targets.
static_assert(sizeof(long) == sizeof(long long));

inline BigInt to_big(long long v) { return BigInt(static_cast<long>(v)); }

inline BigRat to_rat(long long num, long long den = 1) {
    BigRat r(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
    r.canonicalize();
    return r;
}

inline std::string bigint_str(const BigInt& v) { return v.get_str(); }

// Canonical "p/q" form, denominator always shown.
inline std::string rat_str(const BigRat& v) {
    BigRat c(v);
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Human form: denominator elided when 1.
inline std::string rat_str_compact(const BigRat& v) {
    BigRat c(v);
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline bool rat_is_integer(const BigRat& v) {
    BigRat c(v);
    c.canonicalize();
    return c.get_den() == 1;
}

// ---------------------------------------------------------------------------
// IntMatrix: dense square matrix with 64-bit integer entries.
// ---------------------------------------------------------------------------

struct IntMatrix {
    int n = 0;
    std::vector<long long> e;

    IntMatrix() = default;
    explicit IntMatrix(int order, long long fill = 0)
        : n(order), e(static_cast<std::size_t>(order) * order, fill) {
        if (order < 0) throw invalid_input("IntMatrix: negative order");
    }

    static IntMatrix identity(int order) {
        IntMatrix m(order);
        for (int i = 0; i < order; ++i) m.at(i, i) = 1;
        return m;
    }

    long long& at(int i, int j) { return e[static_cast<std::size_t>(i) * n + j]; }
    long long at(int i, int j) const { return e[static_cast<std::size_t>(i) * n + j]; }

    long long trace() const {
        long long t = 0;
        for (int i = 0; i < n; ++i) t += at(i, i);
        return t;
    }

    bool is_symmetric() const {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    bool operator==(const IntMatrix& o) const = default;
};

// ---------------------------------------------------------------------------
// BigPoly: dense polynomial with big-integer coefficients, constant term
// first, no trailing zeros (the zero polynomial has an empty vector).
// ---------------------------------------------------------------------------

struct BigPoly {
    std::vector<BigInt> c;

    BigPoly() = default;
    explicit BigPoly(std::vector<BigInt> coeffs) : c(std::move(coeffs)) { trim(); }

    static BigPoly from_coeffs(std::initializer_list<long long> coeffs) {
        BigPoly p;
        for (long long v : coeffs) p.c.push_back(to_big(v));
        p.trim();
        return p;
    }

    static BigPoly constant(long long v) { return from_coeffs({v}); }

    // x - r
    static BigPoly linear_root(long long r) { return from_coeffs({-r, 1}); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for zero
    bool is_monic() const { return !c.empty() && c.back() == 1; }

    const BigInt& coeff(int k) const {
        static const BigInt zero = 0;
        return k >= 0 && k < static_cast<int>(c.size()) ? c[k] : zero;
    }

    bool operator==(const BigPoly& o) const { return c == o.c; }

    BigPoly operator+(const BigPoly& o) const {
        BigPoly r;
        r.c.resize(std::max(c.size(), o.c.size()));
        for (std::size_t i = 0; i < r.c.size(); ++i) {
            if (i < c.size()) r.c[i] += c[i];
            if (i < o.c.size()) r.c[i] += o.c[i];
        }
        r.trim();
        return r;
    }

    BigPoly operator-(const BigPoly& o) const {
        BigPoly r;
        r.c.resize(std::max(c.size(), o.c.size()));
        for (std::size_t i = 0; i < r.c.size(); ++i) {
            if (i < c.size()) r.c[i] += c[i];
            if (i < o.c.size()) r.c[i] -= o.c[i];
        }
        r.trim();
        return r;
    }

    BigPoly operator*(const BigPoly& o) const {
        if (is_zero() || o.is_zero()) return {};
        BigPoly r;
        r.c.assign(c.size() + o.c.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            for (std::size_t j = 0; j < o.c.size(); ++j)
                mpz_addmul(r.c[i + j].get_mpz_t(), c[i].get_mpz_t(), o.c[j].get_mpz_t());
        }
        r.trim();
        return r;
    }

    double eval(double x) const {
        double v = 0.0;
        for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i].get_d();
        return v;
    }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (int k = degree(); k >= 0; --k) {
            const BigInt& a = c[k];
            if (a == 0) continue;
            BigInt mag = abs(a);
            if (s.empty()) {
                if (a < 0) s += "-";
            } else {
                s += a < 0 ? " - " : " + ";
            }
            bool unit = mag == 1;
            if (k == 0) {
                s += mag.get_str();
            } else {
                if (!unit) s += mag.get_str();
                s += var;
                if (k > 1) s += "^" + std::to_string(k);
            }
        }
        return s;
    }
};

// ---------------------------------------------------------------------------
// RatPoly: rational-coefficient polynomial, used for exact division results.
// ---------------------------------------------------------------------------

struct RatPoly {
    std::vector<BigRat> c;

    RatPoly() = default;
    explicit RatPoly(const BigPoly& p) {
        c.reserve(p.c.size());
        for (const auto& v : p.c) c.emplace_back(v);
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }

    bool is_integral() const {
        for (const auto& v : c)
            if (!rat_is_integer(v)) return false;
        return true;
    }

    BigPoly to_big_poly() const {
        BigPoly p;
        p.c.reserve(c.size());
        for (const auto& v : c) {
            BigRat r(v);
            r.canonicalize();
            if (r.get_den() != 1)
                throw invalid_input("RatPoly: non-integral coefficient " + rat_str(v));
            p.c.push_back(r.get_num());
        }
        p.trim();
        return p;
    }

    bool operator==(const RatPoly& o) const {
        RatPoly a(*this), b(o);
        a.trim();
        b.trim();
        if (a.c.size() != b.c.size()) return false;
        for (std::size_t i = 0; i < a.c.size(); ++i)
            if (a.c[i] != b.c[i]) return false;
        return true;
    }
};

// Exact long division over the rationals: p = q * quotient + remainder with
// deg(remainder) < deg(q). For monic q (every use in this library) the result
// coefficients stay integral.
inline std::pair<RatPoly, RatPoly> poly_divide(const BigPoly& p, const BigPoly& q) {
    if (q.is_zero()) throw invalid_input("poly_divide: zero divisor");
    RatPoly rem(p), quot;
    int dq = q.degree();
    if (p.degree() >= dq) quot.c.assign(p.degree() - dq + 1, BigRat(0));
    BigRat lead(q.c.back());
    while (!rem.is_zero() && rem.degree() >= dq) {
        int k = rem.degree() - dq;
        BigRat f = rem.c.back() / lead;
        f.canonicalize();
        quot.c[k] = f;
        for (int i = 0; i <= dq; ++i) {
            rem.c[k + i] -= f * BigRat(q.c[i]);
            rem.c[k + i].canonicalize();
        }
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

inline bool poly_divides(const BigPoly& q, const BigPoly& p) {
    return poly_divide(p, q).second.is_zero();
}

// ---------------------------------------------------------------------------
// FactoredPoly: product of monic integer factors with positive exponents.
// Equal factors are merged on insertion, insertion order is preserved.
// ---------------------------------------------------------------------------

struct FactoredPoly {
    std::vector<std::pair<BigPoly, long long>> factors;

    void push(BigPoly f, long long exp) {
        if (exp < 0) throw invalid_input("FactoredPoly: negative exponent");
        if (exp == 0) return;
        if (!f.is_monic()) throw invalid_input("FactoredPoly: factor must be monic");
        for (auto& [g, e] : factors)
            if (g == f) {
                e += exp;
                return;
            }
        factors.emplace_back(std::move(f), exp);
    }

    long long degree() const {
        long long d = 0;
        for (const auto& [f, e] : factors) d += static_cast<long long>(f.degree()) * e;
        return d;
    }

    bool operator==(const FactoredPoly& o) const = default;

    std::string to_string(const std::string& var = "x") const {
        if (factors.empty()) return "1";
        std::string s;
        for (const auto& [f, e] : factors) {
            s += "(" + f.to_string(var) + ")";
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }
};

inline BigPoly expand(const FactoredPoly& f) {
    BigPoly r = BigPoly::constant(1);
    for (const auto& [g, e] : f.factors)
        for (long long k = 0; k < e; ++k) r = r * g;
    return r;
}

// ---------------------------------------------------------------------------
// charpoly_exact: Faddeev-LeVerrier recurrence.
//
//   N_1 = I,  c_n = 1
//   for k = 1..n:  c_{n-k} = -tr(A N_k) / k,   N_{k+1} = A N_k + c_{n-k} I
//
// Every division by k is exact over the integers; a nonzero remainder or a
// failed final Cayley-Hamilton check reports an internal arithmetic bug.
// ---------------------------------------------------------------------------

inline BigPoly charpoly_exact(const IntMatrix& m) {
    const int n = m.n;
    if (n > 300) throw capacity_error("charpoly_exact: order beyond supported size");
    if (n == 0) return BigPoly::constant(1);

    // Sparse rows of A; generating-graph matrices carry many zero entries.
    std::vector<std::vector<std::pair<int, long long>>> rows(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (long long v = m.at(i, j)) rows[i].emplace_back(j, v);

    std::vector<BigInt> N(static_cast<std::size_t>(n) * n), AN(N.size());
    for (int i = 0; i < n; ++i) N[static_cast<std::size_t>(i) * n + i] = 1;

    std::vector<BigInt> coeff(n + 1);
    coeff[n] = 1;

    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i) {
            const auto& row = rows[i];
            for (int j = 0; j < n; ++j) {
                BigInt& acc = AN[static_cast<std::size_t>(i) * n + j];
                acc = 0;
                for (auto [t, v] : row) {
                    const BigInt& x = N[static_cast<std::size_t>(t) * n + j];
                    if (x == 0) continue;
                    if (v > 0)
                        mpz_addmul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(v));
                    else
                        mpz_submul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(-v));
                }
            }
        }
        BigInt tr = 0;
        for (int i = 0; i < n; ++i) tr += AN[static_cast<std::size_t>(i) * n + i];
        BigInt q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), tr.get_mpz_t(), BigInt(k).get_mpz_t());
        if (r != 0) throw internal_error("charpoly_exact: inexact trace division");
        coeff[n - k] = -q;
        if (k < n) {
            N.swap(AN);
            for (int i = 0; i < n; ++i) N[static_cast<std::size_t>(i) * n + i] += coeff[n - k];
        } else {
            // Cayley-Hamilton: A N_n + c_0 I must vanish.
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    BigInt v = AN[static_cast<std::size_t>(i) * n + j];
                    if (i == j) v += coeff[0];
                    if (v != 0) throw internal_error("charpoly_exact: Cayley-Hamilton check failed");
                }
        }
    }
    return BigPoly(std::move(coeff));
}

// ---------------------------------------------------------------------------
// symmetric_eigenvalues: cyclic Jacobi sweeps until every off-diagonal entry
// is below tol. Returns the diagonal sorted descending.
// ---------------------------------------------------------------------------

inline std::vector<double> symmetric_eigenvalues(const IntMatrix& m, double tol = 1e-9) {
    if (!m.is_symmetric()) throw invalid_input("symmetric_eigenvalues: matrix not symmetric");
    const int n = m.n;
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = static_cast<double>(m.at(i, j));

    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::fabs(at(p, q)));
        if (off < tol) {
            std::vector<double> eig(n);
            for (int i = 0; i < n; ++i) eig[i] = at(i, i);
            std::sort(eig.begin(), eig.end(), std::greater<double>());
            return eig;
        }
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (std::fabs(apq) < tol * 0.1) continue;
                double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double app = at(p, p), aqq = at(q, q);
                at(p, p) = app - t * apq;
                at(q, q) = aqq + t * apq;
                at(p, q) = 0.0;
                at(q, p) = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    double aip = at(i, p), aiq = at(i, q);
                    at(i, p) = c * aip - s * aiq;
                    at(p, i) = at(i, p);
                    at(i, q) = s * aip + c * aiq;
                    at(q, i) = at(i, q);
                }
            }
    }
    throw internal_error("symmetric_eigenvalues: Jacobi sweeps did not converge");
}

} // namespace gengraph
