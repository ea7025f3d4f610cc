#pragma once

// Element arithmetic for the dihedral and dicyclic families, the gcd
// generating-pair rules, a subgroup-closure oracle, generating-pair counts,
// generation probability and Frattini subgroups.
//
// Normal forms: a Power element with exponent a is x^a (dicyclic) or r^a
// (dihedral); a Mixed element with exponent b is x^b*y resp. s*r^b, with the
// exponent reduced mod 2n resp. mod n. The defining relations
//   x^{2n} = 1, x^n = y^2, y x = x^{-1} y      (dicyclic, order 4n)
//   r^n = 1,  s^2 = 1,  s r s = r^{-1}          (dihedral, order 2n)
// are applied during normalization, so every word reduces to one of the
// canonical forms.

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "gengraph/errors.hpp"
#include "gengraph/linalg.hpp"
#include "gengraph/numtheory.hpp"

namespace gengraph {

enum class Family { Dihedral, Dicyclic };

struct GroupId {
    Family family = Family::Dicyclic;
    long long n = 2;

    GroupId() = default;
    GroupId(Family f, long long n_) : family(f), n(n_) {
        if (n < 2) throw invalid_input("GroupId: n must be >= 2");
    }

    long long order() const { return family == Family::Dicyclic ? 4 * n : 2 * n; }
    // Exponent modulus of the cyclic part: 2n for dicyclic, n for dihedral.
    long long power_modulus() const { return family == Family::Dicyclic ? 2 * n : n; }

    std::string label() const {
        return (family == Family::Dicyclic ? "Q_" : "D_") + std::to_string(n);
    }

    bool operator==(const GroupId&) const = default;
};

inline GroupId dicyclic(long long n) { return {Family::Dicyclic, n}; }
inline GroupId dihedral(long long n) { return {Family::Dihedral, n}; }

enum class Kind { Power, Mixed };

struct GroupElement {
    Kind kind = Kind::Power;
    long long exp = 0;

    auto operator<=>(const GroupElement&) const = default;
};

inline GroupElement power(const GroupId& id, long long a) {
    long long m = id.power_modulus();
    return {Kind::Power, ((a % m) + m) % m};
}

inline GroupElement mixed(const GroupId& id, long long b) {
    long long m = id.power_modulus();
    return {Kind::Mixed, ((b % m) + m) % m};
}

inline GroupElement identity_element() { return {Kind::Power, 0}; }

inline void check_element(const GroupElement& g, const GroupId& id) {
    if (g.exp < 0 || g.exp >= id.power_modulus())
        throw invalid_input("element exponent out of range for " + id.label());
}

// Index in [0, |G|): powers first by exponent, then mixed by exponent.
inline int element_index(const GroupElement& g, const GroupId& id) {
    check_element(g, id);
    long long m = id.power_modulus();
    return static_cast<int>(g.kind == Kind::Power ? g.exp : m + g.exp);
}

inline GroupElement element_from_index(int idx, const GroupId& id) {
    long long m = id.power_modulus();
    if (idx < 0 || idx >= id.order()) throw invalid_input("element index out of range");
    return idx < m ? GroupElement{Kind::Power, idx} : GroupElement{Kind::Mixed, idx - m};
}

inline GroupElement multiply(const GroupElement& g, const GroupElement& h, const GroupId& id) {
    check_element(g, id);
    check_element(h, id);
    if (id.family == Family::Dicyclic) {
        long long n = id.n;
        if (g.kind == Kind::Power && h.kind == Kind::Power) return power(id, g.exp + h.exp);
        if (g.kind == Kind::Power && h.kind == Kind::Mixed) return mixed(id, g.exp + h.exp);
        if (g.kind == Kind::Mixed && h.kind == Kind::Power) return mixed(id, g.exp - h.exp);
        return power(id, g.exp - h.exp + n); // (x^a y)(x^b y) = x^{a-b+n}
    }
    if (g.kind == Kind::Power && h.kind == Kind::Power) return power(id, g.exp + h.exp);
    if (g.kind == Kind::Power && h.kind == Kind::Mixed) return mixed(id, h.exp - g.exp);
    if (g.kind == Kind::Mixed && h.kind == Kind::Power) return mixed(id, g.exp + h.exp);
    return power(id, h.exp - g.exp); // (s r^a)(s r^b) = r^{b-a}
}

// Text form: "1" for the identity, "x^3", "x^3*y", "y" (dicyclic) and
// "r^2", "s*r^2", "s" (dihedral); exponents 0 and 1 are elided.
inline std::string format_element(const GroupElement& g, const GroupId& id) {
    check_element(g, id);
    const char* rot = id.family == Family::Dicyclic ? "x" : "r";
    auto pow_str = [&](long long e) -> std::string {
        if (e == 0) return "";
        if (e == 1) return rot;
        return std::string(rot) + "^" + std::to_string(e);
    };
    if (g.kind == Kind::Power) return g.exp == 0 ? "1" : pow_str(g.exp);
    if (id.family == Family::Dicyclic) {
        std::string p = pow_str(g.exp);
        return p.empty() ? "y" : p + "*y";
    }
    std::string p = pow_str(g.exp);
    return p.empty() ? "s" : "s*" + p;
}

inline GroupElement parse_element(const std::string& text, const GroupId& id) {
    const std::string rot = id.family == Family::Dicyclic ? "x" : "r";
    const std::string refl = id.family == Family::Dicyclic ? "y" : "s";
    auto fail = [&]() -> GroupElement {
        throw invalid_input("cannot parse element '" + text + "' for " + id.label());
    };

    std::string s = text;
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    if (s.empty()) return fail();
    if (s == "1") return identity_element();

    bool is_mixed = false;
    if (id.family == Family::Dicyclic) {
        if (s.size() >= 2 && s.substr(s.size() - 2) == "*y") {
            is_mixed = true;
            s = s.substr(0, s.size() - 2);
        } else if (s == "y") {
            return mixed(id, 0);
        }
    } else {
        if (s.rfind("s*", 0) == 0) {
            is_mixed = true;
            s = s.substr(2);
        } else if (s == "s") {
            return mixed(id, 0);
        }
    }

    if (s == rot) return is_mixed ? mixed(id, 1) : power(id, 1);
    if (s.rfind(rot + "^", 0) != 0) return fail();
    std::string digits = s.substr(rot.size() + 1);
    if (digits.empty()) return fail();
    long long e = 0;
    for (char ch : digits) {
        if (ch < '0' || ch > '9') return fail();
        e = e * 10 + (ch - '0');
        if (e > 1'000'000'000) return fail();
    }
    return is_mixed ? mixed(id, e) : power(id, e);
}

// ---------------------------------------------------------------------------
// Strata. Dicyclic: Omega = {x^b y}, R1 = {x^a : gcd(a,n)=1}, R2 = <x> \ R1.
// Dihedral: Omega2 = {s r^b}, Omega1 = {r^a : gcd(a,n)=1}, Omega3 = rest.
// Listed in the fixed vertex order of the generating graph.
// ---------------------------------------------------------------------------

enum class StratumName { Omega, R1, R2, Omega1, Omega2, Omega3 };

inline std::string stratum_label(StratumName s) {
    switch (s) {
        case StratumName::Omega: return "Omega";
        case StratumName::R1: return "R1";
        case StratumName::R2: return "R2";
        case StratumName::Omega1: return "Omega1";
        case StratumName::Omega2: return "Omega2";
        case StratumName::Omega3: return "Omega3";
    }
    return "?";
}

struct Stratum {
    StratumName name;
    std::vector<GroupElement> members;
};

inline std::vector<Stratum> strata(const GroupId& id) {
    long long m = id.power_modulus();
    std::vector<GroupElement> mix, coprime, rest;
    for (long long b = 0; b < m; ++b) mix.push_back({Kind::Mixed, b});
    for (long long a = 0; a < m; ++a)
        (std::gcd(a, id.n) == 1 ? coprime : rest).push_back({Kind::Power, a});
    if (id.family == Family::Dicyclic)
        return {{StratumName::Omega, mix}, {StratumName::R1, coprime}, {StratumName::R2, rest}};
    return {{StratumName::Omega2, mix}, {StratumName::Omega1, coprime}, {StratumName::Omega3, rest}};
}

inline StratumName stratum_of(const GroupElement& g, const GroupId& id) {
    check_element(g, id);
    bool dic = id.family == Family::Dicyclic;
    if (g.kind == Kind::Mixed) return dic ? StratumName::Omega : StratumName::Omega2;
    if (std::gcd(g.exp, id.n) == 1) return dic ? StratumName::R1 : StratumName::Omega1;
    return dic ? StratumName::R2 : StratumName::Omega3;
}

// ---------------------------------------------------------------------------
// Generation rules and the closure oracle.
// ---------------------------------------------------------------------------

// gcd rules: a power and a mixed element generate iff gcd(a, n) = 1; two
// mixed elements generate iff gcd of their exponent difference with n is 1;
// two powers never generate (both lie in the proper subgroup of rotations).
inline bool generates_pair(const GroupElement& g, const GroupElement& h, const GroupId& id) {
    check_element(g, id);
    check_element(h, id);
    if (g == h) throw invalid_input("generates_pair: elements must be distinct");
    if (g.kind == Kind::Power && h.kind == Kind::Power) return false;
    if (g.kind == Kind::Mixed && h.kind == Kind::Mixed)
        return std::gcd(std::abs(g.exp - h.exp), id.n) == 1;
    long long a = g.kind == Kind::Power ? g.exp : h.exp;
    return std::gcd(a, id.n) == 1;
}

// Closure of {1, g, h} under multiplication, as sorted element indices.
inline std::vector<int> generated_subgroup_indices(const GroupElement& g, const GroupElement& h,
                                                   const GroupId& id) {
    check_element(g, id);
    check_element(h, id);
    const int order = static_cast<int>(id.order());
    std::vector<char> seen(order, 0);
    std::vector<int> stack{element_index(identity_element(), id)};
    seen[stack[0]] = 1;
    const GroupElement gens[2] = {g, h};
    while (!stack.empty()) {
        GroupElement cur = element_from_index(stack.back(), id);
        stack.pop_back();
        for (const auto& gen : gens) {
            int nxt = element_index(multiply(cur, gen, id), id);
            if (!seen[nxt]) {
                seen[nxt] = 1;
                stack.push_back(nxt);
            }
        }
    }
    std::vector<int> out;
    for (int i = 0; i < order; ++i)
        if (seen[i]) out.push_back(i);
    if (order % static_cast<long long>(out.size()) != 0)
        throw internal_error("generated_subgroup: closure size violates Lagrange");
    return out;
}

inline std::vector<GroupElement> generated_subgroup(const GroupElement& g, const GroupElement& h,
                                                    const GroupId& id) {
    std::vector<GroupElement> out;
    for (int idx : generated_subgroup_indices(g, h, id)) out.push_back(element_from_index(idx, id));
    return out;
}

// Ordered generating pairs (g1, g2), g1 != g2, counted by the gcd rules.
inline long long gen_count(const GroupId& id) {
    long long count = 0;
    long long order = id.order();
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) {
            if (i == j) continue;
            if (generates_pair(element_from_index(i, id), element_from_index(j, id), id)) ++count;
        }
    return count;
}

// gen_count / (2 C(|G|, 2)) as an exact rational.
inline BigRat generating_probability(const GroupId& id) {
    long long order = id.order();
    return to_rat(gen_count(id), order * (order - 1));
}

// ---------------------------------------------------------------------------
// Frattini subgroup (dicyclic): <x^{p_1 p_2 ... p_k}> = <x^{radical(n)}>.
// A brute-force oracle intersects all maximal subgroups for small n.
// ---------------------------------------------------------------------------

inline std::vector<int> frattini_subgroup_indices(const GroupId& id) {
    if (id.family != Family::Dicyclic)
        throw invalid_input("frattini_subgroup: closed form implemented for the dicyclic family");
    GroupElement gen = power(id, radical(id.n));
    return generated_subgroup_indices(gen, gen, id);
}

inline std::vector<GroupElement> frattini_subgroup(const GroupId& id) {
    std::vector<GroupElement> out;
    for (int idx : frattini_subgroup_indices(id)) out.push_back(element_from_index(idx, id));
    return out;
}

// All subgroups, each as a sorted index vector. Every subgroup of these
// families is generated by at most two elements, so pair closures suffice.
inline std::vector<std::vector<int>> all_subgroups(const GroupId& id) {
    if (id.n > 12) throw capacity_error("all_subgroups: supported for n <= 12");
    std::set<std::vector<int>> subs;
    const int order = static_cast<int>(id.order());
    for (int i = 0; i < order; ++i)
        for (int j = i; j < order; ++j)
            subs.insert(generated_subgroup_indices(element_from_index(i, id),
                                                   element_from_index(j, id), id));
    return {subs.begin(), subs.end()};
}

inline std::vector<std::vector<int>> maximal_subgroups(const GroupId& id) {
    auto subs = all_subgroups(id);
    const std::size_t order = id.order();
    std::vector<std::vector<int>> proper;
    for (auto& s : subs)
        if (s.size() < order) proper.push_back(std::move(s));
    std::vector<std::vector<int>> maximal;
    for (const auto& s : proper) {
        bool contained = false;
        for (const auto& t : proper) {
            if (t.size() <= s.size()) continue;
            if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                contained = true;
                break;
            }
        }
        if (!contained) maximal.push_back(s);
    }
    return maximal;
}

inline std::vector<int> frattini_brute_force(const GroupId& id) {
    auto maxes = maximal_subgroups(id);
    if (maxes.empty()) throw internal_error("frattini_brute_force: no maximal subgroups found");
    std::vector<int> acc = maxes.front();
    for (std::size_t k = 1; k < maxes.size(); ++k) {
        std::vector<int> next;
        std::set_intersection(acc.begin(), acc.end(), maxes[k].begin(), maxes[k].end(),
                              std::back_inserter(next));
        acc = std::move(next);
    }
    return acc;
}

// Compares the isolated-vertex set R2 = {x^a : gcd(a,n) != 1} with the
// Frattini subgroup of Q_n, as sets.
inline bool isolated_equals_frattini(long long n) {
    GroupId id = dicyclic(n);
    std::vector<int> r2;
    for (long long a = 0; a < 2 * n; ++a)
        if (std::gcd(a, n) != 1) r2.push_back(element_index({Kind::Power, a}, id));
    return r2 == frattini_subgroup_indices(id);
}

} // namespace gengraph
