#pragma once

// Shared helpers for the test suites: catalog lookup, small constructors and
// the independent (brute-force / numeric) oracles.

#include "tqs/automorphism.hpp"
#include "tqs/catalog.hpp"
#include "tqs/character_table.hpp"
#include "tqs/cyclotomic.hpp"
#include "tqs/errors.hpp"
#include "tqs/matrix.hpp"
#include "tqs/representation.hpp"
#include "tqs/serialize.hpp"

#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tqs::test {

inline constexpr std::size_t kCap = 6000;

inline ParsedGroup parse(const nlohmann::json& spec, std::size_t cap = kCap) { return parse_group_spec(spec, cap); }

inline ParsedGroup catalog(const std::string& id) {
    for (const auto* cat : {&builtin_catalog(), &builtin_matrix_catalog()})
        for (const auto& e : *cat)
            if (e.id == id) return parse(e.spec);
    throw std::runtime_error("no catalog entry " + id);
}

inline GroupPtr group(const std::string& id) { return catalog(id).group; }

inline GroupPtr perm_group(std::size_t degree, std::vector<Permutation> gens) {
    return group_from_permutations(degree, gens, kCap).group;
}

inline CyclotomicNumber zeta(unsigned n, long k = 1) { return cyc_reduce(CyclotomicNumber::root_of_unity(n, k)); }

inline CycMatrix diag(std::vector<CyclotomicNumber> d) {
    CycMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

inline CycMatrix mat2(CyclotomicNumber a, CyclotomicNumber b, CyclotomicNumber c, CyclotomicNumber d) {
    CycMatrix m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

inline MatrixGroup matrix_group(std::size_t dim, std::vector<CycMatrix> gens) {
    return group_from_matrices(dim, gens, kCap);
}

// ---------------------------------------------------------------- numeric oracle

using Complex50 = boost::multiprecision::cpp_complex_50;
using Real50 = boost::multiprecision::cpp_bin_float_50;

inline Complex50 evaluate(const CyclotomicNumber& x) {
    const Real50 pi = boost::multiprecision::default_ops::get_constant_pi<Real50::backend_type>();
    Complex50 s(0);
    const unsigned long n = x.conductor();
    for (std::size_t j = 0; j < x.coeffs().size(); ++j) {
        const Real50 angle = 2 * pi * Real50(static_cast<long>(j)) / Real50(static_cast<long>(n));
        const Real50 c = Real50(x.coeffs()[j].get_num().get_str()) / Real50(x.coeffs()[j].get_den().get_str());
        s += Complex50(c * cos(angle), c * sin(angle));
    }
    return s;
}

// 50 significant digits; sums of a few dozen terms lose at most a handful.
inline bool numerically_equal(const Complex50& a, const Complex50& b, const Real50& tol = Real50("1e-40")) {
    return abs(a - b) < tol;
}

// ---------------------------------------------------------------- group oracles

inline std::vector<Elem> closure(const FiniteGroup& g, std::vector<Elem> gens) {
    std::set<Elem> seen{0};
    std::vector<Elem> frontier{0};
    while (!frontier.empty()) {
        std::vector<Elem> next;
        for (Elem a : frontier)
            for (Elem s : gens) {
                const Elem b = g.mul(a, s);
                if (seen.insert(b).second) next.push_back(b);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

inline std::vector<Elem> brute_center(const FiniteGroup& g) {
    std::vector<Elem> z;
    for (Elem a = 0; a < g.order(); ++a) {
        bool central = true;
        for (Elem b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
        if (central) z.push_back(a);
    }
    return z;
}

inline std::vector<Elem> brute_derived(const FiniteGroup& g) {
    std::set<Elem> comm;
    for (Elem a = 0; a < g.order(); ++a)
        for (Elem b = 0; b < g.order(); ++b) comm.insert(g.commutator(a, b));
    return closure(g, {comm.begin(), comm.end()});
}

// Orders of all normal subgroups, from every union of conjugacy classes that is closed.
inline std::multiset<std::size_t> brute_normal_orders(const FiniteGroup& g) {
    const auto& cls = g.classes();
    const std::size_t k = cls.size();
    std::multiset<std::size_t> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << (k - 1)); ++mask) {
        std::vector<char> in(g.order(), 0);
        in[0] = 1;
        std::size_t n = 1;
        for (std::size_t c = 1; c < k; ++c)
            if (mask >> (c - 1) & 1)
                for (Elem a : cls[c]) in[a] = 1, ++n;
        if (g.order() % n != 0) continue;
        bool closed = true;
        for (Elem a = 0; a < g.order() && closed; ++a)
            if (in[a])
                for (Elem b = 0; b < g.order() && closed; ++b)
                    if (in[b] && !in[g.mul(a, b)]) closed = false;
        if (closed) out.insert(n);
    }
    return out;
}

// Extend generator images word by word; nullopt if not a well-defined bijective homomorphism.
inline std::optional<std::vector<Elem>> brute_extend(const FiniteGroup& g, const std::vector<Elem>& gens,
                                                     const std::vector<Elem>& images) {
    std::vector<long> phi(g.order(), -1);
    phi[0] = 0;
    std::vector<Elem> frontier{0};
    while (!frontier.empty()) {
        std::vector<Elem> next;
        for (Elem a : frontier)
            for (std::size_t i = 0; i < gens.size(); ++i) {
                const Elem b = g.mul(a, gens[i]);
                const Elem img = g.mul(static_cast<Elem>(phi[a]), images[i]);
                if (phi[b] < 0) {
                    phi[b] = img;
                    next.push_back(b);
                } else if (static_cast<Elem>(phi[b]) != img) {
                    return std::nullopt;
                }
            }
        frontier = std::move(next);
    }
    std::vector<Elem> out(phi.begin(), phi.end());
    for (Elem a = 0; a < g.order(); ++a)
        for (Elem b = 0; b < g.order(); ++b)
            if (out[g.mul(a, b)] != g.mul(out[a], out[b])) return std::nullopt;
    std::vector<Elem> sorted = out;
    std::sort(sorted.begin(), sorted.end());
    for (Elem a = 0; a < g.order(); ++a)
        if (sorted[a] != a) return std::nullopt;
    return out;
}

// Every tuple of images for the group's own generators.
inline std::size_t brute_aut_count(const FiniteGroup& g) {
    const auto& gens = g.generators();
    std::vector<Elem> images(gens.size(), 0);
    std::size_t count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == gens.size()) {
            if (brute_extend(g, gens, images)) ++count;
            return;
        }
        for (Elem x = 0; x < g.order(); ++x) {
            images[i] = x;
            rec(i + 1);
        }
    };
    rec(0);
    return count;
}

// chi(g) = chi(1) on every element; the kernel of a class function evaluated elementwise.
inline std::vector<Elem> brute_kernel(const FiniteGroup& g, const ConjugacyData& conj,
                                      const std::vector<CyclotomicNumber>& chi) {
    std::vector<Elem> k;
    for (Elem a = 0; a < g.order(); ++a)
        if (chi[conj.class_of[a]] == chi[conj.class_of[0]]) k.push_back(a);
    return k;
}

} // namespace tqs::test
