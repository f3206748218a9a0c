#include "tqs/catalog.hpp"

#include "tqs/automorphism.hpp"
#include "tqs/errors.hpp"
#include "tqs/matrix.hpp"
#include "tqs/serialize.hpp"

#include <numeric>

namespace tqs {

namespace {

Permutation cycle_on(std::size_t degree, const std::vector<std::uint32_t>& cycle) {
    Permutation p(degree);
    std::iota(p.begin(), p.end(), 0u);
    for (std::size_t i = 0; i < cycle.size(); ++i) p[cycle[i]] = cycle[(i + 1) % cycle.size()];
    return p;
}

std::vector<std::uint32_t> range(std::uint32_t lo, std::uint32_t hi) {
    std::vector<std::uint32_t> v(hi - lo);
    std::iota(v.begin(), v.end(), lo);
    return v;
}

} // namespace

PermutationSpec cyclic_spec(unsigned n) {
    if (n == 0) throw Error("cyclic group needs n >= 1");
    if (n == 1) return {1, {}};
    return {n, {cycle_on(n, range(0, n))}};
}

PermutationSpec dihedral_spec(unsigned n) {
    if (n == 0) throw Error("dihedral group needs n >= 1");
    if (n == 1) return cyclic_spec(2);
    if (n == 2) return {4, {{1, 0, 3, 2}, {2, 3, 0, 1}}};
    Permutation flip(n);
    for (unsigned i = 0; i < n; ++i) flip[i] = (n - i) % n;
    return {n, {cycle_on(n, range(0, n)), flip}};
}

PermutationSpec symmetric_spec(unsigned n) {
    if (n == 0) throw Error("symmetric group needs n >= 1");
    if (n == 1) return {1, {}};
    if (n == 2) return {2, {{1, 0}}};
    return {n, {cycle_on(n, {0, 1}), cycle_on(n, range(0, n))}};
}

PermutationSpec alternating_spec(unsigned n) {
    if (n == 0) throw Error("alternating group needs n >= 1");
    if (n < 3) return {n, {}};
    if (n == 3) return {3, {cycle_on(3, {0, 1, 2})}};
    // (0 1 2) with the n-cycle (n odd) or the (n-1)-cycle on 1..n-1 (n even).
    return {n, {cycle_on(n, {0, 1, 2}), n % 2 ? cycle_on(n, range(0, n)) : cycle_on(n, range(1, n))}};
}

PermutationSpec quaternion_spec(unsigned n) {
    if (n < 1) throw Error("dicyclic group needs n >= 1");
    // Elements a^k x^j (0 <= k < 2n, j in {0,1}) with x^2 = a^n and x a x^-1 = a^-1,
    // acting on themselves by left multiplication.
    const unsigned m = 2 * n;
    auto idx = [m](long k, unsigned j) { return static_cast<std::uint32_t>(((k % m + m) % m) + m * j); };
    auto mul = [&](long k1, unsigned j1, long k2, unsigned j2) {
        if (j1 == 0) return idx(k1 + k2, j2);
        if (j2 == 1) return idx(k1 - k2 + n, 0);
        return idx(k1 - k2, 1);
    };
    Permutation a(2 * m), x(2 * m);
    for (long k = 0; k < m; ++k)
        for (unsigned j = 0; j < 2; ++j) {
            a[idx(k, j)] = mul(1, 0, k, j);
            x[idx(k, j)] = mul(0, 1, k, j);
        }
    return {2 * m, {a, x}};
}

PermutationSpec elementary_abelian_spec(unsigned p, unsigned k) {
    if (p < 2) throw Error("elementary abelian group needs a prime p");
    for (unsigned q = 2; q * q <= p; ++q)
        if (p % q == 0) throw Error("elementary abelian group needs a prime p");
    std::vector<PermutationSpec> f(k, cyclic_spec(p));
    return direct_product_spec(f);
}

PermutationSpec direct_product_spec(const std::vector<PermutationSpec>& factors) {
    PermutationSpec out;
    for (const auto& f : factors) out.degree += f.degree;
    if (out.degree == 0) out.degree = 1;
    std::size_t offset = 0;
    for (const auto& f : factors) {
        for (const auto& g : f.generators) {
            Permutation p(out.degree);
            std::iota(p.begin(), p.end(), 0u);
            for (std::size_t i = 0; i < f.degree; ++i) p[offset + i] = static_cast<std::uint32_t>(offset + g[i]);
            out.generators.push_back(std::move(p));
        }
        offset += f.degree;
    }
    return out;
}

std::string identify_group(const GroupPtr& g) {
    const std::size_t n = g->order();
    if (n == 1) return "1";
    if (g->is_abelian() && g->exponent() == n) return "C" + std::to_string(n);
    if (g->is_abelian()) {
        // elementary abelian p^k
        unsigned p = g->exponent();
        bool prime = p > 1;
        for (unsigned q = 2; q * q <= p; ++q)
            if (p % q == 0) prime = false;
        if (prime) {
            std::size_t m = n;
            unsigned k = 0;
            while (m % p == 0) {
                m /= p;
                ++k;
            }
            if (m == 1) return "C" + std::to_string(p) + "^" + std::to_string(k);
        }
        return "";
    }
    auto matches = [&](const PermutationSpec& s) {
        const auto h = group_from_permutations(s.degree, s.generators, n + 1).group;
        return h->order() == n && is_isomorphic(g, h).has_value();
    };
    if (n % 2 == 0 && matches(dihedral_spec(static_cast<unsigned>(n / 2)))) return "D" + std::to_string(n / 2);
    if (n % 4 == 0 && matches(quaternion_spec(static_cast<unsigned>(n / 4))))
        return n == 8 ? "Q8" : "Dic" + std::to_string(n / 4);
    std::size_t f = 1;
    for (unsigned k = 2; k <= 8 && f <= n; ++k) {
        f *= k;
        if (f == n && matches(symmetric_spec(k))) return "S" + std::to_string(k);
        if (f == 2 * n && k >= 4 && matches(alternating_spec(k))) return "A" + std::to_string(k);
    }
    return "";
}

namespace {

nlohmann::json cat(const std::string& family, nlohmann::json params) {
    return nlohmann::json{{"catalog", {{"family", family}, {"params", std::move(params)}}}};
}

nlohmann::json fam(const std::string& family, nlohmann::json params) {
    return nlohmann::json{{"family", family}, {"params", std::move(params)}};
}

nlohmann::json affine_group(unsigned p, unsigned mult) {
    // x -> x + 1 and x -> mult * x on Z/p
    Permutation shift(p), scale(p);
    for (unsigned x = 0; x < p; ++x) {
        shift[x] = (x + 1) % p;
        scale[x] = (mult * x) % p;
    }
    return nlohmann::json{{"permutation", {{"degree", p}, {"generators", {shift, scale}}}}};
}

nlohmann::json matrix_spec(std::size_t dim, const std::vector<CycMatrix>& gens) {
    nlohmann::json g = nlohmann::json::array();
    for (const auto& m : gens) g.push_back(to_json(m));
    return nlohmann::json{{"matrix", {{"dimension", dim}, {"generators", g}}}};
}

CycMatrix diag(const std::vector<CyclotomicNumber>& d) {
    CycMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

CycMatrix scalar(std::size_t dim, const CyclotomicNumber& x) { return diag(std::vector<CyclotomicNumber>(dim, x)); }

CyclotomicNumber zeta(unsigned n, long k) { return cyc_reduce(CyclotomicNumber::root_of_unity(n, k)); }

} // namespace

const std::vector<CatalogEntry>& builtin_catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> v;
        for (unsigned n : {1u, 2u, 3u, 4u, 5u, 6u, 7u, 8u, 9u, 10u, 12u, 15u, 35u, 55u})
            v.push_back({"C" + std::to_string(n), cat("cyclic", {n})});
        v.push_back({"C2^2", cat("elementary_abelian", {2, 2})});
        v.push_back({"C2^3", cat("elementary_abelian", {2, 3})});
        v.push_back({"C3^2", cat("elementary_abelian", {3, 2})});
        v.push_back({"C2^4", cat("elementary_abelian", {2, 4})});
        v.push_back({"C5^2", cat("elementary_abelian", {5, 2})});
        for (unsigned n : {3u, 4u, 5u, 6u}) v.push_back({"D" + std::to_string(n), cat("dihedral", {n})});
        v.push_back({"Q8", cat("quaternion", {2})});
        v.push_back({"Dic3", cat("quaternion", {3})});
        v.push_back({"A4", cat("alternating", {4})});
        v.push_back({"A5", cat("alternating", {5})});
        for (unsigned n : {3u, 4u, 5u, 6u, 7u}) v.push_back({"S" + std::to_string(n), cat("symmetric", {n})});
        v.push_back({"C2xC2", cat("direct_product", {fam("cyclic", {2}), fam("cyclic", {2})})});
        v.push_back({"C6xC10", cat("direct_product", {fam("cyclic", {6}), fam("cyclic", {10})})});
        v.push_back({"C2xS3", cat("direct_product", {fam("cyclic", {2}), fam("symmetric", {3})})});
        v.push_back({"C3xS3", cat("direct_product", {fam("cyclic", {3}), fam("symmetric", {3})})});
        v.push_back({"F21", affine_group(7, 2)});
        v.push_back({"F55", affine_group(11, 3)});
        return v;
    }();
    return entries;
}

const std::vector<CatalogEntry>& builtin_matrix_catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> v;
        const CyclotomicNumber one(1), m1(-1), i4 = zeta(4, 1);
        v.push_back({"mu2_A2", matrix_spec(2, {scalar(2, m1)})});
        v.push_back({"mu2_A3", matrix_spec(3, {scalar(3, m1)})});
        v.push_back({"mu3_A2", matrix_spec(2, {scalar(2, zeta(3, 1))})});
        v.push_back({"mu4_A3", matrix_spec(3, {scalar(3, i4)})});
        for (unsigned n : {3u, 4u, 5u, 6u}) {
            CycMatrix flip(2, 2);
            flip(0, 1) = one;
            flip(1, 0) = one;
            v.push_back({"D" + std::to_string(n) + "_std", matrix_spec(2, {diag({zeta(n, 1), zeta(n, -1)}), flip})});
        }
        v.push_back({"C2^2_diag", matrix_spec(2, {diag({m1, one}), diag({one, m1})})});
        v.push_back({"C3^2_diag", matrix_spec(2, {diag({zeta(3, 1), one}), diag({one, zeta(3, 1)})})});
        v.push_back({"C2^3_diag", matrix_spec(3, {diag({m1, one, one}), diag({one, m1, one}), diag({one, one, m1})})});
        v.push_back({"C4_i_m1", matrix_spec(2, {diag({i4, m1})})});
        v.push_back({"C2_refl", matrix_spec(2, {diag({m1, one})})});
        v.push_back({"C6_refl", matrix_spec(2, {diag({zeta(6, 1), one})})});
        v.push_back({"C3_sl2", matrix_spec(2, {diag({zeta(3, 1), zeta(3, 2)})})});
        {
            CycMatrix j(2, 2);
            j(0, 1) = one;
            j(1, 0) = m1;
            v.push_back({"Q8_sl2", matrix_spec(2, {diag({i4, -i4}), j})});
        }
        {
            CycMatrix t(3, 3), c(3, 3);
            t(0, 1) = t(1, 0) = t(2, 2) = one;
            c(1, 0) = c(2, 1) = c(0, 2) = one;
            v.push_back({"S3_perm", matrix_spec(3, {t, c})});
        }
        return v;
    }();
    return entries;
}

} // namespace tqs
