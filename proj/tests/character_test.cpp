#include "support.hpp"

#include <gtest/gtest.h>

using namespace tqs;
using namespace tqs::test;

namespace {

std::vector<long> degrees(const CharacterTable& t) {
    std::vector<long> d;
    for (const auto& chi : t.irreducibles()) d.push_back(chi.degree);
    return d;
}

// Row orthogonality summed over elements rather than classes.
bool elementwise_orthogonal(const CharacterTable& t) {
    const auto& g = *t.group();
    const auto& conj = t.conj();
    const auto& irr = t.irreducibles();
    for (std::size_t i = 0; i < irr.size(); ++i)
        for (std::size_t j = 0; j < irr.size(); ++j) {
            CyclotomicNumber s;
            for (Elem x = 0; x < g.order(); ++x)
                s += irr[i].values[conj.class_of[x]] * irr[j].values[conj.class_of[g.inv(x)]];
            if (s != CyclotomicNumber(i == j ? static_cast<long>(g.order()) : 0)) return false;
        }
    return true;
}

// All multisets of irreducibles of total degree d with trivial joint kernel, by brute force.
std::set<std::vector<long>> brute_faithful(const CharacterTable& t, std::size_t d) {
    const auto& irr = t.irreducibles();
    const auto& g = *t.group();
    std::set<std::vector<long>> out;
    std::vector<long> m(irr.size(), 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
        if (i == irr.size()) {
            if (left != 0) return;
            std::vector<CyclotomicNumber> chi(t.conj().classes.size());
            for (std::size_t k = 0; k < irr.size(); ++k)
                for (std::size_t c = 0; c < chi.size(); ++c) chi[c] += CyclotomicNumber(m[k]) * irr[k].values[c];
            if (brute_kernel(g, t.conj(), chi).size() == 1) out.insert(m);
            return;
        }
        for (long k = 0; k * irr[i].degree <= left; ++k) {
            m[i] = k;
            rec(i + 1, left - k * irr[i].degree);
        }
        m[i] = 0;
    };
    rec(0, static_cast<long>(d));
    return out;
}

std::set<std::vector<long>> as_set(const std::vector<AbstractRepresentation>& reps) {
    std::set<std::vector<long>> s;
    for (const auto& r : reps) s.insert(r.multiplicities);
    return s;
}

} // namespace

TEST(CharacterTable, CyclicThree) {
    const CharacterTable t(group("C3"));
    EXPECT_EQ(degrees(t), (std::vector<long>{1, 1, 1}));
    EXPECT_EQ(t.exponent(), 3u);
    for (const auto& chi : t.irreducibles())
        for (const auto& v : chi.values) EXPECT_EQ(3u % v.conductor(), 0u);
}

TEST(CharacterTable, S3) {
    const CharacterTable t(group("S3"));
    EXPECT_EQ(degrees(t), (std::vector<long>{1, 1, 2}));
    EXPECT_TRUE(verify_orthogonality(t).ok());
    EXPECT_TRUE(elementwise_orthogonal(t));
    // hand table: the degree-2 character is (2, 0, -1) on (1, transpositions, 3-cycles)
    const auto& chi = t.irreducibles()[2];
    const auto& conj = t.conj();
    for (std::size_t c = 0; c < conj.classes.size(); ++c) {
        const long expect = conj.rep_order[c] == 1 ? 2 : conj.rep_order[c] == 2 ? 0 : -1;
        EXPECT_EQ(chi.values[c], CyclotomicNumber(expect));
    }
}

TEST(CharacterTable, Q8) {
    const CharacterTable t(group("Q8"));
    EXPECT_EQ(degrees(t), (std::vector<long>{1, 1, 1, 1, 2}));
    EXPECT_TRUE(verify_orthogonality(t).ok());
    EXPECT_TRUE(elementwise_orthogonal(t));
}

TEST(CharacterTable, A5HasGoldenRatioValues) {
    const CharacterTable t(group("A5"));
    EXPECT_EQ(degrees(t), (std::vector<long>{1, 3, 3, 4, 5}));
    // (1 + sqrt 5)/2 on 5-cycles: irrational, conductor 5
    bool found = false;
    for (const auto& chi : t.irreducibles())
        for (const auto& v : chi.values) found |= v.conductor() == 5;
    EXPECT_TRUE(found);
    EXPECT_TRUE(elementwise_orthogonal(t));
}

TEST(CharacterTableProperty, CatalogOrthogonality) {
    for (const auto& e : builtin_catalog()) {
        const auto g = parse(e.spec).group;
        if (g->order() > 720) continue;
        const CharacterTable t(g);
        const auto r = verify_orthogonality(t);
        EXPECT_TRUE(r.rows && r.columns && r.degree_sum && r.degrees_divide) << e.id;
        EXPECT_EQ(t.size(), g->num_classes()) << e.id;
        if (g->order() <= 60) EXPECT_TRUE(elementwise_orthogonal(t)) << e.id;
        for (const auto& chi : t.irreducibles()) {
            EXPECT_EQ(g->order() % chi.degree, 0u) << e.id;
            EXPECT_EQ(chi.values[0], CyclotomicNumber(chi.degree)) << e.id;
        }
    }
}

TEST(ConjugacyData, PowerMapInvariants) {
    for (const char* id : {"S4", "Q8", "F21", "C12"}) {
        const ConjugacyData conj(*group(id));
        for (std::uint32_t c = 0; c < conj.classes.size(); ++c) {
            EXPECT_EQ(conj.power(c, 1), c);
            EXPECT_EQ(conj.power(c, 0), 0u);
            EXPECT_EQ(conj.power(c, conj.rep_order[c] + 1), c);
            EXPECT_EQ(conj.power(c, -1), conj.inverse_class[c]);
        }
    }
}

TEST(Eigenvalues, Identity) {
    const std::vector<CyclotomicNumber> v = {3};
    EXPECT_EQ(eigenvalue_multiset(v, 1), (std::vector<long>{3}));
}

TEST(Eigenvalues, DiagZeta3Zeta3Squared) {
    EXPECT_EQ(eigenvalue_multiset({2, -1, -1}, 3), (std::vector<long>{0, 1, 1}));
    EXPECT_EQ(eigenvalues_by_charpoly(diag({zeta(3), zeta(3, 2)}), 3), (std::vector<long>{0, 1, 1}));
}

TEST(Eigenvalues, OrderTwoTraceOne) {
    // m0 + m1 = 3, m0 - m1 = 1
    EXPECT_EQ(eigenvalue_multiset({3, 1}, 2), (std::vector<long>{2, 1}));
}

TEST(Eigenvalues, NotATraceSequence) {
    EXPECT_THROW(eigenvalue_multiset({2, 1}, 2), NonIntegralMultiplicity);
}

TEST(Eigenvalues, DiagonalMatricesReadOff) {
    const auto z = zeta(12);
    const CycMatrix m = diag({z, z * z * z, 1, z});  // exponents 1, 3, 0, 1 mod 12
    auto e = eigenvalues_by_charpoly(m, 12);
    std::vector<long> expect(12, 0);
    expect[1] = 2, expect[3] = 1, expect[0] = 1;
    EXPECT_EQ(e, expect);
    std::vector<CyclotomicNumber> traces;
    CycMatrix p = CycMatrix::identity(4);
    for (int k = 0; k < 12; ++k, p = p * m) traces.push_back(p.trace());
    EXPECT_EQ(eigenvalue_multiset(traces, 12), expect);
}

TEST(Faithful, C2DegreeOne) {
    const CharacterTable t(group("C2"));
    const auto f = faithful_characters_of_degree(t, 1);
    ASSERT_EQ(f.size(), 1u);
    EXPECT_EQ(f[0].multiplicities, (std::vector<long>{0, 1}));
}

TEST(Faithful, KleinDegreeTwo) {
    const CharacterTable t(group("C2^2"));
    const auto f = faithful_characters_of_degree(t, 2);
    EXPECT_EQ(f.size(), 3u);
    for (const auto& r : f) {
        EXPECT_EQ(r.multiplicities[0], 0);
        for (long m : r.multiplicities) EXPECT_LE(m, 1);
    }
    EXPECT_EQ(as_set(f), brute_faithful(t, 2));
}

TEST(Faithful, Q8DegreeTwo) {
    const CharacterTable t(group("Q8"));
    const auto f = faithful_characters_of_degree(t, 2);
    ASSERT_EQ(f.size(), 1u);
    EXPECT_EQ(f[0].multiplicities, (std::vector<long>{0, 0, 0, 0, 1}));
}

TEST(FaithfulProperty, MatchesBruteForceOverCatalog) {
    for (const auto& e : builtin_catalog()) {
        const auto g = parse(e.spec).group;
        if (g->order() > 24) continue;
        const CharacterTable t(g);
        for (std::size_t d = 1; d <= 4; ++d) {
            const auto f = faithful_characters_of_degree(t, d);
            const auto brute = brute_faithful(t, d);
            EXPECT_EQ(as_set(f), brute) << e.id << " d=" << d;
            EXPECT_EQ(has_faithful_representation(t, d), !brute.empty()) << e.id << " d=" << d;
        }
    }
}

TEST(Isotypic, RegularC3) {
    const auto g = group("C3");
    const CharacterTable t(g);
    std::vector<CyclotomicNumber> reg(t.conj().classes.size(), 0);
    reg[0] = 3;
    const auto dec = isotypic_decomposition(t, reg);
    ASSERT_EQ(dec.size(), 3u);
    for (const auto& [i, m] : dec) EXPECT_EQ(m, 1);
}

TEST(Isotypic, MinusIdentity) {
    const auto mg = matrix_group(2, {diag({-1, -1})});
    const CharacterTable t(mg.group);
    const auto dec = isotypic_decomposition(t, mg.rep);
    ASSERT_EQ(dec.size(), 1u);
    EXPECT_EQ(dec[0].second, 2);
    EXPECT_NE(dec[0].first, 0u);  // the sign character
}

TEST(Isotypic, TriangleReflectionGroup) {
    const auto mg = catalog("D3_std");
    const CharacterTable t(mg.group);
    const auto dec = isotypic_decomposition(t, *mg.rep);
    ASSERT_EQ(dec.size(), 1u);
    EXPECT_EQ(t.irreducibles()[dec[0].first].degree, 2);
    EXPECT_EQ(dec[0].second, 1);
    // traces (2, 0, -1) by element order
    const auto chi = mg.rep->character(t.conj());
    for (std::size_t c = 0; c < chi.size(); ++c) {
        const unsigned o = t.conj().rep_order[c];
        EXPECT_EQ(chi[c], CyclotomicNumber(o == 1 ? 2 : o == 2 ? 0 : -1));
    }
}

TEST(Molien, TrivialGroupPlane) {
    const auto mg = matrix_group(2, {CycMatrix::identity(2)});
    const ConjugacyData conj(*mg.group);
    const auto m = molien_series(mg.rep, conj, 6);
    for (std::size_t k = 0; k <= 6; ++k) EXPECT_EQ(m[k], static_cast<long>(k + 1));
}

TEST(Molien, MinusIdentity) {
    const auto mg = matrix_group(2, {diag({-1, -1})});
    const ConjugacyData conj(*mg.group);
    const auto m = molien_series(mg.rep, conj, 8);
    // oracle: count monomials x^a y^b of even degree
    for (std::size_t k = 0; k <= 8; ++k) EXPECT_EQ(m[k], k % 2 ? 0 : static_cast<long>(k + 1));
}

TEST(Molien, D4Standard) {
    const auto mg = catalog("D4_std");
    const ConjugacyData conj(*mg.group);
    const auto m = molien_series(*mg.rep, conj, 16);
    // oracle: 1/((1-t^2)(1-t^4)) = number of (a, b) with 2a + 4b = k
    for (std::size_t k = 0; k <= 16; ++k) {
        long count = 0;
        for (std::size_t b = 0; 4 * b <= k; ++b) count += (k - 4 * b) % 2 == 0;
        EXPECT_EQ(m[k], count) << k;
    }
}

TEST(MolienProperty, LowCoefficients) {
    for (const auto& e : builtin_matrix_catalog()) {
        const auto pg = parse(e.spec);
        const ConjugacyData conj(*pg.group);
        const auto m = molien_series(*pg.rep, conj, 4);
        EXPECT_EQ(m[0], 1) << e.id;
        // dim of the common fixed space of the generators
        CycMatrix stacked(pg.rep->dimension * pg.group->generators().size(), pg.rep->dimension);
        std::size_t row = 0;
        for (Elem s : pg.group->generators()) {
            const auto a = (*pg.rep)(s) - CycMatrix::identity(pg.rep->dimension);
            for (std::size_t i = 0; i < a.rows(); ++i, ++row)
                for (std::size_t j = 0; j < a.cols(); ++j) stacked(row, j) = a(i, j);
        }
        EXPECT_EQ(m[1], static_cast<long>(pg.rep->dimension - rank(stacked))) << e.id;
    }
}

TEST(MolienProperty, DiagonalGroupsCountInvariantMonomials) {
    for (const char* id : {"C2^2_diag", "C3^2_diag", "C2^3_diag", "C4_i_m1", "mu3_A2", "C3_sl2"}) {
        const auto pg = catalog(id);
        const std::size_t dim = pg.rep->dimension, order = 8;
        const ConjugacyData conj(*pg.group);
        const auto m = molien_series(*pg.rep, conj, order);
        // a monomial is invariant iff every generator fixes it
        std::vector<long> count(order + 1, 0);
        std::vector<std::size_t> exps(dim, 0);
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
            if (i == dim) {
                std::size_t deg = 0;
                for (auto x : exps) deg += x;
                bool inv = true;
                for (Elem s : pg.group->generators()) {
                    CyclotomicNumber v(1);
                    for (std::size_t k = 0; k < dim; ++k)
                        for (std::size_t p = 0; p < exps[k]; ++p) v *= (*pg.rep)(s)(k, k);
                    inv &= v == CyclotomicNumber(1);
                }
                count[deg] += inv;
                return;
            }
            for (std::size_t x = 0; x <= left; ++x) {
                exps[i] = x;
                rec(i + 1, left - x);
            }
        };
        rec(0, order);
        for (std::size_t k = 0; k <= order; ++k) EXPECT_EQ(m[k], count[k]) << id << " t^" << k;
    }
}
