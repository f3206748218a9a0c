#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tqs;
using namespace tqs::test;

namespace {

std::vector<std::size_t> orders(const std::vector<Subgroup>& subs) {
    std::vector<std::size_t> o;
    for (const auto& s : subs) o.push_back(s.order());
    return o;
}

// every catalog group small enough for quadratic oracles
std::vector<std::pair<std::string, GroupPtr>> small_catalog(std::size_t max_order) {
    std::vector<std::pair<std::string, GroupPtr>> out;
    for (const auto& e : builtin_catalog()) {
        const auto g = parse(e.spec).group;
        if (g->order() <= max_order) out.emplace_back(e.id, g);
    }
    return out;
}

} // namespace

TEST(Construction, ThreeCycle) {
    const auto g = perm_group(3, {{1, 2, 0}});
    EXPECT_EQ(g->order(), 3u);
    EXPECT_TRUE(g->is_abelian());
}

TEST(Construction, MinusIdentityInGL2) {
    const auto mg = matrix_group(2, {diag({-1, -1})});
    EXPECT_EQ(mg.group->order(), 2u);
    EXPECT_TRUE(mg.rep.is_homomorphism());
    EXPECT_TRUE(mg.rep.is_faithful());
}

TEST(Construction, KleinFromDiagonalSigns) {
    const auto mg = matrix_group(2, {diag({1, -1}), diag({-1, 1})});
    EXPECT_EQ(mg.group->order(), 4u);
    EXPECT_EQ(mg.group->exponent(), 2u);
}

TEST(Construction, FiveCycleAndTranspositionGiveS5) {
    const auto g = perm_group(5, {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}});
    // oracle: closure by hand-rolled BFS on permutations
    std::set<Permutation> seen{{0, 1, 2, 3, 4}};
    std::vector<Permutation> frontier{{0, 1, 2, 3, 4}}, gens{{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& p : frontier)
            for (const auto& s : gens) {
                Permutation q(5);
                for (int x = 0; x < 5; ++x) q[x] = p[s[x]];
                if (seen.insert(q).second) next.push_back(q);
            }
        frontier = std::move(next);
    }
    EXPECT_EQ(g->order(), seen.size());
    EXPECT_EQ(g->order(), 120u);
}

TEST(Construction, Errors) {
    EXPECT_THROW(group_from_permutations(3, {{0, 0, 1}}), NonInvertibleGenerator);
    EXPECT_THROW(group_from_permutations(7, symmetric_spec(7).generators, 100), OrderCapExceeded);
    EXPECT_THROW(group_from_matrices(2, {diag({0, 1})}), NonInvertibleGenerator);
    // infinite order matrix hits the cap
    EXPECT_THROW(group_from_matrices(2, {diag({2, 1})}, 50), OrderCapExceeded);
}

TEST(Construction, CatalogOrders) {
    const std::map<std::string, std::size_t> expected = {
        {"C1", 1},  {"C12", 12}, {"C2^3", 8},  {"C5^2", 25}, {"D3", 6},     {"D6", 12},   {"Q8", 8},
        {"Dic3", 12}, {"A4", 12}, {"A5", 60},  {"S4", 24},   {"S7", 5040}, {"C6xC10", 60}, {"F21", 21},
        {"F55", 55}};
    for (const auto& [id, n] : expected) EXPECT_EQ(group(id)->order(), n) << id;
}

TEST(Center, Examples) {
    EXPECT_EQ(center(group("C12")).order(), 12u);
    EXPECT_EQ(center(group("S3")).order(), 1u);
    const auto d4 = group("D4");
    const auto z = center(d4);
    ASSERT_EQ(z.order(), 2u);
    EXPECT_EQ(z.members(), brute_center(*d4));
}

TEST(Derived, Examples) {
    EXPECT_TRUE(is_perfect(group("A5")));
    const auto s3 = group("S3");
    const auto d = derived_subgroup(s3);
    EXPECT_EQ(d.order(), 3u);
    EXPECT_FALSE(is_perfect(s3));
    EXPECT_EQ(derived_subgroup(group("C5")).order(), 1u);
    EXPECT_EQ(derived_series_orders(group("S4")), (std::vector<std::size_t>{24, 12, 4, 1}));
}

TEST(NormalSubgroups, Examples) {
    EXPECT_EQ(orders(normal_subgroups(group("C6"))), (std::vector<std::size_t>{1, 2, 3, 6}));
    EXPECT_EQ(orders(normal_subgroups(group("S3"))), (std::vector<std::size_t>{1, 3, 6}));
    EXPECT_EQ(orders(normal_subgroups(group("A5"))), (std::vector<std::size_t>{1, 60}));
}

TEST(Quotient, Examples) {
    const auto c4 = group("C4");
    EXPECT_TRUE(is_isomorphic(quotient(trivial_subgroup(c4)).group, c4));
    const auto nc4 = normal_subgroups(c4);
    const auto q = quotient(nc4[1]);
    EXPECT_EQ(q.group->order(), 2u);
    const auto d4 = group("D4");
    const auto qd = quotient(center(d4));
    EXPECT_TRUE(is_isomorphic(qd.group, group("C2^2")));
    EXPECT_EQ(qd.group->exponent(), 2u);
    EXPECT_TRUE(qd.projection.is_homomorphism());
    // a non-normal subgroup
    const auto s3 = group("S3");
    Elem involution = 1;
    while (s3->element_order(involution) != 2) ++involution;
    EXPECT_THROW(quotient(generated_subgroup(s3, std::vector<Elem>{involution})), NotNormal);
}

TEST(Automorphisms, Examples) {
    const auto klein = automorphism_group(group("C2^2"));
    EXPECT_EQ(klein.aut_group->order(), 6u);
    EXPECT_FALSE(klein.aut_group->is_abelian());  // S_3

    const auto s3 = automorphism_group(group("S3"));
    EXPECT_EQ(s3.aut_group->order(), 6u);
    EXPECT_EQ(s3.inner.order(), 6u);
    EXPECT_EQ(s3.out_order, 1u);
    ASSERT_TRUE(s3.splitting);
    EXPECT_EQ(s3.splitting->order(), 1u);

    const auto c5 = automorphism_group(group("C5"));
    EXPECT_EQ(c5.aut_group->order(), 4u);
    EXPECT_EQ(c5.inner.order(), 1u);
    ASSERT_TRUE(c5.splitting);
    EXPECT_EQ(c5.splitting->order(), 4u);
}

TEST(Automorphisms, CapExceeded) {
    EXPECT_THROW(automorphism_group(group("S6"), 100), AutCapExceeded);
}

TEST(Isomorphism, Examples) {
    EXPECT_FALSE(is_isomorphic(group("C4"), group("C2^2")));
    const auto iso = is_isomorphic(group("D3"), group("S3"));
    ASSERT_TRUE(iso);
    EXPECT_TRUE(iso->is_homomorphism());
    EXPECT_TRUE(iso->is_bijective());
    const auto g = group("Q8");
    const auto self = is_isomorphic(g, g);
    ASSERT_TRUE(self);
    EXPECT_TRUE(self->is_bijective());
    EXPECT_FALSE(is_isomorphic(group("Q8"), group("D4")));
    EXPECT_TRUE(is_isomorphic(group("C2xC2"), group("C2^2")));
    EXPECT_TRUE(is_isomorphic(group("C2xS3"), group("D6")));
}

TEST(GroupProperty, AssociativityAndLatinSquare) {
    std::mt19937 rng(21);
    for (const auto& [id, g] : small_catalog(kCap)) {
        const auto n = g->order();
        std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
        for (int i = 0; i < 1000; ++i) {
            const Elem a = pick(rng), b = pick(rng), c = pick(rng);
            ASSERT_EQ(g->mul(g->mul(a, b), c), g->mul(a, g->mul(b, c))) << id;
        }
        if (n > 720) continue;
        for (Elem a = 0; a < n; ++a) {
            std::vector<char> row(n, 0), col(n, 0);
            for (Elem b = 0; b < n; ++b) {
                row[g->mul(a, b)] = 1;
                col[g->mul(b, a)] = 1;
            }
            ASSERT_EQ(std::count(row.begin(), row.end(), 1), static_cast<long>(n)) << id;
            ASSERT_EQ(std::count(col.begin(), col.end(), 1), static_cast<long>(n)) << id;
        }
    }
}

TEST(GroupProperty, StructuralSubgroupsMatchBruteForceAndAreConjugationInvariant) {
    for (const auto& [id, g] : small_catalog(120)) {
        const auto z = center(g);
        EXPECT_EQ(z.members(), brute_center(*g)) << id;
        const auto d = derived_subgroup(g);
        EXPECT_EQ(d.members(), brute_derived(*g)) << id;
        const auto normals = normal_subgroups(g);
        std::multiset<std::size_t> got;
        for (const auto& s : normals) got.insert(s.order());
        if (g->classes().size() <= 20) EXPECT_EQ(got, brute_normal_orders(*g)) << id;  // oracle is 2^classes

        std::vector<Subgroup> all = normals;
        all.push_back(z);
        all.push_back(d);
        for (const auto& s : all) {
            ASSERT_TRUE(s.is_subgroup()) << id;
            for (Elem x : s.members())
                for (Elem h = 0; h < g->order(); ++h) ASSERT_TRUE(s.contains(g->conj(x, h))) << id;
        }
    }
}

TEST(GroupProperty, QuotientOrdersAndProjections) {
    for (const auto& [id, g] : small_catalog(60))
        for (const auto& n : normal_subgroups(g)) {
            const auto q = quotient(n);
            EXPECT_EQ(q.group->order() * n.order(), g->order()) << id;
            EXPECT_TRUE(q.projection.is_homomorphism()) << id;
            EXPECT_EQ(q.projection.kernel().members(), n.members()) << id;
        }
}

TEST(GroupProperty, AutomorphismCountMatchesBruteForce) {
    for (const auto& [id, g] : small_catalog(24)) {
        const std::size_t brute = brute_aut_count(*g);
        EXPECT_EQ(count_automorphisms(g), brute) << id;
        if (brute > 8 * kDefaultAutCap) {
            EXPECT_THROW(automorphism_group(g), AutCapExceeded) << id;
            continue;
        }
        const auto aut = automorphism_group(g);
        EXPECT_EQ(aut.aut_group->order(), brute) << id;
        EXPECT_EQ(aut.aut_group->order(), aut.inner.order() * aut.out_order) << id;
        EXPECT_TRUE(aut.inner.is_normal()) << id;
        EXPECT_EQ(aut.inner.order() * center(g).order(), g->order()) << id;
        for (Elem a = 0; a < aut.aut_group->order(); ++a) {
            const auto phi = aut.automorphism(a);
            ASSERT_TRUE(phi.is_homomorphism() && phi.is_bijective()) << id;
        }
        if (aut.splitting) {
            const auto& s = *aut.splitting;
            EXPECT_TRUE(s.is_subgroup()) << id;
            std::size_t meet = 0;
            for (Elem x : s.members()) meet += aut.inner.contains(x);
            EXPECT_EQ(meet, 1u) << id;
            EXPECT_EQ(s.order() * aut.inner.order(), aut.aut_group->order()) << id;
        }
    }
}

TEST(GroupProperty, IsomorphismSymmetricAndConsistentWithFingerprints) {
    const auto groups = small_catalog(24);
    for (std::size_t i = 0; i < groups.size(); ++i)
        for (std::size_t j = 0; j < groups.size(); ++j) {
            const auto& [a, g] = groups[i];
            const auto& [b, h] = groups[j];
            const bool gh = is_isomorphic(g, h).has_value();
            const bool hg = is_isomorphic(h, g).has_value();
            EXPECT_EQ(gh, hg) << a << " " << b;
            if (gh) EXPECT_EQ(fingerprint(g), fingerprint(h)) << a << " " << b;
        }
}

TEST(Identify, Labels) {
    EXPECT_EQ(identify_group(group("C1")), "1");
    EXPECT_EQ(identify_group(group("C7")), "C7");
    EXPECT_EQ(identify_group(group("C2^3")), "C2^3");
    EXPECT_EQ(identify_group(group("D5")), "D5");
    EXPECT_EQ(identify_group(group("Q8")), "Q8");
    EXPECT_EQ(identify_group(group("S4")), "S4");
    EXPECT_EQ(identify_group(group("A5")), "A5");
    EXPECT_EQ(identify_group(group("F21")), "");
}
