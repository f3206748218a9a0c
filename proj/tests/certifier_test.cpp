#include "corruptions.hpp"
#include "support.hpp"

#include "tqs/certifier.hpp"
#include "tqs/reflection.hpp"

#include <gtest/gtest.h>

using namespace tqs;
using namespace tqs::test;

namespace {

RdCertificate run(const GroupPtr& g, std::size_t d, const std::string& id = "") {
    CertifyOptions o;
    o.aut_cap = kCap;
    return certify({g, d, nullptr, id}, o);
}

bool verifies(const RdCertificate& c, const GroupPtr& g, const MatrixRepresentation* rep = nullptr) {
    std::string why;
    const bool ok = verify_certificate(c, {g, c.d, rep, c.group_id}, CounterexampleDB::builtin(), &why);
    if (!ok) ADD_FAILURE() << c.group_id << " d=" << c.d << ": " << why;
    return ok;
}

bool rejected(const RdCertificate& c, const GroupPtr& g, const MatrixRepresentation* rep = nullptr) {
    return !verify_certificate(c, {g, c.d, rep, c.group_id});
}

std::size_t gcd_with_factorial(std::size_t n, std::size_t d) {
    std::size_t f = 1;
    for (std::size_t k = 2; k <= d; ++k) f *= k;
    return std::gcd(n, f);
}

} // namespace

TEST(Certify, SpecExamples) {
    auto c35 = run(group("C35"), 4, "C35");
    EXPECT_EQ(c35.verdict, Verdict::CertifiedRd);
    EXPECT_EQ(c35.rule, Rule::ThmRd2);
    const auto& w = std::get<ThmRd2Witness>(c35.witness);
    EXPECT_EQ(w.order, 35u);
    EXPECT_EQ(w.d_factorial, 24);
    EXPECT_EQ(w.gcd, 1);

    const auto c2 = run(group("C2"), 2);
    EXPECT_EQ(c2.verdict, Verdict::KnownNotRd);
    EXPECT_EQ(c2.rule, Rule::CounterexampleDB);

    const auto klein = run(group("C2xC2"), 2);
    EXPECT_EQ(klein.verdict, Verdict::CertifiedRd);
    EXPECT_EQ(klein.rule, Rule::StronglyRd);

    for (const char* id : {"S5", "Q8", "C2", "F21"}) {
        const auto r1 = run(group(id), 1);
        EXPECT_EQ(r1.rule, Rule::R1Trivial) << id;
        EXPECT_EQ(r1.verdict, Verdict::CertifiedRd) << id;
    }
}

TEST(Certify, S5AtThreeIsVacuousButTheAutOutCriterionHolds) {
    // S_5 has no faithful 3-dimensional representation, and that rule comes first.
    const auto g = group("S5");
    const auto c = run(g, 3, "S5");
    EXPECT_EQ(c.verdict, Verdict::VacuouslyRd);
    EXPECT_EQ(c.rule, Rule::NoFaithfulRep);
    const auto w = certify_thm_rd1(g, kCap);
    ASSERT_TRUE(w);
    std::vector<std::size_t> orders;
    for (const auto& n : w->normal_subgroups) orders.push_back(n.size());
    EXPECT_EQ(orders, (std::vector<std::size_t>{1, 60, 120}));
    EXPECT_EQ(w->center.size(), 1u);
    EXPECT_EQ(w->out_order, 1u);
    const auto c4 = run(g, 4, "S5");
    EXPECT_EQ(c4.rule, Rule::ThmRd1);
}

TEST(ThmRd1, Examples) {
    EXPECT_FALSE(certify_thm_rd1(group("S3")));  // A_3 is a proper non-perfect normal subgroup
    ThmRd1Findings f;
    const auto a5 = certify_thm_rd1(group("A5"), kDefaultAutCap, &f);
    ASSERT_TRUE(a5);
    EXPECT_TRUE(a5->group_perfect);
    EXPECT_EQ(a5->out_order, 2u);
    EXPECT_EQ(a5->complement_order, 2u);
    EXPECT_EQ(f.aut_order, 120u);
    ThmRd1Findings c6;
    EXPECT_FALSE(certify_thm_rd1(group("C6"), kDefaultAutCap, &c6));
    EXPECT_FALSE(c6.center_trivial);
}

TEST(ThmRd1, CapPropagates) {
    EXPECT_THROW(certify_thm_rd1(group("S7"), 512), AutCapExceeded);
    CertifyOptions o;
    o.aut_cap = 512;
    EXPECT_THROW(certify({group("S7"), 6, nullptr, "S7"}, o), AutCapExceeded);
}

TEST(ThmRd2, Examples) {
    EXPECT_TRUE(certify_thm_rd2(35, 4));
    EXPECT_FALSE(certify_thm_rd2(6, 2));
    for (std::size_t d = 1; d <= 8; ++d) EXPECT_TRUE(certify_thm_rd2(1, d));
}

TEST(Composition, Examples) {
    const auto g = group("C6xC10");
    const auto w = certify_composition(g, 2);
    ASSERT_TRUE(w);
    const Subgroup h(g, w->normal_subgroup);
    EXPECT_TRUE(h.is_normal());
    EXPECT_FALSE(h.is_trivial() || h.is_whole());
    ASSERT_TRUE(w->quotient);
    EXPECT_EQ(w->quotient->verdict, Verdict::CertifiedRd);
    const auto c = run(g, 2, "C6xC10");
    EXPECT_EQ(c.rule, Rule::Composition);

    EXPECT_FALSE(certify_composition(group("A5"), 3));
    EXPECT_FALSE(certify_composition(group("C4"), 2));
}

TEST(ScalarMuN, Examples) {
    const auto mu3 = catalog("mu3_A2");
    const auto w = certify_scalar_mu_n(*mu3.rep, 2);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->n, 3u);
    EXPECT_FALSE(certify_scalar_mu_n(*catalog("mu2_A2").rep, 2));
    const auto mu2 = catalog("mu2_A3");
    ASSERT_TRUE(certify_scalar_mu_n(*mu2.rep, 3));
    const auto sc = certify_singularity({mu2.group, 3, &*mu2.rep, "mu2_A3"});
    EXPECT_EQ(sc.rule, Rule::ScalarMuN);
    EXPECT_EQ(sc.scope, Scope::Representation);
    EXPECT_TRUE(verifies(sc, mu2.group, &*mu2.rep));
    // not scalar
    EXPECT_FALSE(certify_scalar_mu_n(*catalog("C2_refl").rep, 2));
}

TEST(Verify, Examples) {
    const auto c35 = run(group("C35"), 4, "C35");
    EXPECT_TRUE(verifies(c35, group("C35")));

    // ThmRd1 with an inner automorphism smuggled into the complement
    const auto a5 = group("A5");
    auto cert = run(a5, 3, "A5");
    ASSERT_EQ(cert.rule, Rule::ThmRd1);
    auto& w = std::get<ThmRd1Witness>(cert.witness);
    std::vector<Elem> inner;
    for (Elem s : w.domain_generators) inner.push_back(a5->conj(s, 1));
    w.complement_generators = {inner};
    EXPECT_TRUE(rejected(cert, a5));

    // Composition witness with a non-normal H
    const auto s3 = group("S3");
    Elem t = 1;
    while (s3->element_order(t) != 2) ++t;
    RdCertificate comp;
    comp.group_id = "S3";
    comp.d = 2;
    comp.verdict = Verdict::CertifiedRd;
    comp.rule = Rule::Composition;
    CompositionWitness cw;
    cw.normal_subgroup = {0, t};
    cw.quotient = std::make_shared<RdCertificate>(run(group("C3"), 2));
    comp.witness = cw;
    std::string why;
    EXPECT_FALSE(verify_certificate(comp, {s3, 2, nullptr, "S3"}, CounterexampleDB::builtin(), &why));
    EXPECT_EQ(why, "H is not normal");
}

TEST(Verify, RandomCorruptionsAreRejected) {
    const auto cases = corruption_cases();
    for (const auto& c : cases) ASSERT_TRUE(verifies(c.cert, c.group->group, c.rep())) << c.cert.group_id;
    int caught = 0;
    run_corruptions(cases, 2024, 100, [&](const CorruptionCase& c, const std::string& name, bool rej) {
        caught += rej;
        EXPECT_TRUE(rej) << c.cert.group_id << " " << name;
    });
    EXPECT_EQ(caught, 100);
}

TEST(CertifierProperty, CatalogCertificatesVerify) {
    for (const auto& e : builtin_catalog()) {
        const auto g = parse(e.spec).group;
        if (g->order() > 720) continue;
        for (std::size_t d = 1; d <= 4; ++d) {
            const auto c = run(g, d, e.id);
            EXPECT_TRUE(verifies(c, g)) << e.id << " d=" << d;
        }
    }
}

TEST(CertifierProperty, ThmRd2Monotone) {
    for (const auto& e : builtin_catalog()) {
        const auto n = parse(e.spec).group->order();
        for (std::size_t d = 1; d <= 8; ++d) {
            if (!certify_thm_rd2(n, d)) continue;
            EXPECT_EQ(gcd_with_factorial(n, d), 1u) << e.id;
            for (std::size_t k = 1; k <= d; ++k) EXPECT_TRUE(certify_thm_rd2(n, k)) << e.id << " " << k;
        }
    }
}

TEST(CertifierProperty, ThmRd1WitnessIsDimensionIndependent) {
    for (const char* id : {"A5", "S5", "S6"}) {
        const auto g = group(id);
        const auto w = certify_thm_rd1(g, kCap);
        ASSERT_TRUE(w) << id;
        for (std::size_t d = 1; d <= 8; ++d) {
            RdCertificate c;
            c.group_id = id;
            c.d = d;
            c.verdict = Verdict::CertifiedRd;
            c.rule = Rule::ThmRd1;
            c.witness = *w;
            EXPECT_TRUE(verifies(c, g)) << id << " d=" << d;
        }
    }
}

TEST(CertifierProperty, KnownNotRdOnlyForC2) {
    const auto c2 = group("C2");
    for (const auto& e : builtin_catalog()) {
        const auto g = parse(e.spec).group;
        if (g->order() > 720) continue;
        for (std::size_t d = 1; d <= 4; ++d) {
            const auto c = run(g, d, e.id);
            if (c.verdict == Verdict::KnownNotRd) {
                EXPECT_TRUE(is_isomorphic(g, c2)) << e.id;
                EXPECT_GE(d, 2u) << e.id;
            }
        }
    }
}

TEST(CertifierProperty, CoprimeOrderWithFaithfulRepIsAbelian) {
    for (const auto& e : builtin_catalog()) {
        const auto g = parse(e.spec).group;
        if (g->order() > 720) continue;
        const CharacterTable t(g);
        for (std::size_t d = 1; d <= 5; ++d) {
            if (gcd_with_factorial(g->order(), d) != 1) continue;
            const auto faithful = faithful_characters_of_degree(t, d);
            if (faithful.empty()) continue;
            EXPECT_TRUE(g->is_abelian()) << e.id << " d=" << d;
            // every constituent is linear
            for (const auto& r : faithful)
                for (std::size_t i = 0; i < r.multiplicities.size(); ++i)
                    if (r.multiplicities[i]) EXPECT_EQ(t.irreducibles()[i].degree, 1) << e.id;
        }
    }
}

TEST(Memo, HitsRequireTheSameTable) {
    CertificateMemo memo;
    CertifyOptions o;
    o.memo = &memo;
    const auto g = group("D5");
    const auto a = certify({g, 2, nullptr, "x"}, o);
    const auto b = certify({g, 2, nullptr, "y"}, o);
    EXPECT_EQ(b.group_id, "y");
    EXPECT_EQ(a.rule, b.rule);
    // same group, different labelling: a separate entry, and its certificate still verifies
    const auto h = perm_group(5, {{1, 0, 4, 3, 2}, {1, 2, 3, 4, 0}});
    ASSERT_EQ(h->order(), 10u);
    ASSERT_FALSE(h->same_table(*g));
    const auto c = certify({h, 2, nullptr, "z"}, o);
    EXPECT_TRUE(verifies(c, h));
}

TEST(CounterexampleDatabase, BuiltinHoldsOnlyC2) {
    const auto& db = CounterexampleDB::builtin();
    ASSERT_EQ(db.entries().size(), 1u);
    EXPECT_EQ(db.entries()[0].group->order(), 2u);
    EXPECT_EQ(db.entries()[0].d_min, 2u);
    EXPECT_FALSE(db.match(group("C2"), 1));
    EXPECT_TRUE(db.match(group("C2"), 7));
    EXPECT_FALSE(db.match(group("C3"), 2));
}

TEST(CounterexampleDatabase, UserEntries) {
    CounterexampleDB db = CounterexampleDB::builtin();
    db.add({"C4", group("C4"), 2, 2});
    CertifyOptions o;
    o.db = &db;
    const auto c = certify({group("C4"), 2, nullptr, "C4"}, o);
    EXPECT_EQ(c.verdict, Verdict::KnownNotRd);
    EXPECT_TRUE(verify_certificate(c, {group("C4"), 2, nullptr, "C4"}, db));
    EXPECT_FALSE(verify_certificate(c, {group("C4"), 2, nullptr, "C4"}));  // builtin database lacks it
    EXPECT_NE(certify({group("C4"), 3, nullptr, "C4"}, o).verdict, Verdict::KnownNotRd);
}
