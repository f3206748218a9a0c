#include "tqs/certifier.hpp"

#include "tqs/errors.hpp"
#include "tqs/reflection.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>

namespace tqs {

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::CertifiedRd: return "CertifiedRd";
    case Verdict::VacuouslyRd: return "VacuouslyRd";
    case Verdict::KnownNotRd: return "KnownNotRd";
    case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

const char* to_string(Rule r) {
    switch (r) {
    case Rule::R1Trivial: return "R1Trivial";
    case Rule::NoFaithfulRep: return "NoFaithfulRep";
    case Rule::CounterexampleDB: return "CounterexampleDB";
    case Rule::ThmRd2: return "ThmRd2";
    case Rule::StronglyRd: return "StronglyRd";
    case Rule::ThmRd1: return "ThmRd1";
    case Rule::Composition: return "Composition";
    case Rule::ScalarMuN: return "ScalarMuN";
    case Rule::None: return "None";
    }
    return "?";
}

const char* to_string(Scope s) { return s == Scope::Group ? "group" : "representation"; }

// ---------------------------------------------------------------- database

const CounterexampleDB& CounterexampleDB::builtin() {
    static const CounterexampleDB db = [] {
        CounterexampleDB d;
        d.add(CounterexampleEntry{"C2", group_from_permutations(2, {{1, 0}}).group, 2, 0});
        return d;
    }();
    return db;
}

const CounterexampleEntry* CounterexampleDB::find(const std::string& name) const {
    for (const auto& e : entries_)
        if (e.name == name) return &e;
    return nullptr;
}

std::optional<CounterexampleWitness> CounterexampleDB::match(const GroupPtr& g, std::size_t d) const {
    for (const auto& e : entries_) {
        if (d < e.d_min || (e.d_max != 0 && d > e.d_max)) continue;
        if (e.group->order() != g->order()) continue;
        if (auto iso = is_isomorphic(g, e.group)) return CounterexampleWitness{e.name, iso->image};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- memo

std::optional<RdCertificate> CertificateMemo::lookup(const GroupPtr& g, std::size_t d) const {
    const std::string key = fingerprint(g).key() + "#" + std::to_string(d);
    std::lock_guard lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    for (const auto& [grp, cert] : it->second)
        if (grp->same_table(*g)) return cert;
    return std::nullopt;
}

void CertificateMemo::store(const GroupPtr& g, std::size_t d, const RdCertificate& cert) {
    const std::string key = fingerprint(g).key() + "#" + std::to_string(d);
    std::lock_guard lock(mu_);
    auto& bucket = map_[key];
    for (auto& [grp, c] : bucket)
        if (grp->same_table(*g)) {
            c = cert;
            return;
        }
    bucket.emplace_back(g, cert);
}

std::size_t CertificateMemo::size() const {
    std::lock_guard lock(mu_);
    std::size_t n = 0;
    for (const auto& [k, v] : map_) n += v.size();
    return n;
}

// ---------------------------------------------------------------- rules

std::optional<ThmRd2Witness> certify_thm_rd2(std::size_t group_order, std::size_t d) {
    ThmRd2Witness w;
    w.order = group_order;
    mpz_fac_ui(w.d_factorial.get_mpz_t(), d);
    const Integer n(static_cast<unsigned long>(group_order));
    mpz_gcd(w.gcd.get_mpz_t(), n.get_mpz_t(), w.d_factorial.get_mpz_t());
    if (w.gcd != 1) return std::nullopt;
    return w;
}

std::optional<StronglyRdWitness> certify_strongly_rd(const CharacterTable& t, std::size_t d) {
    const StronglyRdResult res = strongly_rd_verdict(t, d);
    if (res.verdict != StrongVerdict::Certified) return std::nullopt;
    StronglyRdWitness w;
    w.representations = res.faithful;
    for (const auto& rep : res.faithful) {
        const auto flags = pseudoreflection_classes(t, rep.character(t));
        std::vector<std::uint32_t> cls;
        for (std::uint32_t c = 0; c < flags.size(); ++c)
            if (flags[c]) cls.push_back(c);
        w.reflection_classes.push_back(std::move(cls));
    }
    return w;
}

std::optional<ThmRd1Witness> certify_thm_rd1(const GroupPtr& g, std::size_t aut_cap, ThmRd1Findings* findings) {
    ThmRd1Findings f;
    ThmRd1Witness w;
    const Subgroup z = center(g);
    f.center_order = z.order();
    f.center_trivial = z.is_trivial();
    w.center = z.members();

    const auto normals = normal_subgroups(g);
    f.group_perfect = is_perfect(g);
    f.proper_normals_perfect = true;
    for (const auto& n : normals) {
        const bool perf = n.is_trivial() || is_perfect(subgroup_as_group(n));
        w.normal_subgroups.push_back(n.members());
        w.perfect.push_back(perf);
        if (!n.is_whole() && !perf) f.proper_normals_perfect = false;
    }
    w.group_perfect = f.group_perfect;

    // Aut is the expensive part; only go there when (1) and (3) hold.
    if (f.center_trivial && (f.group_perfect || f.proper_normals_perfect)) {
        const AutOutData aut = automorphism_group(g, aut_cap);
        f.aut_order = aut.aut_group->order();
        f.out_order = aut.out_order;
        f.aut_splits = aut.splitting.has_value();
        if (aut.splitting) {
            w.domain_generators = aut.domain_generators;
            w.aut_order = aut.aut_group->order();
            w.inner_order = aut.inner.order();
            w.out_order = aut.out_order;
            w.complement_order = aut.splitting->order();
            const auto cgens = small_generating_set(subgroup_as_group(*aut.splitting));
            std::vector<Elem> emb;
            subgroup_as_group(*aut.splitting, &emb);
            for (Elem c : cgens) {
                const auto& im = aut.generator_images[emb[c]];
                w.complement_generators.emplace_back(im.begin(), im.end());
            }
        }
    }
    if (findings) *findings = f;
    if (!f.center_trivial || !(f.group_perfect || f.proper_normals_perfect) || !f.aut_splits.value_or(false))
        return std::nullopt;
    return w;
}

std::optional<ScalarWitness> certify_scalar_mu_n(const MatrixRepresentation& rep, std::size_t d) {
    if (rep.dimension != d) return std::nullopt;
    const FiniteGroup& g = *rep.group;
    for (const auto& m : rep.images)
        if (!m.is_scalar()) return std::nullopt;
    // A finite group of scalars is cyclic: mu_n with n = |G|.
    const std::size_t n = g.order();
    Elem gen = 0;
    for (Elem x = 0; x < n; ++x)
        if (g.element_order(x) == n) {
            gen = x;
            break;
        }
    if (g.element_order(gen) != n) return std::nullopt;
    ScalarWitness w;
    w.n = n;
    w.gcd = std::gcd(n, d);
    w.generator = gen;
    w.scalar = rep.images[gen](0, 0);
    if (w.gcd != 1) return std::nullopt;
    return w;
}

namespace {

RdCertificate certify_impl(const RdQuery& q, const CertifyOptions& opts, std::size_t depth);

RdCertificate make(const RdQuery& q, Verdict v, Rule r, Witness w, Scope s = Scope::Group) {
    RdCertificate c;
    c.group_id = q.group_id;
    c.d = q.d;
    c.verdict = v;
    c.rule = r;
    c.scope = s;
    c.witness = std::move(w);
    return c;
}

std::optional<CompositionWitness> composition_impl(const GroupPtr& g, std::size_t d, const CertifyOptions& opts,
                                                   std::size_t depth) {
    for (const auto& h : normal_subgroups(g)) {
        if (h.is_trivial() || h.is_whole()) continue;
        const CharacterTable th(subgroup_as_group(h));
        auto strong = certify_strongly_rd(th, d);
        if (!strong) continue;
        const Quotient qt = quotient(h);
        RdQuery sub{qt.group, d, nullptr, ""};
        RdCertificate qc = certify_impl(sub, opts, depth + 1);
        if (qc.verdict != Verdict::CertifiedRd && qc.verdict != Verdict::VacuouslyRd) continue;
        return CompositionWitness{h.members(), std::move(*strong), std::make_shared<const RdCertificate>(std::move(qc))};
    }
    return std::nullopt;
}

RdCertificate certify_impl(const RdQuery& q, const CertifyOptions& opts, std::size_t depth) {
    if (q.d == 0) throw Error("dimension must be positive");
    const auto start = std::chrono::steady_clock::now();
    const bool memoable = opts.memo && q.rep == nullptr;
    if (memoable)
        if (auto hit = opts.memo->lookup(q.group, q.d)) {
            hit->group_id = q.group_id;
            return *hit;
        }
    const CounterexampleDB& db = opts.db ? *opts.db : CounterexampleDB::builtin();
    const GroupPtr& g = q.group;

    RdCertificate cert = [&]() -> RdCertificate {
        if (q.d == 1) return make(q, Verdict::CertifiedRd, Rule::R1Trivial, R1Witness{});
        const CharacterTable t(g);
        if (!has_faithful_representation(t, q.d)) {
            NoFaithfulWitness w;
            for (const auto& chi : t.irreducibles()) w.irreducible_degrees.push_back(chi.degree);
            return make(q, Verdict::VacuouslyRd, Rule::NoFaithfulRep, std::move(w));
        }
        if (auto w = db.match(g, q.d)) return make(q, Verdict::KnownNotRd, Rule::CounterexampleDB, std::move(*w));
        if (auto w = certify_thm_rd2(g->order(), q.d)) return make(q, Verdict::CertifiedRd, Rule::ThmRd2, std::move(*w));
        if (auto w = certify_strongly_rd(t, q.d)) return make(q, Verdict::CertifiedRd, Rule::StronglyRd, std::move(*w));
        ThmRd1Findings findings;
        if (auto w = certify_thm_rd1(g, opts.aut_cap, &findings)) {
            auto c = make(q, Verdict::CertifiedRd, Rule::ThmRd1, std::move(*w));
            c.thm_rd1 = findings;
            return c;
        }
        std::optional<RdCertificate> found;
        if (depth < opts.composition_depth)
            if (auto w = composition_impl(g, q.d, opts, depth))
                found = make(q, Verdict::CertifiedRd, Rule::Composition, std::move(*w));
        if (!found && q.rep)
            if (auto w = certify_scalar_mu_n(*q.rep, q.d))
                found = make(q, Verdict::CertifiedRd, Rule::ScalarMuN, std::move(*w), Scope::Representation);
        if (!found) found = make(q, Verdict::Unknown, Rule::None, std::monostate{});
        found->thm_rd1 = findings;
        return *found;
    }();

    cert.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (memoable) opts.memo->store(g, q.d, cert);
    return cert;
}

} // namespace

RdCertificate certify(const RdQuery& q, const CertifyOptions& opts) { return certify_impl(q, opts, 0); }

std::optional<CompositionWitness> certify_composition(const GroupPtr& g, std::size_t d, const CertifyOptions& opts) {
    return composition_impl(g, d, opts, 0);
}

RdCertificate certify_singularity(const RdQuery& q, const CertifyOptions& opts) {
    if (!q.rep) throw Error("singularity certification needs a matrix representation");
    const auto start = std::chrono::steady_clock::now();
    RdCertificate c;
    if (auto w = certify_scalar_mu_n(*q.rep, q.d)) {
        c = make(q, Verdict::CertifiedRd, Rule::ScalarMuN, std::move(*w), Scope::Representation);
    } else {
        RdQuery group_q = q;
        group_q.rep = nullptr;
        c = certify(group_q, opts);
        // A group-level R_d proof covers this representation; nothing else transfers.
        if (c.verdict != Verdict::CertifiedRd && c.verdict != Verdict::VacuouslyRd) {
            c = make(q, Verdict::Unknown, Rule::None, std::monostate{}, Scope::Representation);
        }
    }
    c.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return c;
}

// ---------------------------------------------------------------- verifier

namespace {

struct Checker {
    std::string* reason;
    bool fail(const std::string& why) const {
        if (reason) *reason = why;
        return false;
    }
};

bool same_set(std::vector<Elem> a, std::vector<Elem> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

bool verify_strong(const GroupPtr& g, std::size_t d, const StronglyRdWitness& w, const Checker& ck) {
    const CharacterTable t(g);
    if (w.representations.empty()) return ck.fail("no faithful representation listed");
    if (w.reflection_classes.size() != w.representations.size()) return ck.fail("reflection data missing");
    std::set<std::vector<long>> seen;
    for (std::size_t i = 0; i < w.representations.size(); ++i) {
        const auto& rep = w.representations[i];
        if (rep.multiplicities.size() != t.size()) return ck.fail("multiplicity vector has wrong length");
        long deg = 0;
        for (std::size_t j = 0; j < t.size(); ++j) {
            if (rep.multiplicities[j] < 0) return ck.fail("negative multiplicity");
            deg += rep.multiplicities[j] * t.irreducibles()[j].degree;
        }
        if (deg != static_cast<long>(d) || rep.total_degree != deg) return ck.fail("representation has wrong degree");
        const auto chi = rep.character(t);
        if (kernel_classes(chi).size() != 1) return ck.fail("listed representation is not faithful");
        const auto flags = pseudoreflection_classes(t, chi);
        std::vector<std::uint32_t> cls;
        for (std::uint32_t c = 0; c < flags.size(); ++c)
            if (flags[c]) cls.push_back(c);
        if (cls != w.reflection_classes[i]) return ck.fail("pseudoreflection classes do not match");
        std::vector<Elem> gens;
        for (auto c : cls) gens.insert(gens.end(), t.conj().classes[c].begin(), t.conj().classes[c].end());
        if (!generated_subgroup(g, gens).is_whole()) return ck.fail("pseudoreflections do not generate the group");
        if (!seen.insert(rep.multiplicities).second) return ck.fail("representation listed twice");
    }
    // The list has to be exhaustive.
    std::size_t total = 0;
    for_each_faithful_character(t, d, [&](const AbstractRepresentation&) { return ++total <= seen.size(); });
    if (total != seen.size()) return ck.fail("list of faithful representations is incomplete");
    return true;
}

bool verify_thm_rd1(const GroupPtr& g, const ThmRd1Witness& w, const Checker& ck) {
    const FiniteGroup& G = *g;
    // (1) trivial center
    if (!same_set(w.center, center(g).members())) return ck.fail("center does not match");
    if (w.center.size() != 1) return ck.fail("center is not trivial");
    // (3) perfectness
    const auto normals = normal_subgroups(g);
    if (normals.size() != w.normal_subgroups.size() || w.perfect.size() != normals.size())
        return ck.fail("normal subgroup list does not match");
    bool proper_perfect = true;
    for (std::size_t i = 0; i < normals.size(); ++i) {
        if (!same_set(normals[i].members(), w.normal_subgroups[i])) return ck.fail("normal subgroup list does not match");
        const bool perf = normals[i].is_trivial() || is_perfect(subgroup_as_group(normals[i]));
        if (perf != w.perfect[i]) return ck.fail("perfectness flag is wrong");
        if (!normals[i].is_whole() && !perf) proper_perfect = false;
    }
    if (w.group_perfect != is_perfect(g)) return ck.fail("group perfectness flag is wrong");
    if (!w.group_perfect && !proper_perfect) return ck.fail("condition on normal subgroups fails");

    // (2) complement of Inn in Aut
    if (generated_subgroup(g, w.domain_generators).order() != G.order())
        return ck.fail("domain generators do not generate");
    const std::size_t aut = count_automorphisms(g);
    if (aut != w.aut_order) return ck.fail("automorphism count does not match");
    if (w.inner_order != G.order() / w.center.size()) return ck.fail("inner automorphism count is wrong");
    if (w.inner_order * w.out_order != w.aut_order) return ck.fail("|Inn| |Out| != |Aut|");
    if (w.complement_order != w.out_order) return ck.fail("complement has the wrong order");

    std::vector<std::vector<Elem>> gens;
    for (const auto& im : w.complement_generators) {
        for (Elem y : im)
            if (y >= G.order()) return ck.fail("complement generator image out of range");
        auto phi = extend_to_homomorphism(G, w.domain_generators, G, im);
        if (!phi) return ck.fail("complement generator is not a homomorphism");
        std::vector<char> hit(G.order(), 0);
        for (Elem y : *phi) {
            if (hit[y]) return ck.fail("complement generator is not bijective");
            hit[y] = 1;
        }
        gens.push_back(std::move(*phi));
    }
    std::vector<Elem> id(G.order());
    std::iota(id.begin(), id.end(), 0u);
    std::set<std::vector<Elem>> k{id};
    std::vector<std::vector<Elem>> queue{id};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (const auto& s : gens) {
            std::vector<Elem> c(G.order());
            for (Elem x = 0; x < G.order(); ++x) c[x] = queue[i][s[x]];
            if (k.insert(c).second) {
                if (k.size() > w.complement_order) return ck.fail("complement is larger than claimed");
                queue.push_back(std::move(c));
            }
        }
    }
    if (k.size() != w.complement_order) return ck.fail("complement has the wrong order");
    for (const auto& phi : k) {
        if (phi == id) continue;
        for (Elem x = 0; x < G.order(); ++x) {
            bool inner = true;
            for (Elem s : w.domain_generators)
                if (phi[s] != G.conj(s, x)) {
                    inner = false;
                    break;
                }
            if (inner) return ck.fail("complement meets Inn nontrivially");
        }
    }
    return true;
}

bool verify_impl(const RdCertificate& cert, const RdQuery& q, const CounterexampleDB& db, const Checker& ck) {
    const GroupPtr& g = q.group;
    if (cert.d != q.d || q.d == 0) return ck.fail("dimension mismatch");
    const Scope want_scope = cert.rule == Rule::ScalarMuN ? Scope::Representation : cert.scope;
    if (cert.scope != want_scope) return ck.fail("wrong scope");
    auto expect = [&](Verdict v) { return cert.verdict == v ? true : ck.fail("verdict does not fit the rule"); };

    switch (cert.rule) {
    case Rule::None:
        if (!std::holds_alternative<std::monostate>(cert.witness)) return ck.fail("unexpected witness");
        return expect(Verdict::Unknown);
    case Rule::R1Trivial:
        if (!std::holds_alternative<R1Witness>(cert.witness)) return ck.fail("witness type mismatch");
        if (q.d != 1) return ck.fail("R1 rule needs d = 1");
        return expect(Verdict::CertifiedRd);
    case Rule::NoFaithfulRep: {
        const auto* w = std::get_if<NoFaithfulWitness>(&cert.witness);
        if (!w) return ck.fail("witness type mismatch");
        const CharacterTable t(g);
        std::vector<long> degs;
        for (const auto& chi : t.irreducibles()) degs.push_back(chi.degree);
        if (degs != w->irreducible_degrees) return ck.fail("irreducible degrees do not match");
        if (has_faithful_representation(t, q.d)) return ck.fail("a faithful representation exists");
        return expect(Verdict::VacuouslyRd);
    }
    case Rule::CounterexampleDB: {
        const auto* w = std::get_if<CounterexampleWitness>(&cert.witness);
        if (!w) return ck.fail("witness type mismatch");
        const CounterexampleEntry* e = db.find(w->entry);
        if (!e) return ck.fail("no such database entry");
        if (q.d < e->d_min || (e->d_max && q.d > e->d_max)) return ck.fail("database entry does not cover d");
        const GroupHomomorphism iso{g, e->group, w->isomorphism};
        if (!iso.is_bijective() || !iso.is_homomorphism()) return ck.fail("not an isomorphism");
        return expect(Verdict::KnownNotRd);
    }
    case Rule::ThmRd2: {
        const auto* w = std::get_if<ThmRd2Witness>(&cert.witness);
        if (!w) return ck.fail("witness type mismatch");
        const auto fresh = certify_thm_rd2(g->order(), q.d);
        if (w->order != g->order()) return ck.fail("group order does not match");
        Integer fac;
        mpz_fac_ui(fac.get_mpz_t(), q.d);
        if (w->d_factorial != fac) return ck.fail("d! is wrong");
        if (!fresh || w->gcd != 1) return ck.fail("gcd is not 1");
        return expect(Verdict::CertifiedRd);
    }
    case Rule::StronglyRd: {
        const auto* w = std::get_if<StronglyRdWitness>(&cert.witness);
        if (!w) return ck.fail("witness type mismatch");
        if (!verify_strong(g, q.d, *w, ck)) return false;
        return expect(Verdict::CertifiedRd);
    }
    case Rule::ThmRd1: {
        const auto* w = std::get_if<ThmRd1Witness>(&cert.witness);
        if (!w) return ck.fail("witness type mismatch");
        if (!verify_thm_rd1(g, *w, ck)) return false;
        return expect(Verdict::CertifiedRd);
    }
    case Rule::Composition: {
        const auto* w = std::get_if<CompositionWitness>(&cert.witness);
        if (!w) return ck.fail("witness type mismatch");
        for (Elem x : w->normal_subgroup)
            if (x >= g->order()) return ck.fail("subgroup element out of range");
        const Subgroup h(g, w->normal_subgroup);
        if (h.order() != w->normal_subgroup.size()) return ck.fail("subgroup has repeated elements");
        if (!h.is_subgroup()) return ck.fail("H is not a subgroup");
        if (!h.is_normal()) return ck.fail("H is not normal");
        if (h.is_trivial() || h.is_whole()) return ck.fail("H must be proper and nontrivial");
        if (!verify_strong(subgroup_as_group(h), q.d, w->strong, ck)) return false;
        if (!w->quotient) return ck.fail("missing quotient certificate");
        if (w->quotient->verdict != Verdict::CertifiedRd && w->quotient->verdict != Verdict::VacuouslyRd)
            return ck.fail("quotient is not certified");
        if (w->quotient->scope != Scope::Group) return ck.fail("quotient certificate must be group-level");
        const RdQuery sub{quotient(h).group, q.d, nullptr, ""};
        if (!verify_impl(*w->quotient, sub, db, ck)) return false;
        return expect(Verdict::CertifiedRd);
    }
    case Rule::ScalarMuN: {
        const auto* w = std::get_if<ScalarWitness>(&cert.witness);
        if (!w) return ck.fail("witness type mismatch");
        if (!q.rep) return ck.fail("scalar rule needs the representation");
        const MatrixRepresentation& rep = *q.rep;
        if (rep.dimension != q.d) return ck.fail("dimension mismatch");
        for (const auto& m : rep.images)
            if (!m.is_scalar()) return ck.fail("image is not scalar");
        if (w->n != g->order()) return ck.fail("n != |G|");
        if (w->generator >= g->order() || g->element_order(w->generator) != w->n) return ck.fail("generator has wrong order");
        if (rep.images[w->generator](0, 0) != w->scalar) return ck.fail("scalar does not match");
        if (w->gcd != std::gcd(w->n, q.d) || w->gcd != 1) return ck.fail("gcd(n, d) != 1");
        return expect(Verdict::CertifiedRd);
    }
    }
    return ck.fail("unknown rule");
}

} // namespace

bool verify_certificate(const RdCertificate& cert, const RdQuery& q, const CounterexampleDB& db, std::string* reason) {
    try {
        return verify_impl(cert, q, db, Checker{reason});
    } catch (const Error& e) {
        if (reason) *reason = e.what();
        return false;
    }
}

} // namespace tqs
