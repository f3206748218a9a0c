#include "tqs/representation.hpp"

#include "tqs/detail/closure.hpp"
#include "tqs/errors.hpp"

#include <algorithm>

namespace tqs {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits to_bits(const std::vector<std::uint32_t>& classes, std::size_t r) {
    Bits b((r + 63) / 64, 0);
    for (auto c : classes) b[c / 64] |= std::uint64_t{1} << (c % 64);
    return b;
}

Bits intersect(const Bits& a, const Bits& b) {
    Bits c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] & b[i];
    return c;
}

bool only_identity(const Bits& b) {
    if (b[0] != 1) return false;
    return std::all_of(b.begin() + 1, b.end(), [](std::uint64_t w) { return w == 0; });
}

long to_long(const Rational& q) {
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw NonIntegralMultiplicity("non-integral multiplicity");
    return q.get_num().get_si();
}

} // namespace

bool MatrixRepresentation::is_homomorphism() const {
    const FiniteGroup& g = *group;
    if (images.size() != g.order()) return false;
    for (Elem a = 0; a < g.order(); ++a)
        for (Elem b = 0; b < g.order(); ++b)
            if (images[g.mul(a, b)] != images[a] * images[b]) return false;
    return true;
}

bool MatrixRepresentation::is_faithful() const {
    const CycMatrix id = CycMatrix::identity(dimension);
    for (Elem a = 1; a < images.size(); ++a)
        if (images[a] == id) return false;
    return true;
}

std::vector<CyclotomicNumber> MatrixRepresentation::character(const ConjugacyData& conj) const {
    std::vector<CyclotomicNumber> chi;
    chi.reserve(conj.representative.size());
    for (Elem rep : conj.representative) chi.push_back(cyc_reduce(images[rep].trace()));
    return chi;
}

MatrixGroup group_from_matrices(std::size_t dimension, const std::vector<CycMatrix>& gens, std::size_t order_cap) {
    unsigned long n = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].rows() != dimension || gens[i].cols() != dimension) throw NonInvertibleGenerator(i);
        n = lcm_ul(n, common_conductor(gens[i]));
    }
    // All products stay in Q(zeta_n); hashing every entry at conductor n makes
    // equal matrices hash equally whatever conductor an entry happens to carry.
    std::vector<CycMatrix> g;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (determinant(gens[i]).is_zero()) throw NonInvertibleGenerator(i);
        g.push_back(at_conductor(gens[i], n));
    }
    auto hash = [n](const CycMatrix& m) {
        std::size_t h = 1469598103934665603ull;
        for (const auto& x : m.data()) h = (h ^ x.at_conductor(n).raw_hash()) * 1099511628211ull;
        return h;
    };
    auto mul = [](const CycMatrix& a, const CycMatrix& b) { return a * b; };
    auto closure = detail::enumerate_group(CycMatrix::identity(dimension), g, mul, hash, std::equal_to<CycMatrix>(),
                                           order_cap);
    MatrixGroup out;
    out.group = closure.group;
    out.rep.group = closure.group;
    out.rep.dimension = dimension;
    out.rep.images.reserve(closure.elements.size());
    for (auto& m : closure.elements) out.rep.images.push_back(reduce_entries(m));
    return out;
}

std::vector<CyclotomicNumber> AbstractRepresentation::character(const CharacterTable& t) const {
    const auto& irr = t.irreducibles();
    std::vector<CyclotomicNumber> chi(t.conj().classes.size());
    for (std::size_t i = 0; i < irr.size(); ++i) {
        if (multiplicities[i] == 0) continue;
        const CyclotomicNumber m(multiplicities[i]);
        for (std::size_t c = 0; c < chi.size(); ++c) chi[c] += m * irr[i].values[c];
    }
    for (auto& x : chi) x = cyc_reduce(x);
    return chi;
}

std::vector<long> eigenvalue_multiset(const std::vector<CyclotomicNumber>& values, unsigned n) {
    if (values.size() != n || n == 0) throw NonIntegralMultiplicity("need chi(g^k) for k = 0..ord(g)-1");
    std::vector<long> m(n);
    const CyclotomicNumber inv_n(Rational(1, n));
    for (unsigned a = 0; a < n; ++a) {
        CyclotomicNumber acc;
        for (unsigned k = 0; k < n; ++k) {
            if (values[k].is_zero()) continue;
            acc += values[k].times_root(n, -static_cast<long>((static_cast<unsigned long>(a) * k) % n));
        }
        acc = cyc_reduce(acc * inv_n);
        if (!acc.is_rational()) throw NonIntegralMultiplicity("eigenvalue multiplicity is not rational");
        const long v = to_long(acc.to_rational());
        if (v < 0) throw NonIntegralMultiplicity("negative eigenvalue multiplicity");
        m[a] = v;
    }
    return m;
}

std::vector<long> class_eigenvalues(const CharacterTable& t, const std::vector<CyclotomicNumber>& chi,
                                    std::uint32_t c) {
    return eigenvalue_multiset(t.power_values(chi, c), t.conj().rep_order[c]);
}

std::vector<long> eigenvalues_by_charpoly(const CycMatrix& m, unsigned n) {
    CycPolynomial p = char_poly(m);
    std::vector<long> mult(n, 0);
    for (unsigned a = 0; a < n && p.degree() > 0; ++a) {
        const CyclotomicNumber root = CyclotomicNumber::root_of_unity(n, a);
        const CycPolynomial lin(std::vector<CyclotomicNumber>{-root, CyclotomicNumber(1)});
        while (p.degree() > 0) {
            auto [q, r] = divmod(p, lin);
            if (!r.is_zero()) break;
            p = std::move(q);
            ++mult[a];
        }
    }
    if (p.degree() != 0) throw Error("matrix has an eigenvalue that is not an n-th root of unity");
    return mult;
}

std::vector<std::uint32_t> kernel_classes(const std::vector<CyclotomicNumber>& chi) {
    std::vector<std::uint32_t> k;
    for (std::uint32_t c = 0; c < chi.size(); ++c)
        if (chi[c] == chi[0]) k.push_back(c);
    return k;
}

void for_each_faithful_character(const CharacterTable& t, std::size_t d,
                                 const std::function<bool(const AbstractRepresentation&)>& f) {
    const auto& irr = t.irreducibles();
    const std::size_t r = irr.size();
    std::vector<Bits> ker;
    for (const auto& chi : irr) ker.push_back(to_bits(chi.kernel_classes, r));
    std::vector<long> mult(r, 0);
    Bits all((r + 63) / 64, ~std::uint64_t{0});
    bool stop = false;
    auto rec = [&](auto&& self, std::size_t i, long remaining, const Bits& k) -> void {
        if (stop) return;
        if (remaining == 0) {
            if (only_identity(k)) stop = !f(AbstractRepresentation{mult, static_cast<long>(d)});
            return;
        }
        if (i == r) return;
        // Take irreducible i with multiplicity 0, 1, 2, ...
        self(self, i + 1, remaining, k);
        const Bits k2 = intersect(k, ker[i]);
        for (long m = 1; m * irr[i].degree <= remaining && !stop; ++m) {
            mult[i] = m;
            self(self, i + 1, remaining - m * irr[i].degree, k2);
        }
        mult[i] = 0;
    };
    if (d > 0) rec(rec, 0, static_cast<long>(d), all);
}

std::vector<AbstractRepresentation> faithful_characters_of_degree(const CharacterTable& t, std::size_t d) {
    std::vector<AbstractRepresentation> out;
    for_each_faithful_character(t, d, [&](const AbstractRepresentation& a) {
        out.push_back(a);
        return true;
    });
    return out;
}

bool has_faithful_representation(const CharacterTable& t, std::size_t d) {
    // Padding with the trivial character is free, so it is enough to find a
    // set of distinct irreducibles of total degree <= d with trivial joint kernel.
    const auto& irr = t.irreducibles();
    const std::size_t r = irr.size();
    if (d == 0) return r == 1;
    std::vector<Bits> ker;
    for (const auto& chi : irr) ker.push_back(to_bits(chi.kernel_classes, r));
    auto rec = [&](auto&& self, std::size_t i, long remaining, const Bits& k) -> bool {
        if (only_identity(k)) return true;
        for (std::size_t j = i; j < r; ++j) {
            if (irr[j].degree > remaining) continue;
            Bits k2 = intersect(k, ker[j]);
            if (k2 == k) continue;
            if (self(self, j + 1, remaining - irr[j].degree, k2)) return true;
        }
        return false;
    };
    Bits all((r + 63) / 64, 0);
    for (std::size_t c = 0; c < r; ++c) all[c / 64] |= std::uint64_t{1} << (c % 64);
    return rec(rec, 0, static_cast<long>(d), all);
}

std::vector<std::pair<std::size_t, long>> isotypic_decomposition(const CharacterTable& t,
                                                                 const std::vector<CyclotomicNumber>& chi) {
    std::vector<std::pair<std::size_t, long>> out;
    long total = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const CyclotomicNumber ip = t.inner_product(chi, t.irreducibles()[i].values);
        if (!ip.is_rational()) throw NonIntegralMultiplicity("inner product with an irreducible is not rational");
        const long m = to_long(ip.to_rational());
        if (m < 0) throw NonIntegralMultiplicity("negative multiplicity");
        if (m > 0) out.emplace_back(i, m);
        total += m * t.irreducibles()[i].degree;
    }
    if (!(CyclotomicNumber(total) == chi[0])) throw NonIntegralMultiplicity("constituent degrees do not add up");
    return out;
}

std::vector<std::pair<std::size_t, long>> isotypic_decomposition(const CharacterTable& t,
                                                                 const MatrixRepresentation& rep) {
    return isotypic_decomposition(t, rep.character(t.conj()));
}

PowerSeries<Rational> molien_series(const MatrixRepresentation& rep, const ConjugacyData& conj, std::size_t order) {
    std::vector<CyclotomicNumber> acc(order + 1);
    const std::size_t d = rep.dimension;
    for (std::size_t c = 0; c < conj.classes.size(); ++c) {
        // det(I - tM) is the reversed characteristic polynomial; invert it by
        // the linear recurrence its coefficients define.
        const CycPolynomial cp = char_poly(rep(conj.representative[c]));
        std::vector<CyclotomicNumber> q(d + 1);
        for (std::size_t k = 0; k <= d; ++k) q[k] = cp.coeff(d - k);
        std::vector<CyclotomicNumber> s(order + 1);
        s[0] = CyclotomicNumber(1);
        for (std::size_t m = 1; m <= order; ++m) {
            CyclotomicNumber v;
            for (std::size_t i = 1; i <= std::min(d, m); ++i)
                if (!q[i].is_zero() && !s[m - i].is_zero()) v -= q[i] * s[m - i];
            s[m] = std::move(v);
        }
        const CyclotomicNumber w(static_cast<long>(conj.classes[c].size()));
        for (std::size_t m = 0; m <= order; ++m)
            if (!s[m].is_zero()) acc[m] += w * s[m];
    }
    std::vector<Rational> out(order + 1);
    const Rational inv_g(1, rep.group->order());
    for (std::size_t m = 0; m <= order; ++m) {
        const CyclotomicNumber x = cyc_reduce(acc[m]);
        if (!x.is_rational()) throw Error("Molien coefficient is not rational");
        out[m] = x.to_rational() * inv_g;
    }
    return PowerSeries<Rational>(std::move(out), order);
}

} // namespace tqs
