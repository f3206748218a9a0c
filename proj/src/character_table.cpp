#include "tqs/character_table.hpp"

#include "tqs/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>

namespace tqs {

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return a * b % p; }

u64 powmod(u64 a, u64 k, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (k) {
        if (k & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        k >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

u64 primitive_root(u64 p) {
    std::vector<u64> factors;
    u64 m = p - 1;
    for (u64 q = 2; q * q <= m; ++q)
        if (m % q == 0) {
            factors.push_back(q);
            while (m % q == 0) m /= q;
        }
    if (m > 1) factors.push_back(m);
    for (u64 g = 2; g < p; ++g) {
        bool ok = true;
        for (u64 q : factors)
            if (powmod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    return 1;
}

using ModMatrix = std::vector<std::vector<u64>>;

// Characteristic polynomial mod p via reduction to upper Hessenberg form.
std::vector<u64> charpoly_mod(ModMatrix h, u64 p) {
    const std::size_t n = h.size();
    for (std::size_t col = 0; col + 2 < n; ++col) {
        std::size_t piv = col + 1;
        while (piv < n && h[piv][col] == 0) ++piv;
        if (piv == n) continue;
        if (piv != col + 1) {
            std::swap(h[piv], h[col + 1]);
            for (std::size_t i = 0; i < n; ++i) std::swap(h[i][piv], h[i][col + 1]);
        }
        const u64 inv = invmod(h[col + 1][col], p);
        for (std::size_t i = col + 2; i < n; ++i) {
            if (h[i][col] == 0) continue;
            const u64 u = mulmod(h[i][col], inv, p);
            for (std::size_t j = 0; j < n; ++j) h[i][j] = (h[i][j] + p - mulmod(u, h[col + 1][j], p)) % p;
            for (std::size_t j = 0; j < n; ++j) h[j][col + 1] = (h[j][col + 1] + mulmod(u, h[j][i], p)) % p;
        }
    }
    // p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}   (1-based)
    std::vector<std::vector<u64>> poly(n + 1);
    poly[0] = {1};
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<u64> cur(m + 1, 0);
        for (std::size_t k = 0; k < m; ++k) {
            cur[k + 1] = (cur[k + 1] + poly[m - 1][k]) % p;
            cur[k] = (cur[k] + p - mulmod(h[m - 1][m - 1], poly[m - 1][k], p)) % p;
        }
        u64 t = 1;
        for (std::size_t i = m - 1; i >= 1; --i) {
            t = mulmod(t, h[i][i - 1], p);
            const u64 f = mulmod(h[i - 1][m - 1], t, p);
            if (f)
                for (std::size_t k = 0; k < poly[i - 1].size(); ++k)
                    cur[k] = (cur[k] + p - mulmod(f, poly[i - 1][k], p)) % p;
        }
        poly[m] = std::move(cur);
    }
    return poly[n];
}

// One-dimensional kernel of a, normalized so that v[0] = 1; empty on failure.
std::vector<u64> kernel_vector(ModMatrix a, u64 p) {
    const std::size_t n = a.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    std::vector<char> is_pivot(n, 0);
    for (std::size_t c = 0; c < n && r < n; ++c) {
        std::size_t piv = r;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) continue;
        std::swap(a[piv], a[r]);
        const u64 inv = invmod(a[r][c], p);
        for (auto& x : a[r]) x = mulmod(x, inv, p);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const u64 f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) a[i][j] = (a[i][j] + p - mulmod(f, a[r][j], p)) % p;
        }
        pivot_col.push_back(c);
        is_pivot[c] = 1;
        ++r;
    }
    if (r != n - 1) return {};
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    std::vector<u64> v(n, 0);
    v[free_col] = 1;
    for (std::size_t i = 0; i < r; ++i) v[pivot_col[i]] = (p - a[i][free_col]) % p;
    if (v[0] == 0) return {};
    const u64 inv = invmod(v[0], p);
    for (auto& x : v) x = mulmod(x, inv, p);
    return v;
}

} // namespace

ConjugacyData::ConjugacyData(const FiniteGroup& g) : classes(g.classes()), class_of(g.order()) {
    for (Elem x = 0; x < g.order(); ++x) class_of[x] = g.class_of(x);
    for (const auto& c : classes) {
        const Elem rep = c.front();
        representative.push_back(rep);
        rep_order.push_back(g.element_order(rep));
        inverse_class.push_back(g.class_of(g.inv(rep)));
        std::vector<std::uint32_t> pm(g.element_order(rep));
        Elem x = 0;
        for (std::size_t k = 0; k < pm.size(); ++k) {
            pm[k] = g.class_of(x);
            x = g.mul(x, rep);
        }
        power_map.push_back(std::move(pm));
    }
}

std::uint32_t ConjugacyData::power(std::uint32_t c, long k) const {
    const long o = rep_order[c];
    long e = k % o;
    if (e < 0) e += o;
    return power_map[c][static_cast<std::size_t>(e)];
}

CharacterTable::CharacterTable(GroupPtr g) : group_(std::move(g)), conj_(*group_), exponent_(group_->exponent()) {
    if (group_->is_abelian())
        build_abelian();
    else
        build_dixon();
    for (auto& chi : irr_) {
        const CyclotomicNumber deg(chi.degree);
        for (std::uint32_t c = 0; c < chi.values.size(); ++c)
            if (chi.values[c] == deg) chi.kernel_classes.push_back(c);
    }
    if (irr_.size() != conj_.classes.size()) throw Error("character table: wrong number of irreducibles");
    long sum = 0;
    for (const auto& chi : irr_) {
        if (chi.degree <= 0 || group_->order() % static_cast<std::size_t>(chi.degree) != 0)
            throw Error("character table: degree does not divide the group order");
        sum += chi.degree * chi.degree;
    }
    if (static_cast<std::size_t>(sum) != group_->order()) throw Error("character table: degrees do not square-sum to |G|");
}

void CharacterTable::build_abelian() {
    // Characters of an abelian group are the homomorphisms into Z/e.
    const FiniteGroup& g = *group_;
    const std::vector<Elem> gens = small_generating_set(group_);
    const unsigned e = exponent_;
    std::vector<unsigned> a(gens.size(), 0);
    std::vector<std::pair<std::vector<unsigned>, Character>> found;
    std::vector<long> phi(g.order());
    std::vector<Elem> queue;
    auto try_tuple = [&]() {
        std::fill(phi.begin(), phi.end(), -1);
        phi[0] = 0;
        queue.assign(1, 0);
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (std::size_t k = 0; k < gens.size(); ++k) {
                const Elem y = g.mul(queue[i], gens[k]);
                const long w = (phi[queue[i]] + static_cast<long>(a[k] * (e / g.element_order(gens[k])))) % e;
                if (phi[y] < 0) {
                    phi[y] = w;
                    queue.push_back(y);
                } else if (phi[y] != w) {
                    return;
                }
            }
        Character chi;
        chi.degree = 1;
        std::vector<unsigned> key;
        for (const auto& cls : conj_.classes) {
            const long v = phi[cls.front()];
            key.push_back(static_cast<unsigned>(v));
            chi.values.push_back(cyc_reduce(CyclotomicNumber::root_of_unity(e, v)));
        }
        found.emplace_back(std::move(key), std::move(chi));
    };
    auto rec = [&](auto&& self, std::size_t j) -> void {
        if (j == gens.size()) {
            try_tuple();
            return;
        }
        for (unsigned v = 0; v < g.element_order(gens[j]); ++v) {
            a[j] = v;
            self(self, j + 1);
        }
    };
    rec(rec, 0);
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& f : found) irr_.push_back(std::move(f.second));
}

void CharacterTable::build_dixon() {
    const FiniteGroup& g = *group_;
    const std::size_t n = g.order();
    const std::size_t r = conj_.classes.size();
    const unsigned e = exponent_;

    // p = 1 mod e makes F_p contain the e-th roots of unity. p > 2 sqrt|G|
    // separates characters and makes degrees (<= sqrt|G|) and eigenvalue
    // multiplicities recoverable from residues; p > 2 r^2 keeps collisions of
    // the random combination's eigenvalues unlikely.
    const u64 bound = std::max<u64>({static_cast<u64>(2 * std::sqrt(static_cast<double>(n))) + 1, 2 * r * r, r + 1});
    u64 p = e + 1;
    while (p <= bound || !is_prime(p)) p += e;

    std::mt19937_64 rng(0x5eed);
    for (int prime_attempt = 0; prime_attempt < 8; ++prime_attempt, p += e) {
        while (!is_prime(p)) p += e;
        std::vector<u64> inv_size(r);
        for (std::size_t c = 0; c < r; ++c) inv_size[c] = invmod(conj_.classes[c].size() % p, p);

        for (int attempt = 0; attempt < 40; ++attempt) {
            std::vector<u64> coef(r);
            for (auto& x : coef) x = rng() % p;
            // A[j][k] = sum_{x in G} coef[class(x)] [class(x^-1 z_k) = j]
            ModMatrix a(r, std::vector<u64>(r, 0));
            for (std::size_t k = 0; k < r; ++k) {
                const Elem z = conj_.representative[k];
                for (Elem x = 0; x < n; ++x) {
                    const auto j = g.class_of(g.mul(g.inv(x), z));
                    a[j][k] = (a[j][k] + coef[g.class_of(x)]) % p;
                }
            }
            const std::vector<u64> cp = charpoly_mod(a, p);
            std::vector<u64> roots;
            for (u64 lam = 0; lam < p && roots.size() < r; ++lam) {
                u64 acc = 0;
                for (std::size_t k = cp.size(); k-- > 0;) acc = (mulmod(acc, lam, p) + cp[k]) % p;
                if (acc == 0) roots.push_back(lam);
            }
            if (roots.size() != r) continue;

            std::vector<std::pair<std::vector<long>, Character>> found;
            bool ok = true;
            const u64 w_e = powmod(primitive_root(p), (p - 1) / e, p);
            for (u64 lam : roots) {
                ModMatrix m = a;
                for (std::size_t i = 0; i < r; ++i) m[i][i] = (m[i][i] + p - lam) % p;
                const std::vector<u64> w = kernel_vector(std::move(m), p);
                if (w.empty()) {
                    ok = false;
                    break;
                }
                // chi(1)^2 = |G| / sum_j w_j w_{j*} / |C_j|
                u64 s = 0;
                for (std::size_t j = 0; j < r; ++j)
                    s = (s + mulmod(mulmod(w[j], w[conj_.inverse_class[j]], p), inv_size[j], p)) % p;
                if (s == 0) {
                    ok = false;
                    break;
                }
                const u64 d2 = mulmod(n % p, invmod(s, p), p);
                long deg = 0;
                for (long d = 1; static_cast<std::size_t>(d * d) <= n; ++d)
                    if (static_cast<u64>(d * d) % p == d2) {
                        deg = d;
                        break;
                    }
                if (deg == 0) {
                    ok = false;
                    break;
                }
                std::vector<u64> chi_mod(r);
                for (std::size_t j = 0; j < r; ++j)
                    chi_mod[j] = mulmod(mulmod(w[j], static_cast<u64>(deg) % p, p), inv_size[j], p);

                // Lift: eigenvalue multiplicities of rho(g_j) by the DFT over <g_j>.
                Character chi;
                chi.degree = deg;
                std::vector<long> key;
                for (std::size_t j = 0; j < r && ok; ++j) {
                    const unsigned o = conj_.rep_order[j];
                    const u64 inv_o = invmod(o % p, p);
                    const u64 zeta_o = powmod(w_e, e / o, p);
                    std::vector<Rational> mult(o);
                    long total = 0;
                    for (unsigned aa = 0; aa < o; ++aa) {
                        u64 acc = 0;
                        const u64 step = invmod(powmod(zeta_o, aa, p), p);
                        u64 tw = 1;
                        for (unsigned k = 0; k < o; ++k) {
                            acc = (acc + mulmod(chi_mod[conj_.power_map[j][k]], tw, p)) % p;
                            tw = mulmod(tw, step, p);
                        }
                        const u64 m_a = mulmod(acc, inv_o, p);
                        if (m_a > static_cast<u64>(deg)) {
                            ok = false;
                            break;
                        }
                        mult[aa] = static_cast<long>(m_a);
                        key.push_back(static_cast<long>(m_a));
                        total += static_cast<long>(m_a);
                    }
                    if (!ok) break;
                    if (total != deg) {
                        ok = false;
                        break;
                    }
                    chi.values.push_back(cyc_reduce(CyclotomicNumber::from_exponent_sum(o, mult)));
                }
                if (!ok) break;
                found.emplace_back(std::move(key), std::move(chi));
            }
            if (!ok) continue;
            std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
                if (x.second.degree != y.second.degree) return x.second.degree < y.second.degree;
                return x.first > y.first;  // puts the trivial character (all multiplicity at 1) first
            });
            prime_ = p;
            for (auto& f : found) irr_.push_back(std::move(f.second));
            return;
        }
    }
    throw Error("character table: modular computation did not split the class algebra");
}

std::vector<CyclotomicNumber> CharacterTable::power_values(const std::vector<CyclotomicNumber>& chi,
                                                           std::uint32_t c) const {
    std::vector<CyclotomicNumber> out;
    out.reserve(conj_.rep_order[c]);
    for (auto cls : conj_.power_map[c]) out.push_back(chi[cls]);
    return out;
}

CyclotomicNumber CharacterTable::inner_product(const std::vector<CyclotomicNumber>& a,
                                               const std::vector<CyclotomicNumber>& b) const {
    CyclotomicNumber acc;
    for (std::size_t c = 0; c < conj_.classes.size(); ++c) {
        if (a[c].is_zero() || b[c].is_zero()) continue;
        acc += CyclotomicNumber(static_cast<long>(conj_.classes[c].size())) * a[c] * b[c].conj();
    }
    return cyc_reduce(acc / CyclotomicNumber(static_cast<long>(group_->order())));
}

namespace {

// Power-basis coordinates at a fixed conductor; character values are algebraic
// integers, so these are integers and the sums can run in machine arithmetic.
using IntVec = std::vector<__int128>;

struct IntField {
    unsigned long n;
    std::size_t phi;
    std::vector<long> poly;  // Phi_n, monic

    // Q(zeta_2m) = Q(zeta_m) for odd m, and stored conductors are never 2 mod 4
    explicit IntField(unsigned long e) : n(e % 4 == 2 ? e / 2 : e), phi(euler_phi(n)), poly(cyclotomic_polynomial(n)) {}

    std::optional<IntVec> embed(const CyclotomicNumber& x) const {
        const CyclotomicNumber y = x.at_conductor(n);
        IntVec v(phi, 0);
        for (std::size_t i = 0; i < phi; ++i) {
            const Rational& q = y.coeffs()[i];
            if (q.get_den() != 1 || !q.get_num().fits_slong_p()) return std::nullopt;
            v[i] = q.get_num().get_si();
        }
        return v;
    }

    void add_product(IntVec& acc, const IntVec& a, const IntVec& b, long scale) const {
        for (std::size_t i = 0; i < phi; ++i) {
            if (a[i] == 0) continue;
            const __int128 ai = a[i] * scale;
            for (std::size_t j = 0; j < phi; ++j)
                if (b[j] != 0) acc[i + j] += ai * b[j];
        }
    }

    // acc has length 2 phi - 1; true when it equals the rational integer target mod Phi_n.
    bool equals_integer(IntVec acc, long target) const {
        for (std::size_t k = acc.size(); k-- > phi;) {
            const __int128 c = acc[k];
            if (c == 0) continue;
            for (std::size_t i = 0; i <= phi; ++i) acc[k - phi + i] -= c * poly[i];
        }
        if (acc[0] != target) return false;
        for (std::size_t i = 1; i < phi; ++i)
            if (acc[i] != 0) return false;
        return true;
    }
};

} // namespace

OrthogonalityReport verify_orthogonality(const CharacterTable& t) {
    OrthogonalityReport rep;
    const auto& irr = t.irreducibles();
    const auto& conj = t.conj();
    const std::size_t r = irr.size();
    const long n = static_cast<long>(t.group()->order());
    const std::size_t k = conj.classes.size();

    const IntField field(std::max(1u, t.exponent()));
    std::vector<std::vector<IntVec>> v(r), vbar(r);
    bool integral = true;
    for (std::size_t i = 0; i < r && integral; ++i)
        for (std::size_t c = 0; c < k && integral; ++c) {
            auto a = field.embed(irr[i].values[c]);
            auto b = field.embed(irr[i].values[c].conj());
            if (!a || !b) integral = false;
            else {
                v[i].push_back(std::move(*a));
                vbar[i].push_back(std::move(*b));
            }
        }

    auto row_sum = [&](std::size_t i, std::size_t j, long target) {
        if (integral) {
            IntVec acc(2 * field.phi - 1, 0);
            for (std::size_t c = 0; c < k; ++c)
                field.add_product(acc, v[i][c], vbar[j][c], static_cast<long>(conj.size(static_cast<std::uint32_t>(c))));
            return field.equals_integer(std::move(acc), target);
        }
        CyclotomicNumber s;
        for (std::size_t c = 0; c < k; ++c)
            s += CyclotomicNumber(static_cast<long>(conj.size(static_cast<std::uint32_t>(c)))) * irr[i].values[c] *
                 irr[j].values[c].conj();
        return s == CyclotomicNumber(target);
    };
    auto column_sum = [&](std::size_t a, std::size_t b, long target) {
        if (integral) {
            IntVec acc(2 * field.phi - 1, 0);
            for (std::size_t i = 0; i < r; ++i) field.add_product(acc, v[i][a], vbar[i][b], 1);
            return field.equals_integer(std::move(acc), target);
        }
        CyclotomicNumber s;
        for (std::size_t i = 0; i < r; ++i) s += irr[i].values[a] * irr[i].values[b].conj();
        return s == CyclotomicNumber(target);
    };

    rep.rows = true;
    for (std::size_t i = 0; i < r && rep.rows; ++i)
        for (std::size_t j = i; j < r; ++j)
            if (!row_sum(i, j, i == j ? n : 0)) {
                rep.rows = false;
                break;
            }

    rep.columns = true;
    for (std::size_t a = 0; a < k && rep.columns; ++a)
        for (std::size_t b = a; b < k; ++b) {
            const long centralizer = n / static_cast<long>(conj.size(static_cast<std::uint32_t>(a)));
            if (!column_sum(a, b, a == b ? centralizer : 0)) {
                rep.columns = false;
                break;
            }
        }

    long sum = 0;
    rep.degrees_divide = true;
    for (const auto& chi : irr) {
        sum += chi.degree * chi.degree;
        if (chi.degree <= 0 || n % chi.degree != 0) rep.degrees_divide = false;
    }
    rep.degree_sum = sum == n;
    return rep;
}

} // namespace tqs
