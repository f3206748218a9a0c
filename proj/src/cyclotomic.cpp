#include "tqs/cyclotomic.hpp"

#include "tqs/errors.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

namespace tqs {

namespace {

std::vector<unsigned long> prime_divisors(unsigned long n) {
    std::vector<unsigned long> ps;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

long mod_floor(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

void check_conductor(unsigned long n) {
    if (n == 0 || n > kMaxConductor) throw ConductorOverflow(n);
}

// Reduces a polynomial (coefficients lowest first) modulo Phi_n in place and
// truncates it to phi(n) coordinates.
void reduce_mod_phi(std::vector<Rational>& poly, unsigned long n) {
    const auto& phi_poly = cyclotomic_polynomial(n);
    const std::size_t deg = phi_poly.size() - 1;
    for (std::size_t k = poly.size(); k-- > deg;) {
        if (poly[k] == 0) continue;
        const Rational lead = poly[k];
        // Phi_n is monic: t^deg = -sum_{i<deg} phi_i t^i
        for (std::size_t i = 0; i < deg; ++i) {
            if (phi_poly[i] != 0) poly[k - deg + i] -= lead * phi_poly[i];
        }
        poly[k] = 0;
    }
    poly.resize(deg);
}

// Data for testing membership of Q(zeta_n) elements in the subfield Q(zeta_m).
struct SubfieldSolver {
    unsigned long n = 0, m = 0;
    std::vector<std::vector<Rational>> embed;  // phi(n) x phi(m), column j = zeta_m^j at conductor n
    std::vector<std::size_t> rows;              // phi(m) independent rows of embed
    std::vector<std::vector<Rational>> inv;     // inverse of embed restricted to rows
};

std::shared_ptr<const SubfieldSolver> make_solver(unsigned long n, unsigned long m) {
    auto s = std::make_shared<SubfieldSolver>();
    s->n = n;
    s->m = m;
    const std::size_t pn = euler_phi(n), pm = euler_phi(m);
    s->embed.assign(pn, std::vector<Rational>(pm));
    for (std::size_t j = 0; j < pm; ++j) {
        auto col = CyclotomicNumber::root_of_unity(m, static_cast<long>(j)).at_conductor(n).coeffs();
        for (std::size_t i = 0; i < pn; ++i) s->embed[i][j] = col[i];
    }
    // Row-pivoted elimination to pick pm independent rows.
    auto work = s->embed;
    std::vector<std::size_t> perm(pn);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t col = 0; col < pm; ++col) {
        std::size_t piv = col;
        while (piv < pn && work[piv][col] == 0) ++piv;
        if (piv == pn) throw Error("internal: subfield embedding is not injective");
        std::swap(work[piv], work[col]);
        std::swap(perm[piv], perm[col]);
        for (std::size_t r = col + 1; r < pn; ++r) {
            if (work[r][col] == 0) continue;
            Rational f = work[r][col] / work[col][col];
            for (std::size_t c = col; c < pm; ++c) work[r][c] -= f * work[col][c];
        }
    }
    s->rows.assign(perm.begin(), perm.begin() + static_cast<long>(pm));
    // Gauss-Jordan inverse of the square submatrix.
    std::vector<std::vector<Rational>> a(pm, std::vector<Rational>(2 * pm));
    for (std::size_t i = 0; i < pm; ++i) {
        for (std::size_t j = 0; j < pm; ++j) a[i][j] = s->embed[s->rows[i]][j];
        a[i][pm + i] = 1;
    }
    for (std::size_t col = 0; col < pm; ++col) {
        std::size_t piv = col;
        while (a[piv][col] == 0) ++piv;
        std::swap(a[piv], a[col]);
        Rational d = a[col][col];
        for (auto& v : a[col]) v /= d;
        for (std::size_t r = 0; r < pm; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (std::size_t c = 0; c < 2 * pm; ++c) a[r][c] -= f * a[col][c];
        }
    }
    s->inv.assign(pm, std::vector<Rational>(pm));
    for (std::size_t i = 0; i < pm; ++i)
        for (std::size_t j = 0; j < pm; ++j) s->inv[i][j] = a[i][pm + j];
    return s;
}

std::shared_ptr<const SubfieldSolver> solver_for(unsigned long n, unsigned long m) {
    static std::mutex mu;
    static std::map<std::pair<unsigned long, unsigned long>, std::shared_ptr<const SubfieldSolver>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({n, m});
        if (it != cache.end()) return it->second;
    }
    auto s = make_solver(n, m);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::make_pair(n, m), std::move(s)).first->second;
}

// Coordinates at conductor m when x (at conductor n) lies in Q(zeta_m).
bool try_descend(const std::vector<Rational>& x, unsigned long n, unsigned long m, std::vector<Rational>& out) {
    auto s = solver_for(n, m);
    const std::size_t pm = s->rows.size();
    out.assign(pm, Rational(0));
    for (std::size_t i = 0; i < pm; ++i)
        for (std::size_t j = 0; j < pm; ++j)
            if (s->inv[i][j] != 0) out[i] += s->inv[i][j] * x[s->rows[j]];
    for (std::size_t r = 0; r < x.size(); ++r) {
        Rational v = 0;
        for (std::size_t j = 0; j < pm; ++j)
            if (s->embed[r][j] != 0) v += s->embed[r][j] * out[j];
        if (v != x[r]) return false;
    }
    return true;
}

// Conductors are never stored as 2 mod 4 since Q(zeta_2m) = Q(zeta_m) for odd m.
unsigned long normalize_conductor(unsigned long n) { return (n % 4 == 2) ? n / 2 : n; }

} // namespace

unsigned long euler_phi(unsigned long n) {
    unsigned long r = n;
    for (auto p : prime_divisors(n)) r = r / p * (p - 1);
    return r;
}

unsigned long lcm_ul(unsigned long a, unsigned long b) { return a / std::gcd(a, b) * b; }

const std::vector<long>& cyclotomic_polynomial(unsigned long n) {
    static std::mutex mu;
    static std::map<unsigned long, std::unique_ptr<std::vector<long>>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return *it->second;
    }
    check_conductor(n);
    // Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d, exact integer division by monic factors.
    std::vector<long> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (unsigned long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const auto& den = cyclotomic_polynomial(d);
        const std::size_t dd = den.size() - 1;
        std::vector<long> q(num.size() - dd, 0);
        for (std::size_t k = num.size(); k-- > dd;) {
            long c = num[k];
            q[k - dd] = c;
            if (c == 0) continue;
            for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
        }
        num = std::move(q);
    }
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<std::vector<long>>(std::move(num));
    return *slot;
}

CyclotomicNumber::CyclotomicNumber() : n_(1), c_{Rational(0)} {}
CyclotomicNumber::CyclotomicNumber(long value) : n_(1), c_{Rational(value)} {}
CyclotomicNumber::CyclotomicNumber(Rational value) : n_(1), c_{std::move(value)} {}
CyclotomicNumber::CyclotomicNumber(unsigned long n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}

CyclotomicNumber CyclotomicNumber::root_of_unity(unsigned long n, long k) {
    check_conductor(n);
    if (n % 4 == 2) {
        // zeta_{2m} = -zeta_m^{(m+1)/2} for odd m
        const unsigned long m = n / 2;
        const long e = mod_floor(k, static_cast<long>(n));
        CyclotomicNumber r = root_of_unity(m, e * static_cast<long>((m + 1) / 2));
        return (e % 2 == 0) ? r : -r;
    }
    std::vector<Rational> by_exp(n, Rational(0));
    by_exp[static_cast<std::size_t>(mod_floor(k, static_cast<long>(n)))] = 1;
    return from_exponent_sum(n, by_exp);
}

CyclotomicNumber CyclotomicNumber::from_coeffs(unsigned long n, std::vector<Rational> coeffs) {
    check_conductor(n);
    if (coeffs.size() != euler_phi(n))
        throw Error("cyclotomic coefficient vector has length " + std::to_string(coeffs.size()) +
                    ", expected phi(" + std::to_string(n) + ") = " + std::to_string(euler_phi(n)));
    if (n % 4 == 2) {
        CyclotomicNumber acc;
        for (std::size_t j = 0; j < coeffs.size(); ++j)
            if (coeffs[j] != 0) acc += CyclotomicNumber(coeffs[j]) * root_of_unity(n, static_cast<long>(j));
        return acc.at_conductor(n / 2);
    }
    return CyclotomicNumber(n, std::move(coeffs));
}

CyclotomicNumber CyclotomicNumber::from_exponent_sum(unsigned long n, const std::vector<Rational>& by_exponent) {
    check_conductor(n);
    if (n % 4 == 2) {
        CyclotomicNumber acc;
        const unsigned long m = n / 2;
        acc = acc.at_conductor(m);
        for (std::size_t k = 0; k < by_exponent.size(); ++k)
            if (by_exponent[k] != 0) acc += CyclotomicNumber(by_exponent[k]) * root_of_unity(n, static_cast<long>(k));
        return acc.at_conductor(m);
    }
    std::vector<Rational> poly(std::max<std::size_t>(n, 1), Rational(0));
    for (std::size_t k = 0; k < by_exponent.size(); ++k) poly[k % n] += by_exponent[k];
    reduce_mod_phi(poly, n);
    return CyclotomicNumber(n, std::move(poly));
}

bool CyclotomicNumber::is_zero() const noexcept {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool CyclotomicNumber::is_rational() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& q) { return q == 0; });
}

Rational CyclotomicNumber::to_rational() const {
    if (!is_rational()) throw Error("cyclotomic number " + to_string() + " is not rational");
    return c_[0];
}

CyclotomicNumber CyclotomicNumber::at_conductor(unsigned long m) const {
    m = normalize_conductor(m);
    if (m == n_) return *this;
    if (m % n_ != 0)
        throw Error("conductor " + std::to_string(m) + " is not a multiple of " + std::to_string(n_));
    check_conductor(m);
    if (n_ == 1) {
        std::vector<Rational> c(euler_phi(m), Rational(0));
        c[0] = c_[0];
        return CyclotomicNumber(m, std::move(c));
    }
    const unsigned long step = m / n_;
    std::vector<Rational> poly((c_.size() - 1) * step + 1, Rational(0));
    for (std::size_t j = 0; j < c_.size(); ++j) poly[j * step] = c_[j];
    reduce_mod_phi(poly, m);
    poly.resize(euler_phi(m), Rational(0));
    return CyclotomicNumber(m, std::move(poly));
}

CyclotomicNumber CyclotomicNumber::galois(long k) const {
    if (n_ == 1) return *this;
    if (std::gcd(mod_floor(k, static_cast<long>(n_)), static_cast<long>(n_)) != 1)
        throw Error("galois exponent must be coprime to the conductor");
    std::vector<Rational> by_exp(n_, Rational(0));
    for (std::size_t j = 0; j < c_.size(); ++j)
        by_exp[static_cast<std::size_t>(mod_floor(static_cast<long>(j) * k, static_cast<long>(n_)))] += c_[j];
    return from_exponent_sum(n_, by_exp);
}

CyclotomicNumber CyclotomicNumber::times_root(unsigned long m, long k) const {
    if (m % 4 == 2 || m % n_ != 0) return *this * root_of_unity(m, k);
    // zeta_m^k * sum c_j zeta_m^j, then reduce.
    std::vector<Rational> by_exp(m, Rational(0));
    CyclotomicNumber self = at_conductor(m);
    for (std::size_t j = 0; j < self.c_.size(); ++j)
        by_exp[static_cast<std::size_t>(mod_floor(static_cast<long>(j) + k, static_cast<long>(m)))] += self.c_[j];
    return from_exponent_sum(m, by_exp);
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw Error("division by zero cyclotomic number");
    if (n_ == 1) return CyclotomicNumber(Rational(1) / c_[0]);
    // Solve (multiplication by x) y = 1 in the power basis.
    const std::size_t k = c_.size();
    std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k + 1, Rational(0)));
    CyclotomicNumber col = *this;
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < k; ++i) a[i][j] = col.c_[i];
        col = col.times_root(n_, 1);
    }
    a[0][k] = 1;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t piv = c;
        while (piv < k && a[piv][c] == 0) ++piv;
        if (piv == k) throw Error("internal: singular multiplication matrix");
        std::swap(a[piv], a[c]);
        for (std::size_t r = 0; r < k; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c] / a[c][c];
            for (std::size_t j = c; j <= k; ++j) a[r][j] -= f * a[c][j];
        }
    }
    std::vector<Rational> y(k);
    for (std::size_t i = 0; i < k; ++i) y[i] = a[i][k] / a[i][i];
    return CyclotomicNumber(n_, std::move(y));
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
    if (rhs.n_ == 1) {
        c_[0] += rhs.c_[0];
        return *this;
    }
    if (n_ != rhs.n_) {
        const unsigned long l = lcm_ul(n_, rhs.n_);
        if (l != n_) *this = at_conductor(l);
        if (l != rhs.n_) return *this += rhs.at_conductor(l);
    }
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) { return *this += -rhs; }

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& rhs) {
    if (rhs.n_ == 1) {
        for (auto& q : c_) q *= rhs.c_[0];
        return *this;
    }
    if (n_ == 1) {
        Rational s = c_[0];
        *this = rhs;
        for (auto& q : c_) q *= s;
        return *this;
    }
    const unsigned long l = lcm_ul(n_, rhs.n_);
    const CyclotomicNumber a = at_conductor(l);
    const CyclotomicNumber b = rhs.at_conductor(l);
    std::vector<Rational> poly(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (b.c_[j] != 0) poly[i + j] += a.c_[i] * b.c_[j];
    }
    reduce_mod_phi(poly, l);
    n_ = l;
    c_ = std::move(poly);
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& rhs) { return *this *= rhs.inverse(); }

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.n_ == b.n_) return a.c_ == b.c_;
    const unsigned long l = lcm_ul(a.n_, b.n_);
    return a.at_conductor(l).c_ == b.at_conductor(l).c_;
}

std::size_t CyclotomicNumber::raw_hash() const noexcept {
    std::size_t h = n_ * 0x100000001b3ull;
    for (const auto& q : c_) h = h * 1099511628211ull ^ hash_value(q);
    return h;
}

std::size_t CyclotomicNumber::hash() const { return cyc_reduce(*this).raw_hash(); }

std::string CyclotomicNumber::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        Rational q = c_[j];
        if (!first) os << (q < 0 ? " - " : " + ");
        else if (q < 0) os << "-";
        if (q < 0) q = -q;
        if (j == 0) {
            os << q;
        } else {
            if (q != 1) os << q << "*";
            os << "E(" << n_ << ")";
            if (j > 1) os << "^" << j;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

CyclotomicNumber cyc_reduce(const CyclotomicNumber& x) {
    unsigned long n = x.conductor();
    if (n == 1) return x;
    if (x.is_rational()) return CyclotomicNumber(x.coeffs()[0]);
    std::vector<Rational> cur = x.coeffs();
    for (unsigned long p : prime_divisors(n)) {
        while (n % p == 0) {
            const unsigned long m = normalize_conductor(n / p);
            if (m == n) break;
            std::vector<Rational> next;
            if (!try_descend(cur, n, m, next)) break;
            cur = std::move(next);
            n = m;
            if (n == 1) break;
        }
        if (n == 1) break;
    }
    if (n == 1) return CyclotomicNumber(cur[0]);
    return CyclotomicNumber::from_coeffs(n, std::move(cur));
}

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& x) { return os << x.to_string(); }

} // namespace tqs
