#ifndef TQS_CYCLOTOMIC_HPP
#define TQS_CYCLOTOMIC_HPP

#include "tqs/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace tqs {

/// Largest conductor the engine will build; anything above throws ConductorOverflow.
inline constexpr unsigned long kMaxConductor = 100000;

unsigned long euler_phi(unsigned long n);
unsigned long lcm_ul(unsigned long a, unsigned long b);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(unsigned long n);

/// Exact element of Q(zeta_n).
///
/// Stored in the power basis {1, zeta, ..., zeta^(phi(n)-1)} of Q(zeta_n),
/// i.e. as a polynomial reduced modulo Phi_n. Binary operations work in
/// Q(zeta_lcm) and do not shrink the conductor; call cyc_reduce() to get the
/// canonical form with minimal conductor. Equality is exact regardless of the
/// conductors involved.
class CyclotomicNumber {
public:
    CyclotomicNumber();
    CyclotomicNumber(long value);  // NOLINT(google-explicit-constructor)
    CyclotomicNumber(Rational value);  // NOLINT(google-explicit-constructor)

    /// zeta_n^k at conductor n.
    static CyclotomicNumber root_of_unity(unsigned long n, long k);
    /// Power-basis coordinates at conductor n; coeffs.size() must be phi(n).
    static CyclotomicNumber from_coeffs(unsigned long n, std::vector<Rational> coeffs);
    /// sum_k c_k zeta_n^k for arbitrary exponents (not necessarily reduced).
    static CyclotomicNumber from_exponent_sum(unsigned long n, const std::vector<Rational>& by_exponent);

    unsigned long conductor() const noexcept { return n_; }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }

    bool is_zero() const noexcept;
    /// True when the value lies in Q (whatever the stored conductor).
    bool is_rational() const;
    /// Throws tqs::Error unless is_rational().
    Rational to_rational() const;

    /// Same value written at conductor m; m must be a multiple of conductor().
    CyclotomicNumber at_conductor(unsigned long m) const;

    /// Image under zeta -> zeta^k, gcd(k, n) = 1.
    CyclotomicNumber galois(long k) const;
    /// Complex conjugate, zeta -> zeta^-1.
    CyclotomicNumber conj() const { return galois(-1); }
    /// Multiplicative inverse; throws tqs::Error on zero.
    CyclotomicNumber inverse() const;
    /// this * zeta_m^k (cheap exponent shift when m divides the conductor).
    CyclotomicNumber times_root(unsigned long m, long k) const;

    CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator*=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator/=(const CyclotomicNumber& rhs);
    CyclotomicNumber operator-() const;

    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
    friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

    /// Hash of the canonical (minimal conductor) form, consistent with ==.
    std::size_t hash() const;
    /// Hash of the stored coordinates; only consistent with == at a fixed conductor.
    std::size_t raw_hash() const noexcept;

    std::string to_string() const;

private:
    CyclotomicNumber(unsigned long n, std::vector<Rational> c);
    void trim_to_rational();

    unsigned long n_ = 1;
    std::vector<Rational> c_;
};

/// Canonical form with minimal conductor (never 2 mod 4). Idempotent.
CyclotomicNumber cyc_reduce(const CyclotomicNumber& x);

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& x);

} // namespace tqs

#endif
