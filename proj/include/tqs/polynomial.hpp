#ifndef TQS_POLYNOMIAL_HPP
#define TQS_POLYNOMIAL_HPP

#include "tqs/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace tqs {

// Dense univariate polynomial over a field T, coefficients lowest degree first,
// no trailing zeros (the zero polynomial has no coefficients).
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(T constant) : c_{std::move(constant)} { trim(); }  // NOLINT(google-explicit-constructor)

    static Polynomial monomial(T coeff, std::size_t degree) {
        std::vector<T> c(degree + 1, T(0));
        c[degree] = std::move(coeff);
        return Polynomial(std::move(c));
    }

    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    const std::vector<T>& coeffs() const noexcept { return c_; }
    T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
    const T& leading() const { return c_.back(); }

    T operator()(const T& x) const {
        T acc(0);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
        return acc;
    }

    Polynomial& operator+=(const Polynomial& rhs) {
        if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), T(0));
        for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& rhs) {
        if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), T(0));
        for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
        trim();
        return *this;
    }
    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }
    Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

    /// Euclidean division; throws on a zero divisor.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
        if (den.is_zero()) throw Error("polynomial division by zero");
        std::vector<T> rem = num.c_;
        if (rem.size() < den.c_.size()) return {Polynomial(), num};
        const T inv_lead = T(1) / den.leading();
        std::vector<T> quot(rem.size() - den.c_.size() + 1, T(0));
        const std::size_t dn = den.c_.size();
        for (std::size_t shift = rem.size() - dn + 1; shift-- > 0;) {
            T q = rem[shift + dn - 1] * inv_lead;
            if (!(q == T(0)))
                for (std::size_t i = 0; i < dn; ++i) rem[shift + i] -= q * den.c_[i];
            quot[shift] = std::move(q);
        }
        rem.resize(den.c_.size() - 1);
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }
    /// Exact quotient; the caller guarantees divisibility (Bareiss steps).
    friend Polynomial operator/(const Polynomial& num, const Polynomial& den) { return divmod(num, den).first; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }

    std::vector<T> c_;
};

// Power series truncated after degree `order`: arithmetic is exact modulo t^(order+1).
template <class T>
class PowerSeries {
public:
    explicit PowerSeries(std::size_t order = 0) : c_(order + 1, T(0)) {}
    PowerSeries(std::vector<T> coeffs, std::size_t order) : c_(std::move(coeffs)) { c_.resize(order + 1, T(0)); }
    static PowerSeries from_polynomial(const Polynomial<T>& p, std::size_t order) {
        return PowerSeries(std::vector<T>(p.coeffs().begin(),
                                          p.coeffs().begin() + static_cast<long>(std::min(p.coeffs().size(), order + 1))),
                           order);
    }

    std::size_t truncation_order() const noexcept { return c_.size() - 1; }
    const std::vector<T>& coeffs() const noexcept { return c_; }
    const T& operator[](std::size_t k) const { return c_[k]; }
    T& operator[](std::size_t k) { return c_[k]; }

    PowerSeries& operator+=(const PowerSeries& rhs) {
        check_same(rhs);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
        return *this;
    }
    PowerSeries& operator-=(const PowerSeries& rhs) {
        check_same(rhs);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
        return *this;
    }
    PowerSeries& operator*=(const T& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }
    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        a.check_same(b);
        const std::size_t n = a.c_.size();
        std::vector<T> r(n, T(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (a.c_[i] == T(0)) continue;
            for (std::size_t j = 0; i + j < n; ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return PowerSeries(std::move(r), n - 1);
    }
    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PowerSeries& a, const PowerSeries& b) { return !(a == b); }

private:
    void check_same(const PowerSeries& rhs) const {
        if (rhs.c_.size() != c_.size()) throw Error("power series truncation orders differ");
    }

    std::vector<T> c_;
};

/// Multiplicative inverse of a unit power series; throws ZeroConstantTerm.
template <class T>
PowerSeries<T> series_reciprocal(const PowerSeries<T>& s) {
    if (s[0] == T(0)) throw ZeroConstantTerm();
    const std::size_t n = s.truncation_order();
    PowerSeries<T> r(n);
    const T inv0 = T(1) / s[0];
    r[0] = inv0;
    // r_k = -(1/s_0) sum_{i=1..k} s_i r_{k-i}
    for (std::size_t k = 1; k <= n; ++k) {
        T acc(0);
        for (std::size_t i = 1; i <= k; ++i)
            if (!(s[i] == T(0))) acc += s[i] * r[k - i];
        r[k] = -(acc * inv0);
    }
    return r;
}

} // namespace tqs

#endif
