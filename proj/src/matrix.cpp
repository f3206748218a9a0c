#include "tqs/matrix.hpp"

namespace tqs {

CycPolynomial char_poly(const CycMatrix& m) {
    if (!m.is_square()) throw Error("characteristic polynomial of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix<CycPolynomial> tm(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            CycPolynomial e(-m(i, j));
            if (i == j) e += CycPolynomial::monomial(CyclotomicNumber(1), 1);
            tm(i, j) = std::move(e);
        }
    return det_bareiss(std::move(tm));
}

PowerSeries<CyclotomicNumber> det_one_minus_t(const CycMatrix& m, std::size_t order) {
    // det(I - tM) = t^n charpoly(1/t): reverse the coefficient list.
    const CycPolynomial p = char_poly(m);
    const std::size_t n = m.rows();
    std::vector<CyclotomicNumber> rev(n + 1);
    for (std::size_t k = 0; k <= n; ++k) rev[k] = p.coeff(n - k);
    return PowerSeries<CyclotomicNumber>::from_polynomial(CycPolynomial(std::move(rev)), order);
}

CyclotomicNumber determinant(const CycMatrix& m) { return det_bareiss(m); }

std::size_t rank(const CycMatrix& m) {
    CycMatrix a = m;
    std::size_t r = 0;
    for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
        std::size_t piv = r;
        while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
        const CyclotomicNumber inv = a(r, col).inverse();
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (a(i, col).is_zero()) continue;
            const CyclotomicNumber f = a(i, col) * inv;
            for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

CycMatrix reduce_entries(const CycMatrix& m) {
    return m.map([](const CyclotomicNumber& x) { return cyc_reduce(x); });
}

CycMatrix at_conductor(const CycMatrix& m, unsigned long n) {
    return m.map([n](const CyclotomicNumber& x) { return x.at_conductor(n); });
}

unsigned long common_conductor(const CycMatrix& m) {
    unsigned long n = 1;
    for (const auto& x : m.data()) n = lcm_ul(n, x.conductor());
    return n;
}

} // namespace tqs
