#include "eo/algebra/linsolve.hpp"

#include "eo/errors.hpp"

namespace eo::algebra {

std::vector<Rational> solve_exact(const Matrix& a, const std::vector<Rational>& b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw SizeMismatch("right-hand side length differs from row count");
    for (const auto& row : a)
        if (row.size() != n) throw SizeMismatch("matrix is not square");

    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        Integer l = b[i].get_den();
        for (const auto& v : a[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j].get_num() * (l / a[i][j].get_den());
        m[i][n] = b[i].get_num() * (l / b[i].get_den());
    }

    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k] == 0) ++p;
        if (p == n) throw SingularMatrix("matrix is singular");
        std::swap(m[p], m[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }

    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational s(m[i][n]);
        for (std::size_t j = i + 1; j < n; ++j) s -= Rational(m[i][j]) * x[j];
        x[i] = s / Rational(m[i][i]);
    }
    return x;
}

std::vector<std::size_t> independent_rows(const Matrix& rows) {
    std::vector<std::vector<Rational>> basis;
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> chosen;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::vector<Rational> v = rows[r];
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const Rational f = v[pivots[k]];
            if (f == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * basis[k][j];
        }
        std::size_t p = 0;
        while (p < v.size() && v[p] == 0) ++p;
        if (p == v.size()) continue;
        const Rational inv = 1 / v[p];
        for (auto& e : v) e *= inv;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const Rational f = basis[k][p];
            if (f == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j) basis[k][j] -= f * v[j];
        }
        basis.push_back(std::move(v));
        pivots.push_back(p);
        chosen.push_back(r);
    }
    return chosen;
}

}  // namespace eo::algebra
