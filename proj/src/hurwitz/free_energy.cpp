#include "eo/hurwitz/free_energy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "eo/algebra/convert.hpp"
#include "eo/algebra/fraction.hpp"
#include "eo/algebra/linsolve.hpp"
#include "eo/errors.hpp"
#include "eo/hurwitz/counts.hpp"

namespace eo::hurwitz {

using algebra::FactoredFraction;
using algebra::Integer;
using algebra::make_rational;

namespace {

bool stable(int g, int n) { return 2 * g - 2 + n > 0; }

Laurent var(std::size_t arity, std::size_t i) { return Laurent::variable(arity, i); }
Laurent cst(std::size_t arity, const Rational& c) { return Laurent::constant(arity, c); }

// Sorted-descending vectors of n non-negative entries with sum <= total.
void k_vectors(int n, int total, int cap, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    for (int v = std::min(cap, total); v >= 0; --v) {
        cur.push_back(v);
        k_vectors(n, total - v, v, cur, out);
        cur.pop_back();
    }
}

// Sorted-descending tuples of n entries from {1..top}.
void mu_tuples(int n, int top, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    for (int v = top; v >= 1; --v) {
        cur.push_back(v);
        mu_tuples(n, v, cur, out);
        cur.pop_back();
    }
}

// Monomial symmetric function m_k evaluated at mu.
Rational monomial_symmetric(const std::vector<int>& k, const std::vector<int>& mu) {
    std::vector<int> perm = k;
    std::sort(perm.begin(), perm.end());
    Rational s = 0;
    do {
        Integer term = 1;
        for (std::size_t i = 0; i < mu.size(); ++i) {
            Integer p;
            mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(mu[i]), static_cast<unsigned long>(perm[i]));
            term *= p;
        }
        s += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return s;
}

// H(mu) prod mu_i!/mu_i^mu_i
Rational normalized_hurwitz(int g, const std::vector<int>& mu) {
    Rational h = default_counter().number(g, mu);
    for (int m : mu) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(m));
        h *= Rational(algebra::factorial(static_cast<unsigned>(m))) / Rational(p);
    }
    return h;
}

std::vector<Rational> row_for(const std::vector<std::vector<int>>& unknowns, const std::vector<int>& mu) {
    std::vector<Rational> row;
    row.reserve(unknowns.size());
    for (const auto& k : unknowns) row.push_back(monomial_symmetric(k, mu));
    return row;
}

parallel::ConcurrentMemo<std::pair<int, int>, ELSVTable>& elsv_memo() {
    static parallel::ConcurrentMemo<std::pair<int, int>, ELSVTable> memo;
    return memo;
}

parallel::ConcurrentMemo<std::pair<int, int>, Laurent>& free_energy_memo() {
    static parallel::ConcurrentMemo<std::pair<int, int>, Laurent> memo;
    return memo;
}

ELSVTable solve_elsv(int g, int n) {
    const int K = 3 * g - 3 + n;
    std::vector<std::vector<int>> unknowns;
    std::vector<int> cur;
    k_vectors(n, K, K, cur, unknowns);

    std::vector<std::vector<int>> grid;
    mu_tuples(n, K + 1, cur, grid);
    algebra::Matrix rows;
    for (const auto& mu : grid) rows.push_back(row_for(unknowns, mu));
    auto chosen = algebra::independent_rows(rows);
    if (chosen.size() != unknowns.size()) throw SingularMatrix("ELSV grid does not determine all coefficients");

    algebra::Matrix a;
    std::vector<Rational> b;
    for (std::size_t i : chosen) {
        a.push_back(rows[i]);
        b.push_back(normalized_hurwitz(g, grid[i]));
    }
    std::vector<Rational> c = algebra::solve_exact(a, b);

    // Overdetermination: unused grid rows plus points beyond the grid.
    std::vector<std::vector<int>> checks;
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (std::find(chosen.begin(), chosen.end(), i) == chosen.end()) checks.push_back(grid[i]);
    std::vector<std::vector<int>> beyond;
    for (int top = K + 3; beyond.size() < 3; ++top) {
        std::vector<std::vector<int>> wide;
        mu_tuples(n, top, cur, wide);
        beyond.clear();
        for (auto& mu : wide)
            if (mu[0] > K + 1) beyond.push_back(mu);
    }
    std::stable_sort(beyond.begin(), beyond.end(), [](const auto& x, const auto& y) {
        return std::accumulate(x.begin(), x.end(), 0) < std::accumulate(y.begin(), y.end(), 0);
    });
    if (beyond.size() > 12) beyond.resize(12);
    checks.insert(checks.end(), beyond.begin(), beyond.end());
    for (const auto& mu : checks) {
        auto row = row_for(unknowns, mu);
        Rational predicted = 0;
        for (std::size_t j = 0; j < c.size(); ++j) predicted += row[j] * c[j];
        if (predicted != normalized_hurwitz(g, mu)) {
            std::string s;
            for (int m : mu) s += (s.empty() ? "" : ",") + std::to_string(m);
            throw OverdeterminedMismatch("ELSV coefficients for (" + std::to_string(g) + "," + std::to_string(n) +
                                         ") disagree with cut-and-join at mu = (" + s + ")");
        }
    }

    ELSVTable table{g, n, {}};
    for (std::size_t j = 0; j < c.size(); ++j)
        if (c[j] != 0) table.coeffs.emplace(unknowns[j], c[j]);
    return table;
}

Laurent compute_free_energy(int g, int n) { return assemble_free_energy(elsv_coefficients(g, n)); }

// Variable i of f, relabelled to positions[i] in arity n.
Laurent place(const Laurent& f, const std::vector<std::size_t>& positions, std::size_t n) { return f.rename(positions, n); }

std::vector<std::size_t> all_but(std::size_t n, std::size_t skip) {
    std::vector<std::size_t> r;
    for (std::size_t i = 0; i < n; ++i)
        if (i != skip) r.push_back(i);
    return r;
}

// t^2 (t - 1) in variable i
Laurent kappa(std::size_t n, std::size_t i) {
    Laurent t = var(n, i);
    return t * t * (t - cst(n, 1));
}

Laurent euler_operator(const Laurent& f, int chi) {
    const std::size_t n = f.arity();
    Laurent r = Rational(chi) * f;
    for (std::size_t i = 0; i < n; ++i) {
        Laurent t = var(n, i);
        r += t * (t - cst(n, 1)) * f.derivative(i);
    }
    return r;
}

Laurent residual_03(const FreeEnergyLookup& lookup) {
    const std::size_t N = 6;
    auto t = [&](std::size_t i) { return var(N, i); };
    auto X = [&](std::size_t i) { return var(N, i + 3); };
    Laurent one = cst(N, 1);
    // x_i d/dx_i F_{0,2}(x_i, x_k)
    auto D = [&](std::size_t i, std::size_t k) {
        FactoredFraction a = FactoredFraction::over((t(i) - one) * t(i) * t(k), t(i) - t(k));
        FactoredFraction b = FactoredFraction::over(X(i), X(i) - X(k));
        return a - FactoredFraction(t(i) - one) - b;
    };
    FactoredFraction rhs(N);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
            std::size_t k = 3 - i - j;
            FactoredFraction join = FactoredFraction(X(j)) * D(i, k) - FactoredFraction(X(i)) * D(j, k);
            rhs += join.divide_by(X(i) - X(j));
        }
    for (std::size_t i = 0; i < 3; ++i) {
        auto others = all_but(3, i);
        rhs += D(i, others[0]) * D(i, others[1]);
    }
    Laurent lhs = euler_operator(lookup(0, 3), 1).rename({0, 1, 2}, N);
    FactoredFraction res = FactoredFraction(lhs) - rhs;
    res.reduce();
    return res.numerator();
}

}  // namespace

XiPolynomial xi_polynomial(int k) {
    if (k < 0) throw std::invalid_argument("xi index must be non-negative");
    static parallel::ConcurrentMemo<int, UPoly> memo;
    return {k, memo.get_or_compute(k, [&] { return k == 0 ? UPoly{-1, 1} : x_d_dx(xi_polynomial(k - 1).poly); })};
}

UPoly x_d_dx(const UPoly& p) { return UPoly{0, 0, -1, 1} * p.derivative(); }

RatFunc x_d_dx(const RatFunc& f) { return RatFunc::polynomial(UPoly{0, 0, -1, 1}, f.var()) * f.derivative(); }

Rational ELSVTable::at(std::vector<int> k) const {
    std::sort(k.begin(), k.end(), std::greater<>());
    auto it = coeffs.find(k);
    return it == coeffs.end() ? Rational(0) : it->second;
}

ELSVTable elsv_coefficients(int g, int n) {
    if (g < 0 || n < 1 || !stable(g, n)) throw InvalidProfile("ELSV coefficients require 2g - 2 + n > 0");
    return elsv_memo().get_or_compute({g, n}, [&] { return solve_elsv(g, n); });
}

Laurent assemble_free_energy(const ELSVTable& table) {
    const std::size_t n = static_cast<std::size_t>(table.n);
    Laurent f(n);
    for (const auto& [k, c] : table.coeffs) {
        std::vector<int> perm = k;
        std::sort(perm.begin(), perm.end());
        do {
            Laurent term = cst(n, c);
            for (std::size_t i = 0; i < n; ++i) term = term * Laurent::from_upoly(xi_polynomial(perm[i]).poly, n, i);
            f += term;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return f;
}

Laurent free_energy_H(int g, int n) {
    if (g < 0 || n < 1 || !stable(g, n)) throw InvalidProfile("free energy requires 2g - 2 + n > 0");
    return free_energy_memo().get_or_compute({g, n}, [&] { return compute_free_energy(g, n); });
}

RatFunc f02_diagonal_mixed_H() {
    // x = z e^{-z}: x''/x' = (z - 2)/(1 - z), x'''/x' = (3 - z)/(1 - z).
    RatFunc z = RatFunc::variable("z"), one = RatFunc::constant(1, "z");
    RatFunc s = algebra::schwarzian((z - RatFunc::constant(2, "z")) / (one - z), (RatFunc::constant(3, "z") - z) / (one - z));
    // z = (t - 1)/t, dz/dt = 1/t^2
    RatFunc in_t = algebra::substitute_mobius(s, {1, -1, 1, 0}, "t");
    RatFunc t = RatFunc::variable("t");
    return make_rational(-1, 6) * in_t * (t * t).pow(-2);
}

Laurent fh_recursion_residual(int g, int n) {
    return fh_recursion_residual(g, n, [](int gg, int nn) { return free_energy_H(gg, nn); });
}

Laurent fh_recursion_residual(int g, int n, const FreeEnergyLookup& lookup) {
    if (g < 0 || n < 1 || !stable(g, n)) throw InvalidProfile("recursion residual requires 2g - 2 + n > 0");
    if (g == 0 && n == 3) return residual_03(lookup);
    const std::size_t N = static_cast<std::size_t>(n);
    Laurent one = cst(N, 1);

    FactoredFraction rhs(N);
    if (n >= 2 && stable(g, n - 1)) {
        Laurent lower = lookup(g, n - 1);
        // A(i, j) = d/dt_i F_{g,n-1}(t without t_j)
        auto A = [&](std::size_t i, std::size_t j) { return place(lower, all_but(N, j), N).derivative(i); };
        auto w = [&](std::size_t i) { return kappa(N, i) * (var(N, i) - one); };
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) {
                if (i == j) continue;
                Laurent aij = A(i, j);
                if (i < j) {
                    Laurent diff = w(i) * aij - w(j) * A(j, i);
                    rhs += FactoredFraction::over(var(N, i) * var(N, j) * diff, var(N, i) - var(N, j));
                }
                rhs += FactoredFraction(-(var(N, i) * kappa(N, i) * aij));
            }
    }
    Laurent cut(N);
    for (std::size_t i = 0; i < N; ++i) {
        Laurent at_i(N);
        auto others = all_but(N, i);
        if (g >= 1) {
            if (g == 1 && n == 1) {
                at_i += algebra::laurent_from_ratfunc(f02_diagonal_mixed_H(), N, i);
            } else {
                std::vector<std::size_t> target{i, i};
                target.insert(target.end(), others.begin(), others.end());
                at_i += lookup(g - 1, n + 1).derivative(0).derivative(1).rename(target, N);
            }
        }
        const unsigned rest = static_cast<unsigned>(n - 1);
        for (int g1 = 0; g1 <= g; ++g1)
            for (unsigned mask = 0; mask < (1u << rest); ++mask) {
                std::vector<std::size_t> in{i}, out{i};
                for (unsigned b = 0; b < rest; ++b) ((mask >> b) & 1u ? in : out).push_back(others[b]);
                const int n1 = static_cast<int>(in.size()), n2 = static_cast<int>(out.size());
                if (!stable(g1, n1) || !stable(g - g1, n2)) continue;
                at_i += lookup(g1, n1).derivative(0).rename(in, N) * lookup(g - g1, n2).derivative(0).rename(out, N);
            }
        cut += kappa(N, i) * kappa(N, i) * at_i;
    }
    rhs += FactoredFraction(make_rational(1, 2) * cut);

    FactoredFraction res = FactoredFraction(euler_operator(lookup(g, n), 2 * g - 2 + n)) - rhs;
    res.reduce();
    return res.numerator();
}

double t_of_x_H(double x) {
    if (!(x >= 0) || x >= std::exp(-1.0)) throw std::domain_error("x outside the principal branch of z e^{-z} = x");
    double z = x;
    for (int it = 0; it < 100; ++it) {
        double f = z * std::exp(-z) - x;
        double step = f / ((1 - z) * std::exp(-z));
        z -= step;
        if (std::abs(step) < 1e-17 * std::max(1.0, std::abs(z))) break;
    }
    return 1 / (1 - z);
}

double free_energy_H_at_x(const Laurent& f, std::span<const double> x) {
    std::vector<double> t;
    for (double v : x) t.push_back(t_of_x_H(v));
    return f.eval(t);
}

double laplace_sum_H(int g, int n, std::span<const double> x, int max_total, parallel::Exec exec) {
    HurwitzTable table(g, n, max_total, exec);
    std::vector<const std::pair<const HurwitzKey, Rational>*> keys;
    for (const auto& entry : table.entries())
        if (entry.first.first == g && static_cast<int>(entry.first.second.size()) == n) keys.push_back(&entry);
    auto term = [&](const std::pair<const HurwitzKey, Rational>& entry) {
        std::vector<int> mu = entry.first.second;
        std::sort(mu.begin(), mu.end());
        double s = 0;
        do {
            double m = 1;
            for (std::size_t i = 0; i < mu.size(); ++i) m *= std::pow(x[i], mu[i]);
            s += m;
        } while (std::next_permutation(mu.begin(), mu.end()));
        return entry.second.get_d() * s;
    };
    double total = 0;
    const long count = static_cast<long>(keys.size());
    if (exec == parallel::Exec::parallel) {
#pragma omp parallel for reduction(+ : total) schedule(dynamic)
        for (long i = 0; i < count; ++i) total += term(*keys[static_cast<std::size_t>(i)]);
    } else {
        for (long i = 0; i < count; ++i) total += term(*keys[static_cast<std::size_t>(i)]);
    }
    return total;
}

}  // namespace eo::hurwitz
