#include "eo/catalan/free_energy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "eo/algebra/convert.hpp"
#include "eo/algebra/fraction.hpp"
#include "eo/catalan/counts.hpp"
#include "eo/catalan/curve.hpp"
#include "eo/errors.hpp"

namespace eo::catalan {

using algebra::FactoredFraction;
using algebra::make_rational;
using algebra::Rational;
using algebra::RatFunc;

namespace {

bool stable(int g, int n) { return 2 * g - 2 + n > 0; }

Laurent var(std::size_t arity, std::size_t i) { return Laurent::variable(arity, i); }
Laurent cst(std::size_t arity, const Rational& c) { return Laurent::constant(arity, c); }
Laurent inv_sq(std::size_t arity, std::size_t i) {
    Laurent::Exponents e(arity, 0);
    e[i] = -2;
    return Laurent::monomial(arity, e, 1);
}

// (t_i^2 - 1)^k / t_i^2
Laurent weight(std::size_t arity, std::size_t i, unsigned k) {
    Laurent t = var(arity, i);
    return (t * t - cst(arity, 1)).pow(k) * inv_sq(arity, i);
}

// Integrate d/dt_1 F from t_1 = -1.
Laurent integrate_from_minus_one(const Laurent& df, std::size_t index) {
    Laurent f = df.integrate(index);
    Laurent at_base = f.substitute(index, -1);
    std::vector<std::size_t> target;
    for (std::size_t i = 0; i < f.arity(); ++i)
        if (i != index) target.push_back(i);
    return f - at_base.rename(target, f.arity());
}

}  // namespace

RatFunc f02_diagonal_mixed() {
    // F_{0,2} = -log(1 - z1 z2): d^2/dz1 dz2 = 1/(1 - z1 z2)^2, diagonal 1/(1 - z^2)^2.
    RatFunc z = RatFunc::variable("z"), one = RatFunc::constant(1, "z");
    RatFunc in_z = (one - z * z).pow(-2);
    RatFunc dz_dt = z_in_t().derivative();
    return to_t(in_z) * dz_dt * dz_dt;
}

Laurent f03_mixed_third_derivative() {
    // With xi = 1/x and G_{g,n} = prod(xi_i d/dxi_i) F_{g,n} (the generating function of C_{g,n}),
    // the edge-removal recursion at (0,3) reads
    //   (1 - 2 xi_1 z_1) G_{0,3} = sum_{j} xi_j d/dxi_j [ xi_1 xi_j/(xi_1 - xi_j) (xi_1 G_{0,2}(1,k) - xi_j G_{0,2}(j,k)) ]
    //                              + 2 xi_1^2 G_{0,2}(1,2) G_{0,2}(1,3),
    // where G_{0,2}(i,k) = kappa_i kappa_k / (t_i + t_k)^2 and xi d/dxi = kappa d/dt.
    const std::size_t n = 3;
    auto t = [&](std::size_t i) { return var(n, i); };
    Laurent one = cst(n, 1);
    auto sq_plus_one = [&](std::size_t i) { return t(i) * t(i) + one; };
    auto kappa = [&](std::size_t i) {
        Laurent::Exponents e(n, 0);
        e[i] = -1;
        return FactoredFraction(Laurent::monomial(n, e, make_rational(1, 4)) * (t(i) * t(i) - one) * sq_plus_one(i));
    };
    auto xi = [&](std::size_t i) {
        return FactoredFraction::over(Rational(1, 2) * (t(i) * t(i) - one), sq_plus_one(i));
    };
    auto g02 = [&](std::size_t i, std::size_t k) {
        FactoredFraction r = kappa(i) * kappa(k);
        return r.divide_by(t(i) + t(k), 2);
    };
    auto ratio = [&](std::size_t j) {
        FactoredFraction r(make_rational(1, 4) * (t(0) * t(0) - one) * (t(j) * t(j) - one));
        r.divide_by(t(0) - t(j)).divide_by(t(0) + t(j));
        if (!(r * (xi(0) - xi(j)) - xi(0) * xi(j)).to_laurent().is_zero())
            throw std::logic_error("xi ratio identity failed");
        return r;
    };

    FactoredFraction rhs(n);
    for (std::size_t j : {1u, 2u}) {
        std::size_t k = 3 - j;
        FactoredFraction inner = ratio(j) * (xi(0) * g02(0, k) - xi(j) * g02(j, k));
        rhs += kappa(j) * inner.derivative(j);
    }
    rhs += Rational(2) * xi(0) * xi(0) * g02(0, 1) * g02(0, 2);

    // 1 - 2 xi_1 z_1 = -2 t_1/(t_1^2 + 1)
    Laurent::Exponents e(n, 0);
    e[0] = -1;
    Laurent inv_factor = Laurent::monomial(n, e, make_rational(-1, 2)) * sq_plus_one(0);
    FactoredFraction z1 = FactoredFraction::over(t(0) + one, t(0) - one);
    if (!((FactoredFraction(one) - Rational(2) * xi(0) * z1) * FactoredFraction(inv_factor) - FactoredFraction(one)).to_laurent().is_zero())
        throw std::logic_error("coefficient identity failed");

    FactoredFraction g03 = rhs * FactoredFraction(inv_factor);
    FactoredFraction mixed = g03;
    for (std::size_t i = 0; i < n; ++i) {
        Laurent::Exponents ei(n, 0);
        ei[i] = 1;
        mixed = mixed * FactoredFraction(Laurent::monomial(n, ei, 4));
        mixed.divide_by(t(i) * t(i) - one).divide_by(sq_plus_one(i));
    }
    mixed.reduce();
    try {
        return mixed.to_laurent();
    } catch (const NotDivisible&) {
        throw NonzeroResidue("third mixed derivative of F_{0,3} is not a Laurent polynomial");
    }
}

Laurent FreeEnergiesC::get(int g, int n) {
    if (!stable(g, n) || g < 0 || n < 1) throw InvalidProfile("free energy requires 2g - 2 + n > 0");
    return memo_.get_or_compute({g, n}, [&] { return compute(g, n); });
}

Laurent FreeEnergiesC::recursion_rhs(int g, int n) {
    const std::size_t N = static_cast<std::size_t>(n);
    Laurent t1 = var(N, 0);
    Laurent lines12(N);
    if (n >= 2) {
        Laurent d = get(g, n - 1).derivative(0);
        for (std::size_t j = 1; j < N; ++j) {
            std::vector<std::size_t> others;
            for (std::size_t k = 1; k < N; ++k)
                if (k != j) others.push_back(k);
            std::vector<std::size_t> at1{0}, atj{j};
            at1.insert(at1.end(), others.begin(), others.end());
            atj.insert(atj.end(), others.begin(), others.end());
            Laurent d1 = d.rename(at1, N);
            Laurent dj = d.rename(atj, N);
            Laurent diff = weight(N, 0, 3) * d1 - weight(N, j, 3) * dj;
            auto q = diff.divide_exact(t1 - var(N, j));
            if (!q) throw NonzeroResidue("divided difference in the join term is not exact");
            auto q2 = (var(N, j) * *q).divide_exact(t1 + var(N, j));
            if (!q2) throw NonzeroResidue("join term has a pole at t_1 = -t_j");
            lines12 += *q2 + weight(N, 0, 2) * d1;
        }
    }
    Laurent lines34(N);
    if (g >= 1) {
        if (g - 1 == 0 && n + 1 == 2) {
            lines34 += algebra::laurent_from_ratfunc(f02_diagonal_mixed(), N, 0);
        } else {
            std::vector<std::size_t> target{0, 0};
            for (std::size_t k = 1; k < N; ++k) target.push_back(k);
            lines34 += get(g - 1, n + 1).derivative(0).derivative(1).rename(target, N);
        }
    }
    const unsigned rest = static_cast<unsigned>(n - 1);
    for (int g1 = 0; g1 <= g; ++g1) {
        for (unsigned mask = 0; mask < (1u << rest); ++mask) {
            std::vector<std::size_t> in{0}, out{0};
            for (unsigned b = 0; b < rest; ++b) ((mask >> b) & 1u ? in : out).push_back(b + 1);
            const int n1 = static_cast<int>(in.size()), n2 = static_cast<int>(out.size());
            if (!stable(g1, n1) || !stable(g - g1, n2)) continue;
            Laurent a = get(g1, n1).derivative(0).rename(in, N);
            Laurent b = get(g - g1, n2).derivative(0).rename(out, N);
            lines34 += a * b;
        }
    }
    return make_rational(-1, 16) * lines12 + make_rational(-1, 32) * (weight(N, 0, 3) * lines34);
}

Laurent FreeEnergiesC::compute(int g, int n) {
    Laurent f(static_cast<std::size_t>(n));
    if (g == 0 && n == 3) {
        f = f03_mixed_third_derivative();
        for (std::size_t i = 0; i < 3; ++i) f = integrate_from_minus_one(f, i);
    } else {
        f = integrate_from_minus_one(recursion_rhs(g, n), 0);
    }
    if (!f.is_symmetric()) throw AsymmetricResult("F^C_{" + std::to_string(g) + "," + std::to_string(n) + "} is not symmetric");
    return f;
}

FreeEnergiesC& default_free_energies() {
    static FreeEnergiesC store;
    return store;
}

FreeEnergyC free_energy_C(int g, int n) { return {g, n, default_free_energies().get(g, n)}; }

double free_energy_at_x(const Laurent& f, std::span<const double> x) {
    std::vector<double> t;
    for (double v : x) t.push_back(t_of_x(v));
    return f.eval(t);
}

double laplace_sum_C(int g, int n, std::span<const double> x, int max_total, parallel::Exec exec) {
    CatalanTable table(g, n, max_total, exec);
    std::vector<const std::pair<const CatalanKey, Integer>*> keys;
    for (const auto& entry : table.entries())
        if (entry.first.first == g && static_cast<int>(entry.first.second.size()) == n && entry.first.second[0] > 0)
            keys.push_back(&entry);
    auto term = [&](const std::pair<const CatalanKey, Integer>& entry) {
        std::vector<int> mu = entry.first.second;
        Integer prod = std::accumulate(mu.begin(), mu.end(), Integer(1), [](Integer a, int b) { return a * b; });
        double d = algebra::make_rational(entry.second, prod).get_d();
        std::sort(mu.begin(), mu.end());
        double s = 0;
        do {
            double m = 1;
            for (std::size_t i = 0; i < mu.size(); ++i) m *= std::pow(x[i], -mu[i]);
            s += m;
        } while (std::next_permutation(mu.begin(), mu.end()));
        return d * s;
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

}  // namespace eo::catalan
