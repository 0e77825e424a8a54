#include "eo/hurwitz/s_coeff.hpp"

#include "eo/algebra/convert.hpp"
#include "eo/errors.hpp"
#include "eo/hurwitz/free_energy.hpp"
#include "eo/parallel/memo.hpp"

namespace eo::hurwitz {

using algebra::make_rational;
using algebra::Rational;
using algebra::UPoly;

namespace {

RatFunc cst(const Rational& c) { return RatFunc::constant(c, "t"); }
RatFunc tvar() { return RatFunc::variable("t"); }

RatFunc diagonal(const algebra::Laurent& f) {
    std::vector<std::size_t> target(f.arity(), 0);
    return f.rename(target, 1).to_ratfunc("t");
}

SHurwitz with_derivative(int m, RatFunc s) { return {m, s, x_d_dx(s)}; }

parallel::ConcurrentMemo<int, SHurwitz>& assembled_memo() {
    static parallel::ConcurrentMemo<int, SHurwitz> memo;
    return memo;
}

}  // namespace

RatFunc s0_xdx() { return (tvar() - cst(1)) / tvar(); }

RatFunc s1_xdx() { return make_rational(1, 2) * (tvar() - cst(1)).pow(2); }

SHurwitz s_coeff_H_assembled(int m) {
    if (m < 2) throw std::invalid_argument("S_m is a polynomial only for m >= 2");
    return assembled_memo().get_or_compute(m, [&] {
        RatFunc s = cst(0);
        for (int g = 0; 2 * g <= m; ++g) {
            const int n = m + 1 - 2 * g;
            if (n < 1) continue;
            s += Rational(1) / Rational(algebra::factorial(static_cast<unsigned>(n))) * diagonal(free_energy_H(g, n));
        }
        return with_derivative(m, s);
    });
}

SHurwitz s_coeff_H_recursive(int m) {
    if (m < 2) throw std::invalid_argument("S_m is a polynomial only for m >= 2");
    std::vector<RatFunc> ds{s0_xdx(), s1_xdx()};
    RatFunc t = tvar(), one = cst(1);
    RatFunc s;
    for (int k = 1; k < m; ++k) {
        RatFunc r = x_d_dx(ds[static_cast<std::size_t>(k)]) - ds[static_cast<std::size_t>(k)];
        for (int a = 1; a <= k; ++a) r += ds[static_cast<std::size_t>(a)] * ds[static_cast<std::size_t>(k + 1 - a)];
        r = make_rational(1, 2) * r;
        // d/dt [((t-1)/t)^k S] = ((t-1)/t)^k R / (t (t-1))
        RatFunc factor = ((t - one) / t).pow(k);
        RatFunc integrand = factor * r / (t * (t - one));
        s = algebra::integrate_no_log(integrand, 1, {0, 1}) / factor;
        ds.push_back(x_d_dx(s));
    }
    return {m, s, ds.back()};
}

SHurwitz s_coeff_H(int m) {
    SHurwitz a = s_coeff_H_assembled(m);
    SHurwitz r = s_coeff_H_recursive(m);
    if (!(a.value == r.value)) throw PathMismatch("S^H_" + std::to_string(m) + ": assembled and recursive constructions differ");
    if (!a.value.is_polynomial() || a.value.num().degree() != 3 * m - 3)
        throw std::logic_error("S^H_" + std::to_string(m) + " is not a polynomial of degree 3m - 3");
    if (a.value.eval(Rational(1)) != 0) throw std::logic_error("S^H_" + std::to_string(m) + " does not vanish at t = 1");
    return a;
}

RatFunc s_recursion_integral_H(int m, const std::vector<RatFunc>& s) {
    RatFunc t = tvar(), one = cst(1);
    auto d = [&](int k) { return s.at(static_cast<std::size_t>(k)).derivative(); };
    RatFunc inner = d(m).derivative();
    for (int a = 2; a <= m - 1; ++a) inner += d(a) * d(m + 1 - a);
    RatFunc integrand = make_rational(1, 2) * t.pow(3 - m) * (t - one).pow(m + 1) * inner +
                        Rational(2) * t.pow(2 - m) * (t - one).pow(m + 1) * d(m);
    return ((t - one) / t).pow(-m) * algebra::integrate_no_log(integrand, 1, {0, 1});
}

RatFunc s_xdx(int m) {
    if (m == 0) return s0_xdx();
    if (m == 1) return s1_xdx();
    return s_coeff_H_assembled(m).x_deriv;
}

std::vector<RatFunc> heat_residual_H(const std::vector<RatFunc>& values, const std::vector<RatFunc>& xdx) {
    std::vector<RatFunc> out;
    for (std::size_t m = 0; m + 1 < xdx.size(); ++m) {
        RatFunc lhs = -xdx[m + 1];
        if (m >= 1) lhs = lhs - Rational(static_cast<long>(m)) * values.at(m + 1);
        RatFunc rhs = x_d_dx(xdx[m]) - xdx[m];
        for (std::size_t a = 0; a <= m + 1; ++a) rhs += xdx[a] * xdx[m + 1 - a];
        out.push_back(lhs + make_rational(1, 2) * rhs);
    }
    return out;
}

std::vector<RatFunc> heat_residual_H(int m_max) {
    std::vector<RatFunc> values(2, cst(0)), xdx{s0_xdx(), s1_xdx()};
    for (int k = 2; k <= m_max + 1; ++k) {
        SHurwitz s = s_coeff_H_assembled(k);
        values.push_back(s.value);
        xdx.push_back(s.x_deriv);
    }
    return heat_residual_H(values, xdx);
}

RatFunc s0_identity_residual() {
    RatFunc t = tvar(), one = cst(1);
    RatFunc s0 = make_rational(1, 2) * (one - (t * t).pow(-1));
    RatFunc d = x_d_dx(s0);
    return s0 - d + make_rational(1, 2) * d * d;
}

RatFunc to_z(const RatFunc& f_in_t) { return algebra::substitute_mobius(f_in_t, {0, 1, -1, 1}, "z"); }

}  // namespace eo::hurwitz
