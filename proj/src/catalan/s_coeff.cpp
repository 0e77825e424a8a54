#include "eo/catalan/s_coeff.hpp"

#include <map>
#include <mutex>

#include "eo/catalan/curve.hpp"
#include "eo/catalan/free_energy.hpp"
#include "eo/errors.hpp"

namespace eo::catalan {

using algebra::Integer;
using algebra::make_rational;
using algebra::Rational;

namespace {

RatFunc tc(const Rational& c) { return RatFunc::constant(c, "t"); }

const std::vector<Rational> kRoots{0, 1, -1};

}  // namespace

RatFunc s0_x() { return -z_in_t(); }

RatFunc s1_x() {
    RatFunc z = RatFunc::variable("z"), one = RatFunc::constant(1, "z");
    RatFunc z_x = x_in_z().derivative().pow(-1);
    return to_t(z * z_x / (one - z * z));
}

RatFunc s_x(int m) {
    if (m == 0) return s0_x();
    if (m == 1) return s1_x();
    static std::mutex mu;
    static std::map<int, RatFunc> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(m); it != cache.end()) return it->second;
    }
    RatFunc r = d_dx_t(s_coeff_C_assembled(m).value);
    std::lock_guard lock(mu);
    return cache.emplace(m, r).first->second;
}

SCatalan s_coeff_C_assembled(int m) {
    if (m < 2) throw InvalidProfile("assembled S_m needs m >= 2");
    RatFunc total("t");
    Integer nfact = 1;
    for (int n = 1; n <= m + 1; ++n) {
        nfact *= n;
        int twice_g = m + 1 - n;
        if (twice_g % 2) continue;
        auto f = default_free_energies().get(twice_g / 2, n);
        auto diag = f.rename(std::vector<std::size_t>(static_cast<std::size_t>(n), 0), 1);
        total += Rational(1, 1) / Rational(nfact) * diag.to_ratfunc("t");
    }
    return {m, total, total.derivative()};
}

SCatalan s_coeff_C_recursive(int m) {
    if (m < 2) throw InvalidProfile("recursive S_m needs m >= 2");
    // -(2 S_0' + x) S_{k+1}' = S_k'' + sum_{a+b=k+1, a,b>=1} S_a' S_b'   (' = d/dx)
    static const RatFunc coeff = -(tc(2) * s0_x() + x_in_t());
    static const RatFunc dx_dt = x_in_t().derivative();
    std::vector<RatFunc> sx{s0_x(), s1_x()};
    SCatalan out{m, RatFunc("t"), RatFunc("t")};
    for (int k = 1; k < m; ++k) {
        RatFunc rhs = d_dx_t(sx[static_cast<std::size_t>(k)]);
        for (int a = 1; a <= k; ++a) rhs += sx[static_cast<std::size_t>(a)] * sx[static_cast<std::size_t>(k + 1 - a)];
        RatFunc next_x = rhs / coeff;
        sx.push_back(next_x);
        if (k + 1 == m) {
            out.d_dt = next_x * dx_dt;
            out.value = algebra::integrate_no_log(out.d_dt, -1, kRoots);
        }
    }
    return out;
}

RatFunc s_recursion_t_form(int m, const std::vector<RatFunc>& s_dt) {
    if (m < 1 || static_cast<int>(s_dt.size()) <= m) throw InsufficientData("need dS_k/dt for k <= m");
    RatFunc t = RatFunc::variable("t"), one = tc(1);
    RatFunc u = t * t - one;
    RatFunc bracket = s_dt[static_cast<std::size_t>(m)].derivative();
    for (int a = 2; a + 2 <= m + 1; ++a) bracket += s_dt[static_cast<std::size_t>(a)] * s_dt[static_cast<std::size_t>(m + 1 - a)];
    return -(u.pow(3) / (tc(32) * t * t)) * bracket -
           (u.pow(2) * (tc(2) * t * t + t + one) / (tc(16) * t.pow(3))) * s_dt[static_cast<std::size_t>(m)];
}

std::vector<RatFunc> schrodinger_residual_C(const std::vector<RatFunc>& sx) {
    // (hbar^2 d^2/dx^2 + x hbar d/dx + 1) exp(sum hbar^{m-1} S_m) = 0, order by order.
    if (sx.size() < 2) throw InsufficientData("need dS_0/dx and dS_1/dx");
    static const RatFunc x = x_in_t();
    std::vector<RatFunc> out;
    out.push_back(sx[0] * sx[0] + x * sx[0] + tc(1));
    for (std::size_t k = 1; k < sx.size(); ++k) {
        RatFunc r = d_dx_t(sx[k - 1]) + x * sx[k];
        for (std::size_t a = 0; a <= k; ++a) r += sx[a] * sx[k - a];
        out.push_back(r);
    }
    return out;
}

std::vector<RatFunc> schrodinger_residual_C(int m_max) {
    std::vector<RatFunc> sx;
    for (int k = 0; k <= m_max + 1; ++k) sx.push_back(s_x(k));
    return schrodinger_residual_C(sx);
}

RatFunc to_s_variable(const RatFunc& f_in_t) {
    RatFunc f = to_z(f_in_t);
    auto halve = [](const algebra::UPoly& p) {
        std::vector<Rational> c;
        for (int i = 0; i <= p.degree(); ++i) {
            if (i % 2) {
                if (p.coeff(i) != 0) throw std::invalid_argument("function is not even in z");
                continue;
            }
            c.push_back(p.coeff(i));
        }
        return algebra::UPoly(std::move(c));
    };
    RatFunc in_w(halve(f.num()), halve(f.den()), "w");
    // z^2 = s/(s - 1)
    return algebra::substitute_mobius(in_w, algebra::Mobius{1, 0, 1, -1}, "s");
}

}  // namespace eo::catalan
