#include "eo/schur/kp.hpp"

#include "eo/combinatorics.hpp"
#include "eo/errors.hpp"
#include "eo/hurwitz/counts.hpp"

namespace eo::schur {

namespace {

SPSeries zero_like(int d_max, int r_max) { return {d_max, std::vector<PPolynomial>(static_cast<std::size_t>(r_max) + 1)}; }

void require_compatible(const SPSeries& a, const SPSeries& b) {
    if (a.d_max != b.d_max || a.coeffs.size() != b.coeffs.size()) throw SizeMismatch("series truncations differ");
}

Partition ones(int w) { return Partition(static_cast<std::size_t>(w), 1); }

using DKey = std::pair<Partition, Partition>;

void dadd(DoubledPoly& p, const DKey& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = p.try_emplace(k, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) p.erase(it);
}

Partition merged(Partition a, const Partition& b) {
    a.insert(a.end(), b.begin(), b.end());
    return canonical(a);
}

DoubledPoly dmul(const DoubledPoly& a, const DoubledPoly& b, int d_max) {
    DoubledPoly r;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            Partition l = merged(ka.first, kb.first);
            if (size(l) > d_max) continue;
            dadd(r, {l, merged(ka.second, kb.second)}, ca * cb);
        }
    return r;
}

}  // namespace

SPSeries operator+(const SPSeries& a, const SPSeries& b) {
    require_compatible(a, b);
    SPSeries r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = r.coeffs[i] + b.coeffs[i];
    return r;
}

SPSeries operator-(const SPSeries& a, const SPSeries& b) {
    require_compatible(a, b);
    SPSeries r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = r.coeffs[i] - b.coeffs[i];
    return r;
}

SPSeries operator*(const SPSeries& a, const SPSeries& b) {
    require_compatible(a, b);
    SPSeries r = zero_like(a.d_max, a.r_max());
    for (int i = 0; i <= a.r_max(); ++i)
        for (int j = 0; i + j <= a.r_max(); ++j)
            r.coeffs[static_cast<std::size_t>(i + j)] = r.coeffs[static_cast<std::size_t>(i + j)] +
                (a.coeffs[static_cast<std::size_t>(i)] * b.coeffs[static_cast<std::size_t>(j)]).truncate(a.d_max);
    return r;
}

bool is_zero(const SPSeries& a) {
    for (const auto& c : a.coeffs)
        if (!c.is_zero()) return false;
    return true;
}

SPSeries exp_series(const SPSeries& a) {
    if (a.coeffs.empty()) throw SizeMismatch("empty series");
    if (a.coeffs[0].coeff({}) != 0) throw std::invalid_argument("exp needs a series without constant term");
    // Every monomial has weight >= 1, so powers beyond d_max vanish.
    SPSeries total = zero_like(a.d_max, a.r_max()), power = zero_like(a.d_max, a.r_max());
    power.coeffs[0] = PPolynomial::constant(1);
    for (int k = 0; k <= a.d_max; ++k) {
        Rational inv = Rational(1) / Rational(algebra::factorial(static_cast<unsigned>(k)));
        for (std::size_t i = 0; i < total.coeffs.size(); ++i) total.coeffs[i] = total.coeffs[i] + inv * power.coeffs[i];
        power = power * a;
    }
    return total;
}

SPSeries h_series(int d_max, int r_max) {
    if (d_max < 1 || r_max < 0) throw std::invalid_argument("h_series needs d_max >= 1 and r_max >= 0");
    SPSeries h = zero_like(d_max, r_max);
    for (int d = 1; d <= d_max; ++d)
        for (int n = 1; n <= d; ++n)
            for (const auto& mu : partitions_into(d, n))
                for (int g = 0;; ++g) {
                    const int r = hurwitz::branch_points(g, mu);
                    if (r > r_max) break;
                    if (r < 0) continue;
                    Rational v = hurwitz::default_counter().number(g, mu) / Rational(hurwitz::automorphisms(mu));
                    h.coeffs[static_cast<std::size_t>(r)].add(mu, v);
                }
    return h;
}

SPSeries tau_schur_side(int d_max, int r_max) {
    SPSeries t = zero_like(d_max, r_max);
    for (int d = 0; d <= d_max; ++d)
        for (const auto& mu : partitions_of(d)) {
            PPolynomial s = Rational(dimension(mu)) / Rational(algebra::factorial(static_cast<unsigned>(d))) * schur_in_p(mu);
            const Rational c = Rational(content_sum(mu));  // p_2[mu]/2
            Rational coef = 1;
            for (int r = 0; r <= r_max; ++r) {
                t.coeffs[static_cast<std::size_t>(r)] = t.coeffs[static_cast<std::size_t>(r)] + coef * s;
                coef = coef * c / (r + 1);
            }
        }
    return t;
}

SPSeries tau_expansion_residual(int d_max, int r_max) { return exp_series(h_series(d_max, r_max)) - tau_schur_side(d_max, r_max); }

SPSeries heat_consistency_residual(int d_max, int r_max) {
    SPSeries e = exp_series(h_series(d_max, r_max));
    SPSeries r = zero_like(d_max, r_max - 1);
    for (int k = 0; k < r_max; ++k)
        r.coeffs[static_cast<std::size_t>(k)] = Rational(k + 1) * e.coeffs[static_cast<std::size_t>(k + 1)] - cutjoin_apply(e.coeffs[static_cast<std::size_t>(k)]);
    return r;
}

DoubledPoly cauchy_residual(int d_max) {
    DoubledPoly lhs;
    for (int d = 0; d <= d_max; ++d)
        for (const auto& mu : partitions_of(d)) {
            PPolynomial s = schur_in_p(mu);
            for (const auto& [la, ca] : s.terms())
                for (const auto& [lb, cb] : s.terms()) dadd(lhs, {la, lb}, ca * cb);
        }
    DoubledPoly x;
    for (int m = 1; m <= d_max; ++m) dadd(x, {{m}, {m}}, algebra::make_rational(1, m));
    DoubledPoly rhs, power{{{{}, {}}, Rational(1)}};
    for (int k = 0; k <= d_max; ++k) {
        Rational inv = Rational(1) / Rational(algebra::factorial(static_cast<unsigned>(k)));
        for (const auto& [key, c] : power) dadd(rhs, key, inv * c);
        power = dmul(power, x, d_max);
    }
    for (const auto& [key, c] : rhs) dadd(lhs, key, -c);
    return lhs;
}

PPolynomial cauchy_restriction_residual(int d_max) {
    PPolynomial res;
    for (int d = 0; d <= d_max; ++d) {
        for (const auto& mu : partitions_of(d)) {
            PPolynomial s = schur_in_p(mu);
            res = res + s.coeff(ones(d)) * s;
        }
        res = res - Rational(1) / Rational(algebra::factorial(static_cast<unsigned>(d))) * PPolynomial::monomial(ones(d));
    }
    return res;
}

hurwitz::QHbarExpr principal_contribution(const Partition& mu) {
    const int d = size(mu);
    Rational c = 0;
    for (const auto& lambda : partitions_of(d)) c += Rational(character(mu, lambda)) / Rational(z_lambda(lambda));
    c *= Rational(dimension(mu)) / Rational(algebra::factorial(static_cast<unsigned>(d)));
    return hurwitz::QHbarExpr::term(content_sum(mu), -d, d, c);
}

CollapseReport principal_collapse_check(int M) {
    CollapseReport rep;
    for (int m = 0; m <= M; ++m) {
        hurwitz::QHbarExpr total;
        for (const auto& mu : partitions_of(m)) {
            hurwitz::QHbarExpr c = principal_contribution(mu);
            if (mu.size() >= 2 && !c.is_zero()) {
                rep.only_one_part = false;
                rep.offending.push_back(mu);
            }
            total = total + c;
        }
        hurwitz::QHbarExpr expected = Rational(1) / Rational(algebra::factorial(static_cast<unsigned>(m))) *
                                      hurwitz::zhou_term(m, [](long k) { return k * (k - 1) / 2; });
        if (!(total == expected)) rep.matches_zhou = false;
    }
    return rep;
}

}  // namespace eo::schur
