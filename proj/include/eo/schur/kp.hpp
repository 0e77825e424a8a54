#pragma once

#include <vector>

#include "eo/hurwitz/qhbar.hpp"
#include "eo/schur/symmetric.hpp"

namespace eo::schur {

// Power series in s with PPolynomial coefficients: entry r is the coefficient of s^r.
// Every coefficient is kept to p-weight <= d_max.
struct SPSeries {
    int d_max;
    std::vector<PPolynomial> coeffs;
    int r_max() const { return static_cast<int>(coeffs.size()) - 1; }
};

SPSeries operator+(const SPSeries& a, const SPSeries& b);
SPSeries operator-(const SPSeries& a, const SPSeries& b);
SPSeries operator*(const SPSeries& a, const SPSeries& b);
bool is_zero(const SPSeries& a);
SPSeries exp_series(const SPSeries& a);

// H(s, p) = sum_{g,n} (1/n!) sum_{mu in Z_+^n} H_{g,n}(mu) p_mu s^{r(g,mu)}.
SPSeries h_series(int d_max, int r_max);

// sum_{|mu| <= d_max} dim(mu)/|mu|! e^{p_2[mu] s/2} s_mu(p), with the exponential expanded in s.
SPSeries tau_schur_side(int d_max, int r_max);
// exp(H) - tau side; identically zero.
SPSeries tau_expansion_residual(int d_max, int r_max);
// d/ds exp(H) - Delta exp(H) through s-order r_max - 1.
SPSeries heat_consistency_residual(int d_max, int r_max);

// Doubled ring: a monomial p_lambda p^y_nu is keyed by (lambda, nu).
using DoubledPoly = std::map<std::pair<Partition, Partition>, Rational>;
// sum_{|mu| = w} s_mu(p) s_mu(p^y) - weight-w part of exp(sum_m p_m p^y_m/m), for all w <= d_max.
DoubledPoly cauchy_residual(int d_max);
// With p^y_1 = 1 and p^y_{m>=2} = 0: sum_mu s_mu(1,0,...) s_mu(p) - e^{p_1}, weights <= d_max.
PPolynomial cauchy_restriction_residual(int d_max);

struct CollapseReport {
    bool only_one_part = true;  // every mu with two or more parts contributes zero
    bool matches_zhou = true;   // total at each m equals a_m/m!
    std::vector<Partition> offending;
    bool pass() const { return only_one_part && matches_zhou; }
};
// Contribution of mu to the tau-sum at s = hbar, p_j = (x/hbar)^j, in the q-hbar ring.
hurwitz::QHbarExpr principal_contribution(const Partition& mu);
CollapseReport principal_collapse_check(int M);

}  // namespace eo::schur
