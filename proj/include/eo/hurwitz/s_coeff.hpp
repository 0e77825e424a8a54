#pragma once

#include <vector>

#include "eo/algebra/ratfunc.hpp"

namespace eo::hurwitz {

using algebra::RatFunc;

// S_m(t) for m >= 2 together with D S_m, D = x d/dx = t^2 (t - 1) d/dt.
struct SHurwitz {
    int m;
    RatFunc value;
    RatFunc x_deriv;
};

// D S_0 = z and D S_1 = (t - 1)^2/2, in t.
RatFunc s0_xdx();
RatFunc s1_xdx();

// sum_{2g-2+n = m-1} F_{g,n}(t,...,t)/n!
SHurwitz s_coeff_H_assembled(int m);
// Integrates (k + t(t-1) d/dt) S_{k+1} = (1/2)(D^2 S_k + sum_{a+b=k+1, a,b>=1} DS_a DS_b - DS_k) from t = 1.
SHurwitz s_coeff_H_recursive(int m);
// Both paths; throws PathMismatch if they differ, std::logic_error if the degree is not
// 3m - 3 or S_m(1) != 0.
SHurwitz s_coeff_H(int m);

// The integral recursion for S_{m+1}, given S_2..S_m (index k holds S_k, k < 2 ignored).
// Valid for m >= 2.
RatFunc s_recursion_integral_H(int m, const std::vector<RatFunc>& s);

// x d/dx S_m for every m >= 0, in t.
RatFunc s_xdx(int m);

// Heat-equation residuals for m = 0..m_max:
//   (-D - m) S_{m+1} + (1/2)[D^2 S_m + sum_{a+b=m+1} DS_a DS_b - DS_m],
// with the product sum over a, b >= 0. Inputs indexed by k = 0..m_max+1: S_k (read for k >= 2 only)
// and DS_k, in t.
std::vector<RatFunc> heat_residual_H(const std::vector<RatFunc>& values, const std::vector<RatFunc>& xdx);
std::vector<RatFunc> heat_residual_H(int m_max);
// S_0 - D S_0 + (1/2)(D S_0)^2
RatFunc s0_identity_residual();

// Change of variable t = 1/(1 - z).
RatFunc to_z(const RatFunc& f_in_t);

}  // namespace eo::hurwitz
