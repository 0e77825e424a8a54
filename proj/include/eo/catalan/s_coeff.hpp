#pragma once

#include <vector>

#include "eo/algebra/ratfunc.hpp"

namespace eo::catalan {

using algebra::RatFunc;

// S_m for m >= 2 as a function of t; for m = 0, 1 only the derivatives exist as rational functions.
struct SCatalan {
    int m;
    RatFunc value;  // S_m(t), m >= 2
    RatFunc d_dt;   // dS_m/dt
};

// dS_0/dx = -z and dS_1/dx = z z_x/(1 - z^2), both in t.
RatFunc s0_x();
RatFunc s1_x();

// sum_{2g-2+n = m-1} F_{g,n}(t,...,t)/n!
SCatalan s_coeff_C_assembled(int m);
// Integrates the second-order S-recursion from t = -1, seeded by s0_x and s1_x.
SCatalan s_coeff_C_recursive(int m);

// The t-form of the recursion right-hand side for dS_{m+1}/dt, given dS_k/dt for k <= m.
// Valid for m >= 2; at m = 1 it double-counts the S_1' S_1' term.
RatFunc s_recursion_t_form(int m, const std::vector<RatFunc>& s_dt);

// Residuals of the hbar-expansion of the Schrodinger equation at orders 0..m_max+1, given
// dS_k/dx in t for k = 0..m_max+1. All must be zero.
std::vector<RatFunc> schrodinger_residual_C(const std::vector<RatFunc>& s_x);
// Same with S_k taken from the assembled path.
std::vector<RatFunc> schrodinger_residual_C(int m_max);

// dS_m/dx in t for any m >= 0, using the assembled path for m >= 2.
RatFunc s_x(int m);

// Substitute z^2 = s/(s-1) into a function of t that is even in z; returns a function of s.
RatFunc to_s_variable(const RatFunc& f_in_t);

}  // namespace eo::catalan
