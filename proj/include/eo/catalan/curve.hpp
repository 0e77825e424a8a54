#pragma once

#include <vector>

#include "eo/algebra/ratfunc.hpp"

namespace eo::catalan {

using algebra::Integer;
using algebra::RatFunc;

// x = z + 1/z, z = (t+1)/(t-1). The map t -> (t+1)/(t-1) is an involution,
// so the same Mobius data converts in both directions.
inline const algebra::Mobius kInvolution{1, 1, 1, -1};

RatFunc z_in_t();
RatFunc x_in_t();
RatFunc x_in_z();
RatFunc to_t(const RatFunc& f_in_z);
RatFunc to_z(const RatFunc& f_in_t);

// d/dx applied to a function of t (result in t), and to a function of z (result in z).
RatFunc d_dx_t(const RatFunc& f);
RatFunc d_dx_z(const RatFunc& f);

// Preimage t of a real x > 2 on the branch z ~ 1/x.
double t_of_x(double x);

struct InversionResult {
    bool pass;
    int failing_order;  // k such that the first nonzero error term is x^{-k}; -1 on pass
};

// z(x) = sum_{m<=N} C_m x^{-2m-1} substituted into z + 1/z must equal x up to the truncation error.
InversionResult curve_inversion_check(int N);
// Same, with explicit Catalan numbers C_0..C_N (for fault injection).
InversionResult curve_inversion_check(const std::vector<Integer>& catalan_numbers);

}  // namespace eo::catalan
