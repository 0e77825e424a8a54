#pragma once

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "eo/algebra/laurent.hpp"
#include "eo/algebra/ratfunc.hpp"
#include "eo/parallel/exec.hpp"
#include "eo/parallel/memo.hpp"

namespace eo::hurwitz {

using algebra::Laurent;
using algebra::Rational;
using algebra::RatFunc;
using algebra::UPoly;

// xi_0 = t - 1, xi_{k+1} = t^2 (t - 1) d/dt xi_k; degree 2k + 1.
struct XiPolynomial {
    int k;
    UPoly poly;
};
XiPolynomial xi_polynomial(int k);

// t^2 (t - 1) d/dt, which is x d/dx = -d/dw.
UPoly x_d_dx(const UPoly& p);
RatFunc x_d_dx(const RatFunc& f);

// Symmetrized linear Hodge integrals <tau_k Lambda_g^v(1)>, keyed by sorted-descending k.
struct ELSVTable {
    int g;
    int n;
    std::map<std::vector<int>, Rational> coeffs;
    // Value for any ordering of k (zero when absent).
    Rational at(std::vector<int> k) const;
};

// Solves for the coefficients on the grid {1..K+1}^n (sorted), K = 3g - 3 + n, and checks
// every unused grid row plus points with entries up to K + 3.
// Throws SingularMatrix or OverdeterminedMismatch.
ELSVTable elsv_coefficients(int g, int n);

// sum_k c_k prod xi_{k_i}(t_i)
Laurent assemble_free_energy(const ELSVTable& table);
// Memoized; throws InvalidProfile unless 2g - 2 + n > 0.
Laurent free_energy_H(int g, int n);

// d^2/du1 du2 F_{0,2} at u1 = u2 = t: -(1/6) S_z(x) (dz/dt)^2 with x = z e^{-z}.
RatFunc f02_diagonal_mixed_H();

using FreeEnergyLookup = std::function<Laurent(int, int)>;

// LHS minus RHS of the polynomial recursion, denominators cleared. Zero when the recursion holds.
// (0,3) uses the exact transform of cut-and-join with x_i kept as extra symbols X_i
// (arity 6: t_1..t_3, X_1..X_3), because the t-form needs F_{0,2} off the diagonal.
Laurent fh_recursion_residual(int g, int n);
Laurent fh_recursion_residual(int g, int n, const FreeEnergyLookup& lookup);

// sum_{|mu| <= max_total} H_{g,n}(mu) prod x_i^{mu_i}
double laplace_sum_H(int g, int n, std::span<const double> x, int max_total, parallel::Exec exec);
// t(x) = 1/(1 - z), z e^{-z} = x on the principal branch (x < 1/e).
double t_of_x_H(double x);
double free_energy_H_at_x(const Laurent& f, std::span<const double> x);

}  // namespace eo::hurwitz
