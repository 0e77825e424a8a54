#pragma once

#include <span>
#include <utility>

#include "eo/algebra/laurent.hpp"
#include "eo/parallel/exec.hpp"
#include "eo/parallel/memo.hpp"

namespace eo::catalan {

using algebra::Laurent;

struct FreeEnergyC {
    int g;
    int n;
    Laurent poly;  // in t_1..t_n
};

// Free energies built by the differential recursion in t_1, integrated from t_1 = -1.
// (0,3) is the one case whose recursion input would involve F_{0,2} at two distinct
// points; it is computed from the exact third mixed derivative instead.
class FreeEnergiesC {
public:
    Laurent get(int g, int n);
    // d/dt_1 F_{g,n} from the recursion right-hand side, before integration.
    Laurent recursion_rhs(int g, int n);

private:
    Laurent compute(int g, int n);
    parallel::ConcurrentMemo<std::pair<int, int>, Laurent> memo_;
};

FreeEnergiesC& default_free_energies();

// Throws InvalidProfile unless 2g - 2 + n > 0.
FreeEnergyC free_energy_C(int g, int n);

// d^2/du1 du2 F_{0,2} at u1 = u2 = t, in t.
algebra::RatFunc f02_diagonal_mixed();
// d^3/dt1 dt2 dt3 F_{0,3} from the exact edge-removal identity.
Laurent f03_mixed_third_derivative();

// Truncated Laplace sum  sum_{|mu| <= max_total} D_{g,n}(mu) prod x_i^{-mu_i}.
double laplace_sum_C(int g, int n, std::span<const double> x, int max_total, parallel::Exec exec);
// F_{g,n} evaluated at the t-preimages of x.
double free_energy_at_x(const Laurent& f, std::span<const double> x);

}  // namespace eo::catalan
