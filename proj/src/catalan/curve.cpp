#include "eo/catalan/curve.hpp"

#include <cmath>

#include "eo/algebra/series.hpp"
#include "eo/catalan/counts.hpp"

namespace eo::catalan {

using algebra::Rational;

RatFunc z_in_t() {
    RatFunc t = RatFunc::variable("t"), one = RatFunc::constant(1, "t");
    return (t + one) / (t - one);
}

RatFunc x_in_z() {
    RatFunc z = RatFunc::variable("z");
    return z + z.pow(-1);
}

RatFunc x_in_t() { return to_t(x_in_z()); }

RatFunc to_t(const RatFunc& f_in_z) { return algebra::substitute_mobius(f_in_z, kInvolution, "t"); }
RatFunc to_z(const RatFunc& f_in_t) { return algebra::substitute_mobius(f_in_t, kInvolution, "z"); }

RatFunc d_dx_t(const RatFunc& f) {
    static const RatFunc dx_dt = x_in_t().derivative();
    return f.derivative() / dx_dt;
}

RatFunc d_dx_z(const RatFunc& f) {
    static const RatFunc dx_dz = x_in_z().derivative();
    return f.derivative() / dx_dz;
}

double t_of_x(double x) {
    double z = (x - std::sqrt(x * x - 4)) / 2;
    return (z + 1) / (z - 1);
}

InversionResult curve_inversion_check(int N) {
    std::vector<Integer> c;
    for (int m = 0; m <= N; ++m) c.push_back(catalan_count(0, 1, {2 * m}));
    return curve_inversion_check(c);
}

InversionResult curve_inversion_check(const std::vector<Integer>& catalan_numbers) {
    // With u = 1/x and w = z/u = sum C_m u^{2m}: z + 1/z - x = (u^2 w + 1/w - 1)/u.
    // w is exact through u^{2N}, so E = u^2 w + 1/w - 1 must vanish through u^{2N+1}.
    const int N = static_cast<int>(catalan_numbers.size()) - 1;
    const int order = 2 * N + 1;
    algebra::RationalSeries w("u", order), u2("u", order);
    for (int m = 0; m <= N; ++m) w.at(2 * m) = Rational(catalan_numbers[static_cast<std::size_t>(m)]);
    u2.at(2) = 1;
    algebra::RationalSeries one("u", order);
    one.at(0) = 1;
    auto e = u2 * w + algebra::inverse(w) - one;
    for (int k = 0; k <= order; ++k)
        if (e.at(k) != 0) return {false, k - 1};
    return {true, -1};
}

}  // namespace eo::catalan
