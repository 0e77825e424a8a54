#include <doctest.h>

#include "eo/catalan/curve.hpp"
#include "eo/catalan/s_coeff.hpp"
#include "eo/errors.hpp"
#include "eo/hurwitz/free_energy.hpp"
#include "eo/hurwitz/s_coeff.hpp"
#include "eo/wkb/hierarchy.hpp"

using namespace eo::wkb;
using eo::algebra::make_rational;
using eo::algebra::Rational;
using eo::algebra::RatFunc;

namespace {

RatFunc zc(long a, long b = 1) { return RatFunc::constant(make_rational(a, b), "z"); }
RatFunc zv() { return RatFunc::variable("z"); }

std::vector<RatFunc> model_derivs(Model m, int R) {
    std::vector<RatFunc> s;
    for (int k = 0; k <= R; ++k) s.push_back(model_s_derivative(m, k));
    return s;
}

}  // namespace

TEST_CASE("operators: low orders") {
    for (Model m : {Model::catalan, Model::hurwitz}) {
        CurveSymbol curve = curve_symbol(m);
        auto s = model_derivs(m, 2);
        auto D = build_d_operators(2, s, curve);
        CHECK(D[0] == YPolyOperator::identity());
        RatFunc s0pp = curve.dx_to_dz * s[0].derivative();
        RatFunc s1pp = curve.dx_to_dz * s[1].derivative();
        RatFunc s0ppp = curve.dx_to_dz * s0pp.derivative();
        YPolyOperator d1 = YPolyOperator::monomial(2, make_rational(1, 2) * s0pp) + YPolyOperator::monomial(1, s[1]);
        CHECK(D[1] == d1);
        CHECK(D[2].coeff(4) == make_rational(1, 8) * s0pp * s0pp);
        CHECK(D[2].coeff(3) == make_rational(1, 6) * (s0ppp + Rational(3) * s0pp * s[1]));
        CHECK(D[2].coeff(2) == make_rational(1, 2) * (s1pp + s[1] * s[1]));
        CHECK(D[2].coeff(1) == s[2]);
        CHECK(build_d_operators(0, s, curve).size() == 1);
        CHECK_THROWS_AS(build_d_operators(3, s, curve), eo::InsufficientData);
    }
}

TEST_CASE("operators: exponential recursion equals direct expansion; degree bound") {
    for (Model m : {Model::catalan, Model::hurwitz}) {
        CurveSymbol curve = curve_symbol(m);
        auto s = model_derivs(m, 4);
        auto a = build_d_operators(4, s, curve);
        auto b = build_d_operators_direct(4, s, curve);
        for (int r = 0; r <= 4; ++r) {
            CHECK(a[static_cast<std::size_t>(r)] == b[static_cast<std::size_t>(r)]);
            CHECK(a[static_cast<std::size_t>(r)].max_order() <= 2 * r);
        }
    }
}

TEST_CASE("symbols vanish on shell") {
    for (Model m : {Model::catalan, Model::hurwitz}) CHECK(apply_to_symbol(YPolyOperator::identity(), curve_symbol(m)).is_zero());
    // Catalan: dA/dy = 2y + x with y = -z, x = z + 1/z.
    CHECK(curve_symbol(Model::catalan).on_shell(1) == zc(1) / zv() - zv());
    CHECK(curve_symbol(Model::hurwitz).on_shell(3) == zv());
}

TEST_CASE("corrections vanish") {
    for (Model m : {Model::catalan, Model::hurwitz}) {
        auto A = recover_corrections(m, 4);
        REQUIRE(A.size() == 4);
        for (const auto& a : A) CHECK(a.is_zero());
    }
}

TEST_CASE("corrections: perturbed S_3 gives nonzero A_3") {
    auto s = model_derivs(Model::catalan, 4);
    s[3] = s[3] + make_rational(1, 5) * zv().pow(3);
    auto A = recover_corrections(curve_symbol(Model::catalan), s, 4);
    CHECK(A[0].is_zero());
    CHECK(A[1].is_zero());
    CHECK_FALSE(A[2].is_zero());
}

TEST_CASE("S' from the hierarchy: Catalan closed forms") {
    RatFunc z = zv(), one = zc(1), q = z * z - one;
    CHECK(s_prime_from_hierarchy(Model::catalan, 2) == z.pow(5) * (zc(2) * z * z + zc(3)) / q.pow(5));
    CHECK(s_prime_from_hierarchy(Model::catalan, 3) == -zc(5) * z.pow(7) * (zc(3) + zc(7) * z * z + zc(2) * z.pow(4)) / q.pow(8));
}

TEST_CASE("S' from the hierarchy: triple-path agreement") {
    for (int m = 2; m <= 4; ++m) {
        CAPTURE(m);
        RatFunc h = s_prime_from_hierarchy(Model::catalan, m);
        CHECK(h == eo::catalan::to_z(eo::catalan::d_dx_t(eo::catalan::s_coeff_C_assembled(m).value)));
        CHECK(h == eo::catalan::to_z(eo::catalan::d_dx_t(eo::catalan::s_coeff_C_recursive(m).value)));

        RatFunc hh = s_prime_from_hierarchy(Model::hurwitz, m);
        CHECK(hh == eo::hurwitz::to_z(eo::hurwitz::s_coeff_H_assembled(m).x_deriv));
        CHECK(hh == eo::hurwitz::to_z(eo::hurwitz::x_d_dx(eo::hurwitz::s_coeff_H_recursive(m).value)));
    }
}

TEST_CASE("S' from the hierarchy: Hurwitz derived value") {
    RatFunc z = zv(), one = zc(1);
    CHECK(s_prime_from_hierarchy(Model::hurwitz, 2) == z * z * (zc(4) + zc(11) * z) / (zc(24) * (one - z).pow(5)));
}

TEST_CASE("singular symbol") {
    CurveSymbol flat = curve_symbol(Model::catalan);
    flat.on_shell = [](int) { return RatFunc("z"); };
    CHECK_THROWS_AS(s_prime_from_hierarchy(flat, {zv(), zv()}, 2), eo::DivisionBySingularSymbol);
}
