#include <doctest.h>

#include <cmath>
#include <random>

#include "eo/algebra/fraction.hpp"
#include "eo/algebra/json.hpp"
#include "eo/algebra/linsolve.hpp"
#include "eo/algebra/series.hpp"
#include "eo/errors.hpp"

using namespace eo::algebra;

namespace {

RatFunc t_var() { return RatFunc::variable("t"); }
RatFunc z_var() { return RatFunc::variable("z"); }
RatFunc cst(long a, long b = 1, const char* v = "t") { return RatFunc::constant(make_rational(a, b), v); }

Laurent random_laurent(std::mt19937& rng, std::size_t arity) {
    std::uniform_int_distribution<int> ex(-2, 3), co(-5, 5), nterms(1, 5);
    Laurent f(arity);
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        Laurent::Exponents e(arity);
        for (auto& x : e) x = ex(rng);
        f.add_term(e, make_rational(co(rng), std::uniform_int_distribution<int>(1, 4)(rng)));
    }
    return f.is_zero() ? random_laurent(rng, arity) : f;
}

// Random rational function with poles only at 0, 1, -1 and no residues.
RatFunc random_exact_derivative(std::mt19937& rng) {
    std::uniform_int_distribution<int> co(-6, 6);
    RatFunc t = t_var();
    RatFunc f = cst(co(rng)) + cst(co(rng)) * t + cst(co(rng)) * t.pow(2);
    f += cst(co(rng)) * t.pow(-2) + cst(co(rng)) * (t - cst(1)).pow(-3) + cst(co(rng)) * (t + cst(1)).pow(-2);
    return f.derivative();
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-10/5")) == "-2");
    CHECK(to_string(make_rational(0, 7)) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK(power(make_rational(2, 3), -2) == make_rational(9, 4));
}

TEST_CASE("differentiate") {
    CHECK(t_var().pow(2).derivative() == cst(2) * t_var());
    CHECK(cst(7).derivative().is_zero());

    RatFunc z = z_var();
    RatFunc one = RatFunc::constant(1, "z");
    RatFunc s2 = z.pow(4) * (RatFunc::constant(9, "z") + z.pow(2)) / (RatFunc::constant(12, "z") * (one - z.pow(2)).pow(3));
    double h = 1e-5, x = 1.0 / 3.0;
    double fd = (s2.eval(x + h) - s2.eval(x - h)) / (2 * h);
    CHECK(std::abs(fd - s2.derivative().eval(x)) < 1e-9);
}

TEST_CASE("integrate_no_log") {
    RatFunc t = t_var();
    CHECK(integrate_no_log(cst(3) * t.pow(2), -1, {}) == t.pow(3) + cst(1));
    CHECK_THROWS_AS(integrate_no_log(t.pow(-1), 1, {0}), eo::NonzeroResidue);
    CHECK_THROWS_AS(integrate_no_log((t.pow(2) + cst(1)).pow(-2), 0, {0, 1, -1}), eo::UnfactoredDenominator);
    CHECK_THROWS_AS(integrate_no_log(t.pow(-2), 0, {0}), eo::PoleAtBasePoint);

    std::mt19937 rng(7);
    for (int i = 0; i < 20; ++i) {
        RatFunc f = random_exact_derivative(rng);
        RatFunc F = integrate_no_log(f, 2, {0, 1, -1});
        CHECK(F.derivative() == f);
        CHECK(F.eval(Rational(2)) == 0);
    }
}

TEST_CASE("solve_exact") {
    Matrix id = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    std::vector<Rational> b = {make_rational(1, 2), 3, -4};
    CHECK(solve_exact(id, b) == b);
    Matrix v = {{1, 1}, {1, 2}};
    CHECK(solve_exact(v, {3, 5}) == std::vector<Rational>{1, 2});
    Matrix z = {{0, 0}, {0, 0}};
    CHECK_THROWS_AS(solve_exact(z, {1, 1}), eo::SingularMatrix);
    CHECK_THROWS_AS(solve_exact(Matrix{{1, 2}}, {1}), eo::SizeMismatch);
    Matrix r = {{1, 2}, {2, 4}, {0, 1}, {1, 1}};
    CHECK(independent_rows(r) == std::vector<std::size_t>{0, 2});
}

TEST_CASE("substitute_mobius") {
    Mobius catalan{1, 1, 1, -1};
    RatFunc z = z_var();
    RatFunc t = t_var();
    CHECK(substitute_mobius(z, catalan, "t") == (t + cst(1)) / (t - cst(1)));
    RatFunc one = RatFunc::constant(1, "z");
    CHECK(substitute_mobius(z.pow(2) / (z.pow(2) - one), catalan, "t") == (t + cst(1)).pow(2) / (cst(4) * t));
    CHECK_THROWS_AS(substitute_mobius(z, Mobius{1, 2, 2, 4}, "t"), eo::DegenerateMap);

    // M1 then M2 equals the composite map.
    Mobius m1{2, 1, 1, 3}, m2{1, -1, 4, 1};
    RatFunc f = (z.pow(3) - RatFunc::constant(2, "z")) / (z.pow(2) + one);
    RatFunc two_step = substitute_mobius(substitute_mobius(f, m1, "u"), m2, "v");
    Mobius comp{m1.a * m2.a + m1.b * m2.c, m1.a * m2.b + m1.b * m2.d, m1.c * m2.a + m1.d * m2.c, m1.c * m2.b + m1.d * m2.d};
    CHECK(two_step == substitute_mobius(f, comp, "v"));
}

TEST_CASE("floating evaluation agrees with exact evaluation") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(-40, 40), den(1, 13);
    for (int i = 0; i < 5; ++i) {
        RatFunc f = random_exact_derivative(rng);
        for (int k = 0; k < 10; ++k) {
            Rational x = make_rational(num(rng), den(rng));
            if (x == 0 || x == 1 || x == -1) continue;
            double exact = f.eval(x).get_d();
            CHECK(std::abs(f.eval(x.get_d()) - exact) <= 1e-10 * std::max(1.0, std::abs(exact)));
        }
    }
}

TEST_CASE("Laurent ring laws") {
    std::mt19937 rng(3);
    for (int i = 0; i < 30; ++i) {
        Laurent f = random_laurent(rng, 3), g = random_laurent(rng, 3), h = random_laurent(rng, 3);
        CHECK((f + g) * h == f * h + g * h);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * g == g * f);
        CHECK((f - f).is_zero());
        auto q = (f * g).divide_exact(g);
        REQUIRE(q.has_value());
        CHECK(*q == f);
        CHECK((f * g).derivative(1) == f.derivative(1) * g + f * g.derivative(1));
    }
}

TEST_CASE("Laurent operations") {
    Laurent t0 = Laurent::variable(2, 0), t1 = Laurent::variable(2, 1);
    Laurent one = Laurent::constant(2, 1);
    CHECK_FALSE((t0 * t0 + one).divide_exact(t0 + t1).has_value());
    CHECK(*(t0 * t0 - t1 * t1).divide_exact(t0 - t1) == t0 + t1);
    CHECK_THROWS_AS(Laurent::monomial(2, {-1, 0}, 1).integrate(0), eo::NonzeroResidue);
    CHECK(Laurent::monomial(2, {-2, 1}, 1).integrate(0) == Laurent::monomial(2, {-1, 1}, -1));
    CHECK((t0 * t1).rename({0, 0}, 1) == Laurent::monomial(1, {2}, 1));
    CHECK((t0 + t1).substitute(0, -1) == Laurent::variable(1, 0) - Laurent::constant(1, 1));
    CHECK((t0 * t1 + t0 + t1).is_symmetric());
    CHECK_FALSE((t0 * t0 + t1).is_symmetric());
    Laurent u = Laurent::monomial(1, {-2}, 3) + Laurent::variable(1, 0);
    CHECK(u.to_ratfunc("t") == cst(3) * t_var().pow(-2) + t_var());
}

TEST_CASE("factored fractions") {
    Laurent t0 = Laurent::variable(2, 0), t1 = Laurent::variable(2, 1);
    Laurent one = Laurent::constant(2, 1);
    auto a = FactoredFraction::over(one, t0 - t1);
    auto b = FactoredFraction::over(one, t1 - t0);
    CHECK((a + b).to_laurent().is_zero());
    auto c = FactoredFraction::over(t0 * t0 - t1 * t1, Rational(2) * t1 - Rational(2) * t0);
    CHECK(c.to_laurent() == Rational(-1, 2) * (t0 + t1));
    auto d = FactoredFraction::over(one, t0 + t1, 2);
    CHECK(d.rename({0, 0}, 1).to_laurent() == Laurent::monomial(1, {-2}, make_rational(1, 4)));
    double p[2] = {0.3, 0.7};
    double h = 1e-6, p2[2] = {0.3 + h, 0.7}, p1[2] = {0.3 - h, 0.7};
    CHECK(std::abs((d.eval(p2) - d.eval(p1)) / (2 * h) - d.derivative(0).eval(p)) < 1e-6);
    CHECK_THROWS_AS(FactoredFraction::over(one, t0 + t1).to_laurent(), eo::NotDivisible);
}

TEST_CASE("truncated series") {
    RationalSeries s("x", 3);
    s.at(0) = 1;
    s.at(1) = 1;
    CHECK_THROWS_AS(s.at(4), eo::OutOfRange);
    auto inv = inverse(s);
    CHECK(inv.at(3) == -1);
    RationalSeries x("x", 4);
    x.at(1) = 1;
    auto e = exp_series(x);
    CHECK(e.at(4) == make_rational(1, 24));
}

TEST_CASE("json encoding round trips") {
    Laurent f = Laurent::monomial(2, {-1, 2}, make_rational(-3, 4)) + Laurent::constant(2, 5);
    auto j = to_json(f);
    CHECK(j.dump() == R"([[[-1,2],"-3/4"],[[0,0],"5"]])");
    CHECK(laurent_from_json(j, 2) == f);
    RatFunc r = (t_var() + cst(1)) / (cst(2) * t_var());
    CHECK(to_json(r).dump() == R"({"den":["0","1"],"num":["1/2","1/2"],"var":"t"})");
    CHECK(ratfunc_from_json(to_json(r)) == r);
    CHECK(to_json(make_rational(6, 3)).get<std::string>() == "2");
}
