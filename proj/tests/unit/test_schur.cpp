#include <doctest.h>

#include "eo/errors.hpp"
#include "eo/hurwitz/qhbar.hpp"
#include "eo/schur/kp.hpp"
#include "eo/schur/symmetric.hpp"
#include "oracles/oracles.hpp"

using namespace eo::schur;
using eo::algebra::make_rational;

TEST_CASE("partitions and characters: small values") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(10).size() == 42);
    CHECK(dimension({2, 1}) == 2);
    CHECK(dimension({3, 2}) == 5);
    CHECK(dimension({}) == 1);
    CHECK(character({1, 1}, {2}) == -1);
    CHECK(character({2}, {1, 1}) == 1);
    CHECK(character({2, 1}, {3}) == -1);
    CHECK(character({2, 1}, {2, 1}) == 0);
    CHECK(z_lambda({2, 1, 1}) == 4);
    CHECK_THROWS_AS(character({2}, {3}), eo::SizeMismatch);
    CHECK(canonical({1, 0, 3}) == Partition{3, 1});
}

TEST_CASE("characters: identity class gives the dimension") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& mu : partitions_of(n)) CHECK(character(mu, Partition(static_cast<std::size_t>(n), 1)) == dimension(mu));
}

TEST_CASE("characters: column orthogonality and Burnside") {
    for (int n = 1; n <= 6; ++n) {
        auto parts = partitions_of(n);
        eo::algebra::Integer burnside = 0;
        for (const auto& mu : parts) burnside += dimension(mu) * dimension(mu);
        CHECK(burnside == oracle::fact(n));
        for (const auto& a : parts)
            for (const auto& b : parts) {
                eo::algebra::Integer s = 0;
                for (const auto& mu : parts) s += character(mu, a) * character(mu, b);
                CHECK(s == (a == b ? z_lambda(a) : eo::algebra::Integer(0)));
            }
    }
}

TEST_CASE("characters: row orthogonality") {
    for (int n = 1; n <= 6; ++n) {
        auto parts = partitions_of(n);
        for (const auto& mu : parts)
            for (const auto& nu : parts) {
                Rational s = 0;
                for (const auto& la : parts) s += Rational(character(mu, la) * character(nu, la)) / Rational(z_lambda(la));
                CHECK(s == (mu == nu ? 1 : 0));
            }
    }
}

TEST_CASE("Schur functions in power sums") {
    CHECK(schur_in_p({2}) == PPolynomial::monomial({1, 1}, make_rational(1, 2)) + PPolynomial::monomial({2}, make_rational(1, 2)));
    CHECK(schur_in_p({1, 1}) == PPolynomial::monomial({1, 1}, make_rational(1, 2)) + PPolynomial::monomial({2}, make_rational(-1, 2)));
    CHECK(schur_in_p({}) == PPolynomial::constant(1));
}

TEST_CASE("shifted power sums") {
    for (int m = 1; m <= 8; ++m) CHECK(shifted_power_sum(2, {m}) == m * (m - 1));
    CHECK(shifted_power_sum(2, {1, 1}) == -2);
    for (int n = 0; n <= 8; ++n)
        for (const auto& mu : partitions_of(n)) {
            CHECK(shifted_power_sum(2, mu) == 2 * content_sum(mu));
            CHECK(shifted_power_sum(1, mu) == n);
        }
}

TEST_CASE("cut-and-join: Schur functions are eigenvectors") {
    CHECK(cutjoin_apply(PPolynomial::monomial({1})).is_zero());
    CHECK(cutjoin_apply(PPolynomial::monomial({2})) == PPolynomial::monomial({1, 1}));
    CHECK(cutjoin_apply(PPolynomial::monomial({1, 1})) == PPolynomial::monomial({2}));
    for (int n = 1; n <= 6; ++n)
        for (const auto& mu : partitions_of(n)) {
            CAPTURE(to_string(mu));
            CHECK(cutjoin_apply(schur_in_p(mu)) == make_rational(1, 2) * shifted_power_sum(2, mu) * schur_in_p(mu));
        }
}

TEST_CASE("H series: leading coefficients") {
    SPSeries h = h_series(4, 4);
    CHECK(h.coeffs[0].coeff({1}) == 1);
    CHECK(h.coeffs[1].coeff({2}) == make_rational(1, 2));
    CHECK(h.coeffs[3].coeff({2}) == make_rational(1, 12));
    CHECK(h.coeffs[2].coeff({1, 1}) == make_rational(1, 4));
    CHECK(h.coeffs[0].coeff({}) == 0);
}

TEST_CASE("tau function: exp(H) equals the Schur expansion") {
    CHECK(is_zero(tau_expansion_residual(6, 6)));
    SPSeries h = h_series(5, 5);
    h.coeffs[1].add({2}, make_rational(1, 7));
    CHECK_FALSE(is_zero(exp_series(h) - tau_schur_side(5, 5)));
}

TEST_CASE("tau function: heat equation") {
    CHECK(is_zero(heat_consistency_residual(6, 6)));
}

TEST_CASE("Cauchy identity") {
    CHECK(cauchy_residual(5).empty());
    CHECK(cauchy_restriction_residual(7).is_zero());
}

TEST_CASE("principal specialization collapses to one-row partitions") {
    auto rep = principal_collapse_check(8);
    CHECK(rep.only_one_part);
    CHECK(rep.matches_zhou);
    CHECK(rep.offending.empty());
    CHECK(principal_contribution({1, 1}).is_zero());
    CHECK(principal_contribution({2, 1}).is_zero());
    CHECK_FALSE(principal_contribution({3}).is_zero());
}
