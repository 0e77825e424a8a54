#pragma once

#include <utility>
#include <vector>

#include "eo/algebra/rational.hpp"

namespace eo::algebra {

// Dense univariate polynomial, coefficients low to high, no trailing zeros.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);
    UPoly(std::initializer_list<long> coeffs);

    static UPoly constant(const Rational& c);
    static UPoly monomial(const Rational& c, int degree);
    // x - root
    static UPoly linear_root(const Rational& root);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const;
    const Rational& leading() const { return c_.back(); }

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const Rational& s, const UPoly& a);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    // Quotient and remainder; divisor must be nonzero.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
    UPoly monic() const;
    UPoly derivative() const;
    UPoly antiderivative() const;  // zero constant term
    UPoly pow(unsigned e) const;
    // p(x + a)
    UPoly shift(const Rational& a) const;

    Rational eval(const Rational& x) const;
    double eval(double x) const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(UPoly a, UPoly b);

}  // namespace eo::algebra
