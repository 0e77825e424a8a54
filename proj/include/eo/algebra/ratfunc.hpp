#pragma once

#include <string>
#include <vector>

#include "eo/algebra/upoly.hpp"

namespace eo::algebra {

// Reduced quotient of univariate polynomials; denominator is monic.
class RatFunc {
public:
    RatFunc() : RatFunc(UPoly{}, UPoly::constant(1), "t") {}
    explicit RatFunc(std::string var) : RatFunc(UPoly{}, UPoly::constant(1), std::move(var)) {}
    RatFunc(UPoly num, UPoly den, std::string var);

    static RatFunc constant(const Rational& c, std::string var);
    static RatFunc variable(std::string var);
    static RatFunc polynomial(UPoly p, std::string var);

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    const std::string& var() const { return var_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const Rational& s, const RatFunc& a);
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.var_ == b.var_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
    RatFunc pow(int e) const;

    RatFunc derivative() const;
    Rational eval(const Rational& x) const;  // throws std::domain_error at a pole
    double eval(double x) const;

    // Rename the variable without changing the function.
    RatFunc with_var(std::string var) const { return RatFunc(num_, den_, std::move(var)); }

private:
    void require_same_var(const RatFunc& b) const;
    UPoly num_;
    UPoly den_;
    std::string var_;
};

struct Mobius {
    Rational a, b, c, d;
};

// f(var) with var = (a u + b)/(c u + d); result tagged new_var.
RatFunc substitute_mobius(const RatFunc& f, const Mobius& m, const std::string& new_var);

// Antiderivative vanishing at base_point, by partial fractions over (var - root) for root in allowed_roots.
RatFunc integrate_no_log(const RatFunc& f, const Rational& base_point, const std::vector<Rational>& allowed_roots);

}  // namespace eo::algebra
