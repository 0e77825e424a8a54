#pragma once

#include <span>
#include <utility>
#include <vector>

#include "eo/algebra/laurent.hpp"

namespace eo::algebra {

// Laurent numerator over a product of polynomial factors kept in factored form.
// Factors are stored free of monomial content with lex-leading coefficient 1,
// so equal factors compare equal as Laurent values.
class FactoredFraction {
public:
    explicit FactoredFraction(std::size_t arity = 0) : num_(arity) {}
    explicit FactoredFraction(Laurent num) : num_(std::move(num)) {}

    static FactoredFraction over(Laurent num, const Laurent& factor, int mult = 1);

    std::size_t arity() const { return num_.arity(); }
    const Laurent& numerator() const { return num_; }
    const std::vector<std::pair<Laurent, int>>& factors() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    FactoredFraction& divide_by(const Laurent& factor, int mult = 1);

    FactoredFraction operator-() const;
    friend FactoredFraction operator+(const FactoredFraction& a, const FactoredFraction& b);
    friend FactoredFraction operator-(const FactoredFraction& a, const FactoredFraction& b);
    friend FactoredFraction operator*(const FactoredFraction& a, const FactoredFraction& b);
    friend FactoredFraction operator*(const Rational& s, const FactoredFraction& a);
    FactoredFraction& operator+=(const FactoredFraction& b) { return *this = *this + b; }

    FactoredFraction derivative(std::size_t var) const;
    FactoredFraction rename(const std::vector<std::size_t>& target, std::size_t new_arity) const;

    // Cancel every factor that divides the numerator exactly.
    FactoredFraction& reduce();
    bool is_laurent() const { return den_.empty(); }
    // Reduces, then throws NotDivisible if a factor survives.
    Laurent to_laurent() const;

    double eval(std::span<const double> point) const;

private:
    Laurent num_;
    std::vector<std::pair<Laurent, int>> den_;
};

}  // namespace eo::algebra
