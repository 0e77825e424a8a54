#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "eo/algebra/ratfunc.hpp"

namespace eo::algebra {

// Sparse multivariate Laurent polynomial over Q. No stored zero coefficients;
// exponent vectors all have length arity().
class Laurent {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational>;

    explicit Laurent(std::size_t arity = 0) : arity_(arity) {}

    static Laurent constant(std::size_t arity, const Rational& c);
    static Laurent variable(std::size_t arity, std::size_t index);
    static Laurent monomial(std::size_t arity, Exponents e, const Rational& c);
    // Embed a univariate polynomial in variable `index`.
    static Laurent from_upoly(const UPoly& p, std::size_t arity, std::size_t index);

    std::size_t arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Exponents& e, const Rational& c);

    Laurent operator-() const;
    friend Laurent operator+(const Laurent& a, const Laurent& b);
    friend Laurent operator-(const Laurent& a, const Laurent& b);
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    friend Laurent operator*(const Rational& s, const Laurent& a);
    friend bool operator==(const Laurent& a, const Laurent& b) { return a.arity_ == b.arity_ && a.terms_ == b.terms_; }
    Laurent& operator+=(const Laurent& b);
    Laurent& operator-=(const Laurent& b);
    Laurent pow(unsigned e) const;

    Laurent derivative(std::size_t var) const;
    // Antiderivative in `var` with no constant added; throws NonzeroResidue on a var^{-1} term.
    Laurent integrate(std::size_t var) const;
    // Variable i becomes variable target[i] of a Laurent of arity new_arity. Targets may coincide.
    Laurent rename(const std::vector<std::size_t>& target, std::size_t new_arity) const;
    // Set variable `var` to `value`; the result has arity - 1.
    Laurent substitute(std::size_t var, const Rational& value) const;

    Rational eval(std::span<const Rational> point) const;
    double eval(std::span<const double> point) const;

    // Exact quotient, or nullopt when d does not divide *this.
    std::optional<Laurent> divide_exact(const Laurent& d) const;

    bool is_symmetric() const;
    int max_total_degree() const;
    int min_exponent(std::size_t var) const;
    int max_exponent(std::size_t var) const;
    // Split into monomial shift and a polynomial not divisible by any variable.
    std::pair<Exponents, Laurent> split_monomial() const;

    // Univariate view (arity 1).
    RatFunc to_ratfunc(const std::string& var) const;

private:
    std::size_t arity_;
    TermMap terms_;
};

}  // namespace eo::algebra
