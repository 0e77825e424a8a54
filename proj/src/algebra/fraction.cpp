#include "eo/algebra/fraction.hpp"

#include <algorithm>
#include <cmath>

#include "eo/errors.hpp"

namespace eo::algebra {

namespace {

Laurent product_of(const std::vector<std::pair<Laurent, int>>& fs, std::size_t arity) {
    Laurent r = Laurent::constant(arity, 1);
    for (const auto& [f, e] : fs)
        if (e > 0) r = r * f.pow(static_cast<unsigned>(e));
    return r;
}

}  // namespace

FactoredFraction FactoredFraction::over(Laurent num, const Laurent& factor, int mult) {
    FactoredFraction r(std::move(num));
    r.divide_by(factor, mult);
    return r;
}

FactoredFraction& FactoredFraction::divide_by(const Laurent& factor, int mult) {
    if (factor.arity() != arity()) throw std::invalid_argument("factor arity mismatch");
    if (factor.is_zero()) throw std::domain_error("division by zero factor");
    if (mult <= 0) return *this;
    auto [shift, poly] = factor.split_monomial();
    Laurent::Exponents inv(shift.size());
    for (std::size_t i = 0; i < shift.size(); ++i) inv[i] = -shift[i] * mult;
    Rational lc = poly.terms().rbegin()->second;
    num_ = Laurent::monomial(arity(), inv, power(Rational(1) / lc, mult)) * num_;
    poly = Rational(1 / lc) * poly;
    if (poly.size() == 1) return *this;  // constant after normalization
    for (auto& [f, e] : den_)
        if (f == poly) {
            e += mult;
            return *this;
        }
    den_.emplace_back(std::move(poly), mult);
    return *this;
}

FactoredFraction FactoredFraction::operator-() const {
    FactoredFraction r = *this;
    r.num_ = -r.num_;
    return r;
}

FactoredFraction operator+(const FactoredFraction& a, const FactoredFraction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::vector<std::pair<Laurent, int>> common = a.den_;
    for (const auto& [f, e] : b.den_) {
        auto it = std::find_if(common.begin(), common.end(), [&](const auto& p) { return p.first == f; });
        if (it == common.end())
            common.emplace_back(f, e);
        else
            it->second = std::max(it->second, e);
    }
    auto missing = [&](const std::vector<std::pair<Laurent, int>>& own) {
        std::vector<std::pair<Laurent, int>> m;
        for (const auto& [f, e] : common) {
            auto it = std::find_if(own.begin(), own.end(), [&](const auto& p) { return p.first == f; });
            m.emplace_back(f, e - (it == own.end() ? 0 : it->second));
        }
        return m;
    };
    FactoredFraction r(a.num_ * product_of(missing(a.den_), a.arity()) + b.num_ * product_of(missing(b.den_), a.arity()));
    r.den_ = std::move(common);
    if (r.num_.is_zero()) r.den_.clear();
    return r;
}

FactoredFraction operator-(const FactoredFraction& a, const FactoredFraction& b) { return a + (-b); }

FactoredFraction operator*(const FactoredFraction& a, const FactoredFraction& b) {
    FactoredFraction r(a.num_ * b.num_);
    if (r.num_.is_zero()) return r;
    r.den_ = a.den_;
    for (const auto& [f, e] : b.den_) {
        auto it = std::find_if(r.den_.begin(), r.den_.end(), [&](const auto& p) { return p.first == f; });
        if (it == r.den_.end())
            r.den_.emplace_back(f, e);
        else
            it->second += e;
    }
    return r;
}

FactoredFraction operator*(const Rational& s, const FactoredFraction& a) {
    FactoredFraction r = a;
    r.num_ = s * r.num_;
    if (r.num_.is_zero()) r.den_.clear();
    return r;
}

FactoredFraction FactoredFraction::derivative(std::size_t var) const {
    std::vector<std::pair<Laurent, int>> moving;
    for (const auto& fe : den_)
        if (fe.first.max_exponent(var) > 0) moving.push_back(fe);
    // (N / prod f^e)' over prod f^(e+1) for the factors depending on var
    Laurent top = num_.derivative(var);
    for (const auto& [f, e] : moving) top = top * f;
    for (std::size_t i = 0; i < moving.size(); ++i) {
        Laurent term = Rational(moving[i].second) * (num_ * moving[i].first.derivative(var));
        for (std::size_t j = 0; j < moving.size(); ++j)
            if (j != i) term = term * moving[j].first;
        top -= term;
    }
    FactoredFraction r(std::move(top));
    r.den_ = den_;
    for (auto& [f, e] : r.den_)
        if (f.max_exponent(var) > 0) ++e;
    if (r.num_.is_zero()) r.den_.clear();
    return r;
}

FactoredFraction FactoredFraction::rename(const std::vector<std::size_t>& target, std::size_t new_arity) const {
    FactoredFraction r(num_.rename(target, new_arity));
    for (const auto& [f, e] : den_) r.divide_by(f.rename(target, new_arity), e);
    return r;
}

FactoredFraction& FactoredFraction::reduce() {
    if (num_.is_zero()) {
        den_.clear();
        return *this;
    }
    for (auto& [f, e] : den_) {
        while (e > 0) {
            auto q = num_.divide_exact(f);
            if (!q) break;
            num_ = std::move(*q);
            --e;
        }
    }
    std::erase_if(den_, [](const auto& p) { return p.second == 0; });
    return *this;
}

Laurent FactoredFraction::to_laurent() const {
    FactoredFraction r = *this;
    r.reduce();
    if (!r.den_.empty()) throw NotDivisible("rational expression is not a Laurent polynomial");
    return r.num_;
}

double FactoredFraction::eval(std::span<const double> point) const {
    double v = num_.eval(point);
    for (const auto& [f, e] : den_) v /= std::pow(f.eval(point), e);
    return v;
}

}  // namespace eo::algebra
