#include "eo/algebra/ratfunc.hpp"

#include <stdexcept>

#include "eo/errors.hpp"

namespace eo::algebra {

RatFunc::RatFunc(UPoly num, UPoly den, std::string var) : var_(std::move(var)) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = {};
        den_ = UPoly::constant(1);
        return;
    }
    UPoly g = gcd(num, den);
    if (g.degree() > 0) {
        num = num.divmod(g).first;
        den = den.divmod(g).first;
    }
    Rational lc = den.leading();
    Rational inv = 1 / lc;
    num_ = inv * num;
    den_ = inv * den;
}

RatFunc RatFunc::constant(const Rational& c, std::string var) {
    return RatFunc(UPoly::constant(c), UPoly::constant(1), std::move(var));
}

RatFunc RatFunc::variable(std::string var) {
    return RatFunc(UPoly::monomial(1, 1), UPoly::constant(1), std::move(var));
}

RatFunc RatFunc::polynomial(UPoly p, std::string var) { return RatFunc(std::move(p), UPoly::constant(1), std::move(var)); }

void RatFunc::require_same_var(const RatFunc& b) const {
    if (var_ != b.var_) throw std::invalid_argument("rational functions in different variables: " + var_ + ", " + b.var_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, var_); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    a.require_same_var(b);
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_, a.var_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, a.var_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    a.require_same_var(b);
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_, a.var_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    a.require_same_var(b);
    if (b.is_zero()) throw std::domain_error("rational function division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_, a.var_);
}

RatFunc operator*(const Rational& s, const RatFunc& a) { return RatFunc(s * a.num_, a.den_, a.var_); }

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return constant(1, var_) / pow(-e);
    return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), var_);
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_, var_);
}

Rational RatFunc::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0) throw std::domain_error("evaluation at a pole");
    return num_.eval(x) / d;
}

double RatFunc::eval(double x) const { return num_.eval(x) / den_.eval(x); }

RatFunc substitute_mobius(const RatFunc& f, const Mobius& m, const std::string& new_var) {
    if (m.a * m.d - m.b * m.c == 0) throw DegenerateMap("Mobius map with ad - bc = 0");
    UPoly top(std::vector<Rational>{m.b, m.a});
    UPoly bottom(std::vector<Rational>{m.d, m.c});
    int deg = std::max(f.num().degree(), f.den().degree());
    auto homogenize = [&](const UPoly& p) {
        UPoly r;
        std::vector<UPoly> top_pows{UPoly::constant(1)};
        for (int k = 1; k <= p.degree(); ++k) top_pows.push_back(top_pows.back() * top);
        for (int k = 0; k <= p.degree(); ++k) {
            if (p.coeff(k) == 0) continue;
            r = r + p.coeff(k) * (top_pows[static_cast<std::size_t>(k)] * bottom.pow(static_cast<unsigned>(deg - k)));
        }
        return r;
    };
    return RatFunc(homogenize(f.num()), homogenize(f.den()), new_var);
}

namespace {

// First `count` Taylor coefficients of p/q at 0, q(0) != 0.
std::vector<Rational> series_quotient(const UPoly& p, const UPoly& q, int count) {
    std::vector<Rational> out(static_cast<std::size_t>(count));
    Rational q0 = q.coeff(0);
    for (int i = 0; i < count; ++i) {
        Rational s = p.coeff(i);
        for (int j = 1; j <= i; ++j) s -= q.coeff(j) * out[static_cast<std::size_t>(i - j)];
        out[static_cast<std::size_t>(i)] = s / q0;
    }
    return out;
}

}  // namespace

RatFunc integrate_no_log(const RatFunc& f, const Rational& base_point, const std::vector<Rational>& allowed_roots) {
    const std::string& v = f.var();
    UPoly rest = f.den();
    std::vector<std::pair<Rational, int>> poles;
    for (const auto& root : allowed_roots) {
        UPoly lin = UPoly::linear_root(root);
        int mult = 0;
        for (;;) {
            auto [q, r] = rest.divmod(lin);
            if (!r.is_zero()) break;
            rest = q;
            ++mult;
        }
        if (mult) poles.emplace_back(root, mult);
    }
    if (rest.degree() > 0) throw UnfactoredDenominator("denominator factor outside the declared linear factors");

    UPoly poly_part = f.num().divmod(f.den()).first;
    RatFunc result = RatFunc::polynomial(poly_part.antiderivative(), v);

    for (const auto& [root, mult] : poles) {
        // f = num / ((x - root)^mult * other); expand num/other at u = x - root.
        UPoly other = f.den().divmod(UPoly::linear_root(root).pow(static_cast<unsigned>(mult))).first;
        auto b = series_quotient(f.num().shift(root), other.shift(root), mult);
        // coefficient of u^{-k} is b[mult - k]
        if (b[static_cast<std::size_t>(mult - 1)] != 0)
            throw NonzeroResidue("nonzero residue at " + to_string(root) + " (log term)");
        for (int k = 2; k <= mult; ++k) {
            const Rational& c = b[static_cast<std::size_t>(mult - k)];
            if (c == 0) continue;
            // integral of c u^{-k} = c u^{1-k} / (1-k)
            RatFunc term(UPoly::constant(c / Rational(1 - k)), UPoly::linear_root(root).pow(static_cast<unsigned>(k - 1)), v);
            result += term;
        }
    }
    if (result.den().eval(base_point) == 0)
        throw PoleAtBasePoint("antiderivative has a pole at the base point " + to_string(base_point));
    return result - RatFunc::constant(result.eval(base_point), v);
}

}  // namespace eo::algebra
