#include "eo/algebra/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "eo/errors.hpp"

namespace eo::algebra {

Laurent Laurent::constant(std::size_t arity, const Rational& c) {
    Laurent r(arity);
    r.add_term(Exponents(arity, 0), c);
    return r;
}

Laurent Laurent::variable(std::size_t arity, std::size_t index) {
    Exponents e(arity, 0);
    e.at(index) = 1;
    return monomial(arity, std::move(e), 1);
}

Laurent Laurent::monomial(std::size_t arity, Exponents e, const Rational& c) {
    if (e.size() != arity) throw std::invalid_argument("exponent vector length differs from arity");
    Laurent r(arity);
    r.add_term(e, c);
    return r;
}

Laurent Laurent::from_upoly(const UPoly& p, std::size_t arity, std::size_t index) {
    Laurent r(arity);
    Exponents e(arity, 0);
    for (int k = 0; k <= p.degree(); ++k) {
        e.at(index) = k;
        r.add_term(e, p.coeff(k));
    }
    return r;
}

void Laurent::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Laurent& Laurent::operator+=(const Laurent& b) {
    if (arity_ != b.arity_) throw std::invalid_argument("arity mismatch");
    for (const auto& [e, c] : b.terms_) add_term(e, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& b) {
    if (arity_ != b.arity_) throw std::invalid_argument("arity mismatch");
    for (const auto& [e, c] : b.terms_) add_term(e, -c);
    return *this;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r = a;
    r += b;
    return r;
}

Laurent operator-(const Laurent& a, const Laurent& b) {
    Laurent r = a;
    r -= b;
    return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.arity_ != b.arity_) throw std::invalid_argument("arity mismatch");
    Laurent r(a.arity_);
    Laurent::Exponents e(a.arity_);
    Rational prod;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
            r.add_term(e, prod);
        }
    return r;
}

Laurent operator*(const Rational& s, const Laurent& a) {
    if (s == 0) return Laurent(a.arity_);
    Laurent r = a;
    for (auto& [e, c] : r.terms_) c *= s;
    return r;
}

Laurent Laurent::pow(unsigned e) const {
    Laurent r = constant(arity_, 1);
    Laurent b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return r;
}

Laurent Laurent::derivative(std::size_t var) const {
    Laurent r(arity_);
    for (const auto& [e, c] : terms_) {
        int k = e.at(var);
        if (k == 0) continue;
        Exponents f = e;
        --f[var];
        r.terms_.emplace(std::move(f), c * k);
    }
    return r;
}

Laurent Laurent::integrate(std::size_t var) const {
    Laurent r(arity_);
    for (const auto& [e, c] : terms_) {
        int k = e.at(var);
        if (k == -1) throw NonzeroResidue("Laurent term with exponent -1 in the integration variable");
        Exponents f = e;
        ++f[var];
        r.terms_.emplace(std::move(f), c / Rational(k + 1));
    }
    return r;
}

Laurent Laurent::rename(const std::vector<std::size_t>& target, std::size_t new_arity) const {
    if (target.size() != arity_) throw std::invalid_argument("rename map length differs from arity");
    for (auto t : target)
        if (t >= new_arity) throw std::invalid_argument("rename target out of range");
    Laurent r(new_arity);
    Exponents f(new_arity);
    for (const auto& [e, c] : terms_) {
        std::fill(f.begin(), f.end(), 0);
        for (std::size_t i = 0; i < arity_; ++i) f[target[i]] += e[i];
        r.add_term(f, c);
    }
    return r;
}

Laurent Laurent::substitute(std::size_t var, const Rational& value) const {
    if (var >= arity_) throw std::invalid_argument("substitution variable out of range");
    Laurent r(arity_ - 1);
    Exponents f(arity_ - 1);
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0, j = 0; i < arity_; ++i)
            if (i != var) f[j++] = e[i];
        r.add_term(f, c * power(value, e[var]));
    }
    return r;
}

Rational Laurent::eval(std::span<const Rational> point) const {
    if (point.size() != arity_) throw std::invalid_argument("evaluation point has wrong length");
    Rational s = 0;
    for (const auto& [e, c] : terms_) {
        Rational m = c;
        for (std::size_t i = 0; i < arity_; ++i) m *= power(point[i], e[i]);
        s += m;
    }
    return s;
}

double Laurent::eval(std::span<const double> point) const {
    if (point.size() != arity_) throw std::invalid_argument("evaluation point has wrong length");
    double s = 0;
    for (const auto& [e, c] : terms_) {
        double m = c.get_d();
        for (std::size_t i = 0; i < arity_; ++i) m *= std::pow(point[i], e[i]);
        s += m;
    }
    return s;
}

int Laurent::min_exponent(std::size_t var) const {
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[var] < m) m = e[var];
        first = false;
    }
    return m;
}

int Laurent::max_exponent(std::size_t var) const {
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[var] > m) m = e[var];
        first = false;
    }
    return m;
}

int Laurent::max_total_degree() const {
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        int d = std::accumulate(e.begin(), e.end(), 0);
        if (first || d > m) m = d;
        first = false;
    }
    return m;
}

std::pair<Laurent::Exponents, Laurent> Laurent::split_monomial() const {
    Exponents shift(arity_, 0);
    for (std::size_t i = 0; i < arity_; ++i) shift[i] = min_exponent(i);
    Laurent p(arity_);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        for (std::size_t i = 0; i < arity_; ++i) f[i] -= shift[i];
        p.terms_.emplace(std::move(f), c);
    }
    return {shift, p};
}

std::optional<Laurent> Laurent::divide_exact(const Laurent& d) const {
    if (d.arity_ != arity_) throw std::invalid_argument("arity mismatch");
    if (d.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
    if (is_zero()) return Laurent(arity_);
    // Clear monomial factors, then run lex leading-term division on polynomials.
    auto [dshift, dp] = d.split_monomial();
    auto [nshift, np] = split_monomial();
    const auto& [dlead_e, dlead_c] = *dp.terms_.rbegin();
    Laurent q(arity_);
    Laurent rem = np;
    Exponents qe(arity_);
    while (!rem.is_zero()) {
        auto [re, rc] = *rem.terms_.rbegin();
        for (std::size_t i = 0; i < arity_; ++i) {
            qe[i] = re[i] - dlead_e[i];
            if (qe[i] < 0) return std::nullopt;
        }
        Rational qc = rc / dlead_c;
        q.add_term(qe, qc);
        Laurent::Exponents f(arity_);
        for (const auto& [de, dc] : dp.terms_) {
            for (std::size_t i = 0; i < arity_; ++i) f[i] = qe[i] + de[i];
            rem.add_term(f, -qc * dc);
        }
    }
    Exponents s(arity_);
    for (std::size_t i = 0; i < arity_; ++i) s[i] = nshift[i] - dshift[i];
    return monomial(arity_, s, 1) * q;
}

bool Laurent::is_symmetric() const {
    if (arity_ < 2) return true;
    for (std::size_t i = 0; i + 1 < arity_; ++i) {
        std::vector<std::size_t> swap(arity_);
        std::iota(swap.begin(), swap.end(), 0);
        std::swap(swap[i], swap[i + 1]);
        if (!(rename(swap, arity_) == *this)) return false;
    }
    return true;
}

RatFunc Laurent::to_ratfunc(const std::string& var) const {
    if (arity_ != 1) throw std::invalid_argument("to_ratfunc needs a univariate Laurent polynomial");
    if (is_zero()) return RatFunc(var);
    int lo = std::min(0, min_exponent(0));
    std::vector<Rational> coeffs(static_cast<std::size_t>(max_exponent(0) - lo + 1));
    for (const auto& [e, c] : terms_) coeffs[static_cast<std::size_t>(e[0] - lo)] = c;
    return RatFunc(UPoly(std::move(coeffs)), UPoly::monomial(1, -lo), var);
}

}  // namespace eo::algebra
