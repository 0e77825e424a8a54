#include "eo/algebra/upoly.hpp"

#include <stdexcept>

namespace eo::algebra {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return UPoly(std::move(v));
}

UPoly UPoly::linear_root(const Rational& root) { return UPoly(std::vector<Rational>{-root, Rational(1)}); }

Rational UPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return c_[static_cast<std::size_t>(i)];
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(v));
}

UPoly operator*(const Rational& s, const UPoly& a) {
    if (s == 0) return {};
    UPoly r = a;
    for (auto& v : r.c_) v *= s;
    return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = c_;
    int dd = d.degree();
    int nd = degree();
    if (nd < dd) return {UPoly{}, *this};
    std::vector<Rational> q(static_cast<std::size_t>(nd - dd) + 1);
    Rational inv = 1 / d.leading();
    for (int k = nd - dd; k >= 0; --k) {
        Rational f = rem[static_cast<std::size_t>(k + dd)] * inv;
        q[static_cast<std::size_t>(k)] = f;
        if (f == 0) continue;
        for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= f * d.c_[static_cast<std::size_t>(j)];
    }
    return {UPoly(std::move(q)), UPoly(std::move(rem))};
}

UPoly UPoly::monic() const {
    if (is_zero()) return {};
    return Rational(1 / leading()) * *this;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
    return UPoly(std::move(v));
}

UPoly UPoly::antiderivative() const {
    if (is_zero()) return {};
    std::vector<Rational> v(c_.size() + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i + 1] = c_[i] / Rational(static_cast<long>(i + 1));
    return UPoly(std::move(v));
}

UPoly UPoly::pow(unsigned e) const {
    UPoly r = constant(1);
    UPoly b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return r;
}

UPoly UPoly::shift(const Rational& a) const {
    // Horner in the basis of (x + a).
    UPoly r;
    UPoly lin(std::vector<Rational>{a, Rational(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + constant(*it);
    return r;
}

Rational UPoly::eval(const Rational& x) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

double UPoly::eval(double x) const {
    double r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->get_d();
    return r;
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace eo::algebra
