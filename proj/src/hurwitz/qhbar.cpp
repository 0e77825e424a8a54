#include "eo/hurwitz/qhbar.hpp"

#include "eo/algebra/series.hpp"

namespace eo::hurwitz {

QHbarExpr QHbarExpr::term(long j, long k, long m, const Rational& c) {
    QHbarExpr e;
    e.add({j, k, m}, c);
    return e;
}

void QHbarExpr::add(const Key& key, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

QHbarExpr operator+(const QHbarExpr& a, const QHbarExpr& b) {
    QHbarExpr r = a;
    for (const auto& [key, c] : b.terms_) r.add(key, c);
    return r;
}

QHbarExpr operator-(const QHbarExpr& a, const QHbarExpr& b) { return a + Rational(-1) * b; }

QHbarExpr operator*(const QHbarExpr& a, const QHbarExpr& b) {
    QHbarExpr r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            r.add({std::get<0>(ka) + std::get<0>(kb), std::get<1>(ka) + std::get<1>(kb), std::get<2>(ka) + std::get<2>(kb)}, ca * cb);
    return r;
}

QHbarExpr operator*(const Rational& s, const QHbarExpr& a) {
    QHbarExpr r;
    for (const auto& [key, c] : a.terms_) r.add(key, s * c);
    return r;
}

QHbarExpr QHbarExpr::d_hbar() const {
    QHbarExpr r;
    for (const auto& [key, c] : terms_) {
        const auto [j, k, m] = key;
        r.add({j, k, m}, Rational(j) * c);
        r.add({j, k - 1, m}, Rational(k) * c);
    }
    return r;
}

QHbarExpr QHbarExpr::d_w() const {
    QHbarExpr r;
    for (const auto& [key, c] : terms_) r.add(key, Rational(-std::get<2>(key)) * c);
    return r;
}

QHbarExpr QHbarExpr::shift() const {
    QHbarExpr r;
    for (const auto& [key, c] : terms_) {
        const auto [j, k, m] = key;
        r.add({j + m, k, m}, c);
    }
    return r;
}

QHbarExpr QHbarExpr::restrict_to(long m) const {
    QHbarExpr r;
    for (const auto& [key, c] : terms_)
        if (std::get<2>(key) == m) r.add(key, c);
    return r;
}

std::string QHbarExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [key, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += algebra::to_string(c) + "*q^" + std::to_string(std::get<0>(key)) + "*h^" + std::to_string(std::get<1>(key)) +
             "*e^(-" + std::to_string(std::get<2>(key)) + "w)";
    }
    return s;
}

QHbarExpr apply_P(const QHbarExpr& f) {
    return QHbarExpr::term(0, 1, 0) * f.d_w() + QHbarExpr::term(0, 0, 1) * f.shift();
}

QHbarExpr apply_Q(const QHbarExpr& f, const Rational& half_hbar_coeff) {
    QHbarExpr hbar = QHbarExpr::term(0, 1, 0);
    QHbarExpr dw = f.d_w();
    return Rational(1, 2) * hbar * dw.d_w() + dw + half_hbar_coeff * hbar * dw - hbar * f.d_hbar();
}

QHbarExpr zhou_term(long m, const std::function<long(long)>& q_exponent) { return QHbarExpr::term(q_exponent(m), -m, m); }

ZhouReport zhou_series_checks(int M) {
    return zhou_series_checks(M, [](long m) { return m * (m - 1) / 2; });
}

ZhouReport zhou_series_checks(int M, const std::function<long(long)>& q_exponent) {
    ZhouReport rep;
    auto fail = [&](bool& flag, long m) {
        flag = false;
        if (rep.first_failure < 0 || m < rep.first_failure) rep.first_failure = static_cast<int>(m);
    };
    // Z = sum_m a_m/m!; truncate one order past M so every coefficient up to e^{-(M+1)w} is complete.
    QHbarExpr z;
    for (long m = 0; m <= M + 1; ++m)
        z = z + Rational(1) / Rational(algebra::factorial(static_cast<unsigned>(m))) * zhou_term(m, q_exponent);
    QHbarExpr pz = apply_P(z);
    QHbarExpr hbar_inv = QHbarExpr::term(0, -1, 0);
    for (long m = 0; m <= M; ++m) {
        QHbarExpr a = zhou_term(m, q_exponent);
        QHbarExpr next = QHbarExpr::term(m, 0, 0) * a * QHbarExpr::term(0, -1, 1);
        if (!(zhou_term(m + 1, q_exponent) == next)) fail(rep.term_recursion, m + 1);
        if (!pz.restrict_to(m).is_zero()) fail(rep.difference_equation, m);
        if (!pz.restrict_to(m + 1).is_zero()) fail(rep.difference_equation, m + 1);
        // (1/2) d_w^2 + (1/2 + 1/hbar) d_w - d_hbar
        QHbarExpr dw = a.d_w();
        QHbarExpr heat = Rational(1, 2) * dw.d_w() + Rational(1, 2) * dw + hbar_inv * dw - a.d_hbar();
        if (!heat.is_zero()) fail(rep.heat_equation, m);
    }
    return rep;
}

CommutatorReport pq_commutator_check(int M, const Rational& half_hbar_coeff) {
    CommutatorReport rep;
    for (long m = 0; m <= M && rep.pass; ++m)
        for (long k = -3; k <= 3; ++k) {
            QHbarExpr f = QHbarExpr::term(0, k, m);
            QHbarExpr r = apply_P(apply_Q(f, half_hbar_coeff)) - apply_Q(apply_P(f), half_hbar_coeff) - apply_P(f);
            if (!r.is_zero()) {
                rep = {false, m, k};
                break;
            }
        }
    return rep;
}

Rational lambert_coefficient(int mu) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(mu), static_cast<unsigned long>(mu - 1));
    return Rational(p) / Rational(algebra::factorial(static_cast<unsigned>(mu)));
}

LambertReport lambert_inversion_check(int N) {
    using algebra::RationalSeries;
    RationalSeries z("x", N), x("x", N), one("x", N);
    for (int mu = 1; mu <= N; ++mu) z.at(mu) = lambert_coefficient(mu);
    if (N >= 1) x.at(1) = 1;
    one.at(0) = 1;
    LambertReport rep;
    if (!((z * algebra::exp_series(Rational(-1) * z) - x) == RationalSeries("x", N))) rep.inversion = false;
    RationalSeries t("x", N);
    t.at(0) = 1;
    for (int mu = 1; mu <= N; ++mu) t.at(mu) = lambert_coefficient(mu) * mu;
    if (!(t - algebra::inverse(one - z) == RationalSeries("x", N))) rep.t_relation = false;
    return rep;
}

}  // namespace eo::hurwitz
