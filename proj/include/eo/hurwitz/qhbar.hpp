#pragma once

#include <functional>
#include <map>
#include <string>
#include <tuple>

#include "eo/algebra/rational.hpp"

namespace eo::hurwitz {

using algebra::Integer;
using algebra::Rational;

// Finite sums of q^j hbar^k e^{-m w} with q = e^hbar. No stored zeros.
class QHbarExpr {
public:
    using Key = std::tuple<long, long, long>;  // (j, k, m)

    static QHbarExpr term(long j, long k, long m, const Rational& c = 1);

    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const Key& key, const Rational& c);

    friend QHbarExpr operator+(const QHbarExpr& a, const QHbarExpr& b);
    friend QHbarExpr operator-(const QHbarExpr& a, const QHbarExpr& b);
    friend QHbarExpr operator*(const QHbarExpr& a, const QHbarExpr& b);
    friend QHbarExpr operator*(const Rational& s, const QHbarExpr& a);
    friend bool operator==(const QHbarExpr& a, const QHbarExpr& b) { return a.terms_ == b.terms_; }

    // d/dhbar, using dq/dhbar = q.
    QHbarExpr d_hbar() const;
    // d/dw
    QHbarExpr d_w() const;
    // e^{-hbar d/dw}: f(w) -> f(w - hbar), so e^{-m w} picks up q^m.
    QHbarExpr shift() const;
    // Terms with e^{-m w} for this m only.
    QHbarExpr restrict_to(long m) const;

    std::string to_string() const;

private:
    std::map<Key, Rational> terms_;
};

// P = hbar d/dw + e^{-w} e^{-hbar d/dw}
QHbarExpr apply_P(const QHbarExpr& f);
// Q = (1/2) hbar d^2/dw^2 + (1 + c hbar) d/dw - hbar d/dhbar; c = 1/2 gives the true operator.
QHbarExpr apply_Q(const QHbarExpr& f, const Rational& half_hbar_coeff = Rational(1, 2));

struct ZhouReport {
    bool term_recursion = true;      // a_{m+1} = q^m a_m e^{-w}/hbar
    bool difference_equation = true; // P applied to sum a_m/m! vanishes order by order in e^{-w}
    bool heat_equation = true;       // termwise bracket of the heat operator vanishes
    int first_failure = -1;          // lowest power of e^{-w} at which some check fails
    bool pass() const { return term_recursion && difference_equation && heat_equation; }
};

// a_m = q^{e(m)} hbar^{-m} e^{-m w}; the true exponent is e(m) = m(m-1)/2.
QHbarExpr zhou_term(long m, const std::function<long(long)>& q_exponent);
ZhouReport zhou_series_checks(int M);
ZhouReport zhou_series_checks(int M, const std::function<long(long)>& q_exponent);

struct CommutatorReport {
    bool pass = true;
    long failing_m = -1;
    long failing_k = 0;
};
// PQ - QP - P on e^{-m w} hbar^k for m <= M, |k| <= 3.
CommutatorReport pq_commutator_check(int M, const Rational& half_hbar_coeff = Rational(1, 2));

struct LambertReport {
    bool inversion = true;   // z(x) e^{-z(x)} = x
    bool t_relation = true;  // t(x) = 1/(1 - z(x))
    bool pass() const { return inversion && t_relation; }
};
LambertReport lambert_inversion_check(int N);
// z(x) = sum_{mu >= 1} mu^{mu-1}/mu! x^mu, coefficient of x^mu.
Rational lambert_coefficient(int mu);

}  // namespace eo::hurwitz
