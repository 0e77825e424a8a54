#pragma once

#include <map>
#include <string>
#include <vector>

#include "eo/algebra/rational.hpp"

namespace eo::schur {

using algebra::Integer;
using algebra::Rational;

// Weakly decreasing positive parts; {} is the empty partition.
using Partition = std::vector<int>;

Partition canonical(Partition p);  // sorts, drops zeros; throws InvalidProfile on negatives
int size(const Partition& p);
std::vector<Partition> partitions_of(int n);
std::string to_string(const Partition& p);

// z_lambda = prod_i m_i! i^{m_i}
Integer z_lambda(const Partition& lambda);
// Hook-length formula.
Integer dimension(const Partition& mu);
// Murnaghan-Nakayama on beta-sets, memoized. Throws SizeMismatch when |mu| != |lambda|.
Integer character(const Partition& mu, const Partition& lambda);

// sum_i [(mu_i - i + 1/2)^r - (-i + 1/2)^r]
Rational shifted_power_sum(int r, const Partition& mu);
// sum over boxes of (column - row)
long content_sum(const Partition& mu);

// Polynomial in p_1, p_2, ...: a monomial p_lambda is keyed by the partition lambda.
class PPolynomial {
public:
    static PPolynomial constant(const Rational& c);
    static PPolynomial monomial(const Partition& lambda, const Rational& c = 1);

    const std::map<Partition, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const Partition& lambda, const Rational& c);
    Rational coeff(const Partition& lambda) const;

    // Keep only monomials of weight <= w.
    PPolynomial truncate(int w) const;
    PPolynomial weight_part(int w) const;

    friend PPolynomial operator+(const PPolynomial& a, const PPolynomial& b);
    friend PPolynomial operator-(const PPolynomial& a, const PPolynomial& b);
    friend PPolynomial operator*(const PPolynomial& a, const PPolynomial& b);
    friend PPolynomial operator*(const Rational& s, const PPolynomial& a);
    friend bool operator==(const PPolynomial& a, const PPolynomial& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

private:
    std::map<Partition, Rational> terms_;
};

// s_mu = sum_{|lambda| = |mu|} chi_mu(lambda)/z_lambda p_lambda
PPolynomial schur_in_p(const Partition& mu);

// (1/2) sum_{i,j} [(i+j) p_i p_j d/dp_{i+j} + i j p_{i+j} d^2/dp_i dp_j]
PPolynomial cutjoin_apply(const PPolynomial& f);

}  // namespace eo::schur
