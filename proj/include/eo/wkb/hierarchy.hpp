#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "eo/algebra/ratfunc.hpp"

namespace eo::wkb {

using algebra::RatFunc;

enum class Model { catalan, hurwitz };

Model parse_model(const std::string& name);
std::string model_name(Model m);

// Polynomial in d/dy with coefficients in z. The coefficients depend on x only,
// so they commute with d/dy and products are convolutions.
class YPolyOperator {
public:
    static YPolyOperator identity();
    static YPolyOperator monomial(int order, const RatFunc& c);

    const std::map<int, RatFunc>& coeffs() const { return coeffs_; }
    RatFunc coeff(int order) const;
    int max_order() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

    friend YPolyOperator operator+(const YPolyOperator& a, const YPolyOperator& b);
    friend YPolyOperator operator*(const YPolyOperator& a, const YPolyOperator& b);
    friend YPolyOperator operator*(const algebra::Rational& s, const YPolyOperator& a);
    friend bool operator==(const YPolyOperator& a, const YPolyOperator& b) { return a.coeffs_ == b.coeffs_; }

private:
    void add(int order, const RatFunc& c);
    std::map<int, RatFunc> coeffs_;
};

// A(x, y) through its on-shell y-derivatives.
struct CurveSymbol {
    Model model;
    std::function<RatFunc(int)> on_shell;  // d^r A/dy^r on the curve, in z
    RatFunc dx_to_dz;                      // the x-derivation is dx_to_dz * d/dz
    // Operator ordering: every hbar d/dx stands to the right of x. Neither symbol has mixed
    // monomials, so the convention never changes a result.
    std::string ordering = "x left of hbar d/dx";
};

// Catalan: A = y^2 + x y + 1 on y = -z, x = z + 1/z.
// Hurwitz: A = -y + x e^y on y = z, x = z e^{-z}, with x d/dx as the derivation.
CurveSymbol curve_symbol(Model m);

// D_0..D_R from exp(sum hbar^n d_n), d_n = sum_{r=1}^{n+1} S_{n+1-r}^{(r)}/r! dy^r.
// s_derivs[m] is dS_m/dx in z; S_0..S_R are required (InsufficientData otherwise).
std::vector<YPolyOperator> build_d_operators(int R, const std::vector<RatFunc>& s_derivs, const CurveSymbol& curve);
// The same operators from the direct expansion sum_k (sum_n hbar^n d_n)^k / k!, collected by order.
std::vector<YPolyOperator> build_d_operators_direct(int R, const std::vector<RatFunc>& s_derivs, const CurveSymbol& curve);

RatFunc apply_to_symbol(const YPolyOperator& op, const CurveSymbol& curve);

// A_1..A_R from D_n A + D_{n-1} A_1 + ... + A_n = 0, with the A_k functions of x alone.
std::vector<RatFunc> recover_corrections(const CurveSymbol& curve, const std::vector<RatFunc>& s_derivs, int R);
// S-derivatives taken from the model modules.
std::vector<RatFunc> recover_corrections(Model m, int R);

// dS_m/dx in z from the model modules (assembled path for m >= 2).
RatFunc model_s_derivative(Model m, int k);

// Solves D_n A = 0 for S'_n given s_derivs[0..n-1]. Throws DivisionBySingularSymbol if dA/dy vanishes on shell.
RatFunc s_prime_from_hierarchy(const CurveSymbol& curve, const std::vector<RatFunc>& s_derivs, int n);
// Chains the hierarchy from the seeds S'_0, S'_1 of the model: S'_2, ..., S'_n use no other model data.
RatFunc s_prime_from_hierarchy(Model m, int n);

}  // namespace eo::wkb
