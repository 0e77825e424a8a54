#include "eo/wkb/hierarchy.hpp"

#include "eo/catalan/curve.hpp"
#include "eo/catalan/s_coeff.hpp"
#include "eo/errors.hpp"
#include "eo/hurwitz/s_coeff.hpp"

namespace eo::wkb {

using algebra::make_rational;
using algebra::Rational;

namespace {

RatFunc zc(const Rational& c) { return RatFunc::constant(c, "z"); }

using Series = std::vector<YPolyOperator>;  // index = power of hbar

Series multiply(const Series& a, const Series& b, int R) {
    Series r(static_cast<std::size_t>(R) + 1);
    for (int i = 0; i <= R; ++i)
        for (int j = 0; i + j <= R; ++j) r[static_cast<std::size_t>(i + j)] = r[static_cast<std::size_t>(i + j)] + a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    return r;
}

// d_1..d_R (index 0 left empty).
Series small_d(int R, const std::vector<RatFunc>& s_derivs, const CurveSymbol& curve) {
    if (static_cast<int>(s_derivs.size()) < R + 1)
        throw InsufficientData("hierarchy to order " + std::to_string(R) + " needs S_0..S_" + std::to_string(R));
    // higher[m][r] = S_m^{(r)}
    std::vector<std::vector<RatFunc>> higher(static_cast<std::size_t>(R) + 1);
    for (int m = 0; m <= R; ++m) {
        auto& h = higher[static_cast<std::size_t>(m)];
        h.push_back(RatFunc("z"));
        h.push_back(s_derivs[static_cast<std::size_t>(m)]);
        for (int r = 2; r <= R + 1 - m; ++r) h.push_back(curve.dx_to_dz * h.back().derivative());
    }
    Series d(static_cast<std::size_t>(R) + 1);
    for (int n = 1; n <= R; ++n)
        for (int r = 1; r <= n + 1; ++r) {
            const RatFunc& s = higher[static_cast<std::size_t>(n + 1 - r)][static_cast<std::size_t>(r)];
            d[static_cast<std::size_t>(n)] = d[static_cast<std::size_t>(n)] +
                YPolyOperator::monomial(r, Rational(1) / Rational(algebra::factorial(static_cast<unsigned>(r))) * s);
        }
    return d;
}

}  // namespace

Model parse_model(const std::string& name) {
    if (name == "catalan") return Model::catalan;
    if (name == "hurwitz") return Model::hurwitz;
    throw UsageError("unknown model '" + name + "' (expected catalan or hurwitz)");
}

std::string model_name(Model m) { return m == Model::catalan ? "catalan" : "hurwitz"; }

YPolyOperator YPolyOperator::identity() { return monomial(0, zc(1)); }

YPolyOperator YPolyOperator::monomial(int order, const RatFunc& c) {
    YPolyOperator op;
    op.add(order, c);
    return op;
}

RatFunc YPolyOperator::coeff(int order) const {
    auto it = coeffs_.find(order);
    return it == coeffs_.end() ? RatFunc("z") : it->second;
}

void YPolyOperator::add(int order, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = coeffs_.find(order);
    if (it == coeffs_.end()) {
        coeffs_.emplace(order, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) coeffs_.erase(it);
}

YPolyOperator operator+(const YPolyOperator& a, const YPolyOperator& b) {
    YPolyOperator r = a;
    for (const auto& [k, c] : b.coeffs_) r.add(k, c);
    return r;
}

YPolyOperator operator*(const YPolyOperator& a, const YPolyOperator& b) {
    YPolyOperator r;
    for (const auto& [i, ci] : a.coeffs_)
        for (const auto& [j, cj] : b.coeffs_) r.add(i + j, ci * cj);
    return r;
}

YPolyOperator operator*(const Rational& s, const YPolyOperator& a) {
    YPolyOperator r;
    for (const auto& [k, c] : a.coeffs_) r.add(k, s * c);
    return r;
}

CurveSymbol curve_symbol(Model m) {
    RatFunc z = RatFunc::variable("z"), one = zc(1);
    if (m == Model::catalan) {
        CurveSymbol c{m, [z, one](int r) -> RatFunc {
                          if (r == 0) return RatFunc("z");
                          if (r == 1) return one / z - z;
                          if (r == 2) return zc(2);
                          return RatFunc("z");
                      },
                      z * z / (z * z - one)};
        return c;
    }
    CurveSymbol c{m, [z, one](int r) -> RatFunc {
                      if (r == 0) return RatFunc("z");
                      if (r == 1) return z - one;
                      return z;
                  },
                  z / (one - z)};
    return c;
}

std::vector<YPolyOperator> build_d_operators(int R, const std::vector<RatFunc>& s_derivs, const CurveSymbol& curve) {
    if (R < 0) throw std::invalid_argument("order must be non-negative");
    Series d = small_d(R, s_derivs, curve);
    // D_r = (1/r) sum_{n=1}^r n d_n D_{r-n}
    Series D{YPolyOperator::identity()};
    for (int r = 1; r <= R; ++r) {
        YPolyOperator acc;
        for (int n = 1; n <= r; ++n) acc = acc + Rational(n) * (d[static_cast<std::size_t>(n)] * D[static_cast<std::size_t>(r - n)]);
        D.push_back(make_rational(1, r) * acc);
    }
    return D;
}

std::vector<YPolyOperator> build_d_operators_direct(int R, const std::vector<RatFunc>& s_derivs, const CurveSymbol& curve) {
    Series d = small_d(R, s_derivs, curve);
    Series total(static_cast<std::size_t>(R) + 1), power(static_cast<std::size_t>(R) + 1);
    power[0] = YPolyOperator::identity();
    for (int k = 0; k <= R; ++k) {
        Rational inv_fact = Rational(1) / Rational(algebra::factorial(static_cast<unsigned>(k)));
        for (int i = 0; i <= R; ++i) total[static_cast<std::size_t>(i)] = total[static_cast<std::size_t>(i)] + inv_fact * power[static_cast<std::size_t>(i)];
        power = multiply(power, d, R);
    }
    return total;
}

RatFunc apply_to_symbol(const YPolyOperator& op, const CurveSymbol& curve) {
    RatFunc r("z");
    for (const auto& [order, c] : op.coeffs()) r = r + c * curve.on_shell(order);
    return r;
}

std::vector<RatFunc> recover_corrections(const CurveSymbol& curve, const std::vector<RatFunc>& s_derivs, int R) {
    auto D = build_d_operators(R, s_derivs, curve);
    std::vector<RatFunc> A{RatFunc("z")};
    for (int n = 1; n <= R; ++n) {
        RatFunc known = apply_to_symbol(D[static_cast<std::size_t>(n)], curve);
        // A_k depends on x only, so D_r A_k keeps just the zeroth-order coefficient of D_r.
        for (int k = 1; k < n; ++k) known = known + D[static_cast<std::size_t>(n - k)].coeff(0) * A[static_cast<std::size_t>(k)];
        A.push_back(-known);
    }
    A.erase(A.begin());
    return A;
}

RatFunc model_s_derivative(Model m, int k) {
    if (m == Model::catalan) return catalan::to_z(catalan::s_x(k));
    return hurwitz::to_z(hurwitz::s_xdx(k));
}

std::vector<RatFunc> recover_corrections(Model m, int R) {
    std::vector<RatFunc> s;
    for (int k = 0; k <= R; ++k) s.push_back(model_s_derivative(m, k));
    return recover_corrections(curve_symbol(m), s, R);
}

RatFunc s_prime_from_hierarchy(const CurveSymbol& curve, const std::vector<RatFunc>& s_derivs, int n) {
    if (n < 1) throw std::invalid_argument("the hierarchy determines S'_n for n >= 1");
    RatFunc dA = curve.on_shell(1);
    if (dA.is_zero()) throw DivisionBySingularSymbol("dA/dy vanishes on the curve");
    std::vector<RatFunc> s(s_derivs.begin(), s_derivs.begin() + n);
    s.push_back(RatFunc("z"));
    RatFunc known = apply_to_symbol(build_d_operators(n, s, curve)[static_cast<std::size_t>(n)], curve);
    return -known / dA;
}

RatFunc s_prime_from_hierarchy(Model m, int n) {
    CurveSymbol curve = curve_symbol(m);
    std::vector<RatFunc> s{model_s_derivative(m, 0), model_s_derivative(m, 1)};
    if (n <= 1) return s[static_cast<std::size_t>(n)];
    for (int k = 2; k <= n; ++k) s.push_back(s_prime_from_hierarchy(curve, s, k));
    return s.back();
}

}  // namespace eo::wkb
