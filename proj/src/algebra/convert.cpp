#include "eo/algebra/convert.hpp"

#include "eo/errors.hpp"

namespace eo::algebra {

Laurent laurent_from_ratfunc(const RatFunc& f, std::size_t arity, std::size_t index) {
    const UPoly& den = f.den();
    const int k = den.degree();
    for (int i = 0; i < k; ++i)
        if (den.coeff(i) != 0) throw NotDivisible("denominator is not a monomial");
    Laurent r(arity);
    Laurent::Exponents e(arity, 0);
    for (int i = 0; i <= f.num().degree(); ++i) {
        e.at(index) = i - k;
        r.add_term(e, f.num().coeff(i));
    }
    return r;
}

RatFunc schwarzian(const RatFunc& second_over_first, const RatFunc& third_over_first) {
    return third_over_first - make_rational(3, 2) * second_over_first * second_over_first;
}

}  // namespace eo::algebra
