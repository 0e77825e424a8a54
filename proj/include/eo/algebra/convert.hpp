#pragma once

#include "eo/algebra/laurent.hpp"

namespace eo::algebra {

// Univariate rational function with a monomial denominator, as a Laurent polynomial
// in variable `index` of the given arity. Throws NotDivisible otherwise.
Laurent laurent_from_ratfunc(const RatFunc& f, std::size_t arity, std::size_t index);

// Schwarzian derivative f'''/f' - (3/2)(f''/f')^2 given the ratios f''/f' and f'''/f'.
RatFunc schwarzian(const RatFunc& second_over_first, const RatFunc& third_over_first);

}  // namespace eo::algebra
