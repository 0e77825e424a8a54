#include "eo/algebra/series.hpp"

namespace eo::algebra {

RationalSeries inverse(const RationalSeries& f) {
    if (f.at(0) == 0) throw std::domain_error("series inverse needs a nonzero constant term");
    RationalSeries r(f.var(), f.order());
    for (int k = 0; k <= f.order(); ++k) {
        Rational s = k == 0 ? Rational(1) : Rational(0);
        for (int j = 1; j <= k; ++j) s -= f.at(j) * r.at(k - j);
        r.at(k) = s / f.at(0);
    }
    return r;
}

RationalSeries exp_series(const RationalSeries& f) {
    if (f.at(0) != 0) throw std::domain_error("series exp needs a zero constant term");
    // g' = f' g
    RationalSeries g(f.var(), f.order());
    g.at(0) = 1;
    for (int k = 1; k <= f.order(); ++k) {
        Rational s = 0;
        for (int j = 1; j <= k; ++j) s += Rational(j) * f.at(j) * g.at(k - j);
        g.at(k) = s / Rational(k);
    }
    return g;
}

}  // namespace eo::algebra
