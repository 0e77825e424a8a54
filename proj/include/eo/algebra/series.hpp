#pragma once

#include <string>
#include <vector>

#include "eo/algebra/rational.hpp"
#include "eo/errors.hpp"

namespace eo::algebra {

// Power series in `var` truncated after order N. Reading past N throws.
template <class T>
class TruncatedSeries {
public:
    TruncatedSeries(std::string var, int order, T zero = T{})
        : var_(std::move(var)), zero_(zero), c_(static_cast<std::size_t>(order) + 1, zero) {}

    const std::string& var() const { return var_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }

    const T& at(int k) const {
        check(k);
        return c_[static_cast<std::size_t>(k)];
    }
    T& at(int k) {
        check(k);
        return c_[static_cast<std::size_t>(k)];
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(a.var_, std::min(a.order(), b.order()), a.zero_);
        for (int k = 0; k <= r.order(); ++k) r.at(k) = a.at(k) + b.at(k);
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(a.var_, std::min(a.order(), b.order()), a.zero_);
        for (int k = 0; k <= r.order(); ++k) r.at(k) = a.at(k) - b.at(k);
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(a.var_, std::min(a.order(), b.order()), a.zero_);
        for (int i = 0; i <= r.order(); ++i)
            for (int j = 0; i + j <= r.order(); ++j) r.at(i + j) = r.at(i + j) + a.at(i) * b.at(j);
        return r;
    }
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.var_ == b.var_ && a.c_ == b.c_;
    }
    friend TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a) {
        TruncatedSeries r = a;
        for (auto& v : r.c_) v = s * v;
        return r;
    }

private:
    void check(int k) const {
        if (k < 0 || k > order())
            throw OutOfRange("series coefficient " + std::to_string(k) + " beyond truncation order " + std::to_string(order()));
    }
    std::string var_;
    T zero_;
    std::vector<T> c_;
};

using RationalSeries = TruncatedSeries<Rational>;

// 1/f; requires f(0) != 0.
RationalSeries inverse(const RationalSeries& f);
// exp(f); requires f(0) = 0.
RationalSeries exp_series(const RationalSeries& f);

}  // namespace eo::algebra
