#include "eo/algebra/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace eo::algebra {

namespace {

bool valid_integer_text(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("malformed rational: " + std::string(text));
    Integer n(std::string(num.front() == '+' ? num.substr(1) : num));
    Integer d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    return make_rational(n, d);
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rational power(const Rational& base, int exponent) {
    if (exponent < 0) {
        if (base == 0) throw std::domain_error("zero to a negative power");
        return power(Rational(1) / base, -exponent);
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

}  // namespace eo::algebra
