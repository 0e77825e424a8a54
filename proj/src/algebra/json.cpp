#include "eo/algebra/json.hpp"

namespace eo::algebra {

using nlohmann::json;

json to_json(const Rational& q) { return to_string(q); }

json to_json(const Laurent& f) {
    json out = json::array();
    for (const auto& [e, c] : f.terms()) out.push_back(json::array({e, to_string(c)}));
    return out;
}

json to_json(const RatFunc& f) {
    json num = json::array(), den = json::array();
    for (const auto& c : f.num().coeffs()) num.push_back(to_string(c));
    for (const auto& c : f.den().coeffs()) den.push_back(to_string(c));
    return {{"var", f.var()}, {"num", num}, {"den", den}};
}

Rational rational_from_json(const json& j) { return parse_rational(j.get<std::string>()); }

Laurent laurent_from_json(const json& j, std::size_t arity) {
    Laurent f(arity);
    for (const auto& term : j) {
        auto e = term.at(0).get<std::vector<int>>();
        if (e.size() != arity) throw std::invalid_argument("exponent vector length differs from arity");
        f.add_term(e, rational_from_json(term.at(1)));
    }
    return f;
}

RatFunc ratfunc_from_json(const json& j) {
    auto coeffs = [](const json& a) {
        std::vector<Rational> v;
        for (const auto& c : a) v.push_back(rational_from_json(c));
        return UPoly(std::move(v));
    };
    return RatFunc(coeffs(j.at("num")), coeffs(j.at("den")), j.at("var").get<std::string>());
}

}  // namespace eo::algebra
