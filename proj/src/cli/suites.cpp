#include "eo/cli/suites.hpp"

#include <cmath>
#include <cstdio>

#include "eo/catalan/counts.hpp"
#include "eo/catalan/curve.hpp"
#include "eo/catalan/free_energy.hpp"
#include "eo/catalan/s_coeff.hpp"
#include "eo/errors.hpp"
#include "eo/hurwitz/counts.hpp"
#include "eo/hurwitz/free_energy.hpp"
#include "eo/hurwitz/qhbar.hpp"
#include "eo/hurwitz/s_coeff.hpp"
#include "eo/schur/kp.hpp"
#include "eo/wkb/hierarchy.hpp"

namespace eo::cli {

namespace {

using algebra::Laurent;
using algebra::RatFunc;
using algebra::Rational;

long terms(const RatFunc& f) {
    long k = 0;
    for (const auto& c : f.num().coeffs()) k += c != 0;
    return k;
}

long terms(const std::vector<RatFunc>& fs) {
    long k = 0;
    for (const auto& f : fs) k += terms(f);
    return k;
}

long terms(const schur::SPSeries& s) {
    long k = 0;
    for (const auto& c : s.coeffs) k += static_cast<long>(c.terms().size());
    return k;
}

Outcome exact(long nonzero) { return {nonzero == 0, nonzero}; }

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

Outcome relative(double exact_value, double approx, double tol) {
    double err = std::abs(exact_value - approx) / std::max(std::abs(exact_value), 1e-300);
    return {err <= tol, sci(err)};
}

std::string gn(int g, int n) { return std::to_string(g) + "," + std::to_string(n); }

// All (g, n) with 1 <= 2g - 2 + n <= chi_max.
std::vector<std::pair<int, int>> stable_pairs(int chi_max) {
    std::vector<std::pair<int, int>> out;
    for (int chi = 1; chi <= chi_max; ++chi)
        for (int g = 0; 2 * g - 2 < chi; ++g) out.emplace_back(g, chi + 2 - 2 * g);
    return out;
}

void catalan_suite(std::vector<Check>& out, const SuiteOptions& o) {
    out.push_back({"catalan.base_sequence", "C_{0,1}(2m) are the Catalan numbers, m <= 12", [] {
                       long bad = 0;
                       for (int m = 0; m <= 12; ++m) {
                           algebra::Integer b;
                           mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned>(2 * m), static_cast<unsigned>(m));
                           bad += catalan::catalan_count(0, 1, {2 * m}) * (m + 1) != b;
                       }
                       return exact(bad);
                   }});
    out.push_back({"catalan.curve_inversion", "z + 1/z = x with z = sum C_m x^{-2m-1}", [] {
                       auto r = catalan::curve_inversion_check(10);
                       return Outcome{r.pass, r.failing_order < 0 ? 0 : r.failing_order};
                   }});
    out.push_back({"catalan.counts_nonnegative", "C_{g,n}(mu) >= 0 and D = C/prod(mu) consistent", [] {
                       long bad = 0;
                       catalan::CatalanTable table(2, 3, 10, parallel::Exec::serial);
                       for (const auto& [key, v] : table.entries()) {
                           bad += v < 0;
                           algebra::Integer prod = 1;
                           bool positive = true;
                           for (int m : key.second) {
                               prod *= m;
                               positive = positive && m > 0;
                           }
                           if (positive) bad += catalan::dessin_number(key.first, static_cast<int>(key.second.size()), key.second) * Rational(prod) != Rational(v);
                       }
                       return exact(bad);
                   }});
    for (auto [g, n] : stable_pairs(3))
        out.push_back({"catalan.free_energy[" + gn(g, n) + "]", "F^C symmetric, vanishing at t_i = -1, Laplace transform of D_{g,n}", [g, n, o] {
                           Laurent f = catalan::free_energy_C(g, n).poly;
                           bool ok = f.is_symmetric();
                           for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) ok = ok && f.substitute(i, -1).is_zero();
                           std::vector<double> x;
                           for (int i = 0; i < n; ++i) x.push_back(10 + i);
                           Outcome r = relative(catalan::free_energy_at_x(f, x), catalan::laplace_sum_C(g, n, x, 60, parallel::Exec::parallel), o.tolerance);
                           r.pass = r.pass && ok;
                           return r;
                       }});
    for (int m = 2; m <= o.max_order; ++m)
        out.push_back({"catalan.s_paths[" + std::to_string(m) + "]", "S_m assembled from F_{g,n} equals S_m from the S-recursion", [m] {
                           auto a = catalan::s_coeff_C_assembled(m);
                           auto r = catalan::s_coeff_C_recursive(m);
                           return exact(terms(a.value - r.value));
                       }});
    out.push_back({"catalan.schrodinger", "hbar-expansion of the Schrodinger equation, orders 0..max_order", [o] {
                       return exact(terms(catalan::schrodinger_residual_C(o.max_order - 1)));
                   }});
}

void hurwitz_recursion(std::vector<Check>& out, const SuiteOptions&) {
    for (auto [g, n] : stable_pairs(3))
        out.push_back({"hurwitz.recursion[" + gn(g, n) + "]", "polynomial recursion for F^H_{g,n} from cut-and-join", [g, n] {
                           return exact(static_cast<long>(hurwitz::fh_recursion_residual(g, n).size()));
                       }});
}

void hurwitz_heat(std::vector<Check>& out, const SuiteOptions& o) {
    out.push_back({"hurwitz.s0_identity", "S_0 identity for the Lambert curve", [] { return exact(terms(hurwitz::s0_identity_residual())); }});
    out.push_back({"hurwitz.heat", "heat equation for the S_m, m <= max_order", [o] { return exact(terms(hurwitz::heat_residual_H(o.max_order))); }});
}

void hurwitz_zhou(std::vector<Check>& out, const SuiteOptions&) {
    out.push_back({"hurwitz.zhou", "term recursion, difference equation and heat bracket of sum a_m/m!, m <= 20", [] {
                       auto r = hurwitz::zhou_series_checks(20);
                       return Outcome{r.pass(), r.first_failure < 0 ? 0 : r.first_failure};
                   }});
}

void hurwitz_commutator(std::vector<Check>& out, const SuiteOptions&) {
    out.push_back({"hurwitz.commutator", "[P, Q] = P on e^{-mw} hbar^k, m <= 10, |k| <= 3", [] {
                       auto r = hurwitz::pq_commutator_check(10);
                       return Outcome{r.pass, r.pass ? nlohmann::json(0) : nlohmann::json{{"m", r.failing_m}, {"k", r.failing_k}}};
                   }});
}

void hurwitz_lambert(std::vector<Check>& out, const SuiteOptions&) {
    out.push_back({"hurwitz.lambert", "t = 1 + sum mu^mu/mu! x^mu inverts x = (t-1)/t e^{-(t-1)/t}", [] {
                       auto r = hurwitz::lambert_inversion_check(15);
                       return Outcome{r.pass(), r.pass() ? 0 : 1};
                   }});
}

void hurwitz_suite(std::vector<Check>& out, const SuiteOptions& o) {
    out.push_back({"hurwitz.numbers_nonnegative", "H_{g,n}(mu) >= 0 on the cut-and-join table", [] {
                       long bad = 0;
                       hurwitz::HurwitzTable table(2, 3, 8, parallel::Exec::serial);
                       for (const auto& [key, v] : table.entries()) bad += v < 0;
                       return exact(bad);
                   }});
    for (auto [g, n] : stable_pairs(3))
        out.push_back({"hurwitz.free_energy[" + gn(g, n) + "]", "F^H symmetric, vanishing at t_i = 1, degree <= 6g-6+3n, Laplace transform of H_{g,n}", [g, n, o] {
                           Laurent f = hurwitz::free_energy_H(g, n);
                           bool ok = f.is_symmetric() && f.max_total_degree() <= 6 * g - 6 + 3 * n;
                           for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) ok = ok && f.substitute(i, 1).is_zero();
                           std::vector<double> x;
                           for (int i = 0; i < n; ++i) x.push_back(std::exp(-(3.0 + 0.1 * i)));
                           Outcome r = relative(hurwitz::free_energy_H_at_x(f, x), hurwitz::laplace_sum_H(g, n, x, n >= 4 ? 30 : 40, parallel::Exec::parallel), o.tolerance);
                           r.pass = r.pass && ok;
                           return r;
                       }});
    for (int m = 2; m <= o.max_order; ++m)
        out.push_back({"hurwitz.s_paths[" + std::to_string(m) + "]", "S^H_m assembled equals S^H_m from the integral recursion", [m] {
                           return exact(terms(hurwitz::s_coeff_H_assembled(m).value - hurwitz::s_coeff_H_recursive(m).value));
                       }});
    hurwitz_recursion(out, o);
    hurwitz_heat(out, o);
    hurwitz_zhou(out, o);
    hurwitz_commutator(out, o);
    hurwitz_lambert(out, o);
}

void wkb_suite(std::vector<Check>& out, const SuiteOptions& o) {
    for (wkb::Model model : {wkb::Model::catalan, wkb::Model::hurwitz}) {
        const std::string name = wkb::model_name(model);
        out.push_back({"wkb.corrections[" + name + "]", "A_k = 0 for k = 1..max_order", [model, o] {
                           return exact(terms(wkb::recover_corrections(model, o.max_order)));
                       }});
        for (int m = 2; m <= o.max_order; ++m)
            out.push_back({"wkb.s_prime[" + name + "," + std::to_string(m) + "]", "S'_m from D_m A = 0 equals d/dx of S_m", [model, m] {
                               return exact(terms(wkb::s_prime_from_hierarchy(model, m) - wkb::model_s_derivative(model, m)));
                           }});
    }
}

void schur_suite(std::vector<Check>& out, const SuiteOptions& o) {
    out.push_back({"schur.eigenvalues", "Delta s_mu = p_2[mu]/2 s_mu, |mu| <= max_weight", [o] {
                       long bad = 0;
                       for (int d = 0; d <= o.max_weight; ++d)
                           for (const auto& mu : schur::partitions_of(d)) {
                               schur::PPolynomial s = schur::schur_in_p(mu);
                               bad += static_cast<long>((schur::cutjoin_apply(s) - algebra::make_rational(1, 2) * schur::shifted_power_sum(2, mu) * s).terms().size());
                           }
                       return exact(bad);
                   }});
    out.push_back({"schur.tau_expansion", "exp(H(s,p)) = sum dim/|mu|! e^{p_2[mu]s/2} s_mu", [o] {
                       return exact(terms(schur::tau_expansion_residual(o.max_weight, o.s_order)));
                   }});
    out.push_back({"schur.heat", "d/ds exp(H) = Delta exp(H)", [o] { return exact(terms(schur::heat_consistency_residual(o.max_weight, o.s_order))); }});
    out.push_back({"schur.cauchy", "sum s_mu(p) s_mu(p') = exp(sum p_m p'_m/m), weight <= 5", [] {
                       return exact(static_cast<long>(schur::cauchy_residual(5).size()));
                   }});
    out.push_back({"schur.cauchy_restriction", "sum s_mu(1,0,...) s_mu(p) = e^{p_1}", [o] {
                       return exact(static_cast<long>(schur::cauchy_restriction_residual(o.max_weight).terms().size()));
                   }});
    out.push_back({"schur.principal_collapse", "principal specialization keeps one-row mu and gives a_m/m!, m <= 8", [] {
                       auto r = schur::principal_collapse_check(8);
                       return Outcome{r.pass(), static_cast<long>(r.offending.size()) + (r.matches_zhou ? 0 : 1)};
                   }});
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"catalan", "hurwitz", "wkb", "schur", "all"};
    return names;
}

const std::vector<std::string>& hurwitz_subsuites() {
    static const std::vector<std::string> names{"recursion", "heat", "zhou", "commutator", "lambert"};
    return names;
}

std::vector<Check> suite_checks(const std::string& suite, const SuiteOptions& opts) {
    if (opts.max_order < 2) throw UsageError("--max-order must be at least 2");
    if (opts.max_weight < 1 || opts.s_order < 1) throw UsageError("--max-weight and --s-order must be positive");
    std::vector<Check> out;
    if (suite == "catalan" || suite == "all") catalan_suite(out, opts);
    if (suite == "hurwitz" || suite == "all") hurwitz_suite(out, opts);
    if (suite == "wkb" || suite == "all") wkb_suite(out, opts);
    if (suite == "schur" || suite == "all") schur_suite(out, opts);
    if (suite == "hurwitz.recursion") hurwitz_recursion(out, opts);
    if (suite == "hurwitz.heat") hurwitz_heat(out, opts);
    if (suite == "hurwitz.zhou") hurwitz_zhou(out, opts);
    if (suite == "hurwitz.commutator") hurwitz_commutator(out, opts);
    if (suite == "hurwitz.lambert") hurwitz_lambert(out, opts);
    if (out.empty()) throw UsageError("unknown suite: " + suite);
    return out;
}

}  // namespace eo::cli
