#include "eo/schur/symmetric.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <span>

#include "eo/combinatorics.hpp"
#include "eo/errors.hpp"
#include "eo/parallel/memo.hpp"

namespace eo::schur {

namespace {

Partition merged(Partition a, const Partition& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end(), std::greater<>());
    return a;
}

// lambda with one copy of each listed part removed.
Partition remove_parts(const Partition& lambda, std::initializer_list<int> parts) {
    Partition r = lambda;
    for (int p : parts) r.erase(std::find(r.begin(), r.end(), p));
    return r;
}

long multiplicity(const Partition& lambda, int v) { return std::count(lambda.begin(), lambda.end(), v); }

// chi over a beta-set (distinct non-negative integers) and the remaining cycle lengths.
Integer mn_rec(std::set<int> beta, std::span<const int> cycles) {
    if (cycles.empty()) return 1;
    const int k = cycles.front();
    Integer total = 0;
    for (int b : std::vector<int>(beta.begin(), beta.end())) {
        const int target = b - k;
        if (target < 0 || beta.count(target)) continue;
        long between = std::count_if(beta.begin(), beta.end(), [&](int v) { return v > target && v < b; });
        std::set<int> next = beta;
        next.erase(b);
        next.insert(target);
        Integer sub = mn_rec(std::move(next), cycles.subspan(1));
        total += between % 2 ? -sub : sub;
    }
    return total;
}

}  // namespace

Partition canonical(Partition p) {
    for (int v : p)
        if (v < 0) throw InvalidProfile("negative part in partition");
    p.erase(std::remove(p.begin(), p.end(), 0), p.end());
    std::sort(p.begin(), p.end(), std::greater<>());
    return p;
}

int size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

std::vector<Partition> partitions_of(int n) {
    if (n == 0) return {{}};
    std::vector<Partition> out;
    for (int parts = 1; parts <= n; ++parts)
        for (auto& p : partitions_into(n, parts)) out.push_back(std::move(p));
    return out;
}

std::string to_string(const Partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

Integer z_lambda(const Partition& lambda) {
    Integer z = 1;
    for (const auto& [v, m] : group_values(canonical(lambda))) {
        Integer pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(v), static_cast<unsigned long>(m));
        z *= algebra::factorial(static_cast<unsigned>(m)) * pw;
    }
    return z;
}

Integer dimension(const Partition& mu_in) {
    Partition mu = canonical(mu_in);
    Integer hooks = 1;
    for (std::size_t i = 0; i < mu.size(); ++i)
        for (int j = 0; j < mu[i]; ++j) {
            int arm = mu[i] - j - 1;
            int leg = 0;
            for (std::size_t k = i + 1; k < mu.size() && mu[k] > j; ++k) ++leg;
            hooks *= arm + leg + 1;
        }
    return algebra::factorial(static_cast<unsigned>(size(mu))) / hooks;
}

Integer character(const Partition& mu_in, const Partition& lambda_in) {
    Partition mu = canonical(mu_in), lambda = canonical(lambda_in);
    if (size(mu) != size(lambda)) throw SizeMismatch("character needs |mu| = |lambda|");
    static parallel::ConcurrentMemo<std::pair<Partition, Partition>, Integer> memo;
    return memo.get_or_compute({mu, lambda}, [&] {
        std::set<int> beta;
        const int l = static_cast<int>(mu.size());
        for (int i = 0; i < l; ++i) beta.insert(mu[static_cast<std::size_t>(i)] + (l - 1 - i));
        return mn_rec(std::move(beta), lambda);
    });
}

Rational shifted_power_sum(int r, const Partition& mu_in) {
    if (r < 0) throw std::invalid_argument("power must be non-negative");
    Partition mu = canonical(mu_in);
    Rational s = 0;
    for (std::size_t k = 0; k < mu.size(); ++k) {
        const long i = static_cast<long>(k) + 1;
        s += algebra::power(Rational(mu[k] - i) + Rational(1, 2), r) - algebra::power(Rational(-i) + Rational(1, 2), r);
    }
    return s;
}

long content_sum(const Partition& mu) {
    long c = 0;
    for (std::size_t i = 0; i < mu.size(); ++i)
        for (int j = 0; j < mu[i]; ++j) c += j - static_cast<long>(i);
    return c;
}

PPolynomial PPolynomial::constant(const Rational& c) { return monomial({}, c); }

PPolynomial PPolynomial::monomial(const Partition& lambda, const Rational& c) {
    PPolynomial p;
    p.add(canonical(lambda), c);
    return p;
}

void PPolynomial::add(const Partition& lambda, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Rational PPolynomial::coeff(const Partition& lambda) const {
    auto it = terms_.find(canonical(lambda));
    return it == terms_.end() ? Rational(0) : it->second;
}

PPolynomial PPolynomial::truncate(int w) const {
    PPolynomial r;
    for (const auto& [l, c] : terms_)
        if (size(l) <= w) r.terms_.emplace(l, c);
    return r;
}

PPolynomial PPolynomial::weight_part(int w) const {
    PPolynomial r;
    for (const auto& [l, c] : terms_)
        if (size(l) == w) r.terms_.emplace(l, c);
    return r;
}

PPolynomial operator+(const PPolynomial& a, const PPolynomial& b) {
    PPolynomial r = a;
    for (const auto& [l, c] : b.terms_) r.add(l, c);
    return r;
}

PPolynomial operator-(const PPolynomial& a, const PPolynomial& b) { return a + Rational(-1) * b; }

PPolynomial operator*(const PPolynomial& a, const PPolynomial& b) {
    PPolynomial r;
    for (const auto& [la, ca] : a.terms_)
        for (const auto& [lb, cb] : b.terms_) r.add(merged(la, lb), ca * cb);
    return r;
}

PPolynomial operator*(const Rational& s, const PPolynomial& a) {
    PPolynomial r;
    for (const auto& [l, c] : a.terms_) r.add(l, s * c);
    return r;
}

std::string PPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [l, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += algebra::to_string(c);
        for (int v : l) s += "*p" + std::to_string(v);
    }
    return s;
}

PPolynomial schur_in_p(const Partition& mu_in) {
    Partition mu = canonical(mu_in);
    PPolynomial s;
    for (const auto& lambda : partitions_of(size(mu))) s.add(lambda, Rational(character(mu, lambda)) / Rational(z_lambda(lambda)));
    return s;
}

PPolynomial cutjoin_apply(const PPolynomial& f) {
    PPolynomial r;
    for (const auto& [lambda, c] : f.terms()) {
        // (i+j) p_i p_j d/dp_{i+j}: a part k becomes the ordered pair (i, k - i)
        std::set<int> distinct(lambda.begin(), lambda.end());
        for (int k : distinct) {
            Rational w = c * algebra::make_rational(k * multiplicity(lambda, k), 2);
            Partition rest = remove_parts(lambda, {k});
            for (int i = 1; i < k; ++i) r.add(merged(rest, {i, k - i}), w);
        }
        // i j p_{i+j} d^2/dp_i dp_j: an ordered pair of parts merges
        for (int i : distinct)
            for (int j : distinct) {
                long d2 = i == j ? multiplicity(lambda, i) * (multiplicity(lambda, i) - 1) : multiplicity(lambda, i) * multiplicity(lambda, j);
                if (d2 == 0) continue;
                Partition rest = remove_parts(lambda, {i, j});
                r.add(merged(rest, {i + j}), c * algebra::make_rational(static_cast<long>(i) * j * d2, 2));
            }
    }
    return r;
}

}  // namespace eo::schur
