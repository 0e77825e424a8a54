#include "eo/hurwitz/counts.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "eo/combinatorics.hpp"
#include "eo/errors.hpp"

namespace eo::hurwitz {

namespace {

using Lookup = std::function<Rational(int, std::vector<int>)>;

std::vector<int> without(const std::vector<int>& mu, int v, int times) {
    std::vector<int> out;
    for (int x : mu) {
        if (x == v && times > 0) {
            --times;
            continue;
        }
        out.push_back(x);
    }
    return out;
}

// Right-hand side of cut-and-join divided by r, for a canonical key with r > 0.
Rational cut_and_join(int g, const std::vector<int>& mu, const Lookup& h) {
    auto groups = group_values(mu);
    Rational total = 0;

    // Join: unordered pairs of poles merge.
    for (std::size_t a = 0; a < groups.size(); ++a) {
        for (std::size_t b = a; b < groups.size(); ++b) {
            const auto [v, mv] = groups[a];
            const auto [w, mw] = groups[b];
            long pairs = a == b ? static_cast<long>(mv) * (mv - 1) / 2 : static_cast<long>(mv) * mw;
            if (pairs == 0) continue;
            std::vector<int> rest = a == b ? without(mu, v, 2) : without(without(mu, v, 1), w, 1);
            rest.push_back(v + w);
            total += Rational(pairs * (v + w)) * h(g, rest);
        }
    }

    // Cut: one pole splits into alpha + beta.
    for (const auto& [v, mv] : groups) {
        std::vector<int> rest = without(mu, v, 1);
        auto rest_groups = group_values(rest);
        Rational sum = 0;
        for (int alpha = 1; alpha < v; ++alpha) {
            const int beta = v - alpha;
            Rational term = 0;
            if (g >= 1) {
                std::vector<int> arg{alpha, beta};
                arg.insert(arg.end(), rest.begin(), rest.end());
                term += h(g - 1, arg);
            }
            for_each_submultiset(rest_groups, [&](const std::vector<int>& in, const std::vector<int>& out, const Integer& w) {
                for (int g1 = 0; g1 <= g; ++g1) {
                    std::vector<int> a{alpha}, b{beta};
                    a.insert(a.end(), in.begin(), in.end());
                    b.insert(b.end(), out.begin(), out.end());
                    Rational ha = h(g1, a);
                    if (ha == 0) continue;
                    term += Rational(w) * ha * h(g - g1, b);
                }
            });
            sum += Rational(alpha * beta) * term;
        }
        total += Rational(mv) / 2 * sum;
    }
    return total / branch_points(g, mu);
}

}  // namespace

int branch_points(int g, const std::vector<int>& mu) {
    return 2 * g - 2 + static_cast<int>(mu.size()) + std::accumulate(mu.begin(), mu.end(), 0);
}

std::optional<HurwitzKey> canonical_key(int g, std::vector<int> mu) {
    if (mu.empty()) throw InvalidProfile("Hurwitz number needs n >= 1");
    for (int v : mu)
        if (v <= 0) throw InvalidProfile("Hurwitz profile entries must be positive");
    if (g < 0 || branch_points(g, mu) < 0) return std::nullopt;
    std::sort(mu.begin(), mu.end(), std::greater<>());
    return HurwitzKey{g, std::move(mu)};
}

Rational HurwitzCounter::number(int g, const std::vector<int>& mu) {
    auto key = canonical_key(g, mu);
    if (!key) return 0;
    if (branch_points(key->first, key->second) == 0) return 1;  // only (0,(1))
    if (auto hit = memo_.find(*key)) return *hit;
    Rational v = cut_and_join(key->first, key->second, [this](int gg, std::vector<int> m) { return number(gg, m); });
    return memo_.insert(*key, v);
}

HurwitzTable::HurwitzTable(int g, int n, int max_degree, parallel::Exec exec) {
    std::vector<std::vector<HurwitzKey>> levels;
    for (int gg = 0; gg <= g; ++gg)
        for (int nn = 1; gg + nn <= g + n; ++nn)
            for (int d = nn; d <= max_degree; ++d)
                for (auto& mu : partitions_into(d, nn)) {
                    const int r = branch_points(gg, mu);
                    if (r < 0) continue;
                    if (levels.size() <= static_cast<std::size_t>(r)) levels.resize(static_cast<std::size_t>(r) + 1);
                    levels[static_cast<std::size_t>(r)].push_back({gg, mu});
                }
    auto lookup = [this](int gg, std::vector<int> m) -> Rational {
        auto key = canonical_key(gg, std::move(m));
        if (!key) return 0;
        auto it = table_.find(*key);
        if (it == table_.end()) throw std::logic_error("Hurwitz table lookup outside the filled closure");
        return it->second;
    };
    for (std::size_t r = 0; r < levels.size(); ++r) {
        auto& level = levels[r];
        std::vector<Rational> values(level.size());
        const long count = static_cast<long>(level.size());
        auto fill = [&](long i) {
            const auto& [gg, mu] = level[static_cast<std::size_t>(i)];
            values[static_cast<std::size_t>(i)] = r == 0 ? Rational(1) : cut_and_join(gg, mu, lookup);
        };
        if (exec == parallel::Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
            for (long i = 0; i < count; ++i) fill(i);
        } else {
            for (long i = 0; i < count; ++i) fill(i);
        }
        for (std::size_t i = 0; i < level.size(); ++i) table_.emplace(std::move(level[i]), std::move(values[i]));
    }
}

Rational HurwitzTable::at(int g, const std::vector<int>& mu) const {
    auto key = canonical_key(g, mu);
    if (!key) return 0;
    auto it = table_.find(*key);
    if (it == table_.end()) throw std::out_of_range("profile outside the filled Hurwitz table");
    return it->second;
}

HurwitzCounter& default_counter() {
    static HurwitzCounter counter;
    return counter;
}

Rational hurwitz_number(int g, int n, const std::vector<int>& mu) {
    if (n <= 0) throw InvalidProfile("Hurwitz number needs n >= 1");
    if (static_cast<int>(mu.size()) != n) throw InvalidProfile("profile length differs from n");
    return default_counter().number(g, mu);
}

Integer automorphisms(const std::vector<int>& mu) {
    std::vector<int> sorted = mu;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    Integer a = 1;
    for (const auto& [v, m] : group_values(sorted)) a *= algebra::factorial(static_cast<unsigned>(m));
    return a;
}

Rational labeled_hurwitz(int g, const std::vector<int>& mu) {
    Rational h = default_counter().number(g, mu);
    if (h == 0) return 0;
    return Rational(algebra::factorial(static_cast<unsigned>(branch_points(g, mu)))) / Rational(automorphisms(mu)) * h;
}

}  // namespace eo::hurwitz
