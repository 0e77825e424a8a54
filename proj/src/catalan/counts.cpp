#include "eo/catalan/counts.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "eo/combinatorics.hpp"
#include "eo/errors.hpp"

namespace eo::catalan {

namespace {

using Lookup = std::function<Integer(int, std::vector<int>)>;

// Right-hand side of the recursion for a canonical key, reading lower counts from `c`.
Integer recursion_step(int g, const std::vector<int>& mu, const Lookup& c) {
    const int m1 = mu[0];
    std::vector<int> rest(mu.begin() + 1, mu.end());
    Integer total = 0;

    auto groups = group_values(rest);
    for (std::size_t k = 0; k < groups.size(); ++k) {
        const auto [v, mult] = groups[k];
        std::vector<int> arg{m1 + v - 2};
        bool skipped = false;
        for (int x : rest) {
            if (x == v && !skipped) {
                skipped = true;
                continue;
            }
            arg.push_back(x);
        }
        total += Integer(v) * mult * c(g, arg);
    }

    for (int alpha = 0; alpha <= m1 - 2; ++alpha) {
        const int beta = m1 - 2 - alpha;
        if (g >= 1) {
            std::vector<int> arg{alpha, beta};
            arg.insert(arg.end(), rest.begin(), rest.end());
            total += c(g - 1, arg);
        }
        for_each_submultiset(groups, [&](const std::vector<int>& in, const std::vector<int>& out, const Integer& w) {
            for (int g1 = 0; g1 <= g; ++g1) {
                std::vector<int> a{alpha}, b{beta};
                a.insert(a.end(), in.begin(), in.end());
                b.insert(b.end(), out.begin(), out.end());
                Integer ca = c(g1, a);
                if (ca == 0) continue;
                total += w * ca * c(g - g1, b);
            }
        });
    }
    return total;
}

}  // namespace

std::optional<CatalanKey> canonical_key(int g, std::vector<int> mu) {
    if (mu.empty()) throw InvalidProfile("Catalan count needs n >= 1");
    for (int v : mu)
        if (v < 0) throw InvalidProfile("negative degree in profile");
    if (g < 0) return std::nullopt;
    std::sort(mu.begin(), mu.end(), std::greater<>());
    if (g == 0 && mu == std::vector<int>{0}) return CatalanKey{0, mu};
    if (mu.back() == 0) return std::nullopt;
    const int total = std::accumulate(mu.begin(), mu.end(), 0);
    if (total % 2) return std::nullopt;
    // A connected cellular graph has at least one face: E - n + 2 - 2g >= 1.
    if (total / 2 < static_cast<int>(mu.size()) + 2 * g - 1) return std::nullopt;
    return CatalanKey{g, std::move(mu)};
}

Integer CatalanCounter::count(int g, const std::vector<int>& mu) {
    auto key = canonical_key(g, mu);
    if (!key) return 0;
    if (key->second == std::vector<int>{0}) return 1;
    if (auto hit = memo_.find(*key)) return *hit;
    Integer v = recursion_step(key->first, key->second, [this](int gg, std::vector<int> m) { return count(gg, m); });
    return memo_.insert(*key, v);
}

CatalanTable::CatalanTable(int g, int n, int max_degree, parallel::Exec exec) {
    table_.emplace(CatalanKey{0, {0}}, 1);
    auto lookup = [this](int gg, std::vector<int> m) -> Integer {
        auto key = canonical_key(gg, std::move(m));
        if (!key) return 0;
        auto it = table_.find(*key);
        if (it == table_.end()) throw std::logic_error("Catalan table lookup outside the filled closure");
        return it->second;
    };
    for (int d = 2; d <= max_degree; d += 2) {
        std::vector<CatalanKey> level;
        for (int gg = 0; gg <= g; ++gg)
            for (int nn = 1; gg + nn <= g + n; ++nn)
                for (auto& mu : partitions_into(d, nn))
                    if (auto key = canonical_key(gg, mu)) level.push_back(std::move(*key));
        std::vector<Integer> values(level.size());
        const long count = static_cast<long>(level.size());
        if (exec == parallel::Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
            for (long i = 0; i < count; ++i)
                values[static_cast<std::size_t>(i)] = recursion_step(level[static_cast<std::size_t>(i)].first, level[static_cast<std::size_t>(i)].second, lookup);
        } else {
            for (long i = 0; i < count; ++i)
                values[static_cast<std::size_t>(i)] = recursion_step(level[static_cast<std::size_t>(i)].first, level[static_cast<std::size_t>(i)].second, lookup);
        }
        for (std::size_t i = 0; i < level.size(); ++i) table_.emplace(std::move(level[i]), std::move(values[i]));
    }
}

Integer CatalanTable::at(int g, const std::vector<int>& mu) const {
    auto key = canonical_key(g, mu);
    if (!key) return 0;
    auto it = table_.find(*key);
    if (it == table_.end()) throw std::out_of_range("profile outside the filled Catalan table");
    return it->second;
}

CatalanCounter& default_counter() {
    static CatalanCounter counter;
    return counter;
}

Integer catalan_count(int g, int n, const std::vector<int>& mu) {
    if (n <= 0) throw InvalidProfile("Catalan count needs n >= 1");
    if (static_cast<int>(mu.size()) != n) throw InvalidProfile("profile length differs from n");
    return default_counter().count(g, mu);
}

Rational dessin_number(int g, int n, const std::vector<int>& mu) {
    Integer c = catalan_count(g, n, mu);
    Integer prod = 1;
    for (int v : mu) {
        if (v < 1) throw InvalidProfile("dessin number needs positive degrees");
        prod *= v;
    }
    return algebra::make_rational(c, prod);
}

}  // namespace eo::catalan
