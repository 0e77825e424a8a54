#pragma once

// Brute-force reference values, independent of the library recursions.

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

// Connected gluings of half-edges around labeled vertices of degrees mu, by genus.
// Half-edges at vertex i carry a fixed cyclic order; every perfect matching is a cellular
// graph with one distinguished half-edge per vertex.
inline long cellular_graphs(int g, const std::vector<int>& mu) {
    int total = std::accumulate(mu.begin(), mu.end(), 0);
    if (total % 2) return 0;
    std::vector<int> next(static_cast<std::size_t>(total)), owner(static_cast<std::size_t>(total));
    for (int v = 0, base = 0; v < static_cast<int>(mu.size()); base += mu[static_cast<std::size_t>(v)], ++v)
        for (int k = 0; k < mu[static_cast<std::size_t>(v)]; ++k) {
            next[static_cast<std::size_t>(base + k)] = base + (k + 1) % mu[static_cast<std::size_t>(v)];
            owner[static_cast<std::size_t>(base + k)] = v;
        }
    std::vector<int> pair(static_cast<std::size_t>(total), -1);
    long count = 0;
    std::function<void()> rec = [&] {
        auto it = std::find(pair.begin(), pair.end(), -1);
        if (it == pair.end()) {
            // connectivity via union-find over vertices
            std::vector<int> parent(mu.size());
            std::iota(parent.begin(), parent.end(), 0);
            std::function<int(int)> find = [&](int a) { return parent[static_cast<std::size_t>(a)] == a ? a : parent[static_cast<std::size_t>(a)] = find(parent[static_cast<std::size_t>(a)]); };
            for (int h = 0; h < total; ++h) parent[static_cast<std::size_t>(find(owner[static_cast<std::size_t>(h)]))] = find(owner[static_cast<std::size_t>(pair[static_cast<std::size_t>(h)])]);
            for (std::size_t v = 0; v < mu.size(); ++v)
                if (find(static_cast<int>(v)) != find(0)) return;
            // faces = cycles of next o pair
            std::vector<bool> seen(static_cast<std::size_t>(total), false);
            int faces = 0;
            for (int h = 0; h < total; ++h) {
                if (seen[static_cast<std::size_t>(h)]) continue;
                ++faces;
                for (int c = h; !seen[static_cast<std::size_t>(c)]; c = next[static_cast<std::size_t>(pair[static_cast<std::size_t>(c)])]) seen[static_cast<std::size_t>(c)] = true;
            }
            int chi = static_cast<int>(mu.size()) - total / 2 + faces;
            if (chi == 2 - 2 * g) ++count;
            return;
        }
        int a = static_cast<int>(it - pair.begin());
        for (int b = a + 1; b < total; ++b) {
            if (pair[static_cast<std::size_t>(b)] != -1) continue;
            pair[static_cast<std::size_t>(a)] = b;
            pair[static_cast<std::size_t>(b)] = a;
            rec();
            pair[static_cast<std::size_t>(a)] = pair[static_cast<std::size_t>(b)] = -1;
        }
    };
    rec();
    return count;
}

// Bernoulli numbers B_0..B_n from sum_{k<m+1} C(m+1,k) B_k = 0.
inline std::vector<mpq_class> bernoulli(int n) {
    std::vector<mpq_class> b(static_cast<std::size_t>(n) + 1);
    b[0] = 1;
    for (int m = 1; m <= n; ++m) {
        mpq_class s = 0;
        for (int k = 0; k < m; ++k) {
            mpz_class c;
            mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned>(m + 1), static_cast<unsigned>(k));
            s += mpq_class(c) * b[static_cast<std::size_t>(k)];
        }
        b[static_cast<std::size_t>(m)] = -s / (m + 1);
    }
    return b;
}

inline mpz_class fact(int n) {
    mpz_class r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// Orbifold Euler characteristic of M_{g,n} (Harer-Zagier, with the puncture formula).
inline mpq_class euler_characteristic(int g, int n) {
    if (g == 0) {
        mpq_class r(fact(n - 3));
        return (n - 3) % 2 ? mpq_class(-r) : r;
    }
    auto b = bernoulli(2 * g);
    mpq_class r = mpq_class(fact(2 * g - 3 + n)) * (2 * g - 1) / mpq_class(fact(2 * g)) * b[static_cast<std::size_t>(2 * g)];
    return n % 2 ? mpq_class(-r) : r;
}

// Cycle type of a permutation, sorted descending.
inline std::vector<int> cycle_type(const std::vector<int>& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<int> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t c = i; !seen[c]; c = static_cast<std::size_t>(p[c])) {
            seen[c] = true;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

// Tuples (tau_1..tau_r) of transpositions in S_d generating a transitive group whose
// product has cycle type mu, divided by d!.
inline mpq_class transposition_factorizations(const std::vector<int>& mu, int r) {
    int d = std::accumulate(mu.begin(), mu.end(), 0);
    std::vector<std::pair<int, int>> trans;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) trans.emplace_back(i, j);
    std::vector<int> target = mu;
    std::sort(target.rbegin(), target.rend());
    long count = 0;
    std::vector<int> choice(static_cast<std::size_t>(r), 0);
    std::function<void(int, std::vector<int>)> rec = [&](int k, std::vector<int> perm) {
        if (k == r) {
            if (cycle_type(perm) != target) return;
            std::vector<int> parent(static_cast<std::size_t>(d));
            std::iota(parent.begin(), parent.end(), 0);
            std::function<int(int)> find = [&](int a) { return parent[static_cast<std::size_t>(a)] == a ? a : parent[static_cast<std::size_t>(a)] = find(parent[static_cast<std::size_t>(a)]); };
            for (int c : choice) parent[static_cast<std::size_t>(find(trans[static_cast<std::size_t>(c)].first))] = find(trans[static_cast<std::size_t>(c)].second);
            for (int v = 0; v < d; ++v)
                if (find(v) != find(0)) return;
            ++count;
            return;
        }
        for (std::size_t c = 0; c < trans.size(); ++c) {
            choice[static_cast<std::size_t>(k)] = static_cast<int>(c);
            std::vector<int> next = perm;
            std::swap(next[static_cast<std::size_t>(trans[c].first)], next[static_cast<std::size_t>(trans[c].second)]);
            rec(k + 1, next);
        }
    };
    std::vector<int> id(static_cast<std::size_t>(d));
    std::iota(id.begin(), id.end(), 0);
    rec(0, id);
    return mpq_class(count) / mpq_class(fact(d));
}

}  // namespace oracle
