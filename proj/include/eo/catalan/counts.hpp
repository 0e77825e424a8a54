#pragma once

#include <map>
#include <utility>
#include <vector>

#include "eo/algebra/rational.hpp"
#include "eo/parallel/exec.hpp"
#include "eo/parallel/memo.hpp"

namespace eo::catalan {

using algebra::Integer;
using algebra::Rational;

// (g, mu sorted descending). n is mu.size().
using CatalanKey = std::pair<int, std::vector<int>>;

// Canonical key, or nothing when the count is trivially zero
// (odd degree, a zero entry outside (0,1,(0)), too few edges for the genus).
// Throws InvalidProfile for n = 0 or negative entries.
std::optional<CatalanKey> canonical_key(int g, std::vector<int> mu);

// Top-down memoized evaluation of the edge-removal recursion. Serial reference.
class CatalanCounter {
public:
    Integer count(int g, const std::vector<int>& mu);
    void seed(const CatalanKey& key, const Integer& value) { memo_.assign(key, value); }
    std::vector<std::pair<CatalanKey, Integer>> snapshot() const { return memo_.snapshot(); }
    void clear() { memo_.clear(); }

private:
    parallel::ConcurrentMemo<CatalanKey, Integer> memo_;
};

// Bottom-up table over the closure {(g', n'): g' <= g, g' + n' <= g + n}, filled
// level by level in total degree; each level is computed in parallel.
class CatalanTable {
public:
    CatalanTable(int g, int n, int max_degree, parallel::Exec exec);
    Integer at(int g, const std::vector<int>& mu) const;
    const std::map<CatalanKey, Integer>& entries() const { return table_; }

private:
    std::map<CatalanKey, Integer> table_;
};

CatalanCounter& default_counter();

Integer catalan_count(int g, int n, const std::vector<int>& mu);
// catalan_count / prod mu_i; all mu_i >= 1.
Rational dessin_number(int g, int n, const std::vector<int>& mu);

}  // namespace eo::catalan
