#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "eo/algebra/rational.hpp"
#include "eo/parallel/exec.hpp"
#include "eo/parallel/memo.hpp"

namespace eo::hurwitz {

using algebra::Integer;
using algebra::Rational;

// (g, mu sorted descending)
using HurwitzKey = std::pair<int, std::vector<int>>;

// Number of simple branch points, 2g - 2 + n + |mu|.
int branch_points(int g, const std::vector<int>& mu);

// Canonical key, or nothing when r < 0 or g < 0. Throws InvalidProfile for an empty
// profile or a non-positive part.
std::optional<HurwitzKey> canonical_key(int g, std::vector<int> mu);

// Top-down memoized cut-and-join. Serial reference.
class HurwitzCounter {
public:
    Rational number(int g, const std::vector<int>& mu);
    void seed(const HurwitzKey& key, const Rational& value) { memo_.assign(key, value); }
    std::vector<std::pair<HurwitzKey, Rational>> snapshot() const { return memo_.snapshot(); }
    void clear() { memo_.clear(); }

private:
    parallel::ConcurrentMemo<HurwitzKey, Rational> memo_;
};

// Bottom-up table over {(g', n'): g' <= g, g' + n' <= g + n, |mu| <= max_degree},
// filled level by level in r; each level is computed in parallel.
class HurwitzTable {
public:
    HurwitzTable(int g, int n, int max_degree, parallel::Exec exec);
    Rational at(int g, const std::vector<int>& mu) const;
    const std::map<HurwitzKey, Rational>& entries() const { return table_; }

private:
    std::map<HurwitzKey, Rational> table_;
};

HurwitzCounter& default_counter();

Rational hurwitz_number(int g, int n, const std::vector<int>& mu);
// r!/|Aut mu| * H: the count with unlabeled poles.
Rational labeled_hurwitz(int g, const std::vector<int>& mu);
// |Aut mu| = prod over values of (multiplicity)!
Integer automorphisms(const std::vector<int>& mu);

}  // namespace eo::hurwitz
