#pragma once

#include <functional>
#include <vector>

#include "eo/algebra/rational.hpp"

namespace eo {

// Sorted-descending partitions of `total` into exactly `parts` positive parts.
std::vector<std::vector<int>> partitions_into(int total, int parts);

// Multiset as (value, multiplicity) pairs.
std::vector<std::pair<int, int>> group_values(const std::vector<int>& sorted);

// Visit every sub-multiset I of `groups` with its complement J and weight prod C(m_v, k_v).
void for_each_submultiset(const std::vector<std::pair<int, int>>& groups,
                          const std::function<void(const std::vector<int>&, const std::vector<int>&, const algebra::Integer&)>& visit);

// Number of distinct orderings of a multiset.
algebra::Integer distinct_permutations(const std::vector<int>& values);

}  // namespace eo
