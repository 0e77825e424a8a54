#include "eo/combinatorics.hpp"

#include <algorithm>

namespace eo {

namespace {

void partitions_rec(int remaining, int parts, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (parts == 0) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    int hi = std::min(max_part, remaining - (parts - 1));
    int lo = (remaining + parts - 1) / parts;
    for (int v = hi; v >= lo; --v) {
        cur.push_back(v);
        partitions_rec(remaining - v, parts - 1, v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> partitions_into(int total, int parts) {
    std::vector<std::vector<int>> out;
    if (parts <= 0 || total < parts) return out;
    std::vector<int> cur;
    partitions_rec(total, parts, total, cur, out);
    return out;
}

std::vector<std::pair<int, int>> group_values(const std::vector<int>& sorted) {
    std::vector<std::pair<int, int>> g;
    for (int v : sorted) {
        if (!g.empty() && g.back().first == v)
            ++g.back().second;
        else
            g.emplace_back(v, 1);
    }
    return g;
}

void for_each_submultiset(const std::vector<std::pair<int, int>>& groups,
                          const std::function<void(const std::vector<int>&, const std::vector<int>&, const algebra::Integer&)>& visit) {
    std::vector<int> take(groups.size(), 0);
    std::vector<int> in, out;
    for (;;) {
        in.clear();
        out.clear();
        algebra::Integer w = 1;
        for (std::size_t i = 0; i < groups.size(); ++i) {
            in.insert(in.end(), static_cast<std::size_t>(take[i]), groups[i].first);
            out.insert(out.end(), static_cast<std::size_t>(groups[i].second - take[i]), groups[i].first);
            w *= algebra::binomial(static_cast<unsigned>(groups[i].second), static_cast<unsigned>(take[i]));
        }
        visit(in, out, w);
        std::size_t i = 0;
        while (i < groups.size() && take[i] == groups[i].second) take[i++] = 0;
        if (i == groups.size()) return;
        ++take[i];
    }
}

algebra::Integer distinct_permutations(const std::vector<int>& values) {
    std::vector<int> v = values;
    std::sort(v.begin(), v.end());
    algebra::Integer r = algebra::factorial(static_cast<unsigned>(v.size()));
    for (const auto& [val, m] : group_values(v)) r /= algebra::factorial(static_cast<unsigned>(m));
    return r;
}

}  // namespace eo
