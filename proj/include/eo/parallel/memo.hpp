#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <utility>
#include <vector>

namespace eo::parallel {

// Idempotent concurrent cache. Values are computed outside the lock; when two
// threads race on a key, the first insertion wins and both see that value.
template <class Key, class Value, class Compare = std::less<Key>>
class ConcurrentMemo {
public:
    std::optional<Value> find(const Key& k) const {
        std::shared_lock lock(m_);
        auto it = map_.find(k);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

    Value insert(const Key& k, Value v) {
        std::unique_lock lock(m_);
        return map_.try_emplace(k, std::move(v)).first->second;
    }

    void assign(const Key& k, Value v) {
        std::unique_lock lock(m_);
        map_.insert_or_assign(k, std::move(v));
    }

    template <class F>
    Value get_or_compute(const Key& k, F&& compute) {
        if (auto hit = find(k)) return *hit;
        return insert(k, compute());
    }

    std::vector<std::pair<Key, Value>> snapshot() const {
        std::shared_lock lock(m_);
        return {map_.begin(), map_.end()};
    }

    std::size_t size() const {
        std::shared_lock lock(m_);
        return map_.size();
    }

    void clear() {
        std::unique_lock lock(m_);
        map_.clear();
    }

private:
    mutable std::shared_mutex m_;
    std::map<Key, Value, Compare> map_;
};

}  // namespace eo::parallel
