#pragma once

#include <map>
#include <mutex>
#include <utility>

namespace qfoulkes {

/// Thread-safe memo table.  The value is computed outside the lock; when two
/// threads race on the same key the first insert wins and both return it.
template <typename Key, typename Value>
class Memo {
public:
    template <typename F>
    Value get(const Key& key, F&& compute)
    {
        {
            std::lock_guard lock(mutex_);
            auto it = table_.find(key);
            if (it != table_.end())
                return it->second;
        }
        Value value = compute();
        std::lock_guard lock(mutex_);
        return table_.try_emplace(key, std::move(value)).first->second;
    }

    void clear()
    {
        std::lock_guard lock(mutex_);
        table_.clear();
    }

    std::size_t size() const
    {
        std::lock_guard lock(mutex_);
        return table_.size();
    }

private:
    mutable std::mutex mutex_;
    std::map<Key, Value> table_;
};

}  // namespace qfoulkes
