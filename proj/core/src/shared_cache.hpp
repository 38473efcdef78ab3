#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace schurweyl::detail {

// Read-mostly memo table: lookups take a shared lock, inserts a unique lock.
// Values are built outside the lock; a racing insert keeps the first value.
template <class Key, class Value> class SharedCache {
  public:
    template <class Make> const Value &get(const Key &key, Make &&make) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = map_.find(key); it != map_.end())
                return *it->second;
        }
        auto value = std::make_unique<Value>(make());
        std::unique_lock lock(mutex_);
        auto [it, inserted] = map_.try_emplace(key, std::move(value));
        return *it->second;
    }

  private:
    std::shared_mutex mutex_;
    std::map<Key, std::unique_ptr<Value>> map_;
};

} // namespace schurweyl::detail
