#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace repring::detail {

// Read-mostly memo table. The factory runs without the lock held, so it may
// recurse into the same cache; a racing duplicate computation is harmless
// because values are pure functions of the key.
template <class Key, class Value>
class SharedCache {
 public:
  template <class Make>
  std::shared_ptr<const Value> get(const Key& key, Make&& make) {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    auto value = std::make_shared<const Value>(make());
    std::unique_lock lock(mutex_);
    return table_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, std::shared_ptr<const Value>> table_;
};

}  // namespace repring::detail
