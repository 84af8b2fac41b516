#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>

namespace uval {

// Read-mostly memo table.  The value is computed outside the lock; if two
// threads race on the same key the first insert wins and both see it.
template <class Key, class Value>
class MemoCache {
 public:
  template <class F>
  const Value& get(const Key& key, F&& compute) {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    Value v = compute();
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(v)).first->second;
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, Value> table_;  // node-based, so references stay valid
};

}  // namespace uval
