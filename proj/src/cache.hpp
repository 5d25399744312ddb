#pragma once

#include <mutex>

namespace qschubert::detail {

// Fills a populate-once cache slot: computes outside the lock and keeps the
// first value stored for the key.
template <typename Map, typename Key, typename Compute>
const typename Map::mapped_type::element_type& cached(std::mutex& mu, Map& map, const Key& key,
                                                      Compute compute) {
  {
    std::lock_guard lock(mu);
    auto it = map.find(key);
    if (it != map.end()) return *it->second;
  }
  auto value = compute();
  std::lock_guard lock(mu);
  auto [it, inserted] = map.try_emplace(key, std::move(value));
  return *it->second;
}

}  // namespace qschubert::detail
