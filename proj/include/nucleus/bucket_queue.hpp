#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "nucleus/common.hpp"

namespace nucleus {

// Min-priority queue over ids 0..n-1 keyed by small non-negative integers that
// only ever decrease by one. pop_min breaks key ties by the smallest tie-break
// priority (the id itself unless a permutation is supplied), which keeps
// peeling orders reproducible.
//
// Buckets hold lazily invalidated copies: a decrement pushes the id into its
// new bucket and the stale copy is skipped when its bucket drains. Each bucket
// is kept as a binary min-heap on the tie-break priority.
class MinBucketQueue {
 public:
  explicit MinBucketQueue(std::vector<std::uint32_t> keys,
                          std::span<const std::uint32_t> tie_priority = {})
      : key_(std::move(keys)), popped_(key_.size(), false), remaining_(key_.size()) {
    if (!tie_priority.empty()) {
      assert(tie_priority.size() == key_.size());
      prio_.assign(tie_priority.begin(), tie_priority.end());
    }
    std::uint32_t max_key = 0;
    for (std::uint32_t k : key_) max_key = std::max(max_key, k);
    buckets_.resize(static_cast<std::size_t>(max_key) + 1);
    std::vector<std::size_t> sizes(buckets_.size(), 0);
    for (std::uint32_t k : key_) ++sizes[k];
    for (std::size_t b = 0; b < buckets_.size(); ++b) buckets_[b].reserve(sizes[b]);
    // Ascending-id fill keeps each bucket sorted, which is a valid min-heap
    // for the identity priority; a custom permutation needs an explicit heapify.
    for (std::uint32_t id = 0; id < key_.size(); ++id) buckets_[key_[id]].push_back(id);
    if (!prio_.empty()) {
      for (auto& b : buckets_) std::make_heap(b.begin(), b.end(), heap_cmp());
    }
  }

  bool empty() const { return remaining_ == 0; }
  std::size_t remaining() const { return remaining_; }

  std::uint32_t key(std::uint32_t id) const { return key_[id]; }
  bool popped(std::uint32_t id) const { return popped_[id]; }

  // Smallest key, ties by priority. Must not be called when empty().
  std::pair<std::uint32_t, std::uint32_t> pop_min() {
    assert(remaining_ > 0);
    for (;;) {
      while (cur_ < buckets_.size() && buckets_[cur_].empty()) ++cur_;
      assert(cur_ < buckets_.size());
      auto& b = buckets_[cur_];
      std::uint32_t id = b.front();
      std::pop_heap(b.begin(), b.end(), heap_cmp());
      b.pop_back();
      if (popped_[id] || key_[id] != cur_) continue;  // stale copy
      popped_[id] = true;
      --remaining_;
      return {id, static_cast<std::uint32_t>(cur_)};
    }
  }

  // key[id] -= 1. Only valid for unpopped ids with key > 0.
  void decrement(std::uint32_t id) {
    assert(!popped_[id] && key_[id] > 0);
    std::uint32_t k = --key_[id];
    auto& b = buckets_[k];
    b.push_back(id);
    std::push_heap(b.begin(), b.end(), heap_cmp());
    if (k < cur_) cur_ = k;
  }

 private:
  struct Cmp {
    const std::vector<std::uint32_t>* prio;
    bool operator()(std::uint32_t a, std::uint32_t b) const {
      if (prio) return (*prio)[a] > (*prio)[b];
      return a > b;
    }
  };
  Cmp heap_cmp() const { return Cmp{prio_.empty() ? nullptr : &prio_}; }

  std::vector<std::uint32_t> key_;
  std::vector<bool> popped_;
  std::vector<std::uint32_t> prio_;
  std::vector<std::vector<std::uint32_t>> buckets_;
  std::size_t remaining_;
  std::size_t cur_ = 0;
};

}  // namespace nucleus
