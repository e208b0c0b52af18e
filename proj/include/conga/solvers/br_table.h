// Copyright 2026 The Conga Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CONGA_SOLVERS_BR_TABLE_H_
#define CONGA_SOLVERS_BR_TABLE_H_

#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <span>
#include <vector>

namespace conga {

// Best-response table of one player: a trie whose levels are the other
// players' strategy indices, in player order. A leaf holds the player's
// best-response set for that context; `all` marks the case where the
// player's goal cannot be met and every strategy is kept.
class BrTable {
 public:
  struct Entry {
    std::vector<std::uint64_t> context;
    std::vector<std::uint64_t> best;  // sorted; unused when `all`
    bool all = false;
    std::uint64_t epoch = 0;  // caller-defined insertion tag
  };

  enum class InsertResult { kInserted, kExisting, kFull };

  // `capacity` 0 means unbounded.
  explicit BrTable(std::size_t depth, std::size_t capacity = 0);

  std::size_t depth() const { return depth_; }
  std::size_t size() const { return live_; }
  std::size_t capacity() const { return capacity_; }

  const Entry* Find(std::span<const std::uint64_t> context) const;
  // Never overwrites an existing entry; refuses new ones when full.
  InsertResult Insert(Entry entry);
  // Drops the least recently inserted live entry, if any.
  void EvictOldest();
  void Reset();

  // Visits live entries in lexicographic order of their contexts.
  template <class Fn>
  void ForEach(Fn fn) const {
    Visit(0, fn);
  }

 private:
  struct Node {
    std::map<std::uint64_t, std::int32_t> children;
    std::int32_t entry = -1;
  };

  template <class Fn>
  void Visit(std::int32_t node, Fn& fn) const {
    const Node& n = nodes_[node];
    if (n.entry >= 0) fn(entries_[n.entry]);
    for (const auto& [key, child] : n.children) Visit(child, fn);
  }

  std::int32_t Walk(std::span<const std::uint64_t> context) const;

  std::size_t depth_;
  std::size_t capacity_;
  std::size_t live_ = 0;
  std::vector<Node> nodes_;
  std::vector<Entry> entries_;
  std::vector<std::int32_t> leaf_of_;  // entry -> node, -1 once evicted
  std::deque<std::int32_t> order_;     // live entries, oldest first
};

}  // namespace conga

#endif  // CONGA_SOLVERS_BR_TABLE_H_
