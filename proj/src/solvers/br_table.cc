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

#include "conga/solvers/br_table.h"

#include <stdexcept>

namespace conga {

BrTable::BrTable(std::size_t depth, std::size_t capacity)
    : depth_(depth), capacity_(capacity) {
  Reset();
}

std::int32_t BrTable::Walk(std::span<const std::uint64_t> context) const {
  if (context.size() != depth_) {
    throw std::invalid_argument("context length does not match table depth");
  }
  std::int32_t node = 0;
  for (std::uint64_t key : context) {
    const auto& children = nodes_[node].children;
    auto it = children.find(key);
    if (it == children.end()) return -1;
    node = it->second;
  }
  return node;
}

const BrTable::Entry* BrTable::Find(
    std::span<const std::uint64_t> context) const {
  const std::int32_t node = Walk(context);
  if (node < 0 || nodes_[node].entry < 0) return nullptr;
  return &entries_[nodes_[node].entry];
}

BrTable::InsertResult BrTable::Insert(Entry entry) {
  if (Find(entry.context) != nullptr) return InsertResult::kExisting;
  if (capacity_ != 0 && live_ >= capacity_) return InsertResult::kFull;
  std::int32_t node = 0;
  for (std::uint64_t key : entry.context) {
    auto it = nodes_[node].children.find(key);
    if (it != nodes_[node].children.end()) {
      node = it->second;
      continue;
    }
    const auto child = static_cast<std::int32_t>(nodes_.size());
    nodes_[node].children.emplace(key, child);
    nodes_.emplace_back();
    node = child;
  }
  const auto id = static_cast<std::int32_t>(entries_.size());
  entries_.push_back(std::move(entry));
  leaf_of_.push_back(node);
  nodes_[node].entry = id;
  order_.push_back(id);
  ++live_;
  return InsertResult::kInserted;
}

void BrTable::EvictOldest() {
  if (order_.empty()) return;
  const std::int32_t id = order_.front();
  order_.pop_front();
  nodes_[leaf_of_[id]].entry = -1;
  leaf_of_[id] = -1;
  --live_;
}

void BrTable::Reset() {
  nodes_.assign(1, Node{});
  entries_.clear();
  leaf_of_.clear();
  order_.clear();
  live_ = 0;
}

}  // namespace conga
