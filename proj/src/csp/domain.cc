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

#include "conga/csp/domain.h"

#include <algorithm>
#include <sstream>

namespace conga::csp {

Domain Domain::Interval(Value lo, Value hi) {
  Domain d;
  if (lo <= hi) {
    d.lo_ = lo;
    d.hi_ = hi;
  }
  return d;
}

Domain Domain::FromValues(std::vector<Value> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  Domain d;
  if (values.empty()) return d;
  d.lo_ = values.front();
  d.hi_ = values.back();
  const std::uint64_t span = static_cast<std::uint64_t>(d.hi_ - d.lo_) + 1;
  const std::uint64_t holes = span - values.size();
  if (holes == 0) return d;
  if (holes <= values.size()) {
    std::vector<Value> gaps;
    gaps.reserve(holes);
    for (std::size_t k = 1; k < values.size(); ++k) {
      for (Value v = values[k - 1] + 1; v < values[k]; ++v) gaps.push_back(v);
    }
    d.values_ = std::move(gaps);
  } else {
    d.values_ = std::move(values);
    d.sparse_ = true;
  }
  return d;
}

std::uint64_t Domain::size() const {
  if (empty()) return 0;
  if (sparse_) return values_.size();
  return static_cast<std::uint64_t>(hi_ - lo_) + 1 - values_.size();
}

bool Domain::contains(Value v) const {
  if (v < lo_ || v > hi_) return false;
  if (sparse_) return std::binary_search(values_.begin(), values_.end(), v);
  return !std::binary_search(values_.begin(), values_.end(), v);
}

Value Domain::NextAtLeast(Value v) const {
  if (empty() || v > hi_) return hi_ + 1;
  if (v <= lo_) return lo_;
  if (sparse_) return *std::lower_bound(values_.begin(), values_.end(), v);
  auto it = std::lower_bound(values_.begin(), values_.end(), v);
  while (it != values_.end() && *it == v) {
    ++it;
    ++v;
  }
  return v;
}

Value Domain::PrevAtMost(Value v) const {
  if (empty() || v < lo_) return lo_ - 1;
  if (v >= hi_) return hi_;
  if (sparse_) {
    auto it = std::upper_bound(values_.begin(), values_.end(), v);
    return *(it - 1);
  }
  auto it = std::upper_bound(values_.begin(), values_.end(), v);
  while (it != values_.begin() && *(it - 1) == v) {
    --it;
    --v;
  }
  return v;
}

void Domain::MakeEmpty() {
  lo_ = 1;
  hi_ = 0;
  values_.clear();
  sparse_ = false;
}

void Domain::Normalize() {
  if (lo_ > hi_) {
    MakeEmpty();
    return;
  }
  if (sparse_) {
    auto first = std::lower_bound(values_.begin(), values_.end(), lo_);
    values_.erase(values_.begin(), first);
    auto last = std::upper_bound(values_.begin(), values_.end(), hi_);
    values_.erase(last, values_.end());
    if (values_.empty()) {
      MakeEmpty();
      return;
    }
    lo_ = values_.front();
    hi_ = values_.back();
    if (static_cast<std::uint64_t>(hi_ - lo_) + 1 == values_.size()) {
      values_.clear();
      sparse_ = false;
    }
    return;
  }
  auto first = std::upper_bound(values_.begin(), values_.end(), lo_);
  values_.erase(values_.begin(), first);
  auto last = std::lower_bound(values_.begin(), values_.end(), hi_);
  values_.erase(last, values_.end());
}

bool Domain::RemoveBelow(Value v) {
  if (empty() || v <= lo_) return false;
  if (v > hi_) {
    MakeEmpty();
    return true;
  }
  lo_ = NextAtLeast(v);
  Normalize();
  return true;
}

bool Domain::RemoveAbove(Value v) {
  if (empty() || v >= hi_) return false;
  if (v < lo_) {
    MakeEmpty();
    return true;
  }
  hi_ = PrevAtMost(v);
  Normalize();
  return true;
}

bool Domain::Remove(Value v) {
  if (!contains(v)) return false;
  if (lo_ == hi_) {
    MakeEmpty();
    return true;
  }
  if (v == lo_) return RemoveBelow(v + 1);
  if (v == hi_) return RemoveAbove(v - 1);
  auto it = std::lower_bound(values_.begin(), values_.end(), v);
  if (sparse_) {
    values_.erase(it);
  } else {
    values_.insert(it, v);
  }
  return true;
}

bool Domain::Assign(Value v) {
  if (empty()) return false;
  if (!contains(v)) {
    MakeEmpty();
    return true;
  }
  if (lo_ == hi_) return false;
  lo_ = hi_ = v;
  values_.clear();
  sparse_ = false;
  return true;
}

bool Domain::IntersectWith(std::span<const Value> sorted) {
  if (empty()) return false;
  std::vector<Value> kept;
  auto first = std::lower_bound(sorted.begin(), sorted.end(), lo_);
  for (auto it = first; it != sorted.end() && *it <= hi_; ++it) {
    if (contains(*it)) kept.push_back(*it);
  }
  if (kept.size() == size()) return false;
  *this = FromValues(std::move(kept));
  return true;
}

bool Domain::IntersectWith(const Domain& other) {
  if (empty()) return false;
  if (other.empty()) {
    MakeEmpty();
    return true;
  }
  if (!other.sparse_ && other.values_.empty()) {
    bool changed = RemoveBelow(other.lo_);
    changed |= RemoveAbove(other.hi_);
    return changed;
  }
  const std::vector<Value> members = other.Values();
  return IntersectWith(std::span<const Value>(members));
}

bool Domain::Intersects(const Domain& other) const {
  if (empty() || other.empty()) return false;
  Value v = std::max(lo_, other.lo_);
  while (true) {
    v = NextAtLeast(v);
    if (v > hi_) return false;
    const Value w = other.NextAtLeast(v);
    if (w > other.hi_) return false;
    if (w == v) return true;
    v = w;
  }
}

std::vector<Value> Domain::Values() const {
  std::vector<Value> out;
  out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(size(), 1 << 20)));
  ForEachValue([&](Value v) { out.push_back(v); });
  return out;
}

std::string Domain::ToString() const {
  if (empty()) return "{}";
  std::ostringstream os;
  if (!sparse_ && values_.empty()) {
    if (lo_ == hi_) {
      os << "{" << lo_ << "}";
    } else {
      os << lo_ << ".." << hi_;
    }
    return os.str();
  }
  os << "{";
  bool first = true;
  ForEachValue([&](Value v) {
    if (!first) os << ", ";
    os << v;
    first = false;
  });
  os << "}";
  return os.str();
}

bool operator==(const Domain& a, const Domain& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  if (a.lo_ != b.lo_ || a.hi_ != b.hi_ || a.size() != b.size()) return false;
  if (a.sparse_ == b.sparse_) return a.values_ == b.values_;
  return a.Values() == b.Values();
}

}  // namespace conga::csp
