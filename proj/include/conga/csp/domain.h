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

#ifndef CONGA_CSP_DOMAIN_H_
#define CONGA_CSP_DOMAIN_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace conga::csp {

using Value = std::int64_t;

// A finite set of integers.
//
// Two representations are used internally. An interval [min, max] with an
// optional sorted list of holes is the default; a sparse domain (for
// instance the support set of a table constraint over a wide range) is kept
// as an explicit sorted value list instead. All mutators return true iff the
// set changed. An empty domain is a wipe-out.
class Domain {
 public:
  // The empty domain.
  Domain() = default;

  static Domain Interval(Value lo, Value hi);
  static Domain Singleton(Value v) { return Interval(v, v); }
  // Sorts and deduplicates.
  static Domain FromValues(std::vector<Value> values);

  bool empty() const { return lo_ > hi_; }
  bool fixed() const { return lo_ == hi_; }
  Value min() const { return lo_; }
  Value max() const { return hi_; }
  std::uint64_t size() const;
  bool contains(Value v) const;

  // Smallest member >= v, or max()+1 if none.
  Value NextAtLeast(Value v) const;
  // Largest member <= v, or min()-1 if none.
  Value PrevAtMost(Value v) const;

  bool RemoveBelow(Value v);
  bool RemoveAbove(Value v);
  bool Remove(Value v);
  bool Assign(Value v);
  // `sorted` must be strictly increasing.
  bool IntersectWith(std::span<const Value> sorted);
  bool IntersectWith(const Domain& other);
  bool Intersects(const Domain& other) const;

  std::vector<Value> Values() const;

  template <typename F>
  void ForEachValue(F&& f) const {
    if (empty()) return;
    if (sparse_) {
      for (Value v : values_) f(v);
      return;
    }
    auto hole = values_.begin();
    for (Value v = lo_;; ++v) {
      if (hole != values_.end() && *hole == v) {
        ++hole;
      } else {
        f(v);
      }
      if (v == hi_) break;
    }
  }

  std::string ToString() const;

  friend bool operator==(const Domain& a, const Domain& b);

 private:
  void MakeEmpty();
  // Re-establishes lo_/hi_ as members and drops holes outside them.
  void Normalize();

  Value lo_ = 1;
  Value hi_ = 0;
  // Sparse: the members. Otherwise: holes strictly inside (lo_, hi_).
  std::vector<Value> values_;
  bool sparse_ = false;
};

}  // namespace conga::csp

#endif  // CONGA_CSP_DOMAIN_H_
