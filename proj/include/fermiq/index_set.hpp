// Copyright 2026 The fermiq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace fermiq {

/// Immutable, strictly increasing set of qubit indices.
class IndexSet {
 public:
  using value_type = std::size_t;
  using const_iterator = std::vector<std::size_t>::const_iterator;

  IndexSet() = default;
  IndexSet(std::initializer_list<std::size_t> init) : IndexSet(std::vector(init)) {}

  explicit IndexSet(std::vector<std::size_t> indices) : v_(std::move(indices)) {
    std::sort(v_.begin(), v_.end());
    v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
  }

  /// {first, first+1, ..., last-1}
  static IndexSet range(std::size_t first, std::size_t last) {
    std::vector<std::size_t> v;
    for (std::size_t k = first; k < last; ++k) v.push_back(k);
    return sorted(std::move(v));
  }

  std::size_t size() const noexcept { return v_.size(); }
  bool empty() const noexcept { return v_.empty(); }
  const_iterator begin() const noexcept { return v_.begin(); }
  const_iterator end() const noexcept { return v_.end(); }
  const std::vector<std::size_t>& indices() const noexcept { return v_; }

  bool contains(std::size_t k) const {
    return std::binary_search(v_.begin(), v_.end(), k);
  }

  /// Largest element plus one, 0 for the empty set.
  std::size_t bound() const noexcept { return v_.empty() ? 0 : v_.back() + 1; }

  friend IndexSet operator|(const IndexSet& a, const IndexSet& b) {
    std::vector<std::size_t> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return sorted(std::move(out));
  }
  friend IndexSet operator&(const IndexSet& a, const IndexSet& b) {
    std::vector<std::size_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return sorted(std::move(out));
  }
  /// Symmetric difference.
  friend IndexSet operator^(const IndexSet& a, const IndexSet& b) {
    std::vector<std::size_t> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return sorted(std::move(out));
  }
  friend IndexSet operator-(const IndexSet& a, const IndexSet& b) {
    std::vector<std::size_t> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
    return sorted(std::move(out));
  }

  bool operator==(const IndexSet&) const = default;

  /// "{6,5,3}" style, descending.
  std::string to_string() const {
    std::string s = "{";
    for (auto it = v_.rbegin(); it != v_.rend(); ++it) {
      if (it != v_.rbegin()) s += ',';
      s += std::to_string(*it);
    }
    return s + "}";
  }

 private:
  static IndexSet sorted(std::vector<std::size_t> v) {
    IndexSet s;
    s.v_ = std::move(v);
    return s;
  }

  std::vector<std::size_t> v_;
};

}  // namespace fermiq
