// Copyright 2026 The lrc-bounds Authors.
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

#include "lrc/coord_set.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

#include <fmt/format.h>

namespace lrc {

CoordSet::CoordSet(std::initializer_list<int> zero_based) : CoordSet(std::vector<int>(zero_based)) {}

CoordSet::CoordSet(std::vector<int> zero_based) : members_(std::move(zero_based)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.front() < 0) throw std::out_of_range("negative coordinate index");
}

CoordSet CoordSet::from_one_based(std::span<const int> members, int n) {
  std::vector<int> v;
  v.reserve(members.size());
  for (int m : members) {
    if (m < 1 || m > n) throw std::out_of_range(fmt::format("coordinate {} outside [1, {}]", m, n));
    v.push_back(m - 1);
  }
  CoordSet s(std::move(v));
  if (s.size() != static_cast<int>(members.size())) throw std::invalid_argument("duplicate coordinate in set");
  return s;
}

CoordSet CoordSet::full(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  CoordSet s;
  s.members_ = std::move(v);
  return s;
}

std::vector<int> CoordSet::to_one_based() const {
  std::vector<int> out(members_);
  for (int& x : out) ++x;
  return out;
}

std::string CoordSet::to_string() const { return fmt::format("{{{}}}", fmt::join(to_one_based(), ",")); }

bool CoordSet::contains(int i) const { return std::binary_search(members_.begin(), members_.end(), i); }

bool CoordSet::is_subset_of(const CoordSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

CoordSet CoordSet::united(const CoordSet& other) const {
  CoordSet out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                 std::back_inserter(out.members_));
  return out;
}

CoordSet CoordSet::intersected(const CoordSet& other) const {
  CoordSet out;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                        std::back_inserter(out.members_));
  return out;
}

CoordSet CoordSet::minus(const CoordSet& other) const {
  CoordSet out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                      std::back_inserter(out.members_));
  return out;
}

CoordSet CoordSet::complement(int n) const { return full(n).minus(*this); }

CoordSet CoordSet::with(int i) const {
  CoordSet out(*this);
  auto it = std::lower_bound(out.members_.begin(), out.members_.end(), i);
  if (it == out.members_.end() || *it != i) out.members_.insert(it, i);
  return out;
}

bool shortlex_less(const CoordSet& a, const CoordSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace lrc
