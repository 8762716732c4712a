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

#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace lrc {

// A subset of the coordinate positions of a code.
//
// Members are 0-based and kept sorted and unique. All reports and file
// formats use 1-based positions; convert with from_one_based/to_one_based.
class CoordSet {
 public:
  CoordSet() = default;
  CoordSet(std::initializer_list<int> zero_based);
  explicit CoordSet(std::vector<int> zero_based);

  // Throws std::out_of_range for members outside [1, n] and
  // std::invalid_argument for duplicates.
  static CoordSet from_one_based(std::span<const int> members, int n);
  // {0, ..., n-1}
  static CoordSet full(int n);

  std::vector<int> to_one_based() const;
  std::string to_string() const;  // e.g. "{1,2,5}"

  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(int i) const;
  // Largest member + 1, or 0 for the empty set.
  int bound() const { return members_.empty() ? 0 : members_.back() + 1; }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool is_subset_of(const CoordSet& other) const;
  CoordSet united(const CoordSet& other) const;
  CoordSet intersected(const CoordSet& other) const;
  CoordSet minus(const CoordSet& other) const;
  CoordSet complement(int n) const;
  CoordSet with(int i) const;

  // Lexicographic order on the sorted member lists.
  friend auto operator<=>(const CoordSet&, const CoordSet&) = default;
  friend bool operator==(const CoordSet&, const CoordSet&) = default;

 private:
  std::vector<int> members_;
};

// Order by size, then lexicographically. Used to pick deterministic witnesses.
bool shortlex_less(const CoordSet& a, const CoordSet& b);

}  // namespace lrc
