// Copyright 2026 The eternal-guard Authors
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

#include <vector>

namespace eternal {

/// Maximum bipartite matching by repeated augmenting paths (Kuhn).
/// O(|L| * |E|), ample for the few dozen guard units the solver deals with.
class BipartiteMatcher {
 public:
  BipartiteMatcher(int left, int right)
      : adj_(static_cast<std::size_t>(left)),
        match_left_(static_cast<std::size_t>(left), -1),
        match_right_(static_cast<std::size_t>(right), -1),
        stamp_(static_cast<std::size_t>(left), 0) {}

  void add_edge(int l, int r) { adj_[l].push_back(r); }

  int solve() {
    int size = 0;
    for (int l = 0; l < static_cast<int>(adj_.size()); ++l) {
      ++round_;
      if (augment(l)) ++size;
    }
    return size;
  }

  /// Partner of left vertex l after solve(), or -1.
  int partner_of_left(int l) const { return match_left_[l]; }

 private:
  bool augment(int l) {
    if (stamp_[l] == round_) return false;
    stamp_[l] = round_;
    for (int r : adj_[l]) {
      if (match_right_[r] < 0 || augment(match_right_[r])) {
        match_left_[l] = r;
        match_right_[r] = l;
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> match_left_;
  std::vector<int> match_right_;
  std::vector<int> stamp_;
  int round_ = 0;
};

}  // namespace eternal
