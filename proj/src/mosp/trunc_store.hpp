// Copyright 2026 The mosp Authors
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

#include <cstdint>
#include <span>
#include <vector>

#include "mosp/core.hpp"

namespace mosp {

enum class StoreMode : std::uint8_t {
  kUnordered,  // append; every check scans the whole list
  kLexSorted,  // sorted under lexCompare; checks stop at the first entry past the probe
};

enum class DominanceHit : std::uint8_t { kNone, kQuick, kScan };

/// Antichain of truncated cost vectors kept for one state.
///
/// All stored vectors have the same length and none weakly dominates
/// another. With the quick cache enabled the most recently inserted vector
/// is probed before the full scan.
class TruncStore {
 public:
  TruncStore() = default;
  TruncStore(StoreMode mode, bool quickCache) : mode_(mode), quickCache_(quickCache) {}

  StoreMode mode() const { return mode_; }
  bool quickCacheEnabled() const { return quickCache_; }

  /// True iff some stored vector weakly dominates v.
  bool isDominated(const CostVector& v) const { return probe(v) != DominanceHit::kNone; }

  /// Like isDominated() but reports whether the cache answered.
  DominanceHit probe(const CostVector& v) const {
    if (quickCache_ && cache_.size() != 0 && detail::weaklyDominatesUnchecked(cache_, v)) {
      return DominanceHit::kQuick;
    }
    if (mode_ == StoreMode::kLexSorted) {
      for (const CostVector& w : items_) {
        if (w[0] > v[0]) break;
        if (detail::weaklyDominatesUnchecked(w, v)) return DominanceHit::kScan;
      }
    } else {
      for (const CostVector& w : items_) {
        if (detail::weaklyDominatesUnchecked(w, v)) return DominanceHit::kScan;
      }
    }
    return DominanceHit::kNone;
  }

  /// Removes every stored vector that v weakly dominates, then adds v.
  /// Precondition: !isDominated(v).
  void insert(const CostVector& v);

  /// Removes and returns every vector whose first entry is <= bound.
  std::vector<CostVector> extractFirstAtMost(Cost bound);

  std::span<const CostVector> vectors() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const CostVector* cached() const { return cache_.size() ? &cache_ : nullptr; }

  bool pairwiseNonDominated() const;
  bool isSorted() const;

 private:
  std::vector<CostVector> items_;
  CostVector cache_;
  StoreMode mode_ = StoreMode::kUnordered;
  bool quickCache_ = false;
};

/// Checked wrappers over TruncStore in terms of TruncatedVector. Both reject
/// length mismatches; insertNonDominated also rejects a dominated vector.
bool isDominatedIn(const TruncatedVector& v, const TruncStore& store);
void insertNonDominated(const TruncatedVector& v, TruncStore& store);

}  // namespace mosp
