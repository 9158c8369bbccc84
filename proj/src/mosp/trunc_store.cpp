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

#include "mosp/trunc_store.hpp"

#include <algorithm>
#include <stdexcept>

namespace mosp {

void TruncStore::insert(const CostVector& v) {
  if (mode_ == StoreMode::kLexSorted) {
    // Anything v weakly dominates is lexicographically >= v.
    auto pos = std::lower_bound(items_.begin(), items_.end(), v, detail::lexLessUnchecked);
    auto tail = std::remove_if(pos, items_.end(), [&](const CostVector& w) {
      return detail::weaklyDominatesUnchecked(v, w);
    });
    items_.erase(tail, items_.end());
    items_.insert(pos, v);
  } else {
    auto tail = std::remove_if(items_.begin(), items_.end(), [&](const CostVector& w) {
      return detail::weaklyDominatesUnchecked(v, w);
    });
    items_.erase(tail, items_.end());
    items_.push_back(v);
  }
  if (quickCache_) cache_ = v;
}

std::vector<CostVector> TruncStore::extractFirstAtMost(Cost bound) {
  std::vector<CostVector> taken;
  auto keep = std::stable_partition(items_.begin(), items_.end(),
                                    [bound](const CostVector& w) { return w[0] > bound; });
  taken.assign(keep, items_.end());
  items_.erase(keep, items_.end());
  if (quickCache_ && cache_.size() && cache_[0] <= bound) cache_ = CostVector();
  return taken;
}

bool TruncStore::pairwiseNonDominated() const {
  for (std::size_t i = 0; i < items_.size(); ++i) {
    for (std::size_t j = 0; j < items_.size(); ++j) {
      if (i != j && weaklyDominates(items_[i], items_[j])) return false;
    }
  }
  return true;
}

bool TruncStore::isSorted() const {
  return std::is_sorted(items_.begin(), items_.end(),
                        [](const CostVector& a, const CostVector& b) { return lexLess(a, b); });
}

bool isDominatedIn(const TruncatedVector& v, const TruncStore& store) {
  for (const CostVector& w : store.vectors()) {
    if (w.size() != v.size()) throw DimensionError("isDominatedIn: length mismatch");
  }
  return store.isDominated(v.values);
}

void insertNonDominated(const TruncatedVector& v, TruncStore& store) {
  for (const CostVector& w : store.vectors()) {
    if (w.size() != v.size()) throw DimensionError("insertNonDominated: length mismatch");
  }
  if (store.isDominated(v.values)) {
    throw std::logic_error("insertNonDominated: " + v.values.toString() + " is already dominated");
  }
  store.insert(v.values);
}

}  // namespace mosp
