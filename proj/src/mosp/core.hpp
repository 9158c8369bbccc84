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

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>

namespace mosp {

/// Upper limit on the number of objectives a CostVector can hold.
inline constexpr std::size_t kMaxObjectives = 8;

/// Accumulated path cost. Edge weights are capped at kMaxEdgeWeight on load,
/// so a path over at most 2^32 states cannot overflow 64 bits.
using Cost = std::uint64_t;
inline constexpr Cost kMaxEdgeWeight = std::numeric_limits<std::uint32_t>::max();
inline constexpr Cost kInfiniteCost = std::numeric_limits<Cost>::max();

using StateId = std::uint32_t;
inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();

/// Raised on a shape mismatch between vectors, which is always a caller bug.
class DimensionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Fixed-capacity vector of non-negative integer costs.
class CostVector {
 public:
  CostVector() = default;
  explicit CostVector(std::size_t size);
  CostVector(std::initializer_list<Cost> values);
  explicit CostVector(std::span<const Cost> values);

  static CostVector zeros(std::size_t size) { return CostVector(size); }

  std::size_t size() const { return size_; }
  Cost operator[](std::size_t i) const { return values_[i]; }
  Cost& operator[](std::size_t i) { return values_[i]; }

  const Cost* begin() const { return values_.data(); }
  const Cost* end() const { return values_.data() + size_; }
  std::span<const Cost> values() const { return {values_.data(), size_}; }

  CostVector& operator+=(const CostVector& other);
  friend CostVector operator+(CostVector a, const CostVector& b) {
    a += b;
    return a;
  }

  friend bool operator==(const CostVector& a, const CostVector& b);

  std::string toString() const;

 private:
  std::array<Cost, kMaxObjectives> values_{};
  std::uint8_t size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const CostVector& v);

/// A cost vector with its first `lambda` entries dropped.
struct TruncatedVector {
  CostVector values;
  std::uint8_t lambda = 0;

  /// Position of the first remaining entry within the untruncated ordering.
  std::size_t primaryIndex() const { return lambda; }
  std::size_t size() const { return values.size(); }
  Cost operator[](std::size_t i) const { return values[i]; }

  friend bool operator==(const TruncatedVector&, const TruncatedVector&) = default;
};

/// a ⪯ b: every entry of a is <= the matching entry of b.
bool weaklyDominates(const CostVector& a, const CostVector& b);
bool weaklyDominates(const TruncatedVector& a, const TruncatedVector& b);

/// a ⪯ b and a != b.
bool dominates(const CostVector& a, const CostVector& b);
bool dominates(const TruncatedVector& a, const TruncatedVector& b);

/// Drops the first entry. Throws DimensionError on a scalar.
TruncatedVector truncate(const CostVector& v);
TruncatedVector truncate(const TruncatedVector& v);

/// Applies truncate() `times` times. `times` must be < v.size().
TruncatedVector truncate(const CostVector& v, std::size_t times);

std::strong_ordering lexCompare(const CostVector& a, const CostVector& b);

inline bool lexLess(const CostVector& a, const CostVector& b) {
  return lexCompare(a, b) < 0;
}

// Unchecked kernels for the hot search paths. Callers guarantee equal sizes.
namespace detail {

inline bool weaklyDominatesUnchecked(const CostVector& a, const CostVector& b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline bool lexLessUnchecked(const CostVector& a, const CostVector& b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

// Writes v without its first entry into out.
inline void truncateInto(const CostVector& v, CostVector& out) {
  out = CostVector(v.size() - 1);
  for (std::size_t i = 1; i < v.size(); ++i) out[i - 1] = v[i];
}

}  // namespace detail

/// A search node. `parent` indexes the owning label arena.
struct Label {
  static constexpr std::uint32_t kNoParent = std::numeric_limits<std::uint32_t>::max();

  StateId state = kNoState;
  std::uint32_t parent = kNoParent;
  CostVector g;
  CostVector f;
};

}  // namespace mosp
