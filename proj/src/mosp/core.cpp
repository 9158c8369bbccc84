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

#include "mosp/core.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace mosp {

namespace {

void requireSameSize(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": length mismatch (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

CostVector::CostVector(std::size_t size) {
  if (size > kMaxObjectives) {
    throw DimensionError("CostVector: " + std::to_string(size) + " entries exceeds capacity " +
                         std::to_string(kMaxObjectives));
  }
  size_ = static_cast<std::uint8_t>(size);
}

CostVector::CostVector(std::initializer_list<Cost> values)
    : CostVector(std::span<const Cost>(values.begin(), values.size())) {}

CostVector::CostVector(std::span<const Cost> values) : CostVector(values.size()) {
  std::copy(values.begin(), values.end(), values_.begin());
}

CostVector& CostVector::operator+=(const CostVector& other) {
  requireSameSize(size_, other.size_, "operator+=");
  for (std::size_t i = 0; i < size_; ++i) values_[i] += other.values_[i];
  return *this;
}

bool operator==(const CostVector& a, const CostVector& b) {
  return a.size_ == b.size_ && std::equal(a.begin(), a.end(), b.begin());
}

std::string CostVector::toString() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CostVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os << ')';
}

bool weaklyDominates(const CostVector& a, const CostVector& b) {
  requireSameSize(a.size(), b.size(), "weaklyDominates");
  return detail::weaklyDominatesUnchecked(a, b);
}

bool weaklyDominates(const TruncatedVector& a, const TruncatedVector& b) {
  return weaklyDominates(a.values, b.values);
}

bool dominates(const CostVector& a, const CostVector& b) {
  return weaklyDominates(a, b) && !(a == b);
}

bool dominates(const TruncatedVector& a, const TruncatedVector& b) {
  return dominates(a.values, b.values);
}

TruncatedVector truncate(const CostVector& v) {
  if (v.size() < 2) throw DimensionError("truncate: cannot truncate a scalar");
  TruncatedVector out;
  detail::truncateInto(v, out.values);
  out.lambda = 1;
  return out;
}

TruncatedVector truncate(const TruncatedVector& v) {
  TruncatedVector out = truncate(v.values);
  out.lambda = static_cast<std::uint8_t>(v.lambda + 1);
  return out;
}

TruncatedVector truncate(const CostVector& v, std::size_t times) {
  if (times == 0 || times >= v.size()) {
    throw DimensionError("truncate: " + std::to_string(times) + " truncations of a length-" +
                         std::to_string(v.size()) + " vector");
  }
  TruncatedVector out = truncate(v);
  for (std::size_t i = 1; i < times; ++i) out = truncate(out);
  return out;
}

std::strong_ordering lexCompare(const CostVector& a, const CostVector& b) {
  requireSameSize(a.size(), b.size(), "lexCompare");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace mosp
