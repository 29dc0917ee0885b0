// Copyright 2026 The renner Authors
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

#ifndef RENNER_PARTIAL_INJECTION_HPP_
#define RENNER_PARTIAL_INJECTION_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>

namespace renner {

// An injective partial map on {1, ..., degree}; the faithful model of a rook
// matrix. The 0/1 matrix with entry (i, j) = 1 corresponds to the map j -> i,
// so matrix products are compositions with the right factor applied first.
//
// Points are 1-based. Image value 0 means "undefined".
class PartialInjection {
 public:
  static constexpr int kMaxDegree = 12;
  static constexpr int kUndefined = 0;

  PartialInjection() noexcept = default;

  // The empty map (zero matrix) of the given degree.
  explicit PartialInjection(int degree);

  static PartialInjection identity(int degree);

  // images[j - 1] is the image of j, or 0. Throws renner::Error on repeated
  // values, out-of-range values or an oversized degree.
  static PartialInjection from_images(std::span<const int> images);

  // The identity restricted to the given points.
  static PartialInjection identity_on(int degree, std::span<const int> points);

  // The permutation that is the product of the given disjoint transpositions.
  static PartialInjection from_transpositions(
      int degree, std::span<const std::pair<int, int>> transpositions);

  int degree() const noexcept { return degree_; }

  // Image of point, or kUndefined.
  int operator[](int point) const noexcept { return image_[point - 1]; }

  bool defined_at(int point) const noexcept {
    return image_[point - 1] != kUndefined;
  }

  // Number of defined points (rank of the rook matrix).
  int rank() const noexcept;

  bool is_total() const noexcept { return rank() == degree_; }
  bool is_idempotent() const noexcept;

  // Bit (j - 1) is set iff j is in the domain / image.
  std::uint32_t domain_mask() const noexcept;
  std::uint32_t image_mask() const noexcept;

  // Reverses every arrow: the unique y with x y x = x and y x y = y.
  PartialInjection inverse() const noexcept;

  // "{1->2, 3->3}"; the empty map prints as "{}".
  std::string to_string() const;

  std::size_t hash() const noexcept;

  friend PartialInjection compose(const PartialInjection& x,
                                  const PartialInjection& y);

  friend bool operator==(const PartialInjection&,
                         const PartialInjection&) = default;
  friend auto operator<=>(const PartialInjection&,
                          const PartialInjection&) = default;

 private:
  std::uint8_t degree_ = 0;
  std::array<std::uint8_t, kMaxDegree> image_{};
};

// (x * y)(j) = x(y(j)). Throws renner::Error on a degree mismatch.
PartialInjection compose(const PartialInjection& x, const PartialInjection& y);

inline PartialInjection operator*(const PartialInjection& x,
                                  const PartialInjection& y) {
  return compose(x, y);
}

struct PartialInjectionHash {
  std::size_t operator()(const PartialInjection& x) const noexcept {
    return x.hash();
  }
};

}  // namespace renner

#endif  // RENNER_PARTIAL_INJECTION_HPP_
