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

#include "renner/partial_injection.hpp"

#include <bit>

#include "renner/error.hpp"

namespace renner {

namespace {

void check_degree(int degree) {
  if (degree < 0 || degree > PartialInjection::kMaxDegree) {
    throw Error("degree " + std::to_string(degree) + " not in 0.." +
                std::to_string(PartialInjection::kMaxDegree));
  }
}

}  // namespace

PartialInjection::PartialInjection(int degree) {
  check_degree(degree);
  degree_ = static_cast<std::uint8_t>(degree);
}

PartialInjection PartialInjection::identity(int degree) {
  PartialInjection x(degree);
  for (int j = 1; j <= degree; ++j) {
    x.image_[j - 1] = static_cast<std::uint8_t>(j);
  }
  return x;
}

PartialInjection PartialInjection::from_images(std::span<const int> images) {
  int const degree = static_cast<int>(images.size());
  PartialInjection x(degree);
  std::uint32_t seen = 0;
  for (int j = 1; j <= degree; ++j) {
    int const i = images[j - 1];
    if (i == kUndefined) {
      continue;
    }
    if (i < 1 || i > degree) {
      throw Error("image " + std::to_string(i) + " of point " +
                  std::to_string(j) + " out of range 1.." +
                  std::to_string(degree));
    }
    std::uint32_t const bit = 1u << (i - 1);
    if (seen & bit) {
      throw Error("partial map is not injective: value " + std::to_string(i) +
                  " repeated");
    }
    seen |= bit;
    x.image_[j - 1] = static_cast<std::uint8_t>(i);
  }
  return x;
}

PartialInjection PartialInjection::identity_on(int degree,
                                               std::span<const int> points) {
  PartialInjection x(degree);
  for (int j : points) {
    if (j < 1 || j > degree) {
      throw Error("point " + std::to_string(j) + " out of range");
    }
    x.image_[j - 1] = static_cast<std::uint8_t>(j);
  }
  return x;
}

PartialInjection PartialInjection::from_transpositions(
    int degree, std::span<const std::pair<int, int>> transpositions) {
  PartialInjection x = identity(degree);
  std::uint32_t moved = 0;
  for (auto [a, b] : transpositions) {
    if (a < 1 || a > degree || b < 1 || b > degree || a == b) {
      throw Error("bad transposition (" + std::to_string(a) + "," +
                  std::to_string(b) + ")");
    }
    std::uint32_t const bits = (1u << (a - 1)) | (1u << (b - 1));
    if (moved & bits) {
      throw Error("transpositions are not disjoint");
    }
    moved |= bits;
    x.image_[a - 1] = static_cast<std::uint8_t>(b);
    x.image_[b - 1] = static_cast<std::uint8_t>(a);
  }
  return x;
}

int PartialInjection::rank() const noexcept {
  return std::popcount(domain_mask());
}

bool PartialInjection::is_idempotent() const noexcept {
  for (int j = 1; j <= degree_; ++j) {
    int const i = image_[j - 1];
    if (i != kUndefined && i != j) {
      return false;
    }
  }
  return true;
}

std::uint32_t PartialInjection::domain_mask() const noexcept {
  std::uint32_t mask = 0;
  for (int j = 1; j <= degree_; ++j) {
    if (image_[j - 1] != kUndefined) {
      mask |= 1u << (j - 1);
    }
  }
  return mask;
}

std::uint32_t PartialInjection::image_mask() const noexcept {
  std::uint32_t mask = 0;
  for (int j = 1; j <= degree_; ++j) {
    if (image_[j - 1] != kUndefined) {
      mask |= 1u << (image_[j - 1] - 1);
    }
  }
  return mask;
}

PartialInjection PartialInjection::inverse() const noexcept {
  PartialInjection y;
  y.degree_ = degree_;
  for (int j = 1; j <= degree_; ++j) {
    if (image_[j - 1] != kUndefined) {
      y.image_[image_[j - 1] - 1] = static_cast<std::uint8_t>(j);
    }
  }
  return y;
}

std::string PartialInjection::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int j = 1; j <= degree_; ++j) {
    if (image_[j - 1] == kUndefined) {
      continue;
    }
    if (!first) {
      out += ", ";
    }
    first = false;
    out += std::to_string(j) + "->" + std::to_string(image_[j - 1]);
  }
  out += "}";
  return out;
}

std::size_t PartialInjection::hash() const noexcept {
  // FNV-1a over the degree and the image bytes.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint8_t byte) {
    h ^= byte;
    h *= 1099511628211ull;
  };
  mix(degree_);
  for (int j = 0; j < degree_; ++j) {
    mix(image_[j]);
  }
  return static_cast<std::size_t>(h);
}

PartialInjection compose(const PartialInjection& x,
                         const PartialInjection& y) {
  if (x.degree() != y.degree()) {
    throw Error("cannot compose partial injections of degree " +
                std::to_string(x.degree()) + " and " +
                std::to_string(y.degree()));
  }
  PartialInjection z;
  z.degree_ = y.degree_;
  for (int j = 0; j < y.degree_; ++j) {
    std::uint8_t const mid = y.image_[j];
    z.image_[j] = mid == PartialInjection::kUndefined ? mid : x.image_[mid - 1];
  }
  return z;
}

}  // namespace renner
