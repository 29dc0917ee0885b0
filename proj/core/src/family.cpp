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

#include "renner/family.hpp"

#include <cctype>

#include "renner/error.hpp"

namespace renner {

MonoidFamily::MonoidFamily(Family family, int rank)
    : family_(family), rank_(rank) {
  if (family != Family::A && family != Family::B && family != Family::D) {
    throw Error("unknown monoid family");
  }
  if (rank < min_rank(family) || rank > max_rank(family)) {
    throw Error("rank " + std::to_string(rank) + " out of range for family " +
                std::string(1, letter()) + " (supported: " +
                std::to_string(min_rank(family)) + ".." +
                std::to_string(max_rank(family)) + ")");
  }
}

MonoidFamily MonoidFamily::parse(std::string_view family, int rank) {
  if (family.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(family[0]))) {
      case 'A':
        return MonoidFamily(Family::A, rank);
      case 'B':
        return MonoidFamily(Family::B, rank);
      case 'D':
        return MonoidFamily(Family::D, rank);
      default:
        break;
    }
  }
  throw Error("unknown monoid family '" + std::string(family) +
              "' (expected A, B or D)");
}

int MonoidFamily::min_rank(Family family) noexcept {
  switch (family) {
    case Family::A:
      return 1;
    case Family::B:
      return 2;
    case Family::D:
      return 3;
  }
  return 1;
}

int MonoidFamily::max_rank(Family family) noexcept {
  // |S_8| = 40320, |B_6| = 46080, |D_6| = 23040.
  switch (family) {
    case Family::A:
      return 8;
    case Family::B:
      return 6;
    case Family::D:
      return 6;
  }
  return 1;
}

int MonoidFamily::degree() const noexcept {
  return family_ == Family::A ? rank_ : 2 * rank_;
}

int MonoidFamily::num_reflections() const noexcept {
  return family_ == Family::A ? rank_ - 1 : rank_;
}

std::string MonoidFamily::name() const {
  return std::string(1, letter()) + std::to_string(rank_);
}

}  // namespace renner
