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

#ifndef RENNER_FAMILY_HPP_
#define RENNER_FAMILY_HPP_

#include <string>
#include <string_view>

namespace renner {

// The three explicit families: rook monoid M_n (type A), symplectic monoid
// (type B, also the odd orthogonal case) and even special orthogonal monoid
// (type D).
enum class Family : char { A = 'A', B = 'B', D = 'D' };

// A family together with its rank. For A the rank is n (matrices of degree n,
// Weyl group S_n); for B and D it is l and the matrix degree is 2l.
//
// Ranks are bounded so that the Weyl group has at most 46080 elements and the
// matrix degree fits PartialInjection::kMaxDegree.
class MonoidFamily {
 public:
  // Throws renner::Error if the rank is out of range for the family.
  MonoidFamily(Family family, int rank);

  // Accepts "A", "B", "D" (case-insensitive).
  static MonoidFamily parse(std::string_view family, int rank);

  static int min_rank(Family family) noexcept;
  static int max_rank(Family family) noexcept;

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }

  // Size of the matrices, i.e. the number of points the partial injections act
  // on.
  int degree() const noexcept;

  // Number of Coxeter generators |S|.
  int num_reflections() const noexcept;

  char letter() const noexcept { return static_cast<char>(family_); }

  // "A3", "B2", ...
  std::string name() const;

  friend bool operator==(const MonoidFamily&, const MonoidFamily&) = default;

 private:
  Family family_;
  int rank_;
};

}  // namespace renner

#endif  // RENNER_FAMILY_HPP_
