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

#ifndef RENNER_ERROR_HPP_
#define RENNER_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace renner {

// Base class of every recoverable error raised by the library: bad input,
// unsupported family/rank, malformed words.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Monoid enumeration stopped because the element count passed the cap.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(std::size_t cap)
      : Error("enumeration cap exceeded (cap = " + std::to_string(cap) + ")"),
        cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

// A malformed or out-of-range token in a generator word. Positions are
// 1-based token positions.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A partial injection that is not an element of the Renner monoid being
// modelled.
class OutsideMonoid : public Error {
 public:
  using Error::Error;
};

// An internal algebraic invariant failed (e.g. a product that must land in the
// cross-section lattice did not). Indicates a bug or wrong structural data,
// never bad user input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace renner

#endif  // RENNER_ERROR_HPP_
