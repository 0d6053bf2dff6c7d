// Copyright 2026 The reldeleg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reldeleg {

/// Malformed text input. `index()` is the offending character offset, or the
/// line number for line-oriented file formats.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t index)
      : std::invalid_argument(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// A dense object would exceed the configured qubit cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Operands or answers whose shape does not match what the operation expects.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// No injective embedding of a Hamiltonian term into a question word exists.
class NoEmbedding : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The exact engine was handed a strategy it cannot evaluate in closed form.
class OutsideAnalyzableClass : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace reldeleg
