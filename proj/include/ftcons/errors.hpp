// Copyright 2026 The ftcons Authors
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

#ifndef FTCONS_ERRORS_HPP_
#define FTCONS_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace ftcons {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand orders do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An input violates the documented precondition of an operation.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed external data (JSON files, rational literals).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Raised when simple-cycle enumeration is asked to run on a graph larger than
// the caller-supplied node limit.
class CycleLimitError : public Error {
 public:
  using Error::Error;
};

// The bidirectional subgraph does not span the graph. Carries its connected
// components (1-based node ids, each sorted).
class NoSpanningTreeError : public Error {
 public:
  NoSpanningTreeError(const std::string& what,
                      std::vector<std::vector<int>> components)
      : Error(what), components_(std::move(components)) {}

  const std::vector<std::vector<int>>& components() const noexcept {
    return components_;
  }

 private:
  std::vector<std::vector<int>> components_;
};

// Something that a proven statement says cannot happen did happen. Always a
// bug in the caller's precondition checks or in this library.
class ContractBreach : public Error {
 public:
  using Error::Error;
};

}  // namespace ftcons

#endif  // FTCONS_ERRORS_HPP_
