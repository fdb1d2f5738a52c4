// Copyright 2026 The wvguard Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wvguard {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TooFewVerticesError : public Error {
 public:
  using Error::Error;
};

class DuplicateConsecutiveVertexError : public Error {
 public:
  DuplicateConsecutiveVertexError(const std::string& what, std::size_t index)
      : Error(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// Carries the indices of two offending edges.
class NotSimpleError : public Error {
 public:
  NotSimpleError(const std::string& what, std::size_t edge_a,
                 std::size_t edge_b)
      : Error(what), edge_a_(edge_a), edge_b_(edge_b) {}
  std::size_t edge_a() const { return edge_a_; }
  std::size_t edge_b() const { return edge_b_; }

 private:
  std::size_t edge_a_;
  std::size_t edge_b_;
};

class NotAnEdgeError : public Error {
 public:
  using Error::Error;
};
class NotAChordError : public Error {
 public:
  using Error::Error;
};
class PointOutsidePolygonError : public Error {
 public:
  using Error::Error;
};
class UncoverableWitnessError : public Error {
 public:
  using Error::Error;
};
class LimitExceededError : public Error {
 public:
  using Error::Error;
};
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};
class InputNotBoundaryGuardingError : public Error {
 public:
  using Error::Error;
};
class NoGuardFoundError : public Error {
 public:
  using Error::Error;
};
class GenerationFailedError : public Error {
 public:
  using Error::Error;
};
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace wvguard
