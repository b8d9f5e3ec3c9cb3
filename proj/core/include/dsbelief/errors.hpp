// Copyright 2026 The dsbelief Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DSBELIEF_ERRORS_HPP_
#define DSBELIEF_ERRORS_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace dsbelief {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A frame is empty, has duplicate/empty labels, or exceeds a size cap.
class InvalidFrame : public Error {
 public:
  using Error::Error;
};

// An input exceeds one of the enumeration caps.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

class FrameTooLarge : public LimitExceeded {
 public:
  FrameTooLarge(std::size_t size, std::size_t cap, const std::string& what)
      : LimitExceeded(what + ": frame has " + std::to_string(size) +
                      " elements, limit is " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}

  std::size_t size() const { return size_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

// Subsets or set functions built over different frames were combined.
class FrameMismatch : public Error {
 public:
  using Error::Error;
};

// A set function violates M1, M2 or nonnegativity.
class InvalidMass : public Error {
 public:
  InvalidMass(std::string axiom, const std::string& detail)
      : Error("invalid mass function (" + axiom + "): " + detail),
        axiom_(std::move(axiom)) {}

  const std::string& axiom() const { return axiom_; }

 private:
  std::string axiom_;
};

// A set function is not a belief function. `witness` is the bitmask of a
// subset whose Moebius coefficient is negative, or the subset at which B0/B2
// fails.
class NotABeliefFunction : public Error {
 public:
  NotABeliefFunction(std::string axiom, unsigned witness, const std::string& detail)
      : Error("not a belief function (" + axiom + "): " + detail),
        axiom_(std::move(axiom)),
        witness_(witness) {}

  const std::string& axiom() const { return axiom_; }
  unsigned witness() const { return witness_; }

 private:
  std::string axiom_;
  unsigned witness_;
};

// A conditioning operation was requested outside the rule's domain
// (Bel(B) = 0 for the lower-envelope rule, Pl(B) = 0 for Dempster's rule).
class ConditioningUndefined : public Error {
 public:
  explicit ConditioningUndefined(const std::string& what,
                                 std::optional<std::size_t> step = std::nullopt)
      : Error(step ? what + " (at update step " + std::to_string(*step) + ")" : what),
        step_(step) {}

  // Index into the event sequence for iterated updates.
  std::optional<std::size_t> step() const { return step_; }

 private:
  std::optional<std::size_t> step_;
};

// A partition scenario whose cells overlap, miss elements, or whose weights
// are not a positive distribution.
class InvalidScenario : public Error {
 public:
  using Error::Error;
};

class InfeasibleConstraints : public Error {
 public:
  using Error::Error;
};

// Malformed documents, rationals or event expressions.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace dsbelief

#endif  // DSBELIEF_ERRORS_HPP_
