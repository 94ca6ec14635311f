// Copyright (c) 2026 The fairtoss developers
// Distributed under the Apache License, Version 2.0.
// See the accompanying LICENSE file or http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace fairtoss {

// Root of the library's exception hierarchy. Everything thrown on purpose by
// fairtoss derives from this, so callers can catch one type at the boundary.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A caller-supplied value is outside its documented domain (negative
// probability, weights that do not sum to one, zero trials, ...).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

// A conditional probability was requested whose conditioning event has
// probability zero, so the quantity is undefined.
class DegenerateConditioningError : public Error {
 public:
  explicit DegenerateConditioningError(const std::string& what) : Error(what) {}
};

// A protocol cannot terminate with probability one for the given coin bias
// (e.g. a retry-based protocol with p equal to 0 or 1), so its expected
// duration is infinite and the requested quantity does not exist.
class NonTerminationError : public Error {
 public:
  explicit NonTerminationError(const std::string& what) : Error(what) {}
};

// A recorded toss or sound stream ended before the protocol reached a
// decision, in a context where a decision was required.
class IncompleteStreamError : public Error {
 public:
  explicit IncompleteStreamError(const std::string& what) : Error(what) {}
};

// An empty stream was supplied where at least one symbol is required.
class EmptyStreamError : public Error {
 public:
  explicit EmptyStreamError(const std::string& what) : Error(what) {}
};

// An internal fixed-capacity structure would overflow (e.g. an exhaustive
// enumeration asked to go deeper than the implementation supports).
class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what) : Error(what) {}
};

// A statistical routine was given fewer observations than the minimum its
// approximations are valid for.
class InsufficientDataError : public Error {
 public:
  explicit InsufficientDataError(const std::string& what) : Error(what) {}
};

// Command-line usage problem: unknown flag, malformed input text, mutually
// exclusive options, and similar. Maps to exit code 2 in the CLI.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(what) {}
};

}  // namespace fairtoss
