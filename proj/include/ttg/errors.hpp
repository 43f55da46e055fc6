#pragma once

#include <stdexcept>
#include <string>

namespace ttg {

// Malformed or out-of-contract input: unknown ids, bad schemas, bad flags.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A stated operation precondition does not hold (e.g. y is not a
// specialization of y', or h is not a subgroup of k).
class PreconditionError : public std::runtime_error {
public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Antisymmetry failure: the specialization preorder identifies two distinct
// points, so the data does not describe a T0 (hence not a spectral) space.
class NonT0Error : public std::runtime_error {
public:
  NonT0Error(const std::string& a, const std::string& b)
      : std::runtime_error("not T0: points '" + a + "' and '" + b +
                           "' specialize to each other"),
        first(a), second(b) {}
  std::string first;
  std::string second;
};

// Hard size caps (group order, exponential predicate enumeration).
class CapExceededError : public std::runtime_error {
public:
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

// Internal consistency failure: two independent computations of the same
// quantity disagree. Always a bug, never a data error.
class SelfCheckError : public std::logic_error {
public:
  explicit SelfCheckError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ttg
