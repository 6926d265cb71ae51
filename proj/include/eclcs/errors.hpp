#ifndef ECLCS_ERRORS_HPP
#define ECLCS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eclcs {

// The empty string occurs in every string, so an empty constraint pattern
// makes every candidate subsequence infeasible, including the empty one.
class EmptyConstraint : public std::invalid_argument {
 public:
  EmptyConstraint()
      : std::invalid_argument(
            "EmptyConstraint: constraint patterns must be nonempty") {}
};

class InstanceTooLarge : public std::invalid_argument {
 public:
  InstanceTooLarge(std::size_t size, std::size_t cap)
      : std::invalid_argument("InstanceTooLarge: input of length " +
                              std::to_string(size) +
                              " exceeds the supported limit of " +
                              std::to_string(cap)) {}
};

// A table entry has no predecessor that explains it. Unreachable unless the
// table was produced by a different instance or the solver has a bug.
class InconsistentTable : public std::logic_error {
 public:
  InconsistentTable(std::size_t i, std::size_t j, std::size_t k)
      : std::logic_error("InconsistentTable: no predecessor explains entry (" +
                         std::to_string(i) + ", " + std::to_string(j) + ", " +
                         std::to_string(k) + ")") {}
};

}  // namespace eclcs

#endif  // ECLCS_ERRORS_HPP
