#pragma once

#include <stdexcept>

namespace qcw {

/// An operation was called outside its documented domain (the input parsed
/// fine but the mathematical precondition fails).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qcw
