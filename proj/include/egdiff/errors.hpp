#pragma once

#include <stdexcept>

namespace egdiff {

// Thrown when an enumeration-backed operation is asked to run above its size cap.
class size_cap_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace egdiff
