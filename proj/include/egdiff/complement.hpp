#pragma once

#include <cstdint>
#include <vector>

#include "egdiff/degree_sequence.hpp"

namespace egdiff {

/// Complementary sequence (n-1-d_n, ..., n-1-d_1), which is automatically
/// nonincreasing. Requires every d_i <= n-1.
DegreeSequence complement_sequence(const DegreeSequence& d);

/// A principal difference of d that provably also appears among the
/// principal differences of the complementary sequence.
struct SharedDifference {
  std::size_t k = 0;       // index into Delta(d)
  std::int64_t value = 0;  // Delta_k(d)

  friend bool operator==(const SharedDifference&, const SharedDifference&) = default;
};

/// All indices k in 1..m(d) for which Delta_k(d) is guaranteed to occur in
/// Delta(complement_sequence(d)): k = m(d); or k = 1 with Delta_1 > Delta_2;
/// or an interior k at which Delta is not strictly monotone. Requires a
/// graphical input.
std::vector<SharedDifference> shared_differences(const DegreeSequence& d);

}  // namespace egdiff
