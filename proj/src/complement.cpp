#include "egdiff/complement.hpp"

#include <stdexcept>

namespace egdiff {

DegreeSequence complement_sequence(const DegreeSequence& d) {
  const std::size_t n = d.size();
  std::vector<std::int64_t> out;
  out.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) {
    const std::int64_t value = static_cast<std::int64_t>(n) - 1 - d.term(n + 1 - j);
    if (value < 0) {
      throw std::invalid_argument("complement_sequence: term exceeds n-1");
    }
    out.push_back(value);
  }
  return DegreeSequence(std::move(out));
}

std::vector<SharedDifference> shared_differences(const DegreeSequence& d) {
  if (!is_graphical_full(d)) {
    throw std::invalid_argument("shared_differences: input is not graphical");
  }
  const std::size_t m = modified_durfee(d);
  const DifferenceList delta = principal_differences(d);
  auto at = [&](std::size_t k) { return delta.values[k - 1]; };

  std::vector<SharedDifference> out;
  bool prefix_all_zero = true;
  for (std::size_t k = 1; k <= m; ++k) {
    prefix_all_zero = prefix_all_zero && at(k) == 0;
    bool qualifies = false;
    if (k == m) {
      qualifies = true;
    } else if (k == 1) {
      qualifies = m >= 2 && at(1) > at(2);
    } else {
      const bool rising = at(k - 1) < at(k) && at(k) < at(k + 1);
      const bool falling = at(k - 1) > at(k) && at(k) > at(k + 1);
      // An interior plateau or turning point shares its value, provided the
      // first k rows of M(d) are not entirely zero (equivalently some
      // difference up to k is nonzero); a leading run of zeros can vanish
      // from the complement's list entirely.
      qualifies = !rising && !falling && !prefix_all_zero;
    }
    if (qualifies) out.push_back(SharedDifference{k, at(k)});
  }
  return out;
}

}  // namespace egdiff
