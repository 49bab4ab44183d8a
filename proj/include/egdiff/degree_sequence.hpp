#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace egdiff {

/// A degree sequence: nonincreasing list of nonnegative integers.
///
/// Non-graphical lists are legal values; the graphicality criteria have to be
/// able to evaluate them. Operations that assume a graphical input say so and
/// reject other inputs. Trailing zeros are significant: (2,2,1,1,0) and
/// (2,2,1,1) are different sequences.
class DegreeSequence {
 public:
  DegreeSequence() = default;

  // Sorts the values nonincreasing; callers never supply pre-sorted data on
  // trust. Rejects negative entries.
  explicit DegreeSequence(std::vector<std::int64_t> values);
  DegreeSequence(std::initializer_list<std::int64_t> values);

  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// 1-based term access, matching the usual d_1 >= d_2 >= ... indexing.
  std::int64_t term(std::size_t i) const { return terms_[i - 1]; }

  const std::vector<std::int64_t>& terms() const { return terms_; }
  std::int64_t sum() const;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<std::int64_t> terms_;
};

std::string to_string(const DegreeSequence& d);
std::ostream& operator<<(std::ostream& os, const DegreeSequence& d);

/// The principal Erdos-Gallai differences (Delta_1, ..., Delta_m) of a
/// sequence; the length always equals the modified Durfee number.
struct DifferenceList {
  std::vector<std::int64_t> values;

  friend bool operator==(const DifferenceList&, const DifferenceList&) = default;
};

std::string to_string(const DifferenceList& dl);

/// Modified Durfee number m(d) = max{i : d_i >= i-1}; 0 for the empty
/// sequence, and at least 1 otherwise since d_1 >= 0 always holds.
std::size_t modified_durfee(const DegreeSequence& d);

/// k-th Erdos-Gallai difference
///   Delta_k(d) = k(k-1) + sum_{i>k} min{k, d_i} - sum_{i<=k} d_i
/// for 0 <= k <= n (Delta_0 = 0). Throws std::out_of_range otherwise.
std::int64_t eg_difference(const DegreeSequence& d, std::int64_t k);

/// (Delta_1(d), ..., Delta_{m(d)}(d)); empty for the empty sequence.
DifferenceList principal_differences(const DegreeSequence& d);

/// Delta*(d), the maximum principal difference. Requires n >= 1.
std::int64_t max_difference(const DegreeSequence& d);

/// Erdos-Gallai test: even sum and Delta_k(d) >= 0 for all k in 1..n.
bool is_graphical_full(const DegreeSequence& d);

/// Li's reduced test: even sum and Delta_k(d) >= 0 for 1 <= k <= m(d).
/// Agrees with is_graphical_full on every input.
bool is_graphical_li(const DegreeSequence& d);

}  // namespace egdiff
