#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "egdiff/degree_sequence.hpp"

namespace egdiff {

/// Index partition realizing the split-off decomposition at Delta_k(d) = 0:
/// Q induces a clique, S an independent set, and R is completely joined to Q
/// and anti-joined to S in every realization.
struct SplitPartition {
  std::size_t k = 0;
  std::vector<std::size_t> q_indices;  // positions 1..k
  std::vector<std::size_t> r_indices;  // positions > k with d_i >= k
  std::vector<std::size_t> s_indices;  // positions > k with d_i < k

  friend bool operator==(const SplitPartition&, const SplitPartition&) = default;
};

bool has_isolated_vertex(const DegreeSequence& d);

/// Splittance Delta_{m(d)}(d) / 2: the minimum number of edge edits turning
/// any realization into a split graph. Requires a graphical input.
std::int64_t splittance(const DegreeSequence& d);

/// Split: the last principal difference is 0. Requires a graphical input.
bool is_split(const DegreeSequence& d);

/// Threshold: every principal difference is 0. Requires a graphical input.
bool is_threshold(const DegreeSequence& d);

/// Weakly threshold: every principal difference is at most 1. Requires a
/// graphical input.
bool is_weakly_threshold(const DegreeSequence& d);

/// The canonical partition for a given k with Delta_k(d) = 0. Q takes the
/// first k positions (one valid choice of k highest-degree vertices); S takes
/// the later positions of degree < k; R the rest. Requires a graphical input
/// and Delta_k(d) = 0.
SplitPartition split_off_partition(const DegreeSequence& d, std::size_t k);

/// Degree sequences of G[Q u S] and G[R], derived arithmetically: Q loses its
/// |R| forced neighbors, R loses its k forced neighbors, S is untouched.
/// Identical for every realization.
std::pair<DegreeSequence, DegreeSequence> decomposed_sequences(const DegreeSequence& d,
                                                               const SplitPartition& p);

}  // namespace egdiff
