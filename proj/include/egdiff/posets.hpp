#pragma once

#include <cstdint>
#include <vector>

#include "egdiff/degree_sequence.hpp"
#include "egdiff/errors.hpp"

namespace egdiff {

/// One majorization step: move a unit of degree from position r to a later
/// position t with d_r >= d_t + 2. Position t = n+1 targets a single
/// augmented trailing zero (allowed when d_r >= 2).
///
/// j_r and j_t are the Ferrers-diagram columns touched by the step: the 1
/// removed from row r sits in column j_r, the 1 added to row t in column j_t,
///   j_r = d_r + 1 if d_r >= r, else d_r;
///   j_t = d_t + 2 if d_t >= t - 1, else d_t + 1;
/// and j_t < j_r always holds.
///
/// A transformation is canonical when t is the first index after r with
/// d_t <= d_r - 2 and r is the last index before t with d_r >= d_t + 2; such
/// a step cannot be split into smaller unit transformations, and applying it
/// keeps the terms nonincreasing without re-sorting.
struct UnitTransformation {
  std::size_t r = 0;
  std::size_t t = 0;
  std::size_t j_r = 0;
  std::size_t j_t = 0;

  friend bool operator==(const UnitTransformation&, const UnitTransformation&) = default;
};

/// Majorization: every prefix sum of d is at least the matching prefix sum of
/// e. The shorter sequence is zero-padded; the sums must agree exactly.
bool dominates(const DegreeSequence& d, const DegreeSequence& e);

/// Builds the transformation moving one unit from position r to position t
/// of d, with j_r / j_t computed from d. Validates r < t <= n+1 and
/// d_r >= d_t + 2 (d_{n+1} taken as the augmented 0).
UnitTransformation unit_transformation(const DegreeSequence& d, std::size_t r, std::size_t t);

bool is_canonical_unit_transformation(const DegreeSequence& d, const UnitTransformation& u);

/// Applies u to d: d_r loses a unit, d_t gains one (padding d with one zero
/// when t = n+1); the result is re-sorted. Throws for an (r, t) pair that is
/// not a valid unit transformation on d.
DegreeSequence apply_unit_transformation(const DegreeSequence& d, const UnitTransformation& u);

/// All canonical unit transformations available on d, in order of r; the
/// augmented-zero target n+1 is considered. At most one exists per target.
std::vector<UnitTransformation> canonical_unit_transformations(const DegreeSequence& d);

/// Predicted Delta_k of apply_unit_transformation(d, u) without touching the
/// transformed sequence:
///   Delta_k(e) = Delta_k(d) + |{r, j_t} <= k| - |{t, j_r} <= k|
/// for k <= min{m(d), m(e)}, and Delta_{m(d)}(d) + 2 for k = m(e) > m(d).
/// Requires u canonical for d; other k are rejected, not extrapolated.
std::int64_t delta_update(const DegreeSequence& d, const UnitTransformation& u, std::int64_t k);

/// A chain d = pi^0, pi^1, ..., pi^p = e of canonical unit transformations,
/// built greedily at the first index where the prefix sums of the current
/// sequence exceed those of e. Both endpoints are zero-padded to a common
/// length. Requires dominates(d, e).
std::vector<DegreeSequence> muirhead_chain(const DegreeSequence& d, const DegreeSequence& e);

/// Rao order at desk scale: true iff some labeled realization of d contains
/// an induced subgraph with degree sequence e. Requires both sequences
/// graphical and d no longer than vertex_limit.
bool rao_leq(const DegreeSequence& e, const DegreeSequence& d, std::size_t vertex_limit = 9);

}  // namespace egdiff
