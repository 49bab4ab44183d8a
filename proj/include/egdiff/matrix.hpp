#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "egdiff/degree_sequence.hpp"

namespace egdiff {

/// Dense row-major integer matrix with 1-based accessors.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  std::int64_t& at(std::size_t i, std::size_t j) { return data[(i - 1) * cols + (j - 1)]; }
  std::int64_t at(std::size_t i, std::size_t j) const { return data[(i - 1) * cols + (j - 1)]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

/// Transpose about the antidiagonal: for an m-by-n input M the result is
/// n-by-m with entry (i',j') = M(m+1-j', n+1-i'). An involution.
IntMatrix antitranspose(const IntMatrix& m);

/// Corrected Ferrers diagram F(d): row i carries d_i leading off-diagonal
/// ones; diagonal positions are stars, which carry numeric value 0.
struct FerrersMatrix {
  std::size_t n = 0;
  IntMatrix entries;

  friend bool operator==(const FerrersMatrix&, const FerrersMatrix&) = default;
};

/// Difference matrix M(d) = F(d)^T - F(d); skew-symmetric, stars on the
/// diagonal, off-diagonal entries in {-1, 0, 1}.
struct DifferenceMatrix {
  std::size_t n = 0;
  IntMatrix entries;

  /// Wraps an arbitrary square grid; used to feed hand-built matrices to the
  /// structural checks. No difference-matrix invariants are enforced.
  static DifferenceMatrix from_entries(IntMatrix m);

  friend bool operator==(const DifferenceMatrix&, const DifferenceMatrix&) = default;
};

/// Requires every d_i <= n-1, otherwise row i cannot be filled.
FerrersMatrix ferrers(const DegreeSequence& d);

DifferenceMatrix difference_matrix(const DegreeSequence& d);
DifferenceMatrix antitranspose(const DifferenceMatrix& m);

/// Sum of the entries in the first i rows of M(d), 0 <= i <= n.
std::int64_t sigma(const DegreeSequence& d, std::int64_t i);

/// All prefix sums sigma(d, 0), ..., sigma(d, n) in one pass.
std::vector<std::int64_t> sigma_prefix(const DegreeSequence& d);

/// Structural check on the nonzero "islands" of a difference matrix:
///  (i) nonzero entries in any one line are equal and contiguous,
///  (ii) no submatrix [[a, b], [0, c]] with a, c nonzero.
/// Always true for matrices produced by difference_matrix.
bool check_islands(const IntMatrix& m);
bool check_islands(const DifferenceMatrix& m);

/// Grid rendering with the star glyph '*' on the diagonal.
std::string to_display(const FerrersMatrix& m);
std::string to_display(const DifferenceMatrix& m);

}  // namespace egdiff
