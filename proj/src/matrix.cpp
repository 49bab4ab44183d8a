#include "egdiff/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace egdiff {

IntMatrix antitranspose(const IntMatrix& m) {
  IntMatrix out(m.cols, m.rows);
  for (std::size_t i = 1; i <= out.rows; ++i) {
    for (std::size_t j = 1; j <= out.cols; ++j) {
      out.at(i, j) = m.at(m.rows + 1 - j, m.cols + 1 - i);
    }
  }
  return out;
}

DifferenceMatrix DifferenceMatrix::from_entries(IntMatrix m) {
  if (m.rows != m.cols) {
    throw std::invalid_argument("DifferenceMatrix::from_entries: matrix must be square");
  }
  return DifferenceMatrix{m.rows, std::move(m)};
}

FerrersMatrix ferrers(const DegreeSequence& d) {
  const std::size_t n = d.size();
  for (std::size_t i = 1; i <= n; ++i) {
    if (d.term(i) > static_cast<std::int64_t>(n) - 1) {
      throw std::invalid_argument("ferrers: term exceeds n-1, row cannot be filled");
    }
  }
  FerrersMatrix f{n, IntMatrix(n, n)};
  for (std::size_t i = 1; i <= n; ++i) {
    const auto di = static_cast<std::size_t>(d.term(i));
    // The j-th off-diagonal position of row i is column j for j < i and
    // column j+1 afterwards.
    for (std::size_t j = 1; j <= di; ++j) {
      const std::size_t col = j < i ? j : j + 1;
      f.entries.at(i, col) = 1;
    }
  }
  return f;
}

DifferenceMatrix difference_matrix(const DegreeSequence& d) {
  const FerrersMatrix f = ferrers(d);
  const std::size_t n = f.n;
  DifferenceMatrix m{n, IntMatrix(n, n)};
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      m.entries.at(i, j) = f.entries.at(j, i) - f.entries.at(i, j);
    }
  }
  return m;
}

DifferenceMatrix antitranspose(const DifferenceMatrix& m) {
  return DifferenceMatrix{m.n, antitranspose(m.entries)};
}

std::vector<std::int64_t> sigma_prefix(const DegreeSequence& d) {
  const DifferenceMatrix m = difference_matrix(d);
  std::vector<std::int64_t> prefix(m.n + 1, 0);
  for (std::size_t i = 1; i <= m.n; ++i) {
    std::int64_t row = 0;
    for (std::size_t j = 1; j <= m.n; ++j) row += m.entries.at(i, j);
    prefix[i] = prefix[i - 1] + row;
  }
  return prefix;
}

std::int64_t sigma(const DegreeSequence& d, std::int64_t i) {
  if (i < 0 || i > static_cast<std::int64_t>(d.size())) {
    throw std::out_of_range("sigma: row prefix index must lie in [0, n]");
  }
  return sigma_prefix(d)[static_cast<std::size_t>(i)];
}

namespace {

// Nonzero entries of one line must form a contiguous run of a single value.
bool line_islands_ok(const IntMatrix& m, bool by_rows) {
  const std::size_t lines = by_rows ? m.rows : m.cols;
  const std::size_t len = by_rows ? m.cols : m.rows;
  for (std::size_t a = 1; a <= lines; ++a) {
    std::size_t first = 0;
    std::size_t last = 0;
    std::size_t count = 0;
    std::int64_t value = 0;
    for (std::size_t b = 1; b <= len; ++b) {
      const std::int64_t v = by_rows ? m.at(a, b) : m.at(b, a);
      if (v == 0) continue;
      if (count == 0) {
        first = b;
        value = v;
      } else if (v != value) {
        return false;
      }
      last = b;
      ++count;
    }
    if (count >= 2 && last - first + 1 != count) return false;
  }
  return true;
}

}  // namespace

bool check_islands(const IntMatrix& m) {
  if (!line_islands_ok(m, true) || !line_islands_ok(m, false)) return false;

  // Forbidden pattern: a zero with a nonzero above it in its column and a
  // nonzero to its right in its row.
  const std::size_t rows = m.rows;
  const std::size_t cols = m.cols;
  std::vector<char> nonzero_above(cols + 1, 0);
  for (std::size_t i = 1; i <= rows; ++i) {
    bool nonzero_right = false;
    for (std::size_t j = cols; j >= 1; --j) {
      if (m.at(i, j) == 0) {
        if (nonzero_above[j] && nonzero_right) return false;
      } else {
        nonzero_right = true;
      }
    }
    for (std::size_t j = 1; j <= cols; ++j) {
      if (m.at(i, j) != 0) nonzero_above[j] = 1;
    }
  }
  return true;
}

bool check_islands(const DifferenceMatrix& m) { return check_islands(m.entries); }

namespace {

std::string render_starred(const IntMatrix& m) {
  std::size_t width = 1;
  for (std::size_t i = 1; i <= m.rows; ++i) {
    for (std::size_t j = 1; j <= m.cols; ++j) {
      if (i == j) continue;
      width = std::max(width, std::to_string(m.at(i, j)).size());
    }
  }
  std::ostringstream out;
  for (std::size_t i = 1; i <= m.rows; ++i) {
    for (std::size_t j = 1; j <= m.cols; ++j) {
      if (j > 1) out << ' ';
      const std::string cell = i == j ? "*" : std::to_string(m.at(i, j));
      out << std::string(width - cell.size(), ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

std::string to_display(const FerrersMatrix& m) { return render_starred(m.entries); }

std::string to_display(const DifferenceMatrix& m) { return render_starred(m.entries); }

}  // namespace egdiff
