#include "egdiff/degree_sequence.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace egdiff {

namespace {

// 64-bit arithmetic stays exact as long as lengths and terms are bounded by
// 2^31: k(k-1) and degree sums then fit comfortably below 2^63.
constexpr std::int64_t kMaxTerm = std::int64_t{1} << 31;
constexpr std::size_t kMaxLength = std::size_t{1} << 31;

}  // namespace

DegreeSequence::DegreeSequence(std::vector<std::int64_t> values) : terms_(std::move(values)) {
  if (terms_.size() > kMaxLength) {
    throw std::invalid_argument("degree sequence longer than 2^31 terms");
  }
  for (const std::int64_t v : terms_) {
    if (v < 0) throw std::invalid_argument("invalid degree: negative value");
    if (v > kMaxTerm) throw std::invalid_argument("invalid degree: value exceeds 2^31");
  }
  std::sort(terms_.begin(), terms_.end(), std::greater<>());
}

DegreeSequence::DegreeSequence(std::initializer_list<std::int64_t> values)
    : DegreeSequence(std::vector<std::int64_t>(values)) {}

std::int64_t DegreeSequence::sum() const {
  return std::accumulate(terms_.begin(), terms_.end(), std::int64_t{0});
}

std::string to_string(const DegreeSequence& d) {
  std::ostringstream out;
  out << d;
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const DegreeSequence& d) {
  os << '(';
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i > 0) os << ',';
    os << d.terms()[i];
  }
  return os << ')';
}

std::string to_string(const DifferenceList& dl) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < dl.values.size(); ++i) {
    if (i > 0) out << ',';
    out << dl.values[i];
  }
  out << ')';
  return out.str();
}

std::size_t modified_durfee(const DegreeSequence& d) {
  // {i : d_i >= i-1} is a prefix of 1..n, so the first failure ends the scan.
  std::size_t m = 0;
  for (std::size_t i = 1; i <= d.size(); ++i) {
    if (d.term(i) < static_cast<std::int64_t>(i) - 1) break;
    m = i;
  }
  return m;
}

std::int64_t eg_difference(const DegreeSequence& d, std::int64_t k) {
  const auto n = static_cast<std::int64_t>(d.size());
  if (k < 0 || k > n) {
    throw std::out_of_range("eg_difference: k must lie in [0, n]");
  }
  std::int64_t value = k * (k - 1);
  for (std::int64_t i = 1; i <= n; ++i) {
    const std::int64_t di = d.term(static_cast<std::size_t>(i));
    if (i <= k) {
      value -= di;
    } else {
      value += std::min(k, di);
    }
  }
  return value;
}

DifferenceList principal_differences(const DegreeSequence& d) {
  const std::size_t m = modified_durfee(d);
  DifferenceList out;
  out.values.reserve(m);
  for (std::size_t k = 1; k <= m; ++k) {
    out.values.push_back(eg_difference(d, static_cast<std::int64_t>(k)));
  }
  return out;
}

std::int64_t max_difference(const DegreeSequence& d) {
  if (d.empty()) throw std::invalid_argument("max_difference: empty sequence");
  const DifferenceList dl = principal_differences(d);
  return *std::max_element(dl.values.begin(), dl.values.end());
}

bool is_graphical_full(const DegreeSequence& d) {
  if (d.sum() % 2 != 0) return false;
  const auto n = static_cast<std::int64_t>(d.size());
  for (std::int64_t k = 1; k <= n; ++k) {
    if (eg_difference(d, k) < 0) return false;
  }
  return true;
}

bool is_graphical_li(const DegreeSequence& d) {
  if (d.sum() % 2 != 0) return false;
  const auto m = static_cast<std::int64_t>(modified_durfee(d));
  for (std::int64_t k = 1; k <= m; ++k) {
    if (eg_difference(d, k) < 0) return false;
  }
  return true;
}

}  // namespace egdiff
