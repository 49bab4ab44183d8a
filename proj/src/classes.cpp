#include "egdiff/classes.hpp"

#include <stdexcept>

namespace egdiff {

namespace {

void require_graphical(const DegreeSequence& d, const char* op) {
  if (!is_graphical_full(d)) {
    throw std::invalid_argument(std::string(op) + ": input is not graphical");
  }
}

}  // namespace

bool has_isolated_vertex(const DegreeSequence& d) {
  return !d.empty() && d.term(d.size()) == 0;
}

std::int64_t splittance(const DegreeSequence& d) {
  require_graphical(d, "splittance");
  const std::int64_t last = eg_difference(d, static_cast<std::int64_t>(modified_durfee(d)));
  if (last % 2 != 0) {
    throw std::logic_error("splittance: Delta_m(d) is odd for a graphical sequence");
  }
  return last / 2;
}

bool is_split(const DegreeSequence& d) {
  require_graphical(d, "is_split");
  return eg_difference(d, static_cast<std::int64_t>(modified_durfee(d))) == 0;
}

bool is_threshold(const DegreeSequence& d) {
  require_graphical(d, "is_threshold");
  const std::size_t m = modified_durfee(d);
  for (std::size_t k = 1; k <= m; ++k) {
    if (eg_difference(d, static_cast<std::int64_t>(k)) != 0) return false;
  }
  return true;
}

bool is_weakly_threshold(const DegreeSequence& d) {
  require_graphical(d, "is_weakly_threshold");
  const std::size_t m = modified_durfee(d);
  for (std::size_t k = 1; k <= m; ++k) {
    if (eg_difference(d, static_cast<std::int64_t>(k)) > 1) return false;
  }
  return true;
}

SplitPartition split_off_partition(const DegreeSequence& d, std::size_t k) {
  require_graphical(d, "split_off_partition");
  if (k < 1 || k > d.size()) {
    throw std::invalid_argument("split_off_partition: k must lie in 1..n");
  }
  if (eg_difference(d, static_cast<std::int64_t>(k)) != 0) {
    throw std::invalid_argument("split_off_partition: Delta_k(d) != 0");
  }
  SplitPartition p;
  p.k = k;
  for (std::size_t i = 1; i <= k; ++i) p.q_indices.push_back(i);
  // positions <= k stay in Q even when d_k = k-1; S keeps only later indices
  for (std::size_t i = k + 1; i <= d.size(); ++i) {
    if (d.term(i) < static_cast<std::int64_t>(k)) {
      p.s_indices.push_back(i);
    } else {
      p.r_indices.push_back(i);
    }
  }
  return p;
}

std::pair<DegreeSequence, DegreeSequence> decomposed_sequences(const DegreeSequence& d,
                                                               const SplitPartition& p) {
  if (p != split_off_partition(d, p.k)) {
    throw std::invalid_argument("decomposed_sequences: partition inconsistent with sequence");
  }
  const auto r_size = static_cast<std::int64_t>(p.r_indices.size());
  std::vector<std::int64_t> qs;
  for (const std::size_t i : p.q_indices) qs.push_back(d.term(i) - r_size);
  for (const std::size_t i : p.s_indices) qs.push_back(d.term(i));
  std::vector<std::int64_t> r;
  for (const std::size_t i : p.r_indices) r.push_back(d.term(i) - static_cast<std::int64_t>(p.k));
  return {DegreeSequence(std::move(qs)), DegreeSequence(std::move(r))};
}

}  // namespace egdiff
