#include "egdiff/posets.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "egdiff/realize.hpp"

namespace egdiff {

namespace {

std::vector<std::int64_t> padded_terms(const DegreeSequence& d, std::size_t length) {
  std::vector<std::int64_t> out = d.terms();
  out.resize(std::max(out.size(), length), 0);
  return out;
}

// Term at position i of d, with the single augmented zero at position n+1.
std::int64_t term_or_zero(const DegreeSequence& d, std::size_t i) {
  return i <= d.size() ? d.term(i) : 0;
}

void require_unit_move(const DegreeSequence& d, std::size_t r, std::size_t t) {
  const std::size_t n = d.size();
  if (r < 1 || r >= t || t > n + 1) {
    throw std::invalid_argument("unit transformation: need 1 <= r < t <= n+1");
  }
  if (d.term(r) < term_or_zero(d, t) + 2) {
    throw std::invalid_argument("unit transformation: requires d_r >= d_t + 2");
  }
}

}  // namespace

bool dominates(const DegreeSequence& d, const DegreeSequence& e) {
  const std::size_t n = std::max(d.size(), e.size());
  const std::vector<std::int64_t> a = padded_terms(d, n);
  const std::vector<std::int64_t> b = padded_terms(e, n);
  if (d.sum() != e.sum()) {
    throw std::invalid_argument("dominates: sequences must have equal sums");
  }
  std::int64_t prefix_a = 0;
  std::int64_t prefix_b = 0;
  for (std::size_t i = 0; i < n; ++i) {
    prefix_a += a[i];
    prefix_b += b[i];
    if (prefix_a < prefix_b) return false;
  }
  return true;
}

UnitTransformation unit_transformation(const DegreeSequence& d, std::size_t r, std::size_t t) {
  require_unit_move(d, r, t);
  const std::int64_t dr = d.term(r);
  const std::int64_t dt = term_or_zero(d, t);
  UnitTransformation u;
  u.r = r;
  u.t = t;
  u.j_r = static_cast<std::size_t>(dr >= static_cast<std::int64_t>(r) ? dr + 1 : dr);
  u.j_t = static_cast<std::size_t>(dt >= static_cast<std::int64_t>(t) - 1 ? dt + 2 : dt + 1);
  return u;
}

bool is_canonical_unit_transformation(const DegreeSequence& d, const UnitTransformation& u) {
  const std::size_t n = d.size();
  if (u.r < 1 || u.r >= u.t || u.t > n + 1) return false;
  const std::int64_t dr = d.term(u.r);
  const std::int64_t dt = term_or_zero(d, u.t);
  if (dr < dt + 2) return false;
  // t is the first index after r whose term fits below d_r - 2.
  for (std::size_t i = u.r + 1; i < u.t; ++i) {
    if (term_or_zero(d, i) <= dr - 2) return false;
  }
  // r is the last index before t still two above d_t.
  for (std::size_t i = u.r + 1; i < u.t; ++i) {
    if (term_or_zero(d, i) >= dt + 2) return false;
  }
  return u == unit_transformation(d, u.r, u.t);
}

DegreeSequence apply_unit_transformation(const DegreeSequence& d, const UnitTransformation& u) {
  require_unit_move(d, u.r, u.t);
  std::vector<std::int64_t> terms = d.terms();
  if (u.t == d.size() + 1) terms.push_back(0);
  --terms[u.r - 1];
  ++terms[u.t - 1];
  return DegreeSequence(std::move(terms));
}

std::vector<UnitTransformation> canonical_unit_transformations(const DegreeSequence& d) {
  const std::size_t n = d.size();
  std::vector<UnitTransformation> out;
  for (std::size_t r = 1; r <= n; ++r) {
    const std::int64_t dr = d.term(r);
    if (dr < 2) continue;  // no target value can sit two below
    std::size_t t = 0;
    for (std::size_t i = r + 1; i <= n + 1; ++i) {
      if (term_or_zero(d, i) <= dr - 2) {
        t = i;
        break;
      }
    }
    if (t == 0) continue;
    const std::int64_t dt = term_or_zero(d, t);
    bool r_is_last = true;
    for (std::size_t i = r + 1; i < t; ++i) {
      if (term_or_zero(d, i) >= dt + 2) {
        r_is_last = false;
        break;
      }
    }
    if (r_is_last) out.push_back(unit_transformation(d, r, t));
  }
  return out;
}

std::int64_t delta_update(const DegreeSequence& d, const UnitTransformation& u, std::int64_t k) {
  if (!is_canonical_unit_transformation(d, u)) {
    throw std::invalid_argument("delta_update: transformation is not canonical for d");
  }
  const DegreeSequence e = apply_unit_transformation(d, u);
  const auto m_d = static_cast<std::int64_t>(modified_durfee(d));
  const auto m_e = static_cast<std::int64_t>(modified_durfee(e));
  if (k >= 1 && k <= std::min(m_d, m_e)) {
    const auto below = [&](std::size_t idx) {
      return static_cast<std::int64_t>(idx) <= k ? 1 : 0;
    };
    const int gain = below(u.r) + below(u.j_t);
    const int loss = below(u.t) + below(u.j_r);
    return eg_difference(d, k) + gain - loss;
  }
  if (k == m_e && m_e > m_d) {
    return eg_difference(d, m_d) + 2;
  }
  throw std::out_of_range("delta_update: k outside the update lemma's two cases");
}

std::vector<DegreeSequence> muirhead_chain(const DegreeSequence& d, const DegreeSequence& e) {
  const std::size_t n = std::max(d.size(), e.size());
  if (d.sum() != e.sum() || !dominates(d, e)) {
    throw std::invalid_argument("muirhead_chain: first sequence must dominate the second");
  }
  const DegreeSequence target(padded_terms(e, n));
  DegreeSequence cur(padded_terms(d, n));

  std::vector<DegreeSequence> chain{cur};
  while (cur != target) {
    std::size_t k = 1;
    while (cur.term(k) == target.term(k)) ++k;
    // cur_k > e_k at the first disagreement; shifting one unit right of k
    // keeps domination because the prefix gap is positive up to the first
    // index where cur falls below e.
    std::size_t t = k + 1;
    while (cur.term(t) > cur.term(k) - 2) ++t;
    std::size_t r = t - 1;
    while (cur.term(r) < cur.term(t) + 2) --r;
    cur = apply_unit_transformation(cur, unit_transformation(cur, r, t));
    chain.push_back(cur);
  }
  return chain;
}

bool rao_leq(const DegreeSequence& e, const DegreeSequence& d, std::size_t vertex_limit) {
  if (!is_graphical_full(e) || !is_graphical_full(d)) {
    throw std::invalid_argument("rao_leq: both sequences must be graphical");
  }
  if (d.size() > vertex_limit) {
    throw size_cap_error("rao_leq limited to " + std::to_string(vertex_limit) + " vertices");
  }
  if (e.size() > d.size()) return false;

  const std::size_t n = d.size();
  const std::size_t k = e.size();
  bool found = false;
  const auto scan = [&](const Graph& g) {
    std::vector<std::uint32_t> adj(n, 0);
    for (const auto& [u, v] : g.edges) {
      adj[u - 1] |= std::uint32_t{1} << (v - 1);
      adj[v - 1] |= std::uint32_t{1} << (u - 1);
    }
    const std::uint32_t full = n == 0 ? 0 : (std::uint32_t{1} << n) - 1;
    std::vector<std::int64_t> induced;
    for (std::uint32_t subset = 0;; ++subset) {
      if (static_cast<std::size_t>(std::popcount(subset)) == k) {
        induced.clear();
        for (std::uint32_t bits = subset; bits != 0; bits &= bits - 1) {
          const auto v = static_cast<std::size_t>(std::countr_zero(bits));
          induced.push_back(std::popcount(adj[v] & subset));
        }
        std::sort(induced.begin(), induced.end(), std::greater<>());
        if (induced == e.terms()) {
          found = true;
          return false;
        }
      }
      if (subset == full) break;
    }
    return true;
  };
  for_each_labeled_realization(d, scan, vertex_limit);
  return found;
}

}  // namespace egdiff
