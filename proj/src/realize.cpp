#include "egdiff/realize.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace egdiff {

Graph make_graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges) {
  for (auto& [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw std::invalid_argument("make_graph: vertex out of range");
    }
    if (u == v) throw std::invalid_argument("make_graph: loops are not allowed");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph{n, std::move(edges)};
}

bool has_edge(const Graph& g, std::size_t u, std::size_t v) {
  if (u > v) std::swap(u, v);
  return std::binary_search(g.edges.begin(), g.edges.end(), std::make_pair(u, v));
}

DegreeSequence degree_sequence(const Graph& g) {
  std::vector<std::int64_t> deg(g.n, 0);
  for (const auto& [u, v] : g.edges) {
    ++deg[u - 1];
    ++deg[v - 1];
  }
  return DegreeSequence(std::move(deg));
}

Graph complement(const Graph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 1; u <= g.n; ++u) {
    for (std::size_t v = u + 1; v <= g.n; ++v) {
      if (!has_edge(g, u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph{g.n, std::move(edges)};
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n << '\n';
  for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
  return out.str();
}

Graph havel_hakimi(const DegreeSequence& d) {
  if (!is_graphical_full(d)) {
    throw std::invalid_argument("havel_hakimi: input is not graphical");
  }
  const std::size_t n = d.size();
  std::vector<std::int64_t> rem(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) rem[i] = d.term(i);

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> order;
  while (true) {
    std::size_t u = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      if (u == 0 || rem[i] > rem[u]) u = i;
    }
    if (u == 0 || rem[u] == 0) break;

    order.clear();
    for (std::size_t i = 1; i <= n; ++i) {
      if (i != u) order.push_back(i);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return rem[a] > rem[b]; });
    const auto need = static_cast<std::size_t>(rem[u]);
    for (std::size_t idx = 0; idx < need; ++idx) {
      const std::size_t v = order[idx];
      if (rem[v] <= 0) {
        throw std::logic_error("havel_hakimi: ran out of targets on a graphical sequence");
      }
      --rem[v];
      edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    rem[u] = 0;
  }
  std::sort(edges.begin(), edges.end());
  return Graph{n, std::move(edges)};
}

namespace {

// Backtracking over vertex pairs (i, j) in lexicographic order, deciding each
// pair absent-first. rem tracks degree still needed per vertex.
class RealizationSearch {
 public:
  RealizationSearch(const DegreeSequence& d, const std::function<bool(const Graph&)>& visit)
      : n_(d.size()), rem_(n_ + 1, 0), visit_(visit) {
    for (std::size_t i = 1; i <= n_; ++i) rem_[i] = d.term(i);
  }

  void run() {
    for (std::size_t i = 1; i <= n_; ++i) {
      if (rem_[i] > static_cast<std::int64_t>(n_) - 1) return;  // overloaded term
    }
    if (n_ <= 1) {
      if (n_ == 0 || rem_[1] == 0) emit();
      return;
    }
    decide(1, 2);
  }

 private:
  // Returns false once the visitor has requested a stop.
  bool decide(std::size_t i, std::size_t j) {
    if (j > n_) {
      if (rem_[i] != 0) return true;
      if (i + 2 > n_) {
        if (rem_[n_] != 0) return true;
        return emit();
      }
      return decide(i + 1, i + 2);
    }
    const auto slots_i = static_cast<std::int64_t>(n_ - j + 1);
    if (rem_[i] > slots_i) return true;
    if (rem_[j] > static_cast<std::int64_t>(n_ - i)) return true;

    if (rem_[i] < slots_i) {
      if (!decide(i, j + 1)) return false;
    }
    if (rem_[i] >= 1 && rem_[j] >= 1) {
      --rem_[i];
      --rem_[j];
      edges_.emplace_back(i, j);
      const bool keep_going = decide(i, j + 1);
      edges_.pop_back();
      ++rem_[i];
      ++rem_[j];
      if (!keep_going) return false;
    }
    return true;
  }

  bool emit() { return visit_(Graph{n_, edges_}); }

  std::size_t n_;
  std::vector<std::int64_t> rem_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  const std::function<bool(const Graph&)>& visit_;
};

}  // namespace

void for_each_labeled_realization(const DegreeSequence& d,
                                  const std::function<bool(const Graph&)>& visit,
                                  std::size_t cap) {
  if (d.size() > cap) {
    throw size_cap_error("realization enumeration limited to " + std::to_string(cap) +
                         " vertices");
  }
  RealizationSearch(d, visit).run();
}

std::vector<Graph> enumerate_labeled_realizations(const DegreeSequence& d, std::size_t cap) {
  std::vector<Graph> out;
  for_each_labeled_realization(
      d,
      [&](const Graph& g) {
        out.push_back(g);
        return true;
      },
      cap);
  return out;
}

std::int64_t splittance_bruteforce(const Graph& g) {
  if (g.n > kSplittanceCap) {
    throw size_cap_error("splittance_bruteforce limited to " +
                         std::to_string(kSplittanceCap) + " vertices");
  }
  const std::size_t n = g.n;
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [u, v] : g.edges) {
    adj[u - 1] |= std::uint32_t{1} << (v - 1);
    adj[v - 1] |= std::uint32_t{1} << (u - 1);
  }
  auto edges_within = [&](std::uint32_t mask) {
    std::int64_t twice = 0;
    for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(bits));
      twice += std::popcount(adj[v] & mask);
    }
    return twice / 2;
  };
  const std::uint32_t full = n == 0 ? 0 : (std::uint32_t{1} << n) - 1;
  std::int64_t best = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n);
  for (std::uint32_t clique = 0;; ++clique) {
    const std::int64_t size = std::popcount(clique);
    const std::int64_t missing = size * (size - 1) / 2 - edges_within(clique);
    const std::int64_t extra = edges_within(full & ~clique);
    best = std::min(best, missing + extra);
    if (clique == full) break;
  }
  return best;
}

std::vector<ForcedPair> forcible_pairs(const DegreeSequence& d, std::size_t cap) {
  if (!is_graphical_full(d)) {
    throw std::invalid_argument("forcible_pairs: input is not graphical");
  }
  const std::size_t n = d.size();
  if (n > 11) {
    throw size_cap_error("forcible_pairs limited to 11 vertices");  // 55 pair slots
  }
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) slots.emplace_back(i, j);
  }
  const std::uint64_t all = slots.empty() ? 0 : (~std::uint64_t{0} >> (64 - slots.size()));
  std::uint64_t in_every = all;
  std::uint64_t in_none = all;
  for_each_labeled_realization(
      d,
      [&](const Graph& g) {
        std::uint64_t mask = 0;
        for (const auto& [u, v] : g.edges) {
          const std::size_t idx =
              (u - 1) * n - (u - 1) * u / 2 + (v - u - 1);  // lex rank of (u, v)
          mask |= std::uint64_t{1} << idx;
        }
        in_every &= mask;
        in_none &= ~mask;
        return (in_every | in_none) != 0;
      },
      cap);

  std::vector<ForcedPair> out;
  for (std::size_t idx = 0; idx < slots.size(); ++idx) {
    const std::uint64_t bit = std::uint64_t{1} << idx;
    if (!(in_every & bit) && !(in_none & bit)) continue;
    const auto [i, j] = slots[idx];
    const bool extreme = d.term(i) == 0 || d.term(j) == 0 ||
                         d.term(i) == static_cast<std::int64_t>(n) - 1 ||
                         d.term(j) == static_cast<std::int64_t>(n) - 1;
    out.push_back(ForcedPair{
        i, j, (in_every & bit) ? ForcedKind::adjacent : ForcedKind::nonadjacent, extreme});
  }
  return out;
}

}  // namespace egdiff
