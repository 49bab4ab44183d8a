#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "egdiff/degree_sequence.hpp"
#include "egdiff/errors.hpp"

namespace egdiff {

/// Labeled simple graph on vertices 1..n; edges stored as (u, v) with u < v,
/// sorted lexicographically, set semantics.
struct Graph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  friend bool operator==(const Graph&, const Graph&) = default;
};

/// Normalizes and validates an edge list: endpoints in 1..n, no loops;
/// duplicate edges collapse.
Graph make_graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges);

bool has_edge(const Graph& g, std::size_t u, std::size_t v);
DegreeSequence degree_sequence(const Graph& g);
Graph complement(const Graph& g);

/// Edge-list text: first line n, then one "u v" line per edge, sorted.
std::string to_edge_list(const Graph& g);

inline constexpr std::size_t kDefaultEnumerationCap = 9;
inline constexpr std::size_t kSplittanceCap = 12;

/// Deterministic realization of a graphical sequence: repeatedly connect the
/// vertex with the largest remaining degree to the next-largest ones, ties
/// broken by index. Vertex i ends with degree d_i.
Graph havel_hakimi(const DegreeSequence& d);

/// Visits every simple graph on 1..n in which vertex i has degree d_i
/// exactly, in a fixed canonical order (backtracking over vertex pairs in
/// lexicographic order). The visitor returns false to stop early.
/// Non-graphical input yields no visits. Throws size_cap_error for n > cap.
void for_each_labeled_realization(const DegreeSequence& d,
                                  const std::function<bool(const Graph&)>& visit,
                                  std::size_t cap = kDefaultEnumerationCap);

std::vector<Graph> enumerate_labeled_realizations(const DegreeSequence& d,
                                                  std::size_t cap = kDefaultEnumerationCap);

/// Exact splittance by exhausting all 2^n clique/independent-set candidate
/// bipartitions: missing edges inside the clique side plus present edges
/// inside the independent side, minimized. Requires n <= 12.
std::int64_t splittance_bruteforce(const Graph& g);

enum class ForcedKind { adjacent, nonadjacent };

/// Vertex pair (by degree-assignment position) adjacent in every labeled
/// realization, or in none. Pairs touching a vertex of degree 0 or n-1 are
/// flagged trivial.
struct ForcedPair {
  std::size_t i = 0;
  std::size_t j = 0;
  ForcedKind kind = ForcedKind::adjacent;
  bool trivial = false;

  friend bool operator==(const ForcedPair&, const ForcedPair&) = default;
};

/// Requires a graphical input and n <= cap.
std::vector<ForcedPair> forcible_pairs(const DegreeSequence& d,
                                       std::size_t cap = kDefaultEnumerationCap);

}  // namespace egdiff
