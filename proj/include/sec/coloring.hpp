#pragma once

#include <iosfwd>
#include <vector>

#include "sec/graph.hpp"

namespace sec {

// Total or partial edge coloring.  Colors are 0-based internally; the CLI
// and fixture files use 1-based colors.
struct EdgeColoring {
  int kappa = 0;
  std::vector<int> color;  // per EdgeId; -1 = unassigned

  static EdgeColoring empty(const Graph& g, int kappa);
  bool total() const;
  int assigned_count() const;
  std::vector<EdgeId> uncolored() const;
};

// A same-colored pair at distance <= 2, with the witnessing short path
// between the two edges (2 vertices for a shared endpoint, 4 otherwise).
struct Violation {
  EdgeId a = -1;
  EdgeId b = -1;
  int color = -1;
  std::vector<VertexId> witness;
};

struct VerifyResult {
  enum class Status { Ok, Incomplete, Conflict };
  Status status = Status::Ok;
  std::vector<Violation> violations;   // all of them, not just the first
  std::vector<EdgeId> uncolored;       // set when Incomplete

  bool ok() const { return status == Status::Ok; }
};

// Checks that c is a strong edge-coloring of g with colors < kappa.
VerifyResult verify(const Graph& g, const EdgeColoring& c);

// Square of the line graph: one node per EdgeId, adjacency = conflict_pairs.
struct ConflictGraph {
  std::vector<std::vector<int>> adj;  // sorted
  int node_count() const { return static_cast<int>(adj.size()); }
};

ConflictGraph conflict_graph(const Graph& g);

struct Antimatching {
  int size = 0;
  std::vector<EdgeId> witness;  // pairwise at distance <= 2
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact maximum antimatching = maximum clique of the conflict graph, via
// branch and bound with greedy-coloring bounds.  Refuses graphs with more
// than node_budget edges (callers may fall back to the sigma lower bound).
Antimatching max_antimatching(const Graph& g, int node_budget = 64);

// perm must be a bijection on 0..kappa-1.
EdgeColoring relabel(const EdgeColoring& c, const std::vector<int>& perm);

// Coloring text format: "kappa" header, then "u v c" per edge in EdgeId
// order with 1-based colors ('-' marks an uncolored edge).
EdgeColoring read_coloring(std::istream& in, const Graph& g);
EdgeColoring read_coloring_file(const std::string& path, const Graph& g);
void write_coloring(std::ostream& out, const Graph& g, const EdgeColoring& c);

}  // namespace sec
