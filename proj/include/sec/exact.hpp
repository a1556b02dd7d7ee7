#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "sec/coloring.hpp"
#include "sec/graph.hpp"

namespace sec {

struct SearchConfig {
  // decision budget for one search; every tried assignment counts
  std::uint64_t node_limit = 50'000'000;
  // fix colors never used so far to the single lowest fresh candidate
  bool symmetry_break = true;
};

// Exact kappa-colorability under a partial pre-assignment.  Feasible
// outcomes always verify; Infeasible means the search space was exhausted.
struct SolveOutcome {
  enum class Status { Feasible, Infeasible, Aborted };
  Status status = Status::Infeasible;
  EdgeColoring coloring;  // meaningful when Feasible
  std::uint64_t nodes = 0;
  bool exhausted = false;
  // set when the pre-assignment itself conflicted (input error)
  std::optional<std::pair<EdgeId, EdgeId>> input_conflict;

  bool feasible() const { return status == Status::Feasible; }
};

SolveOutcome colorable_with(const Graph& g, int kappa, const EdgeColoring& pre,
                            const SearchConfig& cfg = {});

struct ChiResult {
  enum class Status { Exact, Aborted };
  Status status = Status::Exact;
  int value = 0;  // exact strong chromatic index when Exact
  EdgeColoring witness;
  int lower = 0;  // best known bounds (meaningful when Aborted)
  int upper = -1;
  std::uint64_t nodes = 0;

  bool exact() const { return status == Status::Exact; }
};

// Ascends kappa from max(sigma, greedy clique bound) until Feasible.
ChiResult strong_chromatic_index(const Graph& g, const SearchConfig& cfg = {});

}  // namespace sec
