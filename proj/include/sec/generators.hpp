#pragma once

#include <cstdint>
#include <vector>

#include "sec/graph.hpp"

namespace sec {

// Cycle C_n with pendants[i] leaves attached at cycle vertex i.
struct JellyfishSpec {
  std::vector<int> pendants;

  int n() const { return static_cast<int>(pendants.size()); }
  int m() const;             // n + sum(pendants)
  int cycle_degree(int i) const { return pendants[i] + 2; }
  int sigma() const;
};

// Cycle (x1,...,x_{3n+1}) with d-2 leaves at every x_{3i}; the family with
// sigma = d+1 = Delta+1 whose strong chromatic index exceeds sigma.
Graph gen_counterexample(int n, int d);

Graph gen_jellyfish(const JellyfishSpec& spec);

// Closed-form strong chromatic index of a jellyfish with sigma >= 4.
int jellyfish_index(const JellyfishSpec& spec);

// Replaces every base edge by a path of k edges, then attaches leaves to
// two adjacent subdivision vertices so one edge reaches sigma_target.
// Girth becomes k * girth(base), which must reach the driver's threshold
// for sigma_target.
Graph gen_high_girth_instance(const Graph& base, int k, int sigma_target);

Graph gen_caterpillar(const std::vector<int>& degrees);

Graph tree_from_pruefer(const std::vector<int>& seq, int n);

// Seeded Pruefer-style construction; deterministic per seed.
Graph gen_random_tree(int n, std::uint64_t seed);

}  // namespace sec
