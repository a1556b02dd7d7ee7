#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sec/exact.hpp"
#include "sec/graph.hpp"

namespace sec {

// Caterpillar tree Cat(d1,...,dl): spine x0,x1,...,x_{l+1} with implicit
// end leaves deg(x0) = deg(x_{l+1}) = 1 and deg(xi) = di >= 2 inside.
class Caterpillar {
 public:
  explicit Caterpillar(std::vector<int> degrees);

  int length() const { return static_cast<int>(degrees_.size()); }
  int degree(int i) const;  // 1-based spine index
  const std::vector<int>& degrees() const { return degrees_; }
  int sigma() const;
  int max_degree() const;
  int edge_count() const;  // sum(d) - l + 1
  int pendant_count(int i) const { return degree(i) - 2; }
  Caterpillar reversed() const;
  Caterpillar dropped_last() const;  // Cat(d1,...,d_{l-1}); requires l >= 2
  std::string str() const;           // "Cat(3,4,3)"

  friend bool operator==(const Caterpillar&, const Caterpillar&) = default;

 private:
  std::vector<int> degrees_;
};

// d* = ceil((sigma+1)/2): the degree threshold splitting "large" spine
// vertices from the rest.
int d_star(int sigma);

// Minimum spine length at which every boundary instance with kappa >= sigma
// is solvable: 8 for sigma 5, 7 for sigma 6..7, sigma for sigma >= 8.
int ell_min(int sigma);

// Independent set of large spine positions: strictly-large vertices plus an
// alternating prefix of every maximal run of degree-d* vertices.
struct LargeSet {
  std::vector<int> indices;  // 1-based, sorted, no two consecutive
  bool contains(int i) const;
};

LargeSet large_set(const Caterpillar& t);

// Decrements the large-set positions; drops sigma by exactly one (checked).
Caterpillar derive_reduced(const Caterpillar& t);

// Boundary constraint tuple (C; alpha0, C1, Cl, alphal): the coloring must
// use palette C, realize C1/Cl as the color sets of the end stars, and put
// alpha0 / alphal on the outermost spine edges.
struct PrePalette {
  std::vector<int> palette;  // sorted, distinct
  int alpha0 = -1;
  std::vector<int> c1;  // sorted, size d1
  std::vector<int> cl;  // sorted, size dl
  int alphal = -1;

  int kappa() const { return static_cast<int>(palette.size()); }
  PrePalette reversed() const;
  void validate(const Caterpillar& t) const;  // throws std::invalid_argument
};

// Coloring of a caterpillar keyed by structure: spine[i] colors edge
// x_i x_{i+1} (i = 0..l); pendant[i-1] holds the d_i - 2 pendant colors
// at x_i.
struct CatColoring {
  std::vector<int> spine;
  std::vector<std::vector<int>> pendant;

  CatColoring reversed() const;
};

// Realization of Cat(d1,...,dl) as a Graph.  Vertices: spine 0..l+1, then
// pendant leaves grouped by spine vertex.  Edges: spine edges x_i x_{i+1}
// in order (ids 0..l), then pendant edges grouped by spine vertex.
struct CatGraph {
  Graph graph;
  std::vector<EdgeId> spine_edge;                 // l+1 entries
  std::vector<std::vector<EdgeId>> pendant_edge;  // per spine position 1..l
};

CatGraph as_graph(const Caterpillar& t);

EdgeColoring to_edge_coloring(const Caterpillar& t, const CatColoring& col,
                              int kappa);
CatColoring from_edge_coloring(const Caterpillar& t, const EdgeColoring& c);

// ---- reduction steps (exposed for testing; the solver composes them) ----

// Shrinks a palette of size > kappa_target to kappa_target, following the
// small-union / large-union split; in the large case the directive recolors
// the named end-star edges to the dropped colors afterwards.
struct KappaReduction {
  PrePalette reduced;
  bool large_union = false;
  std::vector<int> recolor_from;  // colors placed by the sub-solution
  std::vector<int> recolor_to;    // colors outside the sub-palette
};

KappaReduction reduce_kappa(const Caterpillar& t, const PrePalette& p,
                            int kappa_target);
CatColoring apply_kappa_directive(const KappaReduction& r, CatColoring col);

// Strips the last spine vertex: a boundary tuple for Cat(d1,...,d_{l-1})
// plus the recipe that recolors the stripped star afterwards.
struct LengthReduction {
  PrePalette reduced;
  int alpha_prev = -1;  // color of x_{l-1} x_l in the reduced instance
};

LengthReduction reduce_length(const Caterpillar& t, const PrePalette& p);
CatColoring apply_length_directive(const Caterpillar& t, const PrePalette& p,
                                   const LengthReduction& r, CatColoring sub);

// Boundary tuple for a supertree (componentwise larger degrees, same
// length); restricting any supertree solution recovers a solution of p.
PrePalette lift_to_supertree(const Caterpillar& t, const Caterpillar& super,
                             const PrePalette& p);

// One color-removal step of the induction: either beta can be removed
// directly, or the instance first strips to length l-1 with a crafted
// (alpha_prev, C_prev) pair.  BetaEqualsAlphaSwap records that beta
// collides with alphal and a pendant swap restores it afterwards.
struct BetaChoice {
  enum class Kind { UseBeta, BetaEqualsAlphaSwap, FallbackStrip };
  Kind kind = Kind::UseBeta;
  int beta = -1;
  int alpha_sub = -1;           // substitute end color when swapping
  int alpha_prev = -1;          // FallbackStrip only
  std::vector<int> c_prev;      // FallbackStrip only
};

BetaChoice choose_beta(const Caterpillar& t, const PrePalette& p);

// ---- the engine ----

struct CatSolveResult {
  enum class Status { Feasible, Infeasible };
  Status status = Status::Infeasible;
  CatColoring coloring;  // meaningful when Feasible
  bool used_fallback = false;
  std::uint64_t nodes = 0;

  bool feasible() const { return status == Status::Feasible; }
};

// Constructs a coloring realizing p, or proves none exists.  Inside the
// guarantee envelope (sigma >= 5, l >= ell_min(sigma), sigma >= Delta + 2)
// the constructive path always succeeds; outside it the exact solver
// decides the boundary instance.
CatSolveResult solve_precolored(const Caterpillar& t, const PrePalette& p,
                                const SearchConfig& cfg = {});

// Handles kappa >= sigma(t) + 1 by augmenting pendants until the envelope
// applies, solving, and restricting back.  Requires l >= ell_min(sigma+1)
// and sigma(t) >= 4; kappa == sigma(t) routes to solve_precolored.
CatSolveResult solve_with_extra_color(const Caterpillar& t,
                                      const PrePalette& p,
                                      const SearchConfig& cfg = {});

// Spec strings used by the CLI: "cat:3,3,3" and "pal:5;1;1,2,3;1,2,3;3"
// (1-based colors; palette is {1..kappa}).
Caterpillar parse_caterpillar_spec(const std::string& s);
PrePalette parse_palette_spec(const std::string& s);

}  // namespace sec
