#include "sec/caterpillar.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

#include "sec/coloring.hpp"

namespace sec {

namespace {

// Invariant failures inside the constructive path: logged and rerouted to
// the exact fallback by solve_precolored, never swallowed.
struct InternalInvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Set = std::vector<int>;  // sorted, distinct

bool set_contains(const Set& s, int x) {
  return std::binary_search(s.begin(), s.end(), x);
}

Set set_minus(const Set& a, int x) {
  Set out;
  out.reserve(a.size());
  for (int v : a)
    if (v != x) out.push_back(v);
  return out;
}

Set set_minus(const Set& a, const Set& b) {
  Set out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

Set set_intersect(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

Set set_union(const Set& a, const Set& b) {
  Set out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

Set set_insert(Set a, int x) {
  auto it = std::lower_bound(a.begin(), a.end(), x);
  if (it == a.end() || *it != x) a.insert(it, x);
  return a;
}

int lowest(const Set& s) {
  if (s.empty()) throw InternalInvariantError("empty color set");
  return s.front();
}

// first `count` colors of source (ascending)
Set take_lowest(const Set& source, int count) {
  if ((int)source.size() < count)
    throw InternalInvariantError("not enough colors to choose from");
  return Set(source.begin(), source.begin() + count);
}

}  // namespace

// ---------------------------------------------------------------------------
// Caterpillar basics

Caterpillar::Caterpillar(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty())
    throw std::invalid_argument("caterpillar needs at least one spine vertex");
  for (int d : degrees_)
    if (d < 2)
      throw std::invalid_argument("caterpillar spine degrees must be >= 2");
}

int Caterpillar::degree(int i) const {
  if (i < 1 || i > length())
    throw std::invalid_argument("spine index " + std::to_string(i) +
                                " out of range");
  return degrees_[i - 1];
}

int Caterpillar::sigma() const {
  // interior spine pairs dominate the pendant and end edges since d_i >= 2
  if (length() == 1) return degrees_[0];
  int best = 0;
  for (int i = 0; i + 1 < length(); ++i)
    best = std::max(best, degrees_[i] + degrees_[i + 1] - 1);
  return best;
}

int Caterpillar::max_degree() const {
  return *std::max_element(degrees_.begin(), degrees_.end());
}

int Caterpillar::edge_count() const {
  int sum = 0;
  for (int d : degrees_) sum += d;
  return sum - length() + 1;
}

Caterpillar Caterpillar::reversed() const {
  std::vector<int> d(degrees_.rbegin(), degrees_.rend());
  return Caterpillar(std::move(d));
}

Caterpillar Caterpillar::dropped_last() const {
  if (length() < 2)
    throw std::invalid_argument("cannot drop the last vertex of a length-1 caterpillar");
  return Caterpillar(std::vector<int>(degrees_.begin(), degrees_.end() - 1));
}

std::string Caterpillar::str() const {
  std::ostringstream os;
  os << "Cat(";
  for (int i = 0; i < length(); ++i) {
    if (i) os << ',';
    os << degrees_[i];
  }
  os << ')';
  return os.str();
}

int d_star(int sigma) {
  if (sigma < 1) throw std::invalid_argument("d_star needs sigma >= 1");
  return (sigma + 2) / 2;  // ceil((sigma+1)/2)
}

int ell_min(int sigma) {
  if (sigma < 5) throw std::invalid_argument("ell_min is defined for sigma >= 5");
  if (sigma == 5) return 8;
  if (sigma <= 7) return 7;
  return sigma;
}

bool LargeSet::contains(int i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

LargeSet large_set(const Caterpillar& t) {
  const int sg = t.sigma();
  if (sg < 2) throw std::invalid_argument("large_set needs sigma >= 2");
  const int ds = d_star(sg);
  const int l = t.length();
  LargeSet s;
  // within each maximal run of large vertices take the alternating prefix;
  // runs of length >= 2 consist of degree-d* vertices only
  int i = 1;
  while (i <= l) {
    if (t.degree(i) < ds) {
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 <= l && t.degree(j + 1) >= ds) ++j;
    for (int k = i; k <= j; k += 2) s.indices.push_back(k);
    i = j + 1;
  }
  if (s.indices.empty())
    throw InternalInvariantError("large set empty for " + t.str());
  for (size_t k = 0; k + 1 < s.indices.size(); ++k)
    if (s.indices[k + 1] - s.indices[k] < 2)
      throw InternalInvariantError("large set not independent for " + t.str());
  if (sg >= 5) {
    // decrementing must drop sigma by exactly one
    std::vector<int> d = t.degrees();
    for (int idx : s.indices) d[idx - 1]--;
    Caterpillar reduced{d};
    if (reduced.sigma() != sg - 1)
      throw InternalInvariantError("large-set decrement does not drop sigma for " +
                                   t.str());
  }
  return s;
}

Caterpillar derive_reduced(const Caterpillar& t) {
  LargeSet s = large_set(t);
  std::vector<int> d = t.degrees();
  for (int idx : s.indices) {
    if (d[idx - 1] < 3)
      throw InternalInvariantError("cannot decrement a degree-2 spine vertex of " +
                                   t.str());
    d[idx - 1]--;
  }
  Caterpillar out{d};
  if (out.sigma() != t.sigma() - 1)
    throw InternalInvariantError("derive_reduced did not drop sigma for " + t.str());
  return out;
}

// ---------------------------------------------------------------------------
// PrePalette / CatColoring

PrePalette PrePalette::reversed() const {
  return PrePalette{palette, alphal, cl, c1, alpha0};
}

void PrePalette::validate(const Caterpillar& t) const {
  auto sorted_distinct = [](const Set& s) {
    for (size_t i = 0; i + 1 < s.size(); ++i)
      if (s[i] >= s[i + 1]) return false;
    return true;
  };
  if (!sorted_distinct(palette) || !sorted_distinct(c1) || !sorted_distinct(cl))
    throw std::invalid_argument("palette and color sets must be sorted and distinct");
  if ((int)c1.size() != t.degree(1))
    throw std::invalid_argument("|C1| must equal d1");
  if ((int)cl.size() != t.degree(t.length()))
    throw std::invalid_argument("|Cl| must equal dl");
  for (int c : c1)
    if (!set_contains(palette, c))
      throw std::invalid_argument("C1 not within the palette");
  for (int c : cl)
    if (!set_contains(palette, c))
      throw std::invalid_argument("Cl not within the palette");
  if (!set_contains(c1, alpha0))
    throw std::invalid_argument("alpha0 must lie in C1");
  if (!set_contains(cl, alphal))
    throw std::invalid_argument("alphal must lie in Cl");
  if (kappa() < t.sigma())
    throw std::invalid_argument("palette smaller than sigma of the caterpillar");
}

CatColoring CatColoring::reversed() const {
  const int l = static_cast<int>(pendant.size());
  CatColoring out;
  out.spine.assign(spine.rbegin(), spine.rend());
  out.pendant.resize(l);
  for (int i = 0; i < l; ++i) out.pendant[i] = pendant[l - 1 - i];
  return out;
}

CatGraph as_graph(const Caterpillar& t) {
  const int l = t.length();
  CatGraph cg;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i <= l; ++i) pairs.emplace_back(i, i + 1);
  int next = l + 2;
  std::vector<std::vector<int>> leaf_ids(l);
  for (int i = 1; i <= l; ++i)
    for (int k = 0; k < t.pendant_count(i); ++k) leaf_ids[i - 1].push_back(next++);
  for (int i = 1; i <= l; ++i)
    for (int leaf : leaf_ids[i - 1]) pairs.emplace_back(i, leaf);
  cg.graph = Graph::from_edges(next, pairs);
  for (int i = 0; i <= l; ++i) cg.spine_edge.push_back(i);
  cg.pendant_edge.resize(l);
  int id = l + 1;
  for (int i = 1; i <= l; ++i)
    for (int k = 0; k < t.pendant_count(i); ++k) cg.pendant_edge[i - 1].push_back(id++);
  return cg;
}

EdgeColoring to_edge_coloring(const Caterpillar& t, const CatColoring& col,
                              int kappa) {
  CatGraph cg = as_graph(t);
  EdgeColoring c = EdgeColoring::empty(cg.graph, kappa);
  const int l = t.length();
  if ((int)col.spine.size() != l + 1 || (int)col.pendant.size() != l)
    throw std::invalid_argument("coloring shape does not match the caterpillar");
  for (int i = 0; i <= l; ++i) c.color[cg.spine_edge[i]] = col.spine[i];
  for (int i = 1; i <= l; ++i) {
    if ((int)col.pendant[i - 1].size() != t.pendant_count(i))
      throw std::invalid_argument("pendant list size mismatch at spine vertex " +
                                  std::to_string(i));
    for (int k = 0; k < t.pendant_count(i); ++k)
      c.color[cg.pendant_edge[i - 1][k]] = col.pendant[i - 1][k];
  }
  return c;
}

CatColoring from_edge_coloring(const Caterpillar& t, const EdgeColoring& c) {
  CatGraph cg = as_graph(t);
  if ((int)c.color.size() != cg.graph.edge_count())
    throw std::invalid_argument("coloring size does not match the caterpillar graph");
  const int l = t.length();
  CatColoring col;
  col.spine.resize(l + 1);
  col.pendant.resize(l);
  for (int i = 0; i <= l; ++i) col.spine[i] = c.color[cg.spine_edge[i]];
  for (int i = 1; i <= l; ++i)
    for (EdgeId e : cg.pendant_edge[i - 1]) col.pendant[i - 1].push_back(c.color[e]);
  return col;
}

// ---------------------------------------------------------------------------
// Reductions

KappaReduction reduce_kappa(const Caterpillar& t, const PrePalette& p,
                            int kappa_target) {
  p.validate(t);
  if (kappa_target < t.sigma())
    throw std::invalid_argument("kappa_target below sigma");
  KappaReduction r;
  if (p.kappa() <= kappa_target) {
    r.reduced = p;
    return r;
  }
  Set both = set_union(p.c1, p.cl);
  if ((int)both.size() <= kappa_target) {
    // small union: any kappa_target-superset inside the palette works
    Set c = both;
    for (int col : set_minus(p.palette, both)) {
      if ((int)c.size() >= kappa_target) break;
      c = set_insert(std::move(c), col);
    }
    r.reduced = PrePalette{c, p.alpha0, p.c1, p.cl, p.alphal};
    return r;
  }
  // large union: keep C1 and alphal, fill from Cl, and plan to recolor the
  // end-star edges whose colors were borrowed
  r.large_union = true;
  Set base = set_insert(p.c1, p.alphal);
  Set fill_source = set_minus(p.cl, base);
  Set c = base;
  for (int col : fill_source) {
    if ((int)c.size() >= kappa_target) break;
    c = set_insert(std::move(c), col);
  }
  if ((int)c.size() != kappa_target)
    throw InternalInvariantError("kappa reduction could not fill the sub-palette");
  Set cl_kept = set_intersect(p.cl, c);
  Set cl_red = cl_kept;
  for (int col : set_minus(c, cl_kept)) {
    if ((int)cl_red.size() >= (int)p.cl.size()) break;
    cl_red = set_insert(std::move(cl_red), col);
  }
  if (cl_red.size() != p.cl.size())
    throw InternalInvariantError("kappa reduction could not rebuild Cl");
  r.reduced = PrePalette{c, p.alpha0, p.c1, cl_red, p.alphal};
  r.recolor_from = set_minus(cl_red, p.cl);
  r.recolor_to = set_minus(p.cl, c);
  if (r.recolor_from.size() != r.recolor_to.size())
    throw InternalInvariantError("kappa reduction recolor sets differ in size");
  return r;
}

CatColoring apply_kappa_directive(const KappaReduction& r, CatColoring col) {
  if (!r.large_union || r.recolor_from.empty()) return col;
  const int l = static_cast<int>(col.pendant.size());
  auto remap = [&](int& c) {
    auto it = std::lower_bound(r.recolor_from.begin(), r.recolor_from.end(), c);
    if (it != r.recolor_from.end() && *it == c)
      c = r.recolor_to[it - r.recolor_from.begin()];
  };
  // only the last star carries borrowed colors
  remap(col.spine[l - 1]);
  remap(col.spine[l]);
  for (int& c : col.pendant[l - 1]) remap(c);
  return col;
}

LengthReduction reduce_length(const Caterpillar& t, const PrePalette& p) {
  p.validate(t);
  const int l = t.length();
  if (l < 2) throw std::invalid_argument("reduce_length needs length >= 2");
  LengthReduction r;
  if (l == 2) {
    // the reduced instance is a single star, so C_prev is pinned to C1 and
    // the connecting color is forced
    Set inter = set_intersect(p.c1, p.cl);
    Set usable = set_minus(set_minus(inter, p.alpha0), p.alphal);
    if (usable.size() != inter.size() || inter.size() != 1)
      throw std::invalid_argument(
          "length-2 reduction requires C1 and Cl to meet in exactly one color "
          "distinct from both alphas");
    r.alpha_prev = inter[0];
    r.reduced = PrePalette{p.palette, p.alpha0, p.c1, p.c1, r.alpha_prev};
    return r;
  }
  r.alpha_prev = lowest(set_minus(p.cl, p.alphal));
  Set c_prev = set_insert(
      take_lowest(set_minus(p.palette, p.cl), t.degree(l - 1) - 1), r.alpha_prev);
  r.reduced = PrePalette{p.palette, p.alpha0, p.c1, c_prev, r.alpha_prev};
  return r;
}

CatColoring apply_length_directive(const Caterpillar& t, const PrePalette& p,
                                   const LengthReduction& r, CatColoring sub) {
  const int l = t.length();
  if ((int)sub.spine.size() != l || (int)sub.pendant.size() != l - 1)
    throw InternalInvariantError("length directive applied to a mismatched coloring");
  if (sub.spine[l - 1] != r.alpha_prev)
    throw InternalInvariantError("reduced solution does not end in alpha_prev");
  CatColoring out;
  out.spine = std::move(sub.spine);
  out.spine.push_back(p.alphal);
  out.pendant = std::move(sub.pendant);
  out.pendant.push_back(
      set_minus(set_minus(p.cl, r.alpha_prev), p.alphal));
  return out;
}

PrePalette lift_to_supertree(const Caterpillar& t, const Caterpillar& super,
                             const PrePalette& p) {
  if (super.length() != t.length())
    throw std::invalid_argument("supertree must have the same length");
  for (int i = 1; i <= t.length(); ++i)
    if (super.degree(i) < t.degree(i))
      throw std::invalid_argument("supertree degrees must dominate componentwise");
  if (p.kappa() < super.sigma())
    throw std::invalid_argument("palette smaller than sigma of the supertree");
  p.validate(t);
  auto grow = [&](const Set& s, int target) {
    Set out = s;
    for (int col : set_minus(p.palette, s)) {
      if ((int)out.size() >= target) break;
      out = set_insert(std::move(out), col);
    }
    if ((int)out.size() != target)
      throw InternalInvariantError("cannot grow boundary set to the supertree degree");
    return out;
  };
  return PrePalette{p.palette, p.alpha0, grow(p.c1, super.degree(1)),
                    grow(p.cl, super.degree(super.length())), p.alphal};
}

// ---------------------------------------------------------------------------
// Beta choice (the color removed by one induction step)

BetaChoice choose_beta(const Caterpillar& t, const PrePalette& p) {
  const int sg = t.sigma();
  if (sg < 6)
    throw std::invalid_argument("choose_beta requires sigma >= 6");
  if (p.kappa() != sg)
    throw std::invalid_argument("choose_beta expects kappa == sigma (reduce first)");
  p.validate(t);
  const int l = t.length();
  LargeSet big = large_set(t);
  const bool left = big.contains(1);
  const bool right = big.contains(l);

  auto direct = [&](int beta) {
    BetaChoice bc;
    if (beta == p.alphal) {
      bc.kind = BetaChoice::Kind::BetaEqualsAlphaSwap;
      bc.beta = beta;
      bc.alpha_sub = lowest(set_minus(p.cl, beta));
    } else {
      bc.kind = BetaChoice::Kind::UseBeta;
      bc.beta = beta;
    }
    return bc;
  };
  auto strip = [&](int alpha_prev, int beta) {
    BetaChoice bc;
    bc.kind = BetaChoice::Kind::FallbackStrip;
    bc.beta = beta;
    bc.alpha_prev = alpha_prev;
    bc.c_prev = set_insert(
        take_lowest(set_minus(p.palette, p.cl), t.degree(l - 1) - 1), alpha_prev);
    return bc;
  };

  if (left && right) {
    // |C1 ∩ Cl| >= 2d* - sigma > 0 at kappa == sigma
    Set inter = set_intersect(p.c1, p.cl);
    if (inter.empty())
      throw InternalInvariantError("both ends large but C1 and Cl are disjoint");
    return direct(lowest(inter));
  }
  if (left && !right) {
    Set diff = set_minus(p.c1, p.cl);
    if (!diff.empty()) return direct(lowest(diff));
    // C1 == Cl with d1 = dl = d*; the run rule then puts l-1 in the set
    if (!big.contains(l - 1))
      throw InternalInvariantError("degenerate left case without l-1 large");
    int alpha_prev = lowest(set_minus(p.cl, p.alphal));
    return strip(alpha_prev, alpha_prev);
  }
  if (!left && right) {
    Set diff = set_minus(p.cl, p.c1);
    if (diff.empty())
      throw InternalInvariantError("Cl inside C1 forces position 1 large");
    return direct(lowest(diff));
  }
  // neither end large
  Set rest = set_minus(set_minus(p.palette, p.c1), p.cl);
  if (!rest.empty()) {
    BetaChoice bc;
    bc.kind = BetaChoice::Kind::UseBeta;
    bc.beta = lowest(rest);
    return bc;
  }
  // C == C1 ∪ Cl; strip with alpha_prev outside C1
  Set pool = set_minus(set_minus(p.cl, p.c1), p.alphal);
  if (pool.empty())
    throw InternalInvariantError("no alpha_prev available in case 4");
  int alpha_prev = lowest(pool);
  if (big.contains(l - 1)) return strip(alpha_prev, alpha_prev);
  Set pool2 = set_minus(set_minus(p.cl, p.c1), alpha_prev);
  if (pool2.empty())
    throw InternalInvariantError("no beta available in case 4");
  return strip(alpha_prev, lowest(pool2));
}

// ---------------------------------------------------------------------------
// The engine

namespace {

struct EngineStats {
  std::uint64_t nodes = 0;
};

bool in_envelope(const Caterpillar& t) {
  const int sg = t.sigma();
  return sg >= 5 && t.length() >= ell_min(sg) && sg >= t.max_degree() + 2;
}

void require_envelope(const Caterpillar& t, const char* where) {
  if (!in_envelope(t))
    throw InternalInvariantError(std::string(where) +
                                 ": derived tree left the guarantee envelope: " +
                                 t.str());
}

void validate_internal(const Caterpillar& t, const PrePalette& p) {
  try {
    p.validate(t);
  } catch (const std::invalid_argument& e) {
    throw InternalInvariantError(std::string("derived instance malformed: ") +
                                 e.what());
  }
}

// Exact decision of a boundary instance: the two inner spine colors are
// enumerated, pendants are pinned canonically (they are interchangeable),
// and the rest goes to the exact solver.  Exhausting every branch is a
// proof of infeasibility.
std::optional<CatColoring> boundary_solve(const Caterpillar& t,
                                          const PrePalette& p,
                                          const SearchConfig& cfg,
                                          EngineStats& st) {
  const int l = t.length();
  const int kappa = p.kappa();

  if (l == 1) {
    // one star: everything pairwise conflicting, both boundary sets name it
    if (p.c1 != p.cl || p.alpha0 == p.alphal) return std::nullopt;
    CatColoring col;
    col.spine = {p.alpha0, p.alphal};
    col.pendant = {set_minus(set_minus(p.c1, p.alpha0), p.alphal)};
    return col;
  }

  CatGraph cg = as_graph(t);
  // palette values <-> solver color indices
  auto index_of = [&](int color) {
    auto it = std::lower_bound(p.palette.begin(), p.palette.end(), color);
    return static_cast<int>(it - p.palette.begin());
  };

  auto attempt = [&](int c1_spine, int cl_spine) -> std::optional<CatColoring> {
    EdgeColoring pre = EdgeColoring::empty(cg.graph, kappa);
    pre.color[cg.spine_edge[0]] = index_of(p.alpha0);
    pre.color[cg.spine_edge[l]] = index_of(p.alphal);
    pre.color[cg.spine_edge[1]] = index_of(c1_spine);
    pre.color[cg.spine_edge[l - 1]] = index_of(cl_spine);
    Set pend1 = set_minus(set_minus(p.c1, p.alpha0), c1_spine);
    for (size_t k = 0; k < pend1.size(); ++k)
      pre.color[cg.pendant_edge[0][k]] = index_of(pend1[k]);
    Set pendl = set_minus(set_minus(p.cl, p.alphal), cl_spine);
    for (size_t k = 0; k < pendl.size(); ++k)
      pre.color[cg.pendant_edge[l - 1][k]] = index_of(pendl[k]);
    SolveOutcome out = colorable_with(cg.graph, kappa, pre, cfg);
    st.nodes += out.nodes;
    if (out.status == SolveOutcome::Status::Aborted)
      throw std::runtime_error("caterpillar boundary search hit the node limit");
    if (!out.feasible()) return std::nullopt;
    EdgeColoring mapped = out.coloring;
    for (int& c : mapped.color) c = p.palette[c];
    return from_edge_coloring(t, mapped);
  };

  if (l == 2) {
    // x1x2 serves both stars
    for (int c : set_minus(set_minus(set_intersect(p.c1, p.cl), p.alpha0),
                           p.alphal)) {
      auto col = attempt(c, c);
      if (col) return col;
    }
    return std::nullopt;
  }
  for (int a : set_minus(p.c1, p.alpha0))
    for (int b : set_minus(p.cl, p.alphal)) {
      auto col = attempt(a, b);
      if (col) return col;
    }
  return std::nullopt;
}

// Drops beta from a boundary tuple.  When beta collides with an end color
// the substitute is recorded; a pendant swap restores the original after
// the sub-solution is extended.
struct BetaRemoval {
  PrePalette reduced;
  bool swap_left = false;
  bool swap_right = false;
};

BetaRemoval remove_beta(const PrePalette& p, int beta, bool left, bool right) {
  BetaRemoval r;
  if (set_contains(p.c1, beta) != left)
    throw InternalInvariantError("beta membership in C1 contradicts the large set");
  if (set_contains(p.cl, beta) != right)
    throw InternalInvariantError("beta membership in Cl contradicts the large set");
  Set c1 = left ? set_minus(p.c1, beta) : p.c1;
  Set cl = right ? set_minus(p.cl, beta) : p.cl;
  int a0 = p.alpha0, al = p.alphal;
  if (a0 == beta) {
    r.swap_left = true;
    a0 = lowest(c1);
  }
  if (al == beta) {
    r.swap_right = true;
    al = lowest(cl);
  }
  r.reduced = PrePalette{set_minus(p.palette, beta), a0, c1, cl, al};
  return r;
}

// Appends beta to the freed pendant slot of every index in `positions`
// (the sub coloring colors the decremented tree).
CatColoring insert_beta(const Caterpillar& t, const std::vector<int>& positions,
                        CatColoring sub, int beta) {
  for (int i : positions) sub.pendant[i - 1].push_back(beta);
  for (int i = 1; i <= t.length(); ++i)
    if ((int)sub.pendant[i - 1].size() != t.pendant_count(i))
      throw InternalInvariantError("beta insertion left a pendant list mismatched");
  return sub;
}

void swap_end_into_spine(CatColoring& col, bool at_left) {
  // the freed pendant carries beta; trade it with the end spine edge
  if (at_left)
    std::swap(col.spine.front(), col.pendant.front().back());
  else
    std::swap(col.spine.back(), col.pendant.back().back());
}

CatColoring constructive(const Caterpillar& t, const PrePalette& p,
                         const SearchConfig& cfg, EngineStats& st);

CatColoring induction_step(const Caterpillar& t, const PrePalette& p,
                           const SearchConfig& cfg, EngineStats& st) {
  const int l = t.length();
  LargeSet big = large_set(t);
  const bool left = big.contains(1);
  const bool right = big.contains(l);
  BetaChoice bc = choose_beta(t, p);

  if (bc.kind != BetaChoice::Kind::FallbackStrip) {
    Caterpillar reduced = derive_reduced(t);
    require_envelope(reduced, "induction");
    BetaRemoval rem = remove_beta(p, bc.beta, left, right);
    validate_internal(reduced, rem.reduced);
    CatColoring sub = constructive(reduced, rem.reduced, cfg, st);
    CatColoring col = insert_beta(t, big.indices, std::move(sub), bc.beta);
    if (rem.swap_left) swap_end_into_spine(col, true);
    if (rem.swap_right) swap_end_into_spine(col, false);
    return col;
  }

  // strip to length l-1 with the crafted (alpha_prev, C_prev) boundary
  Caterpillar t1 = t.dropped_last();
  PrePalette q{p.palette, p.alpha0, p.c1, bc.c_prev, bc.alpha_prev};
  validate_internal(t1, q);
  Caterpillar reduced1 = derive_reduced(t).dropped_last();
  require_envelope(reduced1, "induction strip");
  const bool prev = big.contains(l - 1);
  BetaRemoval rem = remove_beta(q, bc.beta, left, prev);
  validate_internal(reduced1, rem.reduced);
  CatColoring sub = constructive(reduced1, rem.reduced, cfg, st);
  std::vector<int> positions;
  for (int i : big.indices)
    if (i <= l - 1) positions.push_back(i);
  CatColoring colq = insert_beta(t1, positions, std::move(sub), bc.beta);
  if (rem.swap_left) swap_end_into_spine(colq, true);
  if (rem.swap_right) swap_end_into_spine(colq, false);
  LengthReduction lr;
  lr.reduced = q;
  lr.alpha_prev = bc.alpha_prev;
  return apply_length_directive(t, p, lr, std::move(colq));
}

CatColoring constructive(const Caterpillar& t, const PrePalette& p,
                         const SearchConfig& cfg, EngineStats& st) {
  validate_internal(t, p);
  const int sg = t.sigma();
  if (p.kappa() > sg) {
    KappaReduction r = reduce_kappa(t, p, sg);
    CatColoring sub = constructive(t, r.reduced, cfg, st);
    return apply_kappa_directive(r, std::move(sub));
  }
  if (t.length() > ell_min(sg)) {
    // strip whichever end keeps sigma intact
    if (t.dropped_last().sigma() == sg) {
      LengthReduction r = reduce_length(t, p);
      CatColoring sub = constructive(t.dropped_last(), r.reduced, cfg, st);
      return apply_length_directive(t, p, r, std::move(sub));
    }
    if (t.reversed().dropped_last().sigma() == sg)
      return constructive(t.reversed(), p.reversed(), cfg, st).reversed();
    throw InternalInvariantError("no sigma-preserving strip for " + t.str());
  }
  if (sg <= 7) {
    auto col = boundary_solve(t, p, cfg, st);
    if (!col)
      throw InternalInvariantError("base search found no coloring inside the envelope: " +
                                   t.str());
    return *col;
  }
  // orient so dropping the last spine vertex keeps sigma
  if (t.dropped_last().sigma() != sg) {
    if (t.reversed().dropped_last().sigma() != sg)
      throw InternalInvariantError("no orientation preserves sigma for " + t.str());
    return induction_step(t.reversed(), p.reversed(), cfg, st).reversed();
  }
  return induction_step(t, p, cfg, st);
}

void check_result(const Caterpillar& t, const PrePalette& p,
                  const CatColoring& col) {
  const int l = t.length();
  if ((int)col.spine.size() != l + 1 || (int)col.pendant.size() != l)
    throw InternalInvariantError("result shape mismatch");
  if (col.spine[0] != p.alpha0 || col.spine[l] != p.alphal)
    throw InternalInvariantError("result violates the end colors");
  auto star = [&](int i) {  // colors at spine vertex i, sorted
    Set s = col.pendant[i - 1];
    s.push_back(col.spine[i - 1]);
    s.push_back(col.spine[i]);
    std::sort(s.begin(), s.end());
    return s;
  };
  if (star(1) != p.c1 || star(l) != p.cl)
    throw InternalInvariantError("result violates the boundary color sets");
  int kappa = p.palette.empty() ? 0 : p.palette.back() + 1;
  EdgeColoring ec = to_edge_coloring(t, col, kappa);
  for (int c : ec.color)
    if (!set_contains(p.palette, c))
      throw InternalInvariantError("result uses a color outside the palette");
  CatGraph cg = as_graph(t);
  if (!verify(cg.graph, ec).ok())
    throw InternalInvariantError("result is not a strong edge-coloring");
}

}  // namespace

CatSolveResult solve_precolored(const Caterpillar& t, const PrePalette& p,
                                const SearchConfig& cfg) {
  p.validate(t);
  EngineStats st;
  if (in_envelope(t)) {
    try {
      CatColoring col = constructive(t, p, cfg, st);
      check_result(t, p, col);
      CatSolveResult res;
      res.status = CatSolveResult::Status::Feasible;
      res.coloring = std::move(col);
      res.used_fallback = false;
      res.nodes = st.nodes;
      return res;
    } catch (const InternalInvariantError& err) {
      std::cerr << "[caterpillar] constructive path failed on " << t.str()
                << ": " << err.what() << "; rerouting to the exact solver\n";
    }
  }
  auto col = boundary_solve(t, p, cfg, st);
  CatSolveResult res;
  res.used_fallback = true;
  res.nodes = st.nodes;
  if (col) {
    check_result(t, p, *col);
    res.status = CatSolveResult::Status::Feasible;
    res.coloring = std::move(*col);
  } else {
    res.status = CatSolveResult::Status::Infeasible;
  }
  return res;
}

namespace {

// One adjacent pair is raised until its weight reaches sigma+1, preferring
// increments away from the boundary stars so the lifted instance restricts
// cleanly.
std::optional<Caterpillar> find_augmentation(const Caterpillar& t) {
  const int sg = t.sigma();
  const int l = t.length();
  for (int i = 1; i + 1 <= l; ++i) {
    for (int a = t.degree(i); a <= sg - 1; ++a) {
      int b = sg + 2 - a;
      if (b < t.degree(i + 1) || b > sg - 1) continue;
      if (a > t.degree(i) && i == 1) continue;          // never touch x1
      if (b > t.degree(i + 1) && i + 1 == l) continue;  // never touch xl
      std::vector<int> d = t.degrees();
      d[i - 1] = a;
      d[i] = b;
      Caterpillar cand{d};
      if (cand.sigma() != sg + 1) continue;
      if (!in_envelope(cand)) continue;
      return cand;
    }
  }
  return std::nullopt;
}

}  // namespace

CatSolveResult solve_with_extra_color(const Caterpillar& t, const PrePalette& p,
                                      const SearchConfig& cfg) {
  p.validate(t);
  const int sg = t.sigma();
  if (p.kappa() == sg) return solve_precolored(t, p, cfg);  // out of contract
  if (sg < 4)
    throw std::invalid_argument("extra-color route requires sigma >= 4");
  if (t.length() < ell_min(sg + 1))
    throw std::invalid_argument("spine too short for the extra-color route");
  auto super = find_augmentation(t);
  if (!super) return solve_precolored(t, p, cfg);
  PrePalette lifted = lift_to_supertree(t, *super, p);
  CatSolveResult res = solve_precolored(*super, lifted, cfg);
  if (!res.feasible()) return res;
  // restrict: the boundary stars were not augmented, so dropping the extra
  // interior pendants is a plain edge deletion
  CatColoring col = std::move(res.coloring);
  for (int i = 1; i <= t.length(); ++i)
    col.pendant[i - 1].resize(t.pendant_count(i));
  check_result(t, p, col);
  res.coloring = std::move(col);
  return res;
}

// ---------------------------------------------------------------------------
// Spec strings

Caterpillar parse_caterpillar_spec(const std::string& s) {
  if (s.rfind("cat:", 0) != 0)
    throw std::invalid_argument("caterpillar spec must start with 'cat:'");
  std::vector<int> degrees;
  std::stringstream ss(s.substr(4));
  std::string tok;
  while (std::getline(ss, tok, ','))
    degrees.push_back(std::stoi(tok));
  return Caterpillar(degrees);
}

PrePalette parse_palette_spec(const std::string& s) {
  if (s.rfind("pal:", 0) != 0)
    throw std::invalid_argument("palette spec must start with 'pal:'");
  std::vector<std::string> parts;
  std::stringstream ss(s.substr(4));
  std::string tok;
  while (std::getline(ss, tok, ';')) parts.push_back(tok);
  if (parts.size() != 5)
    throw std::invalid_argument("palette spec needs kappa;a0;C1;Cl;al");
  auto parse_set = [](const std::string& in) {
    Set out;
    std::stringstream cs(in);
    std::string c;
    while (std::getline(cs, c, ',')) out.push_back(std::stoi(c) - 1);
    std::sort(out.begin(), out.end());
    return out;
  };
  int kappa = std::stoi(parts[0]);
  if (kappa < 1) throw std::invalid_argument("kappa must be positive");
  PrePalette p;
  p.palette.resize(kappa);
  for (int i = 0; i < kappa; ++i) p.palette[i] = i;
  p.alpha0 = std::stoi(parts[1]) - 1;
  p.c1 = parse_set(parts[2]);
  p.cl = parse_set(parts[3]);
  p.alphal = std::stoi(parts[4]) - 1;
  return p;
}

}  // namespace sec
