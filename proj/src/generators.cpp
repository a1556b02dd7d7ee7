#include "sec/generators.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "sec/caterpillar.hpp"
#include "sec/extend.hpp"

namespace sec {

int JellyfishSpec::m() const {
  int total = n();
  for (int p : pendants) total += p;
  return total;
}

int JellyfishSpec::sigma() const {
  if (n() < 3) throw std::invalid_argument("jellyfish cycle needs n >= 3");
  int best = 0;
  for (int i = 0; i < n(); ++i) {
    int j = (i + 1) % n();
    best = std::max(best, cycle_degree(i) + cycle_degree(j) - 1);
  }
  return best;
}

Graph gen_counterexample(int n, int d) {
  if (n < 1 || d < 2)
    throw std::invalid_argument("counterexample family needs n >= 1, d >= 2");
  const int cyc = 3 * n + 1;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < cyc; ++i) pairs.emplace_back(i, i + 1);
  pairs.emplace_back(0, cyc - 1);
  int next = cyc;
  for (int i = 1; i <= n; ++i) {
    int hub = 3 * i - 1;  // x_{3i} of the 1-based cycle
    for (int k = 0; k < d - 2; ++k) pairs.emplace_back(hub, next++);
  }
  return Graph::from_edges(next, pairs);
}

Graph gen_jellyfish(const JellyfishSpec& spec) {
  const int n = spec.n();
  if (n < 3) throw std::invalid_argument("jellyfish cycle needs n >= 3");
  for (int p : spec.pendants)
    if (p < 0) throw std::invalid_argument("negative pendant count");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  pairs.emplace_back(0, n - 1);
  int next = n;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < spec.pendants[i]; ++k) pairs.emplace_back(i, next++);
  return Graph::from_edges(next, pairs);
}

namespace {

bool regular_degree(const JellyfishSpec& s, int d) {
  for (int i = 0; i < s.n(); ++i)
    if (s.cycle_degree(i) != d) return false;
  return true;
}

// positions i = 1, 4, ..., 3*floor(n/3)-2 (1-based) must carry degree
// sigma-1 under some rotation of either orientation
bool rotated_pattern(const JellyfishSpec& s, int sg) {
  const int n = s.n();
  const int blocks = n / 3;
  std::vector<int> fwd(n), rev(n);
  for (int i = 0; i < n; ++i) {
    fwd[i] = s.cycle_degree(i);
    rev[i] = s.cycle_degree(n - 1 - i);
  }
  for (const auto& deg : {fwd, rev}) {
    for (int r = 0; r < n; ++r) {
      bool ok = true;
      for (int b = 0; b < blocks && ok; ++b)
        if (deg[(r + 3 * b) % n] != sg - 1) ok = false;
      if (ok) return true;
    }
  }
  return false;
}

bool ten_four_pattern(const JellyfishSpec& s) {
  bool odd = true, even = true;
  for (int i = 0; i < s.n(); ++i) {
    if (i % 2 == 0 && s.cycle_degree(i) != 3) even = false;
    if (i % 2 == 1 && s.cycle_degree(i) != 3) odd = false;
  }
  return odd || even;
}

}  // namespace

int jellyfish_index(const JellyfishSpec& spec) {
  const int n = spec.n();
  const int m = spec.m();
  const int sg = spec.sigma();
  if (sg < 4)
    throw std::invalid_argument("jellyfish index formula needs sigma >= 4");
  if (n == 3) return m;
  if (n == 4) return sg + 1;
  const int ratio = (m + n / 2 - 1) / (n / 2);  // ceil(m / floor(n/2))
  if (n % 2 == 1) {
    bool regular = regular_degree(spec, spec.cycle_degree(0));
    bool reg_not_73 = regular && !(n == 7 && spec.cycle_degree(0) == 3);
    if (reg_not_73 || ratio >= sg + 1) return ratio;
  }
  if (n == 7 && regular_degree(spec, 3)) return sg + 1;
  if (n % 3 != 0 && rotated_pattern(spec, sg)) return sg + 1;
  if (n == 10 && sg == 4 && ten_four_pattern(spec)) return sg + 1;
  return sg;
}

Graph gen_high_girth_instance(const Graph& base, int k, int sigma_target) {
  if (base.edge_count() == 0)
    throw std::invalid_argument("base graph needs at least one edge");
  if (k < 3)
    throw std::invalid_argument("subdivision factor must be >= 3 to leave "
                                "two adjacent interior vertices");
  if (sigma_target < 4)
    throw std::invalid_argument("sigma target must be >= 4");
  if (sigma_target < base.max_degree() + 2)
    throw std::invalid_argument("sigma target below Delta(base) + 2");
  Girth g0 = girth(base);
  int required = sigma_target >= 5 ? girth_threshold(sigma_target)
                                   : girth_threshold(sigma_target + 1);
  if (g0.is_finite() && k * (*g0.length) < required) {
    int need = (required + *g0.length - 1) / *g0.length;
    throw std::invalid_argument(
        "girth " + std::to_string(k * (*g0.length)) + " below threshold " +
        std::to_string(required) + "; use k >= " + std::to_string(need));
  }
  std::vector<std::pair<int, int>> pairs;
  int next = base.vertex_count();
  int first_u = -1, first_v = -1;
  for (EdgeId e = 0; e < base.edge_count(); ++e) {
    auto [u, v] = base.edge(e);
    int prev = u;
    std::vector<int> inner;
    for (int i = 0; i + 1 < k; ++i) {
      inner.push_back(next);
      pairs.emplace_back(prev, next);
      prev = next++;
    }
    pairs.emplace_back(prev, v);
    if (e == 0) {
      first_u = inner[0];
      first_v = inner[1];
    }
  }
  // one edge reaches sigma_target: degrees sigma_target-2 and 3
  for (int i = 0; i < sigma_target - 4; ++i) pairs.emplace_back(first_u, next++);
  pairs.emplace_back(first_v, next++);
  Graph out = Graph::from_edges(next, pairs);
  if (sigma(out) != sigma_target)
    throw std::logic_error("subdivision instance missed its sigma target");
  return out;
}

Graph gen_caterpillar(const std::vector<int>& degrees) {
  return as_graph(Caterpillar(degrees)).graph;
}

Graph tree_from_pruefer(const std::vector<int>& seq, int n) {
  if (n < 2) throw std::invalid_argument("pruefer decoding needs n >= 2");
  if ((int)seq.size() != n - 2)
    throw std::invalid_argument("pruefer sequence must have n-2 entries");
  std::vector<int> degree(n, 1);
  for (int s : seq) {
    if (s < 0 || s >= n) throw std::invalid_argument("pruefer entry out of range");
    degree[s]++;
  }
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  std::vector<std::pair<int, int>> pairs;
  for (int s : seq) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    pairs.emplace_back(std::min(leaf, s), std::max(leaf, s));
    if (--degree[s] == 1) leaves.insert(s);
  }
  int a = *leaves.begin();
  int b = *std::next(leaves.begin());
  pairs.emplace_back(std::min(a, b), std::max(a, b));
  return Graph::from_edges(n, pairs);
}

Graph gen_random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
  if (n == 1) return Graph::from_edges(1, {});
  if (n == 2) return Graph::from_edges(2, {{0, 1}});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> seq(n - 2);
  for (int& s : seq) s = pick(rng);
  return tree_from_pruefer(seq, n);
}

}  // namespace sec
