#include "sec/coloring.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace sec {

EdgeColoring EdgeColoring::empty(const Graph& g, int kappa) {
  return EdgeColoring{kappa, std::vector<int>(g.edge_count(), -1)};
}

bool EdgeColoring::total() const {
  return std::find(color.begin(), color.end(), -1) == color.end();
}

int EdgeColoring::assigned_count() const {
  return static_cast<int>(color.size() -
                          std::count(color.begin(), color.end(), -1));
}

std::vector<EdgeId> EdgeColoring::uncolored() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < (int)color.size(); ++e)
    if (color[e] == -1) out.push_back(e);
  return out;
}

namespace {

// shortest path between two conflicting edges: a shared endpoint, or the
// joining edge's endpoints
std::vector<VertexId> conflict_witness(const Graph& g, EdgeId a, EdgeId b) {
  auto [u1, v1] = g.edge(a);
  auto [u2, v2] = g.edge(b);
  for (int x : {u1, v1})
    for (int y : {u2, v2})
      if (x == y) return {x};
  for (int x : {u1, v1})
    for (int y : {u2, v2})
      if (g.has_edge(x, y)) return {x, y};
  return {};
}

}  // namespace

VerifyResult verify(const Graph& g, const EdgeColoring& c) {
  VerifyResult res;
  if ((int)c.color.size() != g.edge_count())
    throw std::invalid_argument("coloring size does not match edge count");
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (c.color[e] == -1) {
      res.uncolored.push_back(e);
    } else if (c.color[e] < 0 || c.color[e] >= c.kappa) {
      throw std::invalid_argument("edge " + std::to_string(e) +
                                  " colored outside 0..kappa-1");
    }
  }
  if (!res.uncolored.empty()) {
    res.status = VerifyResult::Status::Incomplete;
    return res;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (EdgeId f : conflict_pairs(g, e)) {
      if (f <= e) continue;
      if (c.color[e] == c.color[f]) {
        Violation v;
        v.a = e;
        v.b = f;
        v.color = c.color[e];
        v.witness = conflict_witness(g, e, f);
        res.violations.push_back(v);
      }
    }
  }
  res.status = res.violations.empty() ? VerifyResult::Status::Ok
                                      : VerifyResult::Status::Conflict;
  return res;
}

ConflictGraph conflict_graph(const Graph& g) {
  ConflictGraph cg;
  cg.adj.resize(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) cg.adj[e] = conflict_pairs(g, e);
  return cg;
}

namespace {

// Tomita-style max clique: candidates are greedily colored and a branch is
// cut when |clique| + color count cannot beat the incumbent.
struct CliqueSearch {
  const std::vector<std::vector<char>>& mat;
  int n;
  std::vector<int> best, current;

  void expand(std::vector<int>& cand) {
    while (!cand.empty()) {
      // greedy coloring bound on the remaining candidates
      std::vector<int> color_of(cand.size());
      int colors = 0;
      {
        std::vector<std::vector<int>> classes;
        for (size_t i = 0; i < cand.size(); ++i) {
          int v = cand[i];
          int c = 0;
          for (; c < (int)classes.size(); ++c) {
            bool clash = false;
            for (int w : classes[c])
              if (mat[v][w]) {
                clash = true;
                break;
              }
            if (!clash) break;
          }
          if (c == (int)classes.size()) classes.emplace_back();
          classes[c].push_back(v);
          color_of[i] = c + 1;
        }
        colors = static_cast<int>(classes.size());
      }
      if ((int)current.size() + colors <= (int)best.size()) return;
      // branch on a candidate with the highest greedy color
      size_t pick = 0;
      for (size_t i = 1; i < cand.size(); ++i)
        if (color_of[i] > color_of[pick]) pick = i;
      int v = cand[pick];
      cand.erase(cand.begin() + pick);
      if ((int)current.size() + color_of[pick] <= (int)best.size()) continue;
      current.push_back(v);
      std::vector<int> next;
      for (int w : cand)
        if (mat[v][w]) next.push_back(w);
      if (next.empty()) {
        if (current.size() > best.size()) best = current;
      } else {
        expand(next);
      }
      current.pop_back();
    }
  }
};

}  // namespace

Antimatching max_antimatching(const Graph& g, int node_budget) {
  if (g.edge_count() > node_budget)
    throw BudgetExceeded("max_antimatching: " + std::to_string(g.edge_count()) +
                         " edges exceed budget " + std::to_string(node_budget));
  const int m = g.edge_count();
  Antimatching am;
  if (m == 0) return am;
  std::vector<std::vector<char>> mat(m, std::vector<char>(m, 0));
  for (EdgeId e = 0; e < m; ++e)
    for (EdgeId f : conflict_pairs(g, e)) mat[e][f] = 1;
  CliqueSearch cs{mat, m, {}, {}};
  std::vector<int> cand(m);
  std::iota(cand.begin(), cand.end(), 0);
  // order by conflict degree, densest first
  std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) {
    return std::count(mat[a].begin(), mat[a].end(), 1) >
           std::count(mat[b].begin(), mat[b].end(), 1);
  });
  cs.expand(cand);
  am.size = static_cast<int>(cs.best.size());
  am.witness = cs.best;
  std::sort(am.witness.begin(), am.witness.end());
  return am;
}

EdgeColoring relabel(const EdgeColoring& c, const std::vector<int>& perm) {
  if ((int)perm.size() != c.kappa)
    throw std::invalid_argument("relabel: permutation size != kappa");
  std::vector<bool> seen(c.kappa, false);
  for (int p : perm) {
    if (p < 0 || p >= c.kappa || seen[p])
      throw std::invalid_argument("relabel: not a bijection on 0..kappa-1");
    seen[p] = true;
  }
  EdgeColoring out = c;
  for (auto& col : out.color)
    if (col != -1) col = perm[col];
  return out;
}

EdgeColoring read_coloring(std::istream& in, const Graph& g) {
  std::string line;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      size_t pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };
  std::string header;
  if (!next_line(header)) throw std::runtime_error("coloring: empty input");
  std::istringstream hs(header);
  int kappa;
  if (!(hs >> kappa) || kappa < 0)
    throw std::runtime_error("coloring: bad kappa line '" + header + "'");
  EdgeColoring c = EdgeColoring::empty(g, kappa);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    std::string row;
    if (!next_line(row))
      throw std::runtime_error("coloring: expected " +
                               std::to_string(g.edge_count()) + " edge lines");
    std::istringstream rs(row);
    int u, v;
    std::string tok;
    if (!(rs >> u >> v >> tok))
      throw std::runtime_error("coloring: bad line '" + row + "'");
    auto [eu, ev] = g.edge(e);
    if (std::min(u, v) != eu || std::max(u, v) != ev)
      throw std::runtime_error("coloring: line " + std::to_string(e) +
                               " names edge (" + std::to_string(u) + "," +
                               std::to_string(v) + "), expected (" +
                               std::to_string(eu) + "," + std::to_string(ev) +
                               ")");
    if (tok == "-") continue;
    int col;
    try {
      col = std::stoi(tok);
    } catch (...) {
      throw std::runtime_error("coloring: bad color '" + tok + "'");
    }
    if (col < 1 || col > kappa)
      throw std::runtime_error("coloring: color " + tok +
                               " outside 1..kappa");
    c.color[e] = col - 1;  // files are 1-based
  }
  return c;
}

EdgeColoring read_coloring_file(const std::string& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_coloring(in, g);
}

void write_coloring(std::ostream& out, const Graph& g, const EdgeColoring& c) {
  out << c.kappa << '\n';
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    out << u << ' ' << v << ' ';
    if (c.color[e] == -1)
      out << '-';
    else
      out << c.color[e] + 1;
    out << '\n';
  }
}

}  // namespace sec
