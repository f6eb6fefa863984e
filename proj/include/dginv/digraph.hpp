#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "dginv/matrix.hpp"

namespace dginv {

// Zero/nonzero pattern of a square matrix as a directed graph. Edge (i,j)
// exists iff a_ij != 0 for i != j; nonzero diagonal entries are kept apart
// as loops (they disqualify the digraph from being simple symmetric but
// must survive pattern checks on computed inverses).
struct Digraph {
  int n = 0;
  std::vector<std::vector<bool>> adj;   // adj[i][j], i != j
  std::vector<bool> loop;               // a_ii != 0
  std::vector<std::vector<int>> out;    // out-neighbors, ascending
  std::vector<std::vector<int>> mutual; // j with both (i,j) and (j,i), ascending

  bool edge(int i, int j) const { return adj[i][j]; }
  bool two_cycle(int i, int j) const { return i != j && adj[i][j] && adj[j][i]; }
  int two_cycle_degree(int i) const { return static_cast<int>(mutual[i].size()); }

  bool has_loop() const {
    return std::find(loop.begin(), loop.end(), true) != loop.end();
  }

  bool simple_symmetric() const {
    if (has_loop()) return false;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (adj[i][j] != adj[j][i]) return false;
    return true;
  }

  // Incident to exactly one 2-cycle. Meaningful for simple symmetric
  // digraphs, where this coincides with having exactly one neighbor.
  bool pendant(int i) const { return two_cycle_degree(i) == 1; }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
      for (int j : out[i]) es.emplace_back(i, j);
    return es;
  }

  bool strongly_connected() const {
    if (n <= 1) return n == 1;
    auto reaches_all = [this](bool reverse) {
      std::vector<bool> seen(n, false);
      std::vector<int> stack{0};
      seen[0] = true;
      int count = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w) {
          bool e = reverse ? adj[w][v] : adj[v][w];
          if (e && !seen[w]) {
            seen[w] = true;
            ++count;
            stack.push_back(w);
          }
        }
      }
      return count == n;
    };
    return reaches_all(false) && reaches_all(true);
  }
};

inline Digraph build_digraph(const Matrix& a) {
  if (!a.square()) throw DimensionError("digraph of non-square matrix");
  Digraph d;
  d.n = a.rows();
  d.adj.assign(d.n, std::vector<bool>(d.n, false));
  d.loop.assign(d.n, false);
  d.out.assign(d.n, {});
  d.mutual.assign(d.n, {});
  for (int i = 0; i < d.n; ++i) {
    d.loop[i] = a(i, i) != 0;
    for (int j = 0; j < d.n; ++j) {
      if (i == j) continue;
      if (a(i, j) != 0) {
        d.adj[i][j] = true;
        d.out[i].push_back(j);
      }
    }
  }
  for (int i = 0; i < d.n; ++i)
    for (int j : d.out[i])
      if (d.adj[j][i]) d.mutual[i].push_back(j);
  return d;
}

}  // namespace dginv
