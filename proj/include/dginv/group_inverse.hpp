#pragma once

#include <string>
#include <vector>

#include "dginv/chains.hpp"
#include "dginv/linalg.hpp"

namespace dginv {

namespace detail {

struct ClassDContext {
  Digraph digraph;
  StructureReport structure;
  PendantCycleSums sums;
};

inline ClassDContext class_d_context(const Matrix& a) {
  ClassDContext r;
  r.digraph = build_digraph(a);
  r.structure = analyze_structure(r.digraph);
  require_class_d_hypotheses(r.structure);
  r.sums = pendant_cycle_sums(a, r.structure);
  return r;
}

[[noreturn]] inline void throw_delta_zero(const std::vector<int>& vanished) {
  std::string msg = "no group inverse: maximum matching sum is zero";
  if (!vanished.empty()) {
    msg += " (vanishing pendant cycle sum at vertex";
    if (vanished.size() > 1) msg += "es";
    for (int v : vanished) msg += " " + std::to_string(v + 1);
    msg += ")";
  }
  throw NoGroupInverse("delta_zero", msg, vanished);
}

}  // namespace detail

// Group inverse assembled entrywise from the matching/chain combinatorics:
// entry (i, j) is mu[i][j] divided by the maximum matching sum.
inline Matrix graph_group_inverse(const Matrix& a) {
  auto ctx = detail::class_d_context(a);
  MatchingFamily fam = detail::class_d_family(a, ctx.digraph, ctx.structure);
  if (fam.delta == 0) detail::throw_delta_zero(ctx.sums.vanished());
  MuTable t = detail::mu_table_impl(a, ctx.digraph, fam);
  Matrix x(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) x(i, j) = t.mu(i, j) / fam.delta;
  return x;
}

// Second, independent route: relabel so the matrix takes the 2x2 block
// shape [[E, F], [G, 0]] with F and G block-diagonal along the pendant
// branches, invert blockwise, and relabel back. With alpha_i the pendant
// cycle sum at the i-th non-pendant vertex, the inverse is
// [[0, Y], [Z, -W]] where Y and Z divide the branch vectors by alpha_i and
// W_ij = (e_ij / (alpha_i alpha_j)) y_i x_j^T. No matching enumeration
// happens here; existence is the vanishing of some alpha_i.
inline Matrix blockwise_group_inverse(const Matrix& a) {
  auto ctx = detail::class_d_context(a);
  const int n = a.rows();

  // Relabeling: non-pendant vertices first, then pendants grouped by
  // owner. The n=2 double edge is read as a one-center star.
  std::vector<int> centers;
  std::vector<std::vector<int>> groups;
  if (n == 2) {
    centers = {0};
    groups = {{1}};
  } else {
    centers = ctx.structure.nonpendants;
    groups = ctx.structure.pendant_neighbors;
    if (!ctx.sums.vanished().empty()) detail::throw_delta_zero(ctx.sums.vanished());
  }
  const int k = static_cast<int>(centers.size());

  std::vector<int> order = centers;
  std::vector<int> group_offset;  // of each branch inside the pendant block
  int off = 0;
  for (const auto& g : groups) {
    group_offset.push_back(off);
    order.insert(order.end(), g.begin(), g.end());
    off += static_cast<int>(g.size());
  }
  if (static_cast<int>(order.size()) != n)
    throw Error("pendant branches do not partition the vertices; hypotheses violated");

  Matrix p = a.conjugate_by_permutation(order);
  for (int i = k; i < n; ++i)
    for (int j = k; j < n; ++j)
      if (p(i, j) != 0) throw Error("pendant-pendant edge after relabeling; hypotheses violated");

  std::vector<Rational> alpha(k);
  for (int b = 0; b < k; ++b) {
    int rb = static_cast<int>(groups[b].size());
    for (int t = 0; t < rb; ++t)
      alpha[b] += p(b, k + group_offset[b] + t) * p(k + group_offset[b] + t, b);
  }

  Matrix x(n, n);
  for (int b = 0; b < k; ++b) {
    int rb = static_cast<int>(groups[b].size());
    for (int t = 0; t < rb; ++t) {
      x(b, k + group_offset[b] + t) = p(b, k + group_offset[b] + t) / alpha[b];
      x(k + group_offset[b] + t, b) = p(k + group_offset[b] + t, b) / alpha[b];
    }
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const Rational& e = p(i, j);
      if (e == 0) continue;
      Rational scale = e / (alpha[i] * alpha[j]);
      int ri = static_cast<int>(groups[i].size());
      int rj = static_cast<int>(groups[j].size());
      for (int t = 0; t < ri; ++t)
        for (int u = 0; u < rj; ++u)
          x(k + group_offset[i] + t, k + group_offset[j] + u) =
              -scale * p(k + group_offset[i] + t, i) * p(j, k + group_offset[j] + u);
    }

  Matrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(order[i], order[j]) = x(i, j);
  return out;
}

}  // namespace dginv
