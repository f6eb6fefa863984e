#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "dginv/matrix.hpp"

namespace dginv {

using Rng = std::mt19937_64;

struct GenOptions {
  int weight_max = 5;     // entries drawn from [-weight_max, weight_max] \ {0}
  int max_retries = 200;  // weight redraws allowed to reach a nonzero delta
  bool shuffle = true;    // relabel vertices randomly at the end
};

namespace detail {

// All sampling is routed through these so that a seed pins the output
// byte-for-byte; std::shuffle and the distribution classes leave their
// algorithms up to the implementation.
inline int rand_int(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

inline int rand_weight(Rng& rng, int weight_max) {
  int v = rand_int(rng, 1, weight_max);
  return rand_int(rng, 0, 1) ? v : -v;
}

inline bool rand_percent(Rng& rng, int percent) {
  return rand_int(rng, 0, 99) < percent;
}

inline std::vector<int> rand_permutation(Rng& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rand_int(rng, 0, i)]);
  return perm;
}

// Shared skeleton: centers 0..k-1 joined by a random tree plus optional
// extra edges, center c owning branch_sizes[c] pendants. Weights are
// redrawn until every pendant cycle sum (hence delta) is nonzero, unless
// `force_vanishing` pins center 0's sum to zero.
inline Matrix build_pendant_dominated(const std::vector<int>& branch_sizes,
                                      int extra_edge_percent, Rng& rng,
                                      const GenOptions& opts, bool force_vanishing = false) {
  const int k = static_cast<int>(branch_sizes.size());
  const int n = k + std::accumulate(branch_sizes.begin(), branch_sizes.end(), 0);
  if (force_vanishing && branch_sizes[0] != 2)
    throw GenerationError("vanishing sum needs exactly two pendants at center 0");

  std::vector<std::pair<int, int>> center_edges;
  for (int v = 1; v < k; ++v) center_edges.emplace_back(rand_int(rng, 0, v - 1), v);
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) {
      bool in_tree = false;
      for (auto [a, b] : center_edges)
        if (a == u && b == v) in_tree = true;
      if (!in_tree && rand_percent(rng, extra_edge_percent)) center_edges.emplace_back(u, v);
    }

  std::vector<std::pair<int, int>> pendant_edges;
  int next = k;
  for (int c = 0; c < k; ++c)
    for (int t = 0; t < branch_sizes[c]; ++t) pendant_edges.emplace_back(c, next++);

  for (int attempt = 0; attempt < opts.max_retries; ++attempt) {
    Matrix a(n, n);
    for (auto [u, v] : center_edges) {
      a(u, v) = rand_weight(rng, opts.weight_max);
      a(v, u) = rand_weight(rng, opts.weight_max);
    }
    std::vector<Rational> alpha(k);
    for (auto [c, p] : pendant_edges) {
      a(c, p) = rand_weight(rng, opts.weight_max);
      a(p, c) = rand_weight(rng, opts.weight_max);
      alpha[c] += a(c, p) * a(p, c);
    }
    if (force_vanishing) {
      // Make center 0's two pendant cycles cancel exactly.
      int p1 = k, p2 = k + 1;
      a(0, p2) = a(0, p1);
      a(p2, 0) = -a(p1, 0);
      alpha[0] = 0;
    }
    bool ok = true;
    for (int c = 0; c < k; ++c) {
      bool want_zero = force_vanishing && c == 0;
      if ((alpha[c] == 0) != want_zero) ok = false;
    }
    if (!ok) continue;
    if (opts.shuffle) return a.conjugate_by_permutation(rand_permutation(rng, n));
    return a;
  }
  throw GenerationError("could not draw weights with the required pendant cycle sums");
}

}  // namespace detail

// Star on n >= 2 vertices: one center adjacent to n-1 pendants.
inline Matrix gen_star(int n, Rng& rng, const GenOptions& opts = {}) {
  if (n < 2) throw GenerationError("star needs n >= 2");
  return detail::build_pendant_dominated({n - 1}, 0, rng, opts);
}

// Corona on 2k vertices: k >= 2 connected non-pendants, one pendant each.
inline Matrix gen_corona(int k, int extra_edge_percent, Rng& rng, const GenOptions& opts = {}) {
  if (k < 2) throw GenerationError("corona needs k >= 2 non-pendant vertices");
  return detail::build_pendant_dominated(std::vector<int>(k, 1), extra_edge_percent, rng, opts);
}

// General pendant-dominated instance with prescribed branch sizes.
inline Matrix gen_class_d(const std::vector<int>& branch_sizes, int extra_edge_percent,
                          Rng& rng, const GenOptions& opts = {}) {
  if (branch_sizes.empty()) throw GenerationError("need at least one non-pendant vertex");
  for (int r : branch_sizes)
    if (r < 1) throw GenerationError("every non-pendant vertex needs at least one pendant");
  return detail::build_pendant_dominated(branch_sizes, extra_edge_percent, rng, opts);
}

namespace detail {

inline std::vector<int> rand_branch_sizes(Rng& rng, int k, int n_max) {
  std::vector<int> rs(k, 1);
  int budget = n_max - 2 * k;
  int extra = budget > 0 ? rand_int(rng, 0, budget) : 0;
  for (int t = 0; t < extra; ++t) ++rs[rand_int(rng, 0, k - 1)];
  return rs;
}

}  // namespace detail

// Random member of the class with n <= n_max, covering stars, coronas and
// everything in between.
inline Matrix gen_random_class_d(int n_max, Rng& rng, const GenOptions& opts = {}) {
  if (n_max < 2) throw GenerationError("need n_max >= 2");
  int k = detail::rand_int(rng, 1, std::max(1, std::min(5, n_max / 2)));
  auto rs = detail::rand_branch_sizes(rng, k, n_max);
  return gen_class_d(rs, detail::rand_int(rng, 0, 60), rng, opts);
}

// Neither a star nor a corona: at least two non-pendant vertices and one
// of them with at least two pendants. The inverse of such an instance
// always leaves the class.
inline Matrix gen_other_in_d(int n_max, Rng& rng, const GenOptions& opts = {}) {
  if (n_max < 5) throw GenerationError("need n_max >= 5");
  int k = detail::rand_int(rng, 2, std::max(2, std::min(4, (n_max - 1) / 2)));
  auto rs = detail::rand_branch_sizes(rng, k, n_max - 1);
  ++rs[detail::rand_int(rng, 0, k - 1)];  // some branch gets >= 2 pendants
  return gen_class_d(rs, detail::rand_int(rng, 0, 60), rng, opts);
}

// In the class and strongly connected but with a vanishing pendant cycle
// sum, so delta = 0 and no group inverse exists.
inline Matrix gen_vanishing_delta(int n_max, Rng& rng, const GenOptions& opts = {}) {
  if (n_max < 3) throw GenerationError("need n_max >= 3");
  int k = detail::rand_int(rng, 1, std::max(1, std::min(4, (n_max - 2) / 2)));
  auto rs = detail::rand_branch_sizes(rng, k, n_max - 1);
  rs[0] = 2;  // exactly two pendants at center 0, drawn to cancel
  return detail::build_pendant_dominated(rs, detail::rand_int(rng, 0, 60), rng, opts, true);
}

}  // namespace dginv
