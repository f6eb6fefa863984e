#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dginv/matching.hpp"

namespace dginv {

// Cycle chain: a walk i_1, ..., i_{m+1} through m+1 distinct vertices in
// which every consecutive pair forms a 2-cycle. `path_product` multiplies
// the directed entries a_{i_1 i_2} ... a_{i_m i_{m+1}}. A chain is
// alternating with respect to a maximum matching M when its cycles lie
// alternately in M and outside M, starting and ending inside M.
struct CycleChain {
  std::vector<int> vertices;
  Rational path_product;

  int length() const { return static_cast<int>(vertices.size()) - 1; }

  bool uses_cycle(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (size_t t = 0; t + 1 < vertices.size(); ++t) {
      int a = vertices[t], b = vertices[t + 1];
      if (a > b) std::swap(a, b);
      if (a == u && b == v) return true;
    }
    return false;
  }
};

// A chain together with the maximum matchings it alternates with respect
// to (indices into the family).
struct AlternatingChain {
  CycleChain chain;
  std::vector<size_t> matchings;
};

inline bool alternates(const CycleChain& chain, const Matching& m) {
  int len = chain.length();
  if (len < 1 || len % 2 == 0) return false;  // first and last cycle in M forces odd length
  for (int t = 0; t < len; ++t) {
    bool in_m = m.contains(chain.vertices[t], chain.vertices[t + 1]);
    if (in_m != (t % 2 == 0)) return false;
  }
  return true;
}

namespace detail {

inline CycleChain make_chain(const Matrix& a, const std::vector<int>& vertices) {
  CycleChain c;
  c.vertices = vertices;
  c.path_product = 1;
  for (size_t t = 0; t + 1 < vertices.size(); ++t)
    c.path_product *= a(vertices[t], vertices[t + 1]);
  return c;
}

inline std::vector<size_t> alternating_matchings(const CycleChain& chain,
                                                 const MatchingFamily& fam) {
  std::vector<size_t> out;
  for (size_t k = 0; k < fam.matchings.size(); ++k)
    if (alternates(chain, fam.matchings[k])) out.push_back(k);
  return out;
}

// Candidate alternating chains from i to j without a length bound:
// lengths 1 and 3 are the only possible ones here, since the first cycle
// must be matched, hence a pendant cycle whose pendant endpoint is i
// itself, and symmetrically for j.
inline std::vector<AlternatingChain> chains_up_to_three(const Matrix& a, const Digraph& d,
                                                        const MatchingFamily& fam, int i,
                                                        int j) {
  std::vector<AlternatingChain> found;
  if (d.two_cycle(i, j)) {
    CycleChain c = make_chain(a, {i, j});
    auto ms = alternating_matchings(c, fam);
    if (!ms.empty()) found.push_back({std::move(c), std::move(ms)});
  }
  for (int q : d.mutual[i]) {
    if (q == j) continue;
    for (int p : d.mutual[j]) {
      if (p == i || p == q || !d.two_cycle(q, p)) continue;
      CycleChain c = make_chain(a, {i, q, p, j});
      auto ms = alternating_matchings(c, fam);
      if (!ms.empty()) found.push_back({std::move(c), std::move(ms)});
    }
  }
  return found;
}

}  // namespace detail

// Exhaustive search over all cycle chains from i to j, any length, via
// DFS through distinct vertices. Debug/validation tool: confirms that no
// alternating chain is longer than three and that the short search missed
// nothing.
inline std::vector<AlternatingChain> all_alternating_chains(const Matrix& a,
                                                            const MatchingFamily& fam, int i,
                                                            int j) {
  Digraph d = build_digraph(a);
  std::vector<AlternatingChain> found;
  std::vector<int> path{i};
  std::vector<bool> visited(d.n, false);
  visited[i] = true;
  auto rec = [&](auto&& self, int v) -> void {
    for (int w : d.mutual[v]) {
      if (visited[w]) continue;
      path.push_back(w);
      if (w == j) {
        CycleChain c = detail::make_chain(a, path);
        auto ms = detail::alternating_matchings(c, fam);
        if (!ms.empty()) found.push_back({std::move(c), std::move(ms)});
      } else {
        visited[w] = true;
        self(self, w);
        visited[w] = false;
      }
      path.pop_back();
    }
  };
  if (i != j && i >= 0 && j >= 0 && i < d.n && j < d.n) rec(rec, i);
  return found;
}

namespace detail {

// Core lookup once hypotheses are known to hold. At most one alternating
// chain can exist between two vertices; finding two means the caller's
// digraph broke the hypotheses.
inline std::optional<AlternatingChain> unique_alternating_chain(const Matrix& a,
                                                                const Digraph& d,
                                                                const MatchingFamily& fam,
                                                                int i, int j) {
  auto found = chains_up_to_three(a, d, fam, i, j);
  if (found.empty()) return std::nullopt;
  if (found.size() > 1)
    throw Error("multiple alternating chains between two vertices; class hypotheses violated");
  return std::move(found.front());
}

inline void require_class_d_hypotheses(const StructureReport& s) {
  if (!s.simple_symmetric)
    throw ClassViolation("not_simple_symmetric", "digraph is not simple symmetric");
  if (!s.strongly_connected)
    throw ClassViolation("not_strongly_connected", "digraph is not strongly connected");
  if (!s.in_class_d)
    throw ClassViolation("not_in_class_d",
                         "some non-pendant vertex has no pendant neighbor");
}

}  // namespace detail

// The unique alternating cycle chain between i and j plus the maximum
// matchings it alternates with, or nothing when i, j are not maximally
// matchable.
inline std::optional<AlternatingChain> alternating_chain(const Matrix& a,
                                                         const MatchingFamily& fam, int i,
                                                         int j) {
  Digraph d = build_digraph(a);
  detail::require_class_d_hypotheses(analyze_structure(d));
  if (i < 0 || i >= d.n || j < 0 || j >= d.n) throw std::out_of_range("vertex out of range");
  if (i == j) return std::nullopt;
  return detail::unique_alternating_chain(a, d, fam, i, j);
}

// Numerators of the combinatorial group inverse. For maximally matchable
// i, j with the unique alternating chain of length m:
//
//   mu[i][j] = (-1)^((m-1)/2) * path_product * sum over the matchings of
//              the products of their cycles outside the chain,
//
// and mu[i][j] = 0 for every other pair, including the diagonal.
struct MuTable {
  int n = 0;
  Matrix mu;
  std::vector<std::vector<bool>> matchable;
  std::map<std::pair<int, int>, AlternatingChain> chains;  // both orientations

  Rational beta(int i, int j) const {
    auto it = chains.find({i, j});
    if (it == chains.end()) return 0;
    int m = it->second.chain.length();
    Rational b = it->second.chain.path_product;
    return ((m - 1) / 2) % 2 ? Rational(-b) : b;
  }
};

namespace detail {

inline Rational cycles_outside_chain_product(const Matching& m, const CycleChain& chain) {
  Rational prod = 1;  // empty product
  for (const auto& c : m.cycles)
    if (!chain.uses_cycle(c.u, c.v)) prod *= c.product;
  return prod;
}

inline MuTable mu_table_impl(const Matrix& a, const Digraph& d, const MatchingFamily& fam) {
  MuTable t;
  t.n = a.rows();
  t.mu = Matrix(t.n, t.n);
  t.matchable.assign(t.n, std::vector<bool>(t.n, false));
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j) {
      if (i == j) continue;
      auto ac = unique_alternating_chain(a, d, fam, i, j);
      if (!ac) continue;
      Rational tail = 0;
      for (size_t k : ac->matchings)
        tail += cycles_outside_chain_product(fam.matchings[k], ac->chain);
      int m = ac->chain.length();
      Rational beta = ac->chain.path_product;
      if (((m - 1) / 2) % 2) beta = -beta;
      t.mu(i, j) = beta * tail;
      t.matchable[i][j] = true;
      t.chains.emplace(std::make_pair(i, j), std::move(*ac));
    }
  return t;
}

}  // namespace detail

inline MuTable mu_table(const Matrix& a) {
  Digraph d = build_digraph(a);
  detail::require_class_d_hypotheses(analyze_structure(d));
  return detail::mu_table_impl(a, d, maximum_matchings_class_d(a));
}

}  // namespace dginv
