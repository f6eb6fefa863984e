#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "dginv/matrix.hpp"
#include "dginv/structure.hpp"

namespace dginv {

// 2-cycle through u and v (u < v) with its cycle product a_uv * a_vu.
struct TwoCycle {
  int u = 0;
  int v = 0;
  Rational product;

  friend bool operator==(const TwoCycle& a, const TwoCycle& b) {
    return a.u == b.u && a.v == b.v && a.product == b.product;
  }
};

// Vertex-disjoint set of 2-cycles, kept sorted by (u, v); `product` is the
// matching product, the product of the member cycle products.
struct Matching {
  std::vector<TwoCycle> cycles;
  Rational product = 1;

  bool covers(int vertex) const {
    for (const auto& c : cycles)
      if (c.u == vertex || c.v == vertex) return true;
    return false;
  }
  bool contains(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (const auto& c : cycles)
      if (c.u == u && c.v == v) return true;
    return false;
  }

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.cycles == b.cycles && a.product == b.product;
  }
};

// All maximum matchings, in lexicographic order of their cycle lists.
// `delta` is the sum of the maximum matching products. A digraph with no
// 2-cycles at all yields the single empty matching with delta 1 and is
// flagged degenerate; the formula paths refuse such inputs.
struct MatchingFamily {
  int n = 0;
  int max_size = 0;
  std::vector<Matching> matchings;
  Rational delta = 0;
  bool degenerate = false;

  friend bool operator==(const MatchingFamily& a, const MatchingFamily& b) {
    return a.n == b.n && a.max_size == b.max_size && a.matchings == b.matchings &&
           a.delta == b.delta && a.degenerate == b.degenerate;
  }
};

inline std::vector<TwoCycle> enumerate_two_cycles(const Matrix& a) {
  if (!a.square() || !a.combinatorially_symmetric_zero_diagonal())
    throw ClassViolation("not_simple_symmetric",
                         "2-cycle enumeration needs a simple symmetric digraph");
  std::vector<TwoCycle> cycles;
  for (int u = 0; u < a.rows(); ++u)
    for (int v = u + 1; v < a.cols(); ++v)
      if (a(u, v) != 0) cycles.push_back({u, v, a(u, v) * a(v, u)});
  return cycles;
}

namespace detail {

inline bool matching_less(const Matching& a, const Matching& b) {
  return std::lexicographical_compare(
      a.cycles.begin(), a.cycles.end(), b.cycles.begin(), b.cycles.end(),
      [](const TwoCycle& x, const TwoCycle& y) {
        return x.u != y.u ? x.u < y.u : x.v < y.v;
      });
}

inline void canonicalize(MatchingFamily& fam) {
  for (auto& m : fam.matchings)
    std::sort(m.cycles.begin(), m.cycles.end(), [](const TwoCycle& x, const TwoCycle& y) {
      return x.u != y.u ? x.u < y.u : x.v < y.v;
    });
  std::sort(fam.matchings.begin(), fam.matchings.end(), matching_less);
  fam.delta = 0;
  for (const auto& m : fam.matchings) fam.delta += m.product;
}

}  // namespace detail

// Exhaustive search over vertex-disjoint 2-cycle sets. Exponential; the
// validation oracle, not the production path, hence the size cap.
inline MatchingFamily maximum_matchings_brute(const Matrix& a, int cap = 20) {
  if (a.rows() > cap)
    throw LimitError("brute-force matching enumeration capped at n = " + std::to_string(cap));
  auto cycles = enumerate_two_cycles(a);
  MatchingFamily fam;
  fam.n = a.rows();

  std::vector<int> chosen;
  std::vector<bool> used(a.rows(), false);
  int best = 0;
  std::vector<std::vector<int>> best_sets;

  auto record = [&](const std::vector<int>& cur) {
    if (static_cast<int>(cur.size()) > best) {
      best = static_cast<int>(cur.size());
      best_sets.clear();
    }
    if (static_cast<int>(cur.size()) == best) best_sets.push_back(cur);
  };

  // DFS over cycle indices in increasing order; each visited node is a
  // matching, so every maximum one is recorded exactly once.
  auto rec = [&](auto&& self, size_t start) -> void {
    record(chosen);
    if (chosen.size() + (cycles.size() - start) < static_cast<size_t>(best))
      return;  // too few cycles left to even tie the current maximum
    for (size_t k = start; k < cycles.size(); ++k) {
      if (used[cycles[k].u] || used[cycles[k].v]) continue;
      used[cycles[k].u] = used[cycles[k].v] = true;
      chosen.push_back(static_cast<int>(k));
      self(self, k + 1);
      chosen.pop_back();
      used[cycles[k].u] = used[cycles[k].v] = false;
    }
  };
  rec(rec, 0);

  fam.max_size = best;
  fam.degenerate = cycles.empty();
  for (const auto& ids : best_sets) {
    Matching m;
    for (int id : ids) {
      m.cycles.push_back(cycles[id]);
      m.product *= cycles[id].product;
    }
    fam.matchings.push_back(std::move(m));
  }
  detail::canonicalize(fam);
  if (fam.degenerate) fam.delta = 1;  // empty product
  return fam;
}

namespace detail {

// Family construction given an already-validated analysis.
inline MatchingFamily class_d_family(const Matrix& a, const Digraph& d,
                                     const StructureReport& s) {
  MatchingFamily fam;
  fam.n = a.rows();

  if (d.n == 2) {  // both vertices pendant; the single 2-cycle is maximum
    Matching m;
    m.cycles.push_back({0, 1, a(0, 1) * a(1, 0)});
    m.product = m.cycles[0].product;
    fam.max_size = 1;
    fam.matchings.push_back(std::move(m));
    canonicalize(fam);
    return fam;
  }

  fam.max_size = static_cast<int>(s.nonpendants.size());
  fam.matchings.emplace_back();
  for (size_t k = 0; k < s.nonpendants.size(); ++k) {
    int q = s.nonpendants[k];
    std::vector<Matching> extended;
    extended.reserve(fam.matchings.size() * s.pendant_neighbors[k].size());
    for (const auto& partial : fam.matchings)
      for (int p : s.pendant_neighbors[k]) {
        Matching m = partial;
        TwoCycle c{std::min(p, q), std::max(p, q), a(p, q) * a(q, p)};
        m.product *= c.product;
        m.cycles.push_back(c);
        extended.push_back(std::move(m));
      }
    fam.matchings = std::move(extended);
  }
  canonicalize(fam);
  return fam;
}

}  // namespace detail

// Fast path for strongly connected digraphs in the pendant-dominated
// class: every maximum matching picks exactly one pendant cycle at each
// non-pendant vertex, so the family is the cartesian product of those
// choices. Agreement with the brute-force engine is part of the test
// suite.
inline MatchingFamily maximum_matchings_class_d(const Matrix& a) {
  Digraph d = build_digraph(a);
  StructureReport s = analyze_structure(d);
  if (!s.simple_symmetric)
    throw ClassViolation("not_simple_symmetric", "digraph is not simple symmetric");
  if (!s.strongly_connected)
    throw ClassViolation("not_strongly_connected", "digraph is not strongly connected");
  if (!s.in_class_d)
    throw ClassViolation("not_in_class_d",
                         "some non-pendant vertex has no pendant neighbor");
  return detail::class_d_family(a, d, s);
}

// Dispatch: the structural fast path when its hypotheses hold, otherwise
// brute force under `brute_cap`.
inline MatchingFamily maximum_matchings(const Matrix& a, int brute_cap = 20) {
  Digraph d = build_digraph(a);
  StructureReport s = analyze_structure(d);
  if (s.simple_symmetric && s.strongly_connected && s.in_class_d)
    return maximum_matchings_class_d(a);
  return maximum_matchings_brute(a, brute_cap);
}

// The maximum matchings covering a given vertex.
inline std::vector<Matching> matchings_covering(const MatchingFamily& fam, int v) {
  if (v < 0 || v >= fam.n) throw std::out_of_range("vertex out of range");
  std::vector<Matching> out;
  for (const auto& m : fam.matchings)
    if (m.covers(v)) out.push_back(m);
  return out;
}

// Per non-pendant vertex, the sum of the cycle products of its pendant
// cycles. Their product is delta, which pins down exactly which vertices
// are responsible when delta vanishes.
struct PendantCycleSums {
  std::vector<int> nonpendants;
  std::vector<Rational> alpha;

  std::vector<int> vanished() const {
    std::vector<int> out;
    for (size_t i = 0; i < alpha.size(); ++i)
      if (alpha[i] == 0) out.push_back(nonpendants[i]);
    return out;
  }
};

inline PendantCycleSums pendant_cycle_sums(const Matrix& a, const StructureReport& s) {
  PendantCycleSums out;
  out.nonpendants = s.nonpendants;
  for (size_t k = 0; k < s.nonpendants.size(); ++k) {
    Rational sum = 0;
    int q = s.nonpendants[k];
    for (int p : s.pendant_neighbors[k]) sum += a(p, q) * a(q, p);
    out.alpha.push_back(sum);
  }
  return out;
}

}  // namespace dginv
