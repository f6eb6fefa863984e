#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "dginv/digraph.hpp"

namespace dginv {

// Structural predicates of a digraph relevant to the combinatorial group
// inverse: pendant/non-pendant split, membership in the pendant-dominated
// class (every non-pendant vertex adjacent to at least one pendant), and
// the two closed subfamilies, star and corona.
struct StructureReport {
  int n = 0;
  bool simple_symmetric = false;
  bool strongly_connected = false;
  std::vector<int> pendants;              // ascending, 0-based
  std::vector<int> nonpendants;           // ascending, 0-based
  bool in_class_d = false;
  bool is_corona = false;
  bool is_star = false;
  // pendant_neighbors[k] lists the pendant vertices adjacent to
  // nonpendants[k]; their sizes are the branch multiplicities r_i.
  std::vector<std::vector<int>> pendant_neighbors;

  bool is_pendant(int v) const {
    return std::binary_search(pendants.begin(), pendants.end(), v);
  }
};

inline std::vector<int> pendant_neighbors(const Digraph& d, int v) {
  if (v < 0 || v >= d.n) throw std::out_of_range("vertex out of range");
  std::vector<int> out;
  for (int w : d.mutual[v])
    if (d.pendant(w)) out.push_back(w);
  return out;
}

inline StructureReport analyze_structure(const Digraph& d) {
  StructureReport s;
  s.n = d.n;
  s.simple_symmetric = d.simple_symmetric();
  s.strongly_connected = d.strongly_connected();
  for (int v = 0; v < d.n; ++v)
    (d.pendant(v) ? s.pendants : s.nonpendants).push_back(v);

  bool all_dominated = true;
  bool all_exactly_one = !s.nonpendants.empty();
  for (int v : s.nonpendants) {
    auto pn = pendant_neighbors(d, v);
    if (pn.empty()) all_dominated = false;
    if (pn.size() != 1) all_exactly_one = false;
    s.pendant_neighbors.push_back(std::move(pn));
  }

  s.in_class_d = s.simple_symmetric && all_dominated;
  s.is_corona = s.simple_symmetric && all_exactly_one &&
                s.pendants.size() == s.nonpendants.size();

  // Star: one center adjacent to everything else, all other vertices
  // pendant. The n=2 double edge counts as a star (either vertex may be
  // read as the center), not as a corona.
  if (s.simple_symmetric && d.n >= 2) {
    int center = -1;
    for (int v = 0; v < d.n; ++v)
      if (d.two_cycle_degree(v) == d.n - 1) {
        center = v;
        break;
      }
    if (center >= 0) {
      bool leaves_ok = true;
      for (int v = 0; v < d.n; ++v)
        if (v != center && d.two_cycle_degree(v) != 1) leaves_ok = false;
      s.is_star = leaves_ok;
    }
  }
  if (d.n == 2 && s.is_star) s.is_corona = false;
  return s;
}

// The unique center of a star (lowest-index vertex of full degree, which
// for n > 2 is the only one); -1 if the digraph is not a star.
inline int star_center(const Digraph& d, const StructureReport& s) {
  if (!s.is_star) return -1;
  for (int v = 0; v < d.n; ++v)
    if (d.two_cycle_degree(v) == d.n - 1) return v;
  return -1;
}

}  // namespace dginv
