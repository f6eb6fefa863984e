#pragma once

#include <string_view>

#include "dginv/group_inverse.hpp"

namespace dginv {

enum class DigraphClass { star, corona, other_in_d, not_in_d };

inline std::string_view to_string(DigraphClass c) {
  switch (c) {
    case DigraphClass::star: return "star";
    case DigraphClass::corona: return "corona";
    case DigraphClass::other_in_d: return "other_in_d";
    case DigraphClass::not_in_d: return "not_in_d";
  }
  return "?";
}

inline DigraphClass classify_digraph(const StructureReport& s) {
  if (!s.in_class_d) return DigraphClass::not_in_d;
  if (s.is_star) return DigraphClass::star;
  if (s.is_corona) return DigraphClass::corona;
  return DigraphClass::other_in_d;
}

// Whether the pendant-dominated property survives taking the group
// inverse. The prediction is purely structural: it survives exactly for
// stars and coronas. `actual_*` fields are computed from the inverse
// itself.
struct ClosureVerdict {
  DigraphClass input_class = DigraphClass::not_in_d;
  bool predicted_closure = false;
  bool actual_closure = false;
  DigraphClass actual_output_class = DigraphClass::not_in_d;
};

inline ClosureVerdict classify_closure(const Matrix& a) {
  auto ctx = detail::class_d_context(a);
  ClosureVerdict v;
  v.input_class = classify_digraph(ctx.structure);
  v.predicted_closure =
      v.input_class == DigraphClass::star || v.input_class == DigraphClass::corona;

  Matrix x = graph_group_inverse(a);
  StructureReport out = analyze_structure(build_digraph(x));
  v.actual_closure = out.in_class_d;
  v.actual_output_class = classify_digraph(out);
  return v;
}

// For inputs meeting the class hypotheses the inverse's digraph is always
// strongly connected and simple symmetric; outside them the same pattern
// check is available directly on any computed inverse.
inline bool check_symmetric_closure(const Matrix& a) {
  Matrix x = graph_group_inverse(a);  // validates hypotheses
  Digraph d = build_digraph(x);
  return d.simple_symmetric() && d.strongly_connected();
}

// Permutation exchanging each non-pendant vertex of a corona with its
// pendant partner; the inverse's pattern equals the input's pattern under
// this relabeling.
inline std::vector<int> corona_partner_swap(const StructureReport& s) {
  std::vector<int> perm(s.n);
  for (int v = 0; v < s.n; ++v) perm[v] = v;
  for (size_t k = 0; k < s.nonpendants.size(); ++k) {
    int q = s.nonpendants[k];
    int p = s.pendant_neighbors[k].at(0);
    perm[q] = p;
    perm[p] = q;
  }
  return perm;
}

}  // namespace dginv
