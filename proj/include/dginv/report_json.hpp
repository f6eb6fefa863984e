#pragma once

#include <nlohmann/json.hpp>

#include "dginv/chains.hpp"
#include "dginv/classification.hpp"
#include "dginv/linalg.hpp"

namespace dginv {

// JSON views of the library's result types. Vertices are emitted 1-based
// and rationals as lowest-term strings, never as floats.

using json = nlohmann::ordered_json;

inline json vertices_json(const std::vector<int>& vs) {
  json arr = json::array();
  for (int v : vs) arr.push_back(v + 1);
  return arr;
}

inline json matrix_json(const Matrix& a) {
  json rows = json::array();
  for (int i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < a.cols(); ++j) row.push_back(to_string(a(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json structure_json(const StructureReport& s) {
  json pn = json::array();
  for (size_t k = 0; k < s.nonpendants.size(); ++k)
    pn.push_back({{"vertex", s.nonpendants[k] + 1},
                  {"pendant_neighbors", vertices_json(s.pendant_neighbors[k])}});
  return {{"n", s.n},
          {"simple_symmetric", s.simple_symmetric},
          {"strongly_connected", s.strongly_connected},
          {"pendant_vertices", vertices_json(s.pendants)},
          {"nonpendant_vertices", vertices_json(s.nonpendants)},
          {"in_class_d", s.in_class_d},
          {"is_corona", s.is_corona},
          {"is_star", s.is_star},
          {"branches", std::move(pn)}};
}

inline json matching_json(const Matching& m) {
  json cycles = json::array();
  for (const auto& c : m.cycles) cycles.push_back({c.u + 1, c.v + 1});
  return {{"cycles", std::move(cycles)}, {"product", to_string(m.product)}};
}

inline json family_json(const MatchingFamily& fam) {
  json ms = json::array();
  for (const auto& m : fam.matchings) ms.push_back(matching_json(m));
  return {{"n", fam.n},
          {"max_size", fam.max_size},
          {"degenerate", fam.degenerate},
          {"matchings", std::move(ms)},
          {"delta", to_string(fam.delta)}};
}

inline json axioms_json(const GroupAxioms& ax) {
  return {{"axa_equals_a", ax.axa_equals_a},
          {"xax_equals_x", ax.xax_equals_x},
          {"ax_equals_xa", ax.ax_commutes},
          {"is_group_inverse", ax.all()}};
}

inline json verdict_json(const ClosureVerdict& v) {
  return {{"input_class", std::string(to_string(v.input_class))},
          {"predicted_closure", v.predicted_closure},
          {"actual_closure", v.actual_closure},
          {"actual_output_class", std::string(to_string(v.actual_output_class))}};
}

inline json mu_json(const MuTable& t) {
  json entries = json::array();
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j) {
      if (i == j || !t.matchable[i][j]) continue;
      const auto& ac = t.chains.at({i, j});
      json ms = json::array();
      for (size_t k : ac.matchings) ms.push_back(k + 1);
      entries.push_back({{"i", i + 1},
                         {"j", j + 1},
                         {"chain", vertices_json(ac.chain.vertices)},
                         {"length", ac.chain.length()},
                         {"path_product", to_string(ac.chain.path_product)},
                         {"beta", to_string(t.beta(i, j))},
                         {"matchings", std::move(ms)},
                         {"mu", to_string(t.mu(i, j))}});
    }
  return {{"n", t.n}, {"mu", matrix_json(t.mu)}, {"pairs", std::move(entries)}};
}

}  // namespace dginv
