#pragma once

#include <chrono>
#include <map>
#include <string>
#include <vector>

#include "dginv/classification.hpp"
#include "dginv/generators.hpp"
#include "dginv/matrix_io.hpp"

namespace dginv {

// Batch validation over generated instances: every theorem-backed identity
// the library claims is rechecked on each instance, and any failure ships
// with a reproducer matrix in the canonical text format.

struct SweepOptions {
  std::string family = "classd";  // star | corona | classd | other | vanishing
  int count = 100;
  uint64_t seed = 0;
  int n_max = 14;
  int weight_max = 5;
};

struct SweepFailure {
  int index = 0;
  std::string check;
  std::string detail;
  std::string matrix_text;
};

struct SweepReport {
  SweepOptions options;
  int instances = 0;
  std::map<std::string, long long> checks;  // check name -> times run
  std::vector<SweepFailure> failures;
  double wall_seconds = 0.0;
};

namespace detail {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4568bULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline bool same_pattern(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if ((a(i, j) != 0) != (b(i, j) != 0)) return false;
  return true;
}

class SweepRun {
 public:
  SweepRun(SweepReport& report, int index, const Matrix& a)
      : report_(report), index_(index), matrix_(a) {}

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    ++report_.checks[name];
    if (!ok) report_.failures.push_back({index_, name, detail, matrix_to_string(matrix_)});
  }

 private:
  SweepReport& report_;
  int index_;
  const Matrix& matrix_;
};

inline void sweep_valid_instance(SweepReport& rep, int index, const Matrix& a,
                                 const std::string& family) {
  SweepRun run(rep, index, a);
  StructureReport s = analyze_structure(build_digraph(a));
  DigraphClass cls = classify_digraph(s);

  if (family == "star") run.check("generated_shape", cls == DigraphClass::star);
  if (family == "corona") run.check("generated_shape", cls == DigraphClass::corona);
  if (family == "other") run.check("generated_shape", cls == DigraphClass::other_in_d);
  if (family == "classd")
    run.check("generated_shape", s.in_class_d && s.strongly_connected);

  Matrix g = graph_group_inverse(a);
  Matrix b = blockwise_group_inverse(a);
  Matrix o = group_inverse_oracle(a);
  run.check("triple_agreement", g == b && g == o,
            g == b ? "combinatorial paths disagree with oracle"
                   : "entrywise and blockwise paths disagree");

  Matrix ab = a * g;
  run.check("commutation", ab == g * a);
  run.check("inner_identity", ab * a == a);
  run.check("outer_identity", g * ab == g);

  // Pattern of A * A#: ones exactly on the non-pendant diagonal, pendant
  // diagonal entries given by the covering matchings, off-diagonal zero
  // except between pendants sharing a neighbor.
  MatchingFamily fam = maximum_matchings_class_d(a);
  Digraph d = build_digraph(a);
  bool diag_ok = true, offdiag_ok = true;
  for (int i = 0; i < a.rows(); ++i) {
    if (s.is_pendant(i)) {
      Rational sum = 0;
      for (const auto& m : matchings_covering(fam, i)) sum += m.product;
      if (ab(i, i) != sum / fam.delta) diag_ok = false;
    } else if (ab(i, i) != 1) {
      diag_ok = false;
    }
    for (int j = 0; j < a.cols(); ++j) {
      if (i == j || ab(i, j) == 0) continue;
      bool pendant_pair_common = false;
      if (s.is_pendant(i) && s.is_pendant(j))
        for (int q : d.mutual[i])
          if (d.two_cycle(q, j)) pendant_pair_common = true;
      if (!pendant_pair_common) offdiag_ok = false;
    }
  }
  run.check("product_diagonal", diag_ok);
  run.check("product_offdiagonal", offdiag_ok);

  // Alternating chains, found exhaustively: at most length three, unique
  // per maximally matchable pair, absent otherwise.
  MuTable t = detail::mu_table_impl(a, d, fam);
  bool chains_ok = true;
  for (int i = 0; i < a.rows() && chains_ok; ++i)
    for (int j = 0; j < a.cols() && chains_ok; ++j) {
      if (i == j) continue;
      auto found = all_alternating_chains(a, fam, i, j);
      for (const auto& ac : found)
        if (ac.chain.length() != 1 && ac.chain.length() != 3) chains_ok = false;
      if (found.size() != (t.matchable[i][j] ? 1u : 0u)) chains_ok = false;
    }
  run.check("chain_structure", chains_ok);

  // the inverse's digraph never loses simple symmetry or strong
  // connectivity while hypotheses hold
  Digraph dg = build_digraph(g);
  run.check("symmetric_closure", dg.simple_symmetric() && dg.strongly_connected());

  ClosureVerdict v = classify_closure(a);
  run.check("closure_prediction", v.predicted_closure == v.actual_closure);
  if (family == "star") {
    run.check("closure_star", v.actual_output_class == DigraphClass::star);
    run.check("star_pattern", same_pattern(g, a));
  }
  if (family == "corona") {
    run.check("closure_corona", v.actual_output_class == DigraphClass::corona);
    auto inv = inverse(a);
    run.check("corona_inverse", inv.has_value() && g == *inv);
    run.check("corona_pattern",
              same_pattern(g, a.conjugate_by_permutation(corona_partner_swap(s))));
    bool perfect = fam.max_size * 2 == a.rows();
    for (const auto& m : fam.matchings)
      for (int vtx = 0; vtx < a.rows(); ++vtx)
        if (!m.covers(vtx)) perfect = false;
    run.check("corona_perfect_matching", perfect);
  }
  if (family == "other") run.check("closure_left_class", !v.actual_closure);
}

inline void sweep_vanishing_instance(SweepReport& rep, int index, const Matrix& a) {
  SweepRun run(rep, index, a);
  StructureReport s = analyze_structure(build_digraph(a));
  run.check("generated_shape", s.in_class_d && s.strongly_connected);

  run.check("rank_drop", rank(a) != rank(a * a),
            "delta vanishes but rank(A) == rank(A^2)");
  bool oracle_refused = false, graph_refused = false, block_refused = false;
  try {
    group_inverse_oracle(a);
  } catch (const NoGroupInverse&) {
    oracle_refused = true;
  }
  try {
    graph_group_inverse(a);
  } catch (const NoGroupInverse&) {
    graph_refused = true;
  }
  try {
    blockwise_group_inverse(a);
  } catch (const NoGroupInverse&) {
    block_refused = true;
  }
  run.check("oracle_refuses", oracle_refused);
  run.check("formula_refuses", graph_refused && block_refused);
}

}  // namespace detail

inline Matrix generate_family_instance(const std::string& family, int n_max, Rng& rng,
                                       const GenOptions& opts) {
  if (family == "star") return gen_star(detail::rand_int(rng, 2, n_max), rng, opts);
  if (family == "corona")
    return gen_corona(detail::rand_int(rng, 2, std::max(2, n_max / 2)),
                      detail::rand_int(rng, 0, 60), rng, opts);
  if (family == "classd") return gen_random_class_d(n_max, rng, opts);
  if (family == "other") return gen_other_in_d(n_max, rng, opts);
  if (family == "vanishing") return gen_vanishing_delta(n_max, rng, opts);
  throw GenerationError("unknown family '" + family + "'");
}

inline SweepReport run_sweep(const SweepOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  SweepReport rep;
  rep.options = opts;
  GenOptions gen;
  gen.weight_max = opts.weight_max;

  for (int i = 0; i < opts.count; ++i) {
    Rng rng(detail::splitmix64(opts.seed ^ (0x517cc1b727220a95ULL * (i + 1))));
    Matrix a = generate_family_instance(opts.family, opts.n_max, rng, gen);
    ++rep.instances;
    try {
      if (opts.family == "vanishing")
        detail::sweep_vanishing_instance(rep, i, a);
      else
        detail::sweep_valid_instance(rep, i, a, opts.family);
    } catch (const std::exception& e) {
      rep.failures.push_back({i, "exception", e.what(), matrix_to_string(a)});
    }
  }
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace dginv
