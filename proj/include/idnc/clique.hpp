#pragma once

#include <vector>

#include "idnc/graph.hpp"

namespace idnc {

struct CliqueResult {
  std::vector<int> vertices;  // ascending vertex indices, pairwise adjacent
  double total_weight = 0.0;
  bool exact = false;  // optimality certified (search finished within budget)
};

struct CliqueSearchOptions {
  long long budget = 200000;  // node-expansion limit before falling back to the incumbent
};

// Relative tolerance used to classify equal clique weights under
// floating-point arithmetic.
inline constexpr double kWeightTieTol = 1e-12;
bool weight_equal(double a, double b);

// Branch-and-bound over vertices in non-increasing weight order with a
// weight-sum upper bound, seeded with the greedy clique. Within budget the
// result is the true maximum-weight clique; past it, the best incumbent with
// exact=false. Ties resolve to the lexicographically smallest vertex set.
CliqueResult max_weight_clique_exact(const IdncGraph& g, const CliqueSearchOptions& opt = {});

// Repeatedly takes the heaviest remaining vertex and restricts to its
// neighborhood. Always maximal; exact only on graphs with at most one vertex.
CliqueResult max_weight_clique_greedy(const IdncGraph& g);

// Certified optimum by subset enumeration; rejects graphs beyond 20 vertices.
CliqueResult brute_force_clique(const IdncGraph& g);

}  // namespace idnc
