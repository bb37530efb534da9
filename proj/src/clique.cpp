#include "idnc/clique.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace idnc {

bool weight_equal(double a, double b) {
  const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= kWeightTieTol * scale;
}

namespace {

// Candidate sets live in "position space": vertices reordered by
// non-increasing weight (index ascending on ties).
struct Bits {
  std::vector<std::uint64_t> w;

  explicit Bits(int blocks) : w(blocks, 0) {}
  void set(int p) { w[p / 64] |= std::uint64_t{1} << (p % 64); }
  bool none() const {
    return std::all_of(w.begin(), w.end(), [](std::uint64_t x) { return x == 0; });
  }
};

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

double clique_weight(const IdncGraph& g, const std::vector<int>& verts) {
  double w = 0.0;
  for (int i : verts) w += g.vertex(i).weight;
  return w;
}

// Extends a clique by every addable vertex in index order; no-op when the
// clique is already maximal.
void maximalize(const IdncGraph& g, std::vector<int>& verts) {
  for (int i = 0; i < g.size(); ++i) {
    if (std::binary_search(verts.begin(), verts.end(), i)) continue;
    bool addable = true;
    for (int j : verts)
      if (!g.adjacent(i, j)) {
        addable = false;
        break;
      }
    if (addable) verts.insert(std::lower_bound(verts.begin(), verts.end(), i), i);
  }
}

struct Searcher {
  const IdncGraph& g;
  long long budget;
  long long nodes = 0;
  bool finished = true;

  std::vector<int> order;      // position -> vertex index
  std::vector<double> suffix;  // suffix weight sums over positions
  std::vector<Bits> adj_pos;   // adjacency rows in position space
  int blocks;

  std::vector<int> cur;  // positions
  double cur_weight = 0.0;
  std::vector<int> best;  // vertex indices, ascending
  double best_weight = 0.0;

  explicit Searcher(const IdncGraph& graph, long long node_budget)
      : g(graph), budget(node_budget), blocks((graph.size() + 63) / 64) {
    const int n = g.size();
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      if (g.vertex(a).weight != g.vertex(b).weight) return g.vertex(a).weight > g.vertex(b).weight;
      return a < b;
    });
    std::vector<int> pos_of(n);
    for (int p = 0; p < n; ++p) pos_of[order[p]] = p;
    suffix.assign(n + 1, 0.0);
    for (int p = n - 1; p >= 0; --p) suffix[p] = suffix[p + 1] + g.vertex(order[p]).weight;
    adj_pos.assign(n, Bits(blocks));
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        if (p != q && g.adjacent(order[p], order[q])) adj_pos[p].set(q);
  }

  void seed(const CliqueResult& incumbent) {
    best = incumbent.vertices;
    best_weight = incumbent.total_weight;
  }

  void consider_current() {
    std::vector<int> verts;
    verts.reserve(cur.size());
    for (int p : cur) verts.push_back(order[p]);
    std::sort(verts.begin(), verts.end());
    if (cur_weight > best_weight && !weight_equal(cur_weight, best_weight)) {
      best = std::move(verts);
      best_weight = cur_weight;
    } else if (weight_equal(cur_weight, best_weight) && lex_less(verts, best)) {
      best = std::move(verts);
    }
  }

  void expand(const Bits& cand, int from_pos) {
    if (++nodes > budget) {
      finished = false;
      return;
    }
    bool extended = false;
    for (int b = from_pos / 64; b < blocks; ++b) {
      std::uint64_t word = cand.w[b];
      if (b == from_pos / 64) word &= ~std::uint64_t{0} << (from_pos % 64);
      while (word != 0) {
        const int p = b * 64 + std::countr_zero(word);
        word &= word - 1;
        // Nothing past p can beat the incumbent: suffix sums shrink with p,
        // so every later branch is bounded by the same value.
        if (cur_weight + suffix[p] < best_weight &&
            !weight_equal(cur_weight + suffix[p], best_weight))
          return;
        extended = true;
        Bits next(blocks);
        for (int k = 0; k < blocks; ++k) next.w[k] = cand.w[k] & adj_pos[p].w[k];
        cur.push_back(p);
        cur_weight += g.vertex(order[p]).weight;
        expand(next, p + 1);
        cur.pop_back();
        cur_weight -= g.vertex(order[p]).weight;
        if (!finished) return;
      }
    }
    if (!extended) consider_current();
  }
};

}  // namespace

CliqueResult max_weight_clique_greedy(const IdncGraph& g) {
  CliqueResult res;
  res.exact = g.size() <= 1;
  std::vector<char> candidate(g.size(), 1);
  int remaining = g.size();
  while (remaining > 0) {
    int pick = -1;
    for (int i = 0; i < g.size(); ++i) {
      if (!candidate[i]) continue;
      if (pick == -1 || g.vertex(i).weight > g.vertex(pick).weight) pick = i;
    }
    res.vertices.push_back(pick);
    res.total_weight += g.vertex(pick).weight;
    remaining = 0;
    for (int i = 0; i < g.size(); ++i) {
      candidate[i] = candidate[i] && i != pick && g.adjacent(i, pick);
      remaining += candidate[i];
    }
  }
  std::sort(res.vertices.begin(), res.vertices.end());
  return res;
}

CliqueResult max_weight_clique_exact(const IdncGraph& g, const CliqueSearchOptions& opt) {
  if (g.size() == 0) return {{}, 0.0, true};
  Searcher search(g, opt.budget);
  search.seed(max_weight_clique_greedy(g));
  Bits all(search.blocks);
  for (int p = 0; p < g.size(); ++p) all.set(p);
  search.expand(all, 0);

  CliqueResult res;
  res.vertices = search.best;
  res.exact = search.finished;
  if (!res.exact) maximalize(g, res.vertices);
  res.total_weight = clique_weight(g, res.vertices);
  return res;
}

CliqueResult brute_force_clique(const IdncGraph& g) {
  const int n = g.size();
  if (n > 20) throw std::invalid_argument("brute-force clique search capped at 20 vertices");
  if (n == 0) return {{}, 0.0, true};

  std::vector<std::uint32_t> nbr(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && g.adjacent(i, j)) nbr[i] |= std::uint32_t{1} << j;

  const std::uint32_t limit = std::uint32_t{1} << n;
  std::vector<char> is_clique(limit, 0);
  std::vector<double> weight(limit, 0.0);
  is_clique[0] = 1;
  std::uint32_t best_mask = 0;
  double best_weight = 0.0;

  auto mask_verts = [](std::uint32_t mask) {
    std::vector<int> out;
    while (mask != 0) {
      out.push_back(std::countr_zero(mask));
      mask &= mask - 1;
    }
    return out;
  };

  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    const int low = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    if (!is_clique[rest] || (nbr[low] & rest) != rest) continue;
    is_clique[mask] = 1;
    weight[mask] = weight[rest] + g.vertex(low).weight;
    if (weight[mask] > best_weight && !weight_equal(weight[mask], best_weight)) {
      best_mask = mask;
      best_weight = weight[mask];
    } else if (weight_equal(weight[mask], best_weight) &&
               lex_less(mask_verts(mask), mask_verts(best_mask))) {
      best_mask = mask;
    }
  }

  CliqueResult res;
  res.vertices = mask_verts(best_mask);
  res.total_weight = clique_weight(g, res.vertices);
  res.exact = true;
  return res;
}

}  // namespace idnc
