#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "idnc/model.hpp"

namespace idnc {

// One (user, wanted message) pair. For policy graphs the weight is
// (M - m + 1) / (1 - p_u): earlier messages and lossier users weigh more.
struct Vertex {
  int user_id = 0;
  MessageId message = 0;
  double weight = 0.0;
};

// Coding-opportunity graph: vertices are (user, wanted message) pairs, an
// edge means one two-message XOR serves both endpoints. Adjacency is a dense
// bit matrix; vertices are ordered user-major, message-minor, so vertex index
// order is the canonical (user, message) order.
class IdncGraph {
 public:
  IdncGraph() = default;

  static IdncGraph from_vertices(std::vector<Vertex> vertices,
                                 const std::function<bool(const Vertex&, const Vertex&)>& adjacent);

  int size() const { return static_cast<int>(vertices_.size()); }
  bool empty() const { return vertices_.empty(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(int i) const { return vertices_.at(i); }
  void set_weight(int i, double w) { vertices_.at(i).weight = w; }

  bool adjacent(int i, int j) const;
  int degree(int i) const;
  // Row of the adjacency bit matrix, blocks() words of 64 vertices each.
  const std::uint64_t* neighbor_row(int i) const { return adj_.data() + static_cast<std::size_t>(i) * blocks_; }
  int blocks() const { return blocks_; }

  // Vertex index for (user, message), or -1. Vertices are sorted, so this is
  // a binary search.
  int find_vertex(int user_id, MessageId message) const;

  // Subgraph on the given vertex indices (ascending order preserved).
  IdncGraph induced(const std::vector<int>& keep) const;

  // DOT dump with deterministic vertex order and "u{user}_m{message} w={weight}" labels.
  std::string to_dot() const;

 private:
  std::vector<Vertex> vertices_;
  int blocks_ = 0;
  std::vector<std::uint64_t> adj_;  // size() * blocks_ words
};

// Builds the graph for the current state: one vertex per (incomplete user,
// wanted message); an edge when the two users request the same message or
// each already holds the other's message.
IdncGraph build_graph(const SystemState& state);

struct CombinationTargets {
  Combination combo;
  std::vector<int> users;  // targeted user ids, ascending
};

// Maps a clique to the transmission it encodes: the XOR of its messages and
// the users it serves. Rejects vertex sets that are not cliques; validates
// that every targeted user decodes exactly its own clique message.
CombinationTargets clique_to_combination(const IdncGraph& g, const std::vector<int>& clique);

}  // namespace idnc
