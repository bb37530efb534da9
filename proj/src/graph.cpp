#include "idnc/graph.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

namespace idnc {

IdncGraph IdncGraph::from_vertices(
    std::vector<Vertex> vertices,
    const std::function<bool(const Vertex&, const Vertex&)>& adjacent) {
  IdncGraph g;
  g.vertices_ = std::move(vertices);
  const int n = g.size();
  g.blocks_ = (n + 63) / 64;
  g.adj_.assign(static_cast<std::size_t>(n) * g.blocks_, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!adjacent(g.vertices_[i], g.vertices_[j])) continue;
      g.adj_[static_cast<std::size_t>(i) * g.blocks_ + j / 64] |= std::uint64_t{1} << (j % 64);
      g.adj_[static_cast<std::size_t>(j) * g.blocks_ + i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
  return g;
}

bool IdncGraph::adjacent(int i, int j) const {
  if (i < 0 || j < 0 || i >= size() || j >= size()) throw std::out_of_range("vertex index");
  return (adj_[static_cast<std::size_t>(i) * blocks_ + j / 64] >> (j % 64)) & 1u;
}

int IdncGraph::degree(int i) const {
  const std::uint64_t* row = neighbor_row(i);
  int d = 0;
  for (int b = 0; b < blocks_; ++b) d += std::popcount(row[b]);
  return d;
}

int IdncGraph::find_vertex(int user_id, MessageId message) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), std::pair{user_id, message},
                             [](const Vertex& v, const std::pair<int, MessageId>& key) {
                               return std::pair{v.user_id, v.message} < key;
                             });
  if (it == vertices_.end() || it->user_id != user_id || it->message != message) return -1;
  return static_cast<int>(it - vertices_.begin());
}

IdncGraph IdncGraph::induced(const std::vector<int>& keep) const {
  std::vector<Vertex> verts;
  verts.reserve(keep.size());
  for (int i : keep) verts.push_back(vertex(i));
  const IdncGraph& self = *this;
  std::vector<int> kept = keep;  // captured by value for the adjacency probe
  IdncGraph g;
  g.vertices_ = std::move(verts);
  const int n = g.size();
  g.blocks_ = (n + 63) / 64;
  g.adj_.assign(static_cast<std::size_t>(n) * g.blocks_, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!self.adjacent(kept[a], kept[b])) continue;
      g.adj_[static_cast<std::size_t>(a) * g.blocks_ + b / 64] |= std::uint64_t{1} << (b % 64);
      g.adj_[static_cast<std::size_t>(b) * g.blocks_ + a / 64] |= std::uint64_t{1} << (a % 64);
    }
  }
  return g;
}

std::string IdncGraph::to_dot() const {
  std::ostringstream out;
  out << "graph idnc {\n";
  for (int i = 0; i < size(); ++i) {
    const Vertex& v = vertices_[i];
    out << "  v" << i << " [label=\"u" << v.user_id << "_m" << v.message << " w=" << v.weight
        << "\"];\n";
  }
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (adjacent(i, j)) out << "  v" << i << " -- v" << j << ";\n";
  out << "}\n";
  return out.str();
}

IdncGraph build_graph(const SystemState& state) {
  const int num_messages = state.num_messages();
  std::vector<Vertex> verts;
  for (const auto& u : state.users()) {
    if (u.complete()) continue;
    const double rate = 1.0 - u.erasure_prob();
    for (MessageId m : u.wants())
      verts.push_back({u.user_id(), m, static_cast<double>(num_messages - m + 1) / rate});
  }
  auto rule = [&state](const Vertex& a, const Vertex& b) {
    if (a.user_id == b.user_id) return false;
    if (a.message == b.message) return true;
    return state.user(b.user_id).has_message(a.message) &&
           state.user(a.user_id).has_message(b.message);
  };
  return IdncGraph::from_vertices(std::move(verts), rule);
}

CombinationTargets clique_to_combination(const IdncGraph& g, const std::vector<int>& clique) {
  if (clique.empty()) throw std::invalid_argument("empty clique has no combination");
  std::vector<int> verts = clique;
  std::sort(verts.begin(), verts.end());
  if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
    throw std::invalid_argument("duplicate vertex in clique");
  for (std::size_t a = 0; a < verts.size(); ++a) {
    if (verts[a] < 0 || verts[a] >= g.size()) throw std::out_of_range("vertex index");
    for (std::size_t b = a + 1; b < verts.size(); ++b)
      if (!g.adjacent(verts[a], verts[b]))
        throw std::invalid_argument("vertex set is not a clique");
  }

  std::set<MessageId> messages;
  std::vector<int> users;
  for (int i : verts) {
    messages.insert(g.vertex(i).message);
    users.push_back(g.vertex(i).user_id);
  }
  std::sort(users.begin(), users.end());

  // Each member must decode exactly its own clique message: no other clique
  // message may sit in that user's Wants set (i.e. appear as a vertex).
  for (int i : verts) {
    const Vertex& v = g.vertex(i);
    for (MessageId m : messages)
      if (m != v.message && g.find_vertex(v.user_id, m) != -1)
        throw std::logic_error("clique member cannot decode its message uniquely");
  }

  return {Combination(std::vector<MessageId>(messages.begin(), messages.end())), users};
}

}  // namespace idnc
