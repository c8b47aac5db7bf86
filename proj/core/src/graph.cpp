#include "domkern/graph.hpp"

#include <algorithm>

namespace domkern {

namespace {

bool insert_sorted(std::vector<VertexId>& list, VertexId v) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it != list.end() && *it == v) return false;
  list.insert(it, v);
  return true;
}

bool erase_sorted(std::vector<VertexId>& list, VertexId v) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it == list.end() || *it != v) return false;
  list.erase(it);
  return true;
}

}  // namespace

ColoredGraph::ColoredGraph(std::size_t n, Color color)
    : adj_(n), color_(n, color), alive_(n, true), vertex_count_(n),
      black_count_(color == Color::Black ? n : 0) {}

VertexId ColoredGraph::add_vertex(Color color) {
  auto id = static_cast<VertexId>(alive_.size());
  adj_.emplace_back();
  color_.push_back(color);
  alive_.push_back(true);
  ++vertex_count_;
  if (color == Color::Black) ++black_count_;
  touch(id);
  return id;
}

bool ColoredGraph::add_edge(VertexId u, VertexId v) {
  require(u);
  require(v);
  if (u == v) throw UsageError("self-loop on vertex " + std::to_string(u));
  if (!insert_sorted(adj_[u], v)) return false;
  insert_sorted(adj_[v], u);
  ++edge_count_;
  touch(u);
  touch(v);
  return true;
}

bool ColoredGraph::remove_edge(VertexId u, VertexId v) {
  require(u);
  require(v);
  if (!erase_sorted(adj_[u], v)) return false;
  erase_sorted(adj_[v], u);
  --edge_count_;
  touch(u);
  touch(v);
  return true;
}

void ColoredGraph::remove_vertex(VertexId v) {
  require(v);
  for (VertexId u : adj_[v]) {
    erase_sorted(adj_[u], v);
    touch(u);
  }
  edge_count_ -= adj_[v].size();
  adj_[v].clear();
  adj_[v].shrink_to_fit();
  if (color_[v] == Color::Black) --black_count_;
  alive_[v] = false;
  --vertex_count_;
  touch(v);
}

void ColoredGraph::set_color(VertexId v, Color color) {
  require(v);
  if (color_[v] == color) return;
  if (color == Color::Black) {
    ++black_count_;
  } else {
    --black_count_;
  }
  color_[v] = color;
  touch(v);
}

Color ColoredGraph::color(VertexId v) const {
  require(v);
  return color_[v];
}

std::span<const VertexId> ColoredGraph::neighbors(VertexId v) const {
  require(v);
  return adj_[v];
}

bool ColoredGraph::adjacent(VertexId u, VertexId v) const {
  require(u);
  require(v);
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  VertexId other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), other);
}

std::vector<VertexId> ColoredGraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(vertex_count_);
  for (VertexId v = 0; v < alive_.size(); ++v) {
    if (alive_[v]) out.push_back(v);
  }
  return out;
}

VertexSet ColoredGraph::black_vertices() const {
  VertexSet out;
  out.reserve(black_count_);
  for (VertexId v = 0; v < alive_.size(); ++v) {
    if (alive_[v] && color_[v] == Color::Black) out.push_back(v);
  }
  return out;
}

VertexSet ColoredGraph::white_vertices() const {
  VertexSet out;
  for (VertexId v = 0; v < alive_.size(); ++v) {
    if (alive_[v] && color_[v] == Color::White) out.push_back(v);
  }
  return out;
}

std::vector<std::pair<VertexId, VertexId>> ColoredGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < alive_.size(); ++u) {
    if (!alive_[u]) continue;
    for (VertexId v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void ColoredGraph::audit() const {
  std::size_t vertices = 0;
  std::size_t blacks = 0;
  std::size_t half_edges = 0;
  for (VertexId v = 0; v < alive_.size(); ++v) {
    if (!alive_[v]) {
      if (!adj_[v].empty()) throw std::logic_error("dead vertex has edges");
      continue;
    }
    ++vertices;
    if (color_[v] == Color::Black) ++blacks;
    const auto& list = adj_[v];
    half_edges += list.size();
    for (std::size_t i = 0; i < list.size(); ++i) {
      VertexId u = list[i];
      if (u == v) throw std::logic_error("self-loop at " + std::to_string(v));
      if (i > 0 && list[i - 1] >= u) {
        throw std::logic_error("adjacency of " + std::to_string(v) +
                               " not strictly sorted");
      }
      if (!contains(u)) throw std::logic_error("edge to dead vertex");
      if (!std::binary_search(adj_[u].begin(), adj_[u].end(), v)) {
        throw std::logic_error("asymmetric edge " + std::to_string(v) + "-" +
                               std::to_string(u));
      }
    }
  }
  if (vertices != vertex_count_ || blacks != black_count_ ||
      half_edges != 2 * edge_count_) {
    throw std::logic_error("graph counters out of sync");
  }
}

bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.id_bound() != b.id_bound()) return false;
  for (VertexId v = 0; v < a.id_bound(); ++v) {
    if (a.alive_[v] != b.alive_[v]) return false;
    if (!a.alive_[v]) continue;
    if (a.color_[v] != b.color_[v] || a.adj_[v] != b.adj_[v]) return false;
  }
  return true;
}

void ColoredGraph::require(VertexId v) const {
  if (!contains(v)) {
    throw UsageError("unknown vertex id " + std::to_string(v));
  }
}

VertexSet neighbors(const ColoredGraph& g, VertexId v) {
  auto span = g.neighbors(v);
  return {span.begin(), span.end()};
}

VertexSet closed_neighborhood(const ColoredGraph& g, VertexId v) {
  VertexSet out = neighbors(g, v);
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

VertexSet closed_neighborhood_of_set(const ColoredGraph& g,
                                     std::span<const VertexId> set) {
  VertexSet out;
  for (VertexId u : set) {
    out.push_back(u);
    for (VertexId w : g.neighbors(u)) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_1_scattered(const ColoredGraph& g, std::span<const VertexId> set) {
  std::vector<VertexId> owner(g.id_bound(), static_cast<VertexId>(-1));
  for (VertexId b : set) {
    if (!g.contains(b)) throw UsageError("unknown vertex id " + std::to_string(b));
    auto claim = [&](VertexId x) {
      if (owner[x] != static_cast<VertexId>(-1) && owner[x] != b) return false;
      owner[x] = b;
      return true;
    };
    if (!claim(b)) return false;
    for (VertexId u : g.neighbors(b)) {
      if (!claim(u)) return false;
    }
  }
  return true;
}

bool is_dominating(const ColoredGraph& g, std::span<const VertexId> dominators) {
  std::vector<bool> covered(g.id_bound(), false);
  for (VertexId d : dominators) {
    covered[d] = true;
    for (VertexId u : g.neighbors(d)) covered[u] = true;
  }
  for (VertexId z : g.black_vertices()) {
    if (!covered[z]) return false;
  }
  return true;
}

ColoredGraph without_vertices(const ColoredGraph& g,
                              std::span<const VertexId> removed) {
  std::vector<bool> gone(g.id_bound(), false);
  for (VertexId v : removed) gone[v] = true;

  ColoredGraph out(g.id_bound(), Color::White);
  for (VertexId v = 0; v < g.id_bound(); ++v) {
    if (!g.contains(v) || gone[v]) {
      out.remove_vertex(v);
    } else {
      out.set_color(v, g.color(v));
    }
  }
  for (auto [u, v] : g.edges()) {
    if (!gone[u] && !gone[v]) out.add_edge(u, v);
  }
  return out;
}

ColoredGraph bw_to_plain_gadget(const ColoredGraph& g) {
  ColoredGraph out = without_vertices(g, {});
  VertexSet whites = out.white_vertices();
  VertexId pendant = out.add_vertex(Color::Black);
  VertexId hub = out.add_vertex(Color::Black);
  out.add_edge(pendant, hub);
  for (VertexId w : whites) {
    out.add_edge(hub, w);
    out.set_color(w, Color::Black);
  }
  return out;
}

std::string to_string(Color c) { return c == Color::Black ? "black" : "white"; }

}  // namespace domkern
