#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace domkern {

using VertexId = std::uint32_t;

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

// Black vertices must be dominated and may dominate; white ones only dominate.
enum class Color : std::uint8_t { White, Black };

// Caller passed an id that is not a live vertex, or otherwise misused the API.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Undirected simple graph with a black/white color per vertex.
///
/// Vertex ids are slots in a dense table and are never reused: removing a
/// vertex leaves a tombstone, and add_vertex() always hands out id_bound().
/// Adjacency lists are kept sorted so iteration order is deterministic.
///
/// Every mutation appends the ids whose neighborhood or color changed to a
/// journal. Rule trackers read the journal to decide what to re-examine.
class ColoredGraph {
 public:
  ColoredGraph() = default;

  // Vertices 0..n-1, no edges.
  explicit ColoredGraph(std::size_t n, Color color = Color::Black);

  VertexId add_vertex(Color color = Color::Black);

  // Returns false if the edge already existed. Self-loops are rejected.
  bool add_edge(VertexId u, VertexId v);
  bool remove_edge(VertexId u, VertexId v);
  void remove_vertex(VertexId v);
  void set_color(VertexId v, Color color);

  bool contains(VertexId v) const noexcept {
    return v < alive_.size() && alive_[v];
  }
  Color color(VertexId v) const;
  bool is_black(VertexId v) const { return color(v) == Color::Black; }
  bool is_white(VertexId v) const { return color(v) == Color::White; }

  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  bool adjacent(VertexId u, VertexId v) const;

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t black_count() const noexcept { return black_count_; }
  bool empty() const noexcept { return vertex_count_ == 0; }

  // One past the largest id ever allocated.
  std::size_t id_bound() const noexcept { return alive_.size(); }

  // Live vertices in ascending id order.
  std::vector<VertexId> vertices() const;
  VertexSet black_vertices() const;
  VertexSet white_vertices() const;

  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  // #vertices + #edges + #black; every reduction strictly decreases it.
  std::size_t potential() const noexcept {
    return vertex_count_ + edge_count_ + black_count_;
  }

  std::span<const VertexId> journal() const noexcept { return journal_; }

  // Throws std::logic_error if symmetry, simplicity or the counters are off.
  void audit() const;

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b);

 private:
  void require(VertexId v) const;
  void touch(VertexId v) { journal_.push_back(v); }

  std::vector<std::vector<VertexId>> adj_;
  std::vector<Color> color_;
  std::vector<bool> alive_;
  std::size_t vertex_count_ = 0;
  std::size_t edge_count_ = 0;
  std::size_t black_count_ = 0;
  std::vector<VertexId> journal_;
};

// N(v), excluding v.
VertexSet neighbors(const ColoredGraph& g, VertexId v);

// N[v].
VertexSet closed_neighborhood(const ColoredGraph& g, VertexId v);

// N[U] = union of N[u] over u in U.
VertexSet closed_neighborhood_of_set(const ColoredGraph& g,
                                     std::span<const VertexId> set);

// True iff the closed neighborhoods of the members of `set` are pairwise
// disjoint.
bool is_1_scattered(const ColoredGraph& g, std::span<const VertexId> set);

// True iff every black vertex lies in N[dominators].
bool is_dominating(const ColoredGraph& g, std::span<const VertexId> dominators);

// Copy of g with the given vertices removed. Ids are preserved.
ColoredGraph without_vertices(const ColoredGraph& g,
                              std::span<const VertexId> removed);

// Plain Dominating Set instance equivalent to g: two fresh vertices p, h
// (the two largest new ids), edge p-h, edges h-w for every white w, all
// vertices black. Its optimum is exactly one more than g's.
ColoredGraph bw_to_plain_gadget(const ColoredGraph& g);

std::string to_string(Color c);

}  // namespace domkern
