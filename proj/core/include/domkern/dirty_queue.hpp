#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <queue>
#include <vector>

#include "domkern/graph.hpp"

namespace domkern {

enum class QueueOrder : std::uint8_t { ByDegree, ById };

// Vertices awaiting re-examination, served in (current degree, id) order, or
// by id alone.
//
// An entry is keyed by the degree its vertex had when pushed. Degree changes
// always go through the journal, so after JournalTracker::sync a vertex whose
// degree moved has a fresh entry and the old one is discarded when it
// surfaces.
class DirtyQueue {
 public:
  explicit DirtyQueue(QueueOrder order = QueueOrder::ByDegree) : order_(order) {}

  void push(const ColoredGraph& g, VertexId v);

  // Discards stale entries at the front; true when nothing valid is left.
  bool empty(const ColoredGraph& g);
  VertexId top() const { return static_cast<VertexId>(heap_.top()); }
  void pop();

 private:
  static constexpr std::uint64_t kNone = ~std::uint64_t{0};

  std::uint64_t priority(const ColoredGraph& g, VertexId v) const;

  QueueOrder order_;
  std::vector<std::uint64_t> queued_;  // key of v's live entry, or kNone
  std::priority_queue<std::uint64_t, std::vector<std::uint64_t>, std::greater<>> heap_;
};

/// Follows a graph's mutation journal and re-queues every live vertex within
/// `radius` of a touched vertex, in each of `lanes` queues.
///
/// A rule keyed on vertex u whose applicability depends only on the
/// radius-r ball around u can then be evaluated lazily: a vertex that failed
/// the check stays out of its queue until something nearby changes.
class JournalTracker {
 public:
  JournalTracker(std::size_t radius, std::size_t lanes,
                 QueueOrder order = QueueOrder::ByDegree)
      : radius_(radius), lanes_(lanes, DirtyQueue(order)) {}

  // Queues every live vertex and skips the journal written so far.
  void reset(const ColoredGraph& g);

  void sync(const ColoredGraph& g);

  DirtyQueue& lane(std::size_t i) { return lanes_[i]; }

 private:
  std::size_t radius_;
  std::vector<DirtyQueue> lanes_;
  std::size_t cursor_ = 0;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

}  // namespace domkern
