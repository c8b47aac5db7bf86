#include "domkern/dirty_queue.hpp"

#include <algorithm>

namespace domkern {

std::uint64_t DirtyQueue::priority(const ColoredGraph& g, VertexId v) const {
  if (order_ == QueueOrder::ById) return v;
  return (static_cast<std::uint64_t>(g.degree(v)) << 32) | v;
}

void DirtyQueue::push(const ColoredGraph& g, VertexId v) {
  if (v >= queued_.size()) queued_.resize(v + 1, kNone);
  std::uint64_t key = priority(g, v);
  if (queued_[v] == key) return;
  queued_[v] = key;
  heap_.push(key);
}

bool DirtyQueue::empty(const ColoredGraph& g) {
  while (!heap_.empty()) {
    std::uint64_t key = heap_.top();
    auto v = static_cast<VertexId>(key);
    if (queued_[v] == key) {
      if (g.contains(v) && priority(g, v) == key) return false;
      queued_[v] = kNone;
    }
    heap_.pop();
  }
  return true;
}

void DirtyQueue::pop() {
  queued_[top()] = kNone;
  heap_.pop();
}

void JournalTracker::reset(const ColoredGraph& g) {
  for (VertexId v : g.vertices()) {
    for (auto& lane : lanes_) lane.push(g, v);
  }
  cursor_ = g.journal().size();
}

void JournalTracker::sync(const ColoredGraph& g) {
  auto journal = g.journal();
  if (cursor_ >= journal.size()) return;

  if (stamp_.size() < g.id_bound()) stamp_.resize(g.id_bound(), 0);
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }

  std::vector<VertexId> frontier;
  for (std::size_t i = cursor_; i < journal.size(); ++i) {
    VertexId v = journal[i];
    if (!g.contains(v) || stamp_[v] == epoch_) continue;
    stamp_[v] = epoch_;
    frontier.push_back(v);
  }
  cursor_ = journal.size();

  std::vector<VertexId> reached = frontier;
  std::vector<VertexId> next;
  for (std::size_t depth = 0; depth < radius_ && !frontier.empty(); ++depth) {
    next.clear();
    for (VertexId v : frontier) {
      for (VertexId u : g.neighbors(v)) {
        if (stamp_[u] == epoch_) continue;
        stamp_[u] = epoch_;
        next.push_back(u);
      }
    }
    reached.insert(reached.end(), next.begin(), next.end());
    frontier.swap(next);
  }

  for (VertexId v : reached) {
    for (auto& lane : lanes_) lane.push(g, v);
  }
}

}  // namespace domkern
