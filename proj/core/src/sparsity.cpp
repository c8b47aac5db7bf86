#include "domkern/sparsity.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <queue>

namespace domkern {

namespace {

VertexSet set_union_of(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains_sorted(const VertexSet& set, VertexId v) {
  return std::binary_search(set.begin(), set.end(), v);
}

}  // namespace

VertexSet greedy_dominating_set(const ColoredGraph& g, std::span<const VertexId> targets) {
  std::vector<bool> open(g.id_bound(), false);
  std::vector<bool> seen(g.id_bound(), false);
  VertexSet pool;
  for (VertexId t : targets) {
    if (!g.contains(t)) throw UsageError("unknown vertex id " + std::to_string(t));
    open[t] = true;
  }
  auto gain = [&](VertexId x) {
    std::size_t c = open[x] ? 1 : 0;
    for (VertexId u : g.neighbors(x)) c += open[u] ? 1 : 0;
    return c;
  };

  // Max gain first, then smallest id. Stored gains only ever overestimate.
  using Entry = std::pair<std::size_t, VertexId>;
  auto worse = [](const Entry& a, const Entry& b) {
    return a.first != b.first ? a.first < b.first : a.second > b.second;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> heap(worse);
  for (VertexId t : targets) {
    auto consider = [&](VertexId x) {
      if (seen[x]) return;
      seen[x] = true;
      heap.emplace(gain(x), x);
    };
    consider(t);
    for (VertexId u : g.neighbors(t)) consider(u);
  }

  VertexSet picked;
  while (!heap.empty()) {
    auto [stored, x] = heap.top();
    heap.pop();
    std::size_t actual = gain(x);
    if (actual == 0) continue;
    if (actual < stored) {
      heap.emplace(actual, x);
      continue;
    }
    picked.push_back(x);
    open[x] = false;
    for (VertexId u : g.neighbors(x)) open[u] = false;
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

ScatterResult uqw_scatter(const ColoredGraph& g, std::span<const VertexId> candidates,
                          const ScatterOptions& options) {
  for (VertexId c : candidates) {
    if (!g.contains(c)) throw UsageError("unknown vertex id " + std::to_string(c));
  }
  ScatterResult result;
  if (candidates.empty()) return result;

  std::vector<std::size_t> degree(g.id_bound(), 0);
  std::vector<bool> deleted(g.id_bound(), false);
  for (VertexId v : g.vertices()) degree[v] = g.degree(v);

  double average = g.vertex_count() == 0
                       ? 0.0
                       : 2.0 * static_cast<double>(g.edge_count()) /
                             static_cast<double>(g.vertex_count());
  double cutoff = std::max(static_cast<double>(options.hub_min_degree),
                           options.hub_degree_factor * average);
  double cap = options.max_deleted > 0
                   ? static_cast<double>(options.max_deleted)
                   : std::sqrt(static_cast<double>(candidates.size()));

  std::vector<VertexId> live = g.vertices();
  while (static_cast<double>(result.deleted.size()) < cap) {
    VertexId hub = 0;
    std::size_t best = 0;
    bool any = false;
    for (VertexId v : live) {
      if (deleted[v]) continue;
      if (!any || degree[v] > best) {
        best = degree[v];
        hub = v;
        any = true;
      }
    }
    if (!any || static_cast<double>(best) <= cutoff) break;
    deleted[hub] = true;
    result.deleted.push_back(hub);
    for (VertexId u : g.neighbors(hub)) --degree[u];
  }
  std::sort(result.deleted.begin(), result.deleted.end());

  std::vector<VertexId> order;
  for (VertexId c : candidates) {
    if (!deleted[c]) order.push_back(c);
  }
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return degree[a] != degree[b] ? degree[a] < degree[b] : a < b;
  });

  std::vector<bool> blocked(g.id_bound(), false);
  for (VertexId c : order) {
    if (blocked[c]) continue;
    result.scattered.push_back(c);
    blocked[c] = true;
    for (VertexId u : g.neighbors(c)) {
      if (deleted[u]) continue;
      blocked[u] = true;
      for (VertexId x : g.neighbors(u)) {
        if (!deleted[x]) blocked[x] = true;
      }
    }
  }
  std::sort(result.scattered.begin(), result.scattered.end());
  return result;
}

GroupKey group_key(const ColoredGraph& g, const VertexSet& d, VertexId f) {
  GroupKey key;
  for (VertexId u : g.neighbors(f)) {
    if (contains_sorted(d, u)) key.first.push_back(u);
    for (VertexId x : g.neighbors(u)) {
      if (contains_sorted(d, x) && g.is_black(x)) key.second.push_back(x);
    }
  }
  std::sort(key.second.begin(), key.second.end());
  key.second.erase(std::unique(key.second.begin(), key.second.end()), key.second.end());
  return key;
}

std::size_t group_and_reduce(Instance& inst, const SparsityContext& ctx,
                             std::span<const VertexId> scattered) {
  auto& g = inst.graph;
  for (VertexId f : scattered) {
    if (!g.contains(f) || !g.is_black(f) || contains_sorted(ctx.d, f)) {
      throw std::logic_error("scattered vertex " + std::to_string(f) +
                             " is not a black vertex outside D");
    }
  }
  if (!is_1_scattered(without_vertices(g, ctx.d), scattered)) {
    throw std::logic_error("group_and_reduce called with a set that is not 1-scattered");
  }

  std::map<GroupKey, VertexSet> groups;
  for (VertexId f : scattered) groups[group_key(g, ctx.d, f)].push_back(f);

  VertexSet to_whiten;
  for (auto& [key, members] : groups) {
    if (key.first.empty()) continue;
    std::sort(members.begin(), members.end());
    VertexSet m = set_minus(closed_neighborhood_of_set(g, members), ctx.d);
    VertexSet r;
    for (VertexId x : closed_neighborhood_of_set(g, m)) {
      if (g.is_black(x)) r.push_back(x);
    }
    std::size_t cost = greedy_dominating_set(g, r).size();
    if (members.size() < cost + 2) continue;
    std::size_t count = members.size() - cost - 1;
    to_whiten.insert(to_whiten.end(), members.end() - static_cast<std::ptrdiff_t>(count),
                     members.end());
  }

  for (VertexId z : to_whiten) g.set_color(z, Color::White);
  inst.stats[RuleId::SparsityWhitening] += to_whiten.size();
  return to_whiten.size();
}

std::size_t sparsity_reduce(Instance& inst, const SparsityOptions& options) {
  auto& g = inst.graph;
  ++inst.stats.sparsity_passes;

  VertexSet d_prime = greedy_dominating_set(g, g.black_vertices());
  std::size_t whitened = 0;
  for (;;) {
    ColoredGraph residual = without_vertices(g, d_prime);
    VertexSet candidates = residual.black_vertices();
    ScatterResult scatter = uqw_scatter(residual, candidates, options.scatter);
    ++inst.stats.scatter_calls;
    if (options.validate_scatter &&
        !is_1_scattered(without_vertices(residual, scatter.deleted), scatter.scattered)) {
      ++inst.stats.scatter_invalid;
      throw std::logic_error("scatter heuristic returned a set that is not 1-scattered");
    }

    SparsityContext ctx{d_prime, set_union_of(d_prime, scatter.deleted),
                        options.hub_threshold};
    whitened += group_and_reduce(inst, ctx, scatter.scattered);

    VertexId arg = 0;
    std::size_t best = 0;
    bool any = false;
    for (VertexId v : g.vertices()) {
      if (contains_sorted(d_prime, v)) continue;
      std::size_t score = 0;
      for (VertexId u : g.neighbors(v)) {
        if (options.escalation == Escalation::DominatorNeighbors) {
          score += contains_sorted(d_prime, u) ? 1 : 0;
        } else {
          score += g.is_black(u) && !contains_sorted(ctx.d, u) ? 1 : 0;
        }
      }
      if (!any || score > best) {
        best = score;
        arg = v;
        any = true;
      }
    }
    if (!any || best <= options.hub_threshold) break;
    d_prime.insert(std::lower_bound(d_prime.begin(), d_prime.end(), arg), arg);
  }
  return whitened;
}

}  // namespace domkern
