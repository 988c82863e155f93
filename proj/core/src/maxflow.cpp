#include "setcalc/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace setcalc {

void MaxFlow::add_edge(int from, int to, std::int64_t cap) {
  adj_[static_cast<size_t>(from)].push_back(static_cast<int>(edges_.size()));
  edges_.push_back({to, cap});
  adj_[static_cast<size_t>(to)].push_back(static_cast<int>(edges_.size()));
  edges_.push_back({from, 0});
}

bool MaxFlow::bfs(int source, int sink) {
  level_.assign(static_cast<size_t>(n_), -1);
  std::queue<int> q;
  q.push(source);
  level_[static_cast<size_t>(source)] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int id : adj_[static_cast<size_t>(v)]) {
      const Edge& e = edges_[static_cast<size_t>(id)];
      if (e.cap > 0 && level_[static_cast<size_t>(e.to)] < 0) {
        level_[static_cast<size_t>(e.to)] = level_[static_cast<size_t>(v)] + 1;
        q.push(e.to);
      }
    }
  }
  return level_[static_cast<size_t>(sink)] >= 0;
}

std::int64_t MaxFlow::dfs(int v, int sink, std::int64_t limit) {
  if (v == sink) return limit;
  for (size_t& i = iter_[static_cast<size_t>(v)]; i < adj_[static_cast<size_t>(v)].size(); ++i) {
    int id = adj_[static_cast<size_t>(v)][i];
    Edge& e = edges_[static_cast<size_t>(id)];
    if (e.cap <= 0 || level_[static_cast<size_t>(e.to)] != level_[static_cast<size_t>(v)] + 1)
      continue;
    std::int64_t pushed = dfs(e.to, sink, std::min(limit, e.cap));
    if (pushed > 0) {
      e.cap -= pushed;
      edges_[static_cast<size_t>(id ^ 1)].cap += pushed;
      return pushed;
    }
  }
  return 0;
}

std::int64_t MaxFlow::run(int source, int sink) {
  std::int64_t flow = 0;
  while (bfs(source, sink)) {
    iter_.assign(static_cast<size_t>(n_), 0);
    while (std::int64_t pushed =
               dfs(source, sink, std::numeric_limits<std::int64_t>::max()))
      flow += pushed;
  }
  return flow;
}

std::vector<bool> MaxFlow::min_source_side(int source) const {
  std::vector<bool> side(static_cast<size_t>(n_), false);
  std::queue<int> q;
  q.push(source);
  side[static_cast<size_t>(source)] = true;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int id : adj_[static_cast<size_t>(v)]) {
      const Edge& e = edges_[static_cast<size_t>(id)];
      if (e.cap > 0 && !side[static_cast<size_t>(e.to)]) {
        side[static_cast<size_t>(e.to)] = true;
        q.push(e.to);
      }
    }
  }
  return side;
}

std::vector<bool> MaxFlow::max_source_side(int sink) const {
  // v can reach the sink iff some residual edge v->w leads to a reacher.
  // Walk backwards from the sink over incoming residual edges; incoming
  // edges of v are exactly the twins of edges stored at v.
  std::vector<bool> reaches(static_cast<size_t>(n_), false);
  std::queue<int> q;
  q.push(sink);
  reaches[static_cast<size_t>(sink)] = true;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int id : adj_[static_cast<size_t>(v)]) {
      int twin = id ^ 1;
      const Edge& back = edges_[static_cast<size_t>(twin)];  // e.to -> v
      int w = edges_[static_cast<size_t>(id)].to;
      if (back.cap > 0 && !reaches[static_cast<size_t>(w)]) {
        reaches[static_cast<size_t>(w)] = true;
        q.push(w);
      }
    }
  }
  std::vector<bool> side(static_cast<size_t>(n_));
  for (int v = 0; v < n_; ++v) side[static_cast<size_t>(v)] = !reaches[static_cast<size_t>(v)];
  return side;
}

}  // namespace setcalc
