#ifndef SETCALC_MAXFLOW_HPP
#define SETCALC_MAXFLOW_HPP

#include <cstdint>
#include <vector>

namespace setcalc {

// Dinic's algorithm on integer capacities. Exact: all arithmetic is
// int64, no scaling heuristics. Used by the fractional-programming
// solver in magnification.cpp, which clears rational capacities to
// integers before building the network.
class MaxFlow {
 public:
  explicit MaxFlow(int n) : adj_(static_cast<size_t>(n)), n_(n) {}

  void add_edge(int from, int to, std::int64_t cap);
  std::int64_t run(int source, int sink);

  // After run(): vertices reachable from the source in the residual
  // graph (the inclusion-minimal min-cut source side).
  std::vector<bool> min_source_side(int source) const;
  // Complement of the vertices that can still reach the sink (the
  // inclusion-maximal min-cut source side).
  std::vector<bool> max_source_side(int sink) const;

 private:
  struct Edge {
    int to;
    std::int64_t cap;  // residual capacity
  };

  bool bfs(int source, int sink);
  std::int64_t dfs(int v, int sink, std::int64_t limit);

  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_;
  std::vector<size_t> iter_;
  int n_;
};

}  // namespace setcalc

#endif
