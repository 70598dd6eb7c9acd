#include "kappa1/flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "kappa1/error.hpp"

namespace kappa1 {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

void check_terminals(const Graph& g, const VertexSet& A, const VertexSet& B) {
  if (A.empty() || B.empty())
    fail(ErrorCode::EmptyTerminal, A.empty() ? "terminal set A is empty" : "terminal set B is empty");
  if (A.intersects(B)) fail(ErrorCode::BadArgument, "terminal sets overlap");
  bool joined = false;
  A.for_each([&](Vertex a) {
    if (!joined && g.neighbors(a).intersects(B)) joined = true;
  });
  if (joined) fail(ErrorCode::Inseparable, "an edge joins the terminal sets");
}

}  // namespace

FlowNetwork::FlowNetwork(const Graph& g, const VertexSet& A, const VertexSet& B)
    : graph_(g), terminals_a_(A), terminals_b_(B), terminals_(A | B) {
  check_terminals(g, A, B);
  const auto v_count = static_cast<std::uint32_t>(g.vertex_count());
  node_count_ = 2 * v_count + 2;
  source_ = 2 * v_count;
  sink_ = 2 * v_count + 1;
  inf_cap_ = std::uint32_t{1} << 30;
  arcs_.resize(node_count_);

  // Arcs in ascending (tail, head) order for reproducible flows:
  // split arcs and sink arcs from in-nodes, edge arcs from out-nodes.
  for (Vertex v = 0; v < v_count; ++v) {
    const bool in_a = terminals_a_.test(v);
    const bool in_b = terminals_b_.test(v);
    if (!in_a && !in_b) add_arc(in_node(v), out_node(v), 1);
    if (in_b) add_arc(in_node(v), sink_, inf_cap_);
    if (!in_b) {
      // edges into A-in-nodes can never carry flow; skip them
      g.neighbors(v).for_each([&](Vertex w) {
        if (!terminals_a_.test(w)) add_arc(out_node(v), in_node(w), inf_cap_);
      });
    }
  }
  terminals_a_.for_each([&](Vertex a) { add_arc(source_, out_node(a), inf_cap_); });
}

void FlowNetwork::add_arc(std::uint32_t tail, std::uint32_t head, std::uint32_t cap) {
  arcs_[tail].push_back({head, cap, cap, static_cast<std::uint32_t>(arcs_[head].size())});
  arcs_[head].push_back({tail, 0, 0, static_cast<std::uint32_t>(arcs_[tail].size() - 1)});
}

bool FlowNetwork::build_levels() {
  level_.assign(node_count_, kUnreached);
  std::deque<std::uint32_t> queue;
  level_[source_] = 0;
  queue.push_back(source_);
  while (!queue.empty()) {
    std::uint32_t x = queue.front();
    queue.pop_front();
    for (const Arc& a : arcs_[x]) {
      if (a.cap == 0 || level_[a.head] != kUnreached) continue;
      level_[a.head] = level_[x] + 1;
      queue.push_back(a.head);
    }
  }
  return level_[sink_] != kUnreached;
}

std::uint32_t FlowNetwork::push(std::uint32_t node, std::uint32_t limit) {
  if (node == sink_) return limit;
  for (std::uint32_t& i = iter_[node]; i < arcs_[node].size(); ++i) {
    Arc& a = arcs_[node][i];
    if (a.cap == 0 || level_[a.head] != level_[node] + 1) continue;
    std::uint32_t pushed = push(a.head, std::min(limit, a.cap));
    if (pushed) {
      a.cap -= pushed;
      arcs_[a.head][a.rev].cap += pushed;
      return pushed;
    }
  }
  return 0;
}

std::uint32_t FlowNetwork::max_flow() {
  std::uint32_t flow = 0;
  while (build_levels()) {
    iter_.assign(node_count_, 0);
    while (std::uint32_t pushed = push(source_, inf_cap_)) flow += pushed;
  }
  solved_ = true;
  return flow;
}

std::vector<bool> FlowNetwork::residual_reachable() const {
  std::vector<bool> seen(node_count_, false);
  std::deque<std::uint32_t> queue;
  seen[source_] = true;
  queue.push_back(source_);
  while (!queue.empty()) {
    std::uint32_t x = queue.front();
    queue.pop_front();
    for (const Arc& a : arcs_[x]) {
      if (a.cap == 0 || seen[a.head]) continue;
      seen[a.head] = true;
      queue.push_back(a.head);
    }
  }
  return seen;
}

VertexSet FlowNetwork::min_cut_vertices() const {
  auto seen = residual_reachable();
  VertexSet cut(graph_.vertex_count());
  for (Vertex v = 0; v < graph_.vertex_count(); ++v) {
    if (terminals_.test(v)) continue;
    if (seen[in_node(v)] && !seen[out_node(v)]) cut.set(v);
  }
  return cut;
}

std::vector<std::vector<Vertex>> FlowNetwork::decode_paths() const {
  // Net flow on an original arc equals the cap its reverse arc accumulated
  // (reverse arcs start at 0, and cancellations already net out there).
  std::vector<std::vector<std::uint32_t>> flow(node_count_);
  for (std::uint32_t x = 0; x < node_count_; ++x) {
    flow[x].resize(arcs_[x].size(), 0);
    for (std::uint32_t i = 0; i < arcs_[x].size(); ++i) {
      const Arc& a = arcs_[x][i];
      if (a.orig > 0) flow[x][i] = arcs_[a.head][a.rev].cap;
    }
  }

  std::vector<std::vector<Vertex>> paths;
  while (true) {
    // one unit per iteration, following the first flow-carrying arc
    std::vector<Vertex> path;
    std::uint32_t node = source_;
    bool moved = false;
    while (node != sink_) {
      std::uint32_t chosen = kUnreached;
      for (std::uint32_t i = 0; i < arcs_[node].size(); ++i) {
        if (flow[node][i] > 0) { chosen = i; break; }
      }
      if (chosen == kUnreached) break;
      moved = true;
      flow[node][chosen] -= 1;
      node = arcs_[node][chosen].head;
      if (node == sink_) break;
      Vertex v = static_cast<Vertex>(node / 2);
      if ((node & 1u) || terminals_b_.test(v)) path.push_back(v);
    }
    if (!moved || node != sink_) break;
    paths.push_back(std::move(path));
  }
  return paths;
}

MinCutAnswer min_vertex_cut(const Graph& g, const VertexSet& A, const VertexSet& B) {
  FlowNetwork network(g, A, B);
  MinCutAnswer answer;
  answer.size = network.max_flow();
  answer.cut = network.min_cut_vertices();
  VertexSet side(g.vertex_count());
  std::vector<Vertex> stack;
  A.for_each([&](Vertex a) {
    side.set(a);
    stack.push_back(a);
  });
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    VertexSet fresh = g.neighbors(v) - side;
    fresh -= answer.cut;
    side |= fresh;
    fresh.for_each([&](Vertex w) { stack.push_back(w); });
  }
  answer.source_side = side;
  return answer;
}

std::vector<std::vector<Vertex>> disjoint_paths(const Graph& g, const VertexSet& A,
                                                const VertexSet& B) {
  FlowNetwork network(g, A, B);
  network.max_flow();
  return network.decode_paths();
}

}  // namespace kappa1
