#include "greenseq/green_seq.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "greenseq/error.hpp"

namespace greenseq {

GreenRun apply_green_sequence(const Quiver& q, const GreenSequence& steps) {
  GreenRun run{framed(q), {}};
  run.trace.reserve(steps.size());
  for (std::size_t j = 0; j < steps.size(); ++j) {
    const int k = steps[j];
    if (k < 1 || k > q.size()) fail(ErrorKind::IndexOutOfRange, "step " + std::to_string(j + 1) + " names vertex " + std::to_string(k));
    if (color(run.final_seed, k) == VertexColor::Red) throw NotGreenError(static_cast<int>(j + 1), k);
    run.trace.push_back(c_matrix(run.final_seed).c_vector(k));
    run.final_seed = mutate(run.final_seed, k);
  }
  return run;
}

Verdict check_maximal_green(const Quiver& q, const GreenSequence& steps) {
  try {
    const GreenRun run = apply_green_sequence(q, steps);
    for (int k = 1; k <= q.size(); ++k)
      if (color(run.final_seed, k) == VertexColor::Green)
        return {false, "vertex " + std::to_string(k) + " is still green"};
    return {true, ""};
  } catch (const Error& e) {
    return {false, e.what()};
  }
}

bool is_maximal_green(const Quiver& q, const GreenSequence& steps) { return check_maximal_green(q, steps).valid; }

namespace {

struct PathNode {
  std::uint32_t parent;
  int vertex;
};

GreenSequence unwind(const std::vector<PathNode>& nodes, std::uint32_t index) {
  GreenSequence out;
  while (index != 0) {
    out.push_back(nodes[index].vertex);
    index = nodes[index].parent;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

SearchCertificate shortest_mgs(const Quiver& q, int depth_bound, std::size_t node_budget) {
  if (depth_bound < 1) fail(ErrorKind::PreconditionViolated, "depth bound must be at least 1");
  const int n = q.size();
  SearchCertificate cert;

  std::vector<PathNode> nodes{{0, 0}};
  std::unordered_set<std::string> seen;
  struct Entry {
    IceQuiver seed;
    std::uint32_t node;
  };
  std::vector<Entry> layer{{framed(q), 0}};
  seen.insert(canonical_key(c_matrix(layer.front().seed)));

  for (int depth = 1; depth <= depth_bound && !layer.empty(); ++depth) {
    std::vector<Entry> next;
    for (const Entry& entry : layer) {
      for (int k = 1; k <= n; ++k) {
        if (color(entry.seed, k) != VertexColor::Green) continue;
        IceQuiver child = mutate(entry.seed, k);
        if (!seen.insert(canonical_key(c_matrix(child))).second) continue;
        if (seen.size() > node_budget)
          fail(ErrorKind::ResourceLimit, "search exceeded " + std::to_string(node_budget) + " seeds");
        nodes.push_back({entry.node, k});
        const auto index = static_cast<std::uint32_t>(nodes.size() - 1);
        if (all_red(child)) {
          cert.minimal_length = depth;
          cert.witness = unwind(nodes, index);
          cert.explored_depth = depth;
          cert.exhaustive = true;
          cert.nodes = seen.size();
          return cert;
        }
        next.push_back({std::move(child), index});
      }
    }
    cert.explored_depth = depth;
    layer = std::move(next);
  }
  cert.nodes = seen.size();
  return cert;
}

GreenSequence restrict_mgs(const Quiver& q, const GreenSequence& steps, const std::vector<int>& subset) {
  std::vector<int> support = subset;
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  if (support.empty()) fail(ErrorKind::PreconditionViolated, "subset is empty");
  for (int v : support)
    if (v < 1 || v > q.size()) fail(ErrorKind::IndexOutOfRange, "subset vertex " + std::to_string(v));

  const GreenRun run = apply_green_sequence(q, steps);
  if (!all_red(run.final_seed)) fail(ErrorKind::PreconditionViolated, "sequence is not maximal green");

  std::vector<bool> inside(q.size() + 1, false);
  for (int v : support) inside[v] = true;

  const Quiver sub = full_subquiver(q, support);
  IceQuiver seed = framed(sub);
  GreenSequence out;
  for (const auto& c : run.trace) {
    bool supported = true;
    for (int j = 1; j <= q.size() && supported; ++j) supported = inside[j] || c[j - 1] == 0;
    if (!supported) continue;
    std::vector<Int> projected;
    projected.reserve(support.size());
    for (int v : support) projected.push_back(c[v - 1]);

    const CMatrix current = c_matrix(seed);
    int chosen = 0;
    for (int i = 1; i <= sub.size() && chosen == 0; ++i)
      if (color(seed, i) == VertexColor::Green && current.c_vector(i) == projected) chosen = i;
    if (chosen == 0) fail(ErrorKind::ReplayMismatch, "no green vertex carries a filtered c-vector");
    seed = mutate(seed, chosen);
    out.push_back(support[chosen - 1]);
  }
  if (!all_red(seed)) fail(ErrorKind::ReplayMismatch, "restricted replay does not end all red");
  return out;
}

std::vector<GreenSequence> all_mgs_up_to_length(const Quiver& q, int max_length, std::size_t node_budget) {
  std::vector<GreenSequence> out;
  GreenSequence path;
  std::size_t visited = 0;
  std::function<void(const IceQuiver&)> walk = [&](const IceQuiver& seed) {
    if (++visited > node_budget) fail(ErrorKind::ResourceLimit, "enumeration exceeded its node budget");
    if (all_red(seed)) {
      out.push_back(path);
      return;
    }
    if (static_cast<int>(path.size()) == max_length) return;
    for (int k = 1; k <= q.size(); ++k) {
      if (color(seed, k) != VertexColor::Green) continue;
      path.push_back(k);
      walk(mutate(seed, k));
      path.pop_back();
    }
  };
  walk(framed(q));
  return out;
}

ExchangeGraph enumerate_exchange_graph(const Quiver& q, std::size_t node_limit, ExplorationMode mode,
                                       std::optional<int> max_depth) {
  if (node_limit < 1) fail(ErrorKind::PreconditionViolated, "node limit must be at least 1");
  ExchangeGraph graph;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<IceQuiver> seeds;

  auto add = [&](IceQuiver seed, int depth) -> std::optional<std::size_t> {
    CMatrix c = c_matrix(seed);
    std::string key = canonical_key(c);
    if (auto it = index.find(key); it != index.end()) return it->second;
    if (graph.nodes.size() >= node_limit) {
      graph.truncated = true;
      return std::nullopt;
    }
    index.emplace(key, graph.nodes.size());
    graph.nodes.push_back({std::move(key), std::move(c), depth});
    seeds.push_back(std::move(seed));
    return graph.nodes.size() - 1;
  };

  add(framed(q), 0);
  for (std::size_t current = 0; current < graph.nodes.size(); ++current) {
    const int depth = graph.nodes[current].depth;
    if (max_depth && depth >= *max_depth) {
      // Unexpanded nodes with green vertices mean the picture is incomplete.
      if (!all_red(seeds[current])) graph.truncated = true;
      continue;
    }
    for (int k = 1; k <= q.size(); ++k) {
      const bool green = color(seeds[current], k) == VertexColor::Green;
      if (!green && mode == ExplorationMode::GreenOnly) continue;
      const auto target = add(mutate(seeds[current], k), depth + 1);
      if (green && target)
        graph.edges.push_back({current, *target, k, graph.nodes[current].c.c_vector(k)});
    }
  }
  return graph;
}

std::vector<std::vector<std::size_t>> ExchangeGraph::maximal_paths() const {
  std::vector<std::vector<std::size_t>> out;
  if (nodes.empty()) return out;
  std::vector<std::vector<std::size_t>> successors(nodes.size());
  for (const auto& e : edges) successors[e.from].push_back(e.to);
  std::vector<std::size_t> path{0};
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    if (successors[v].empty()) {
      out.push_back(path);
      return;
    }
    for (std::size_t w : successors[v]) {
      path.push_back(w);
      walk(w);
      path.pop_back();
    }
  };
  walk(0);
  return out;
}

}  // namespace greenseq
