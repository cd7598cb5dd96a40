#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "greenseq/quiver.hpp"

namespace greenseq {

using GreenSequence = std::vector<int>;

// One c-vector per step, taken just before the step.
using CVectorTrace = std::vector<std::vector<Int>>;

struct GreenRun {
  IceQuiver final_seed;
  CVectorTrace trace;
};

// Mutates framed(q) along steps; throws NotGreenError on the first red step.
GreenRun apply_green_sequence(const Quiver& q, const GreenSequence& steps);

struct Verdict {
  bool valid = false;
  std::string reason;
};

Verdict check_maximal_green(const Quiver& q, const GreenSequence& steps);
bool is_maximal_green(const Quiver& q, const GreenSequence& steps);

inline constexpr std::size_t kDefaultNodeBudget = 5'000'000;

struct SearchCertificate {
  std::optional<int> minimal_length;
  std::optional<GreenSequence> witness;
  int explored_depth = 0;
  bool exhaustive = false;
  std::size_t nodes = 0;
};

// Breadth-first search over green moves. Layers are expanded in lexicographic
// order of their recorded paths, so the witness is deterministic.
SearchCertificate shortest_mgs(const Quiver& q, int depth_bound, std::size_t node_budget = kDefaultNodeBudget);

// Steps of the result are vertices of q lying in subset.
GreenSequence restrict_mgs(const Quiver& q, const GreenSequence& steps, const std::vector<int>& subset);

std::vector<GreenSequence> all_mgs_up_to_length(const Quiver& q, int max_length,
                                                std::size_t node_budget = kDefaultNodeBudget);

enum class ExplorationMode { GreenAndRed, GreenOnly };

struct ExchangeNode {
  std::string key;
  CMatrix c;
  int depth = 0;
};

// Oriented green: from has vertex green, to has it red.
struct ExchangeEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  int vertex = 0;
  std::vector<Int> c_vector;
};

struct ExchangeGraph {
  std::vector<ExchangeNode> nodes;
  std::vector<ExchangeEdge> edges;
  bool truncated = false;

  // Directed paths from the initial node (index 0) to nodes without outgoing edges.
  std::vector<std::vector<std::size_t>> maximal_paths() const;
};

ExchangeGraph enumerate_exchange_graph(const Quiver& q, std::size_t node_limit,
                                       ExplorationMode mode = ExplorationMode::GreenAndRed,
                                       std::optional<int> max_depth = std::nullopt);

}  // namespace greenseq
